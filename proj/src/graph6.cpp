#include "mop/graph6.hpp"

namespace mop {

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    std::string out(1, static_cast<char>(n + 63));
    int bits = 0;
    int acc = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                bits = acc = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

Graph graph6_decode(std::string_view text) {
    std::size_t base = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header)) {
        text.remove_prefix(header.size());
        base = header.size();
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
        text.remove_suffix(1);
    }
    if (text.empty()) throw ParseError("empty graph6 string", base);

    auto byte_at = [&](std::size_t i) {
        const int c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw ParseError("byte outside graph6 range 63..126", base + i);
        return c - 63;
    };

    const int n = byte_at(0);
    if (n == 63) throw ParseError("multi-byte vertex counts exceed the 32-vertex limit", base);
    if (n > Graph::kMaxVertices) {
        throw ParseError("vertex count " + std::to_string(n) + " exceeds 32", base);
    }
    const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t expected = 1 + (pairs + 5) / 6;
    if (text.size() < expected) throw ParseError("graph6 string truncated", base + text.size());
    if (text.size() > expected) throw ParseError("trailing bytes after graph6 data", base + expected);

    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const int chunk = byte_at(1 + bit / 6);
            if ((chunk >> (5 - bit % 6)) & 1) edges.push_back({i, j});
        }
    }
    if (pairs % 6 != 0) {
        const int last = byte_at(expected - 1);
        if (last & ((1 << (6 - pairs % 6)) - 1)) {
            throw ParseError("non-zero padding bits", base + expected - 1);
        }
    }
    return Graph(n, edges);
}

}  // namespace mop
