#include "mop/rainbow.hpp"

#include <unordered_map>

#include "json.hpp"
#include "mop/graph6.hpp"

namespace mop {

EdgeColoring normal_form(const EdgeColoring& c) {
    EdgeColoring out;
    out.color.reserve(c.color.size());
    std::unordered_map<int, int> rename;
    for (int col : c.color) {
        auto [it, inserted] = rename.emplace(col, static_cast<int>(rename.size()));
        out.color.push_back(it->second);
    }
    out.num_colors = static_cast<int>(rename.size());
    return out;
}

EdgeColoring all_distinct_coloring(int num_edges) {
    EdgeColoring c;
    for (int e = 0; e < num_edges; ++e) c.color.push_back(e);
    c.num_colors = num_edges;
    return c;
}

EdgeColoring monochromatic_coloring(int num_edges) {
    return EdgeColoring{std::vector<int>(static_cast<std::size_t>(num_edges), 0), num_edges > 0 ? 1 : 0};
}

std::vector<EdgeSet> color_classes(const EdgeColoring& c) {
    std::vector<EdgeSet> classes(static_cast<std::size_t>(std::max(c.num_colors, 0)), 0);
    for (std::size_t e = 0; e < c.color.size(); ++e) {
        const int col = c.color[e];
        if (col >= 0 && col < c.num_colors) classes[static_cast<std::size_t>(col)] |= edge_bit(static_cast<int>(e));
    }
    return classes;
}

std::optional<RainbowWitness> find_rainbow_matching(const Graph& g, const EdgeColoring& c, int k) {
    if (static_cast<int>(c.color.size()) != g.size()) {
        throw Error("colouring has " + std::to_string(c.color.size()) + " entries for " +
                    std::to_string(g.size()) + " edges");
    }
    if (g.size() > 64) throw Error("find_rainbow_matching: at most 64 edges supported");
    for (int col : c.color) {
        if (col < 0 || col >= 64) throw Error("colour index " + std::to_string(col) + " outside [0, 64)");
    }
    if (k <= 0) return RainbowWitness{};

    const int m = g.size();
    EdgeSet found = 0;
    auto extend = [&](auto&& self, int from, VertexSet covered, std::uint64_t seen, EdgeSet chosen,
                      int left) -> bool {
        if (left == 0) {
            found = chosen;
            return true;
        }
        for (int e = from; e + left <= m; ++e) {
            const VertexSet ends = g.edge_ends(e);
            const std::uint64_t col = std::uint64_t{1} << c.color[static_cast<std::size_t>(e)];
            if ((covered & ends) || (seen & col)) continue;
            if (self(self, e + 1, covered | ends, seen | col, chosen | edge_bit(e), left - 1)) return true;
        }
        return false;
    };
    if (!extend(extend, 0, 0, 0, 0, k)) return std::nullopt;

    RainbowWitness w{Matching{found}, {}};
    for_each_bit(found, [&](int e) { w.colors.push_back(c.color[static_cast<std::size_t>(e)]); });
    return w;
}

const char* to_string(CertificateVerdict v) {
    switch (v) {
        case CertificateVerdict::Ok: return "OK";
        case CertificateVerdict::Malformed: return "MALFORMED";
        case CertificateVerdict::NotSurjective: return "NOT_SURJECTIVE";
        case CertificateVerdict::WrongCount: return "WRONG_COUNT";
        case CertificateVerdict::RainbowFound: return "RAINBOW_FOUND";
    }
    return "UNKNOWN";
}

CertificateCheck verify_certificate(const Graph& g, const EdgeColoring& c, int k, int claimed_colors) {
    if (static_cast<int>(c.color.size()) != g.size() || g.size() > 64 || k < 1) {
        return {CertificateVerdict::Malformed, std::nullopt};
    }
    std::uint64_t used = 0;
    for (int col : c.color) {
        if (col < 0 || col >= c.num_colors || col >= 64) return {CertificateVerdict::NotSurjective, std::nullopt};
        used |= std::uint64_t{1} << col;
    }
    if (popcount(used) != c.num_colors) return {CertificateVerdict::NotSurjective, std::nullopt};
    if (c.num_colors != claimed_colors) return {CertificateVerdict::WrongCount, std::nullopt};
    if (auto w = find_rainbow_matching(g, c, k)) return {CertificateVerdict::RainbowFound, std::move(w)};
    return {CertificateVerdict::Ok, std::nullopt};
}

std::string certificate_to_json(const Certificate& cert) {
    nlohmann::json j;
    j["graph"] = graph6_encode(cert.graph);
    j["k"] = cert.k;
    j["colors"] = cert.coloring.color;
    j["num_colors"] = cert.coloring.num_colors;
    return j.dump();
}

Certificate certificate_from_json(const std::string& text) {
    try {
        const auto j = nlohmann::json::parse(text);
        Certificate cert;
        cert.graph = graph6_decode(j.at("graph").get<std::string>());
        cert.k = j.at("k").get<int>();
        cert.coloring.color = j.at("colors").get<std::vector<int>>();
        cert.coloring.num_colors = j.at("num_colors").get<int>();
        return cert;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("certificate JSON: ") + e.what());
    }
}

}  // namespace mop
