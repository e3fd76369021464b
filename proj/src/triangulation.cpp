#include "mop/triangulation.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>

namespace mop {

namespace {

void check_polygon_size(int n) {
    if (n < kMinPolygon || n > kMaxPolygon) {
        throw Error("polygon size " + std::to_string(n) + " outside [3, 16]");
    }
}

Edge ordered(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Sorted diagonal bytes u*16+v, padded with 0xFF.
using DiagonalKey = std::array<std::uint8_t, 16>;

DiagonalKey key_under(const Triangulation& t, int rotation, bool reflect) {
    DiagonalKey key;
    key.fill(0xFF);
    std::size_t i = 0;
    for (const auto& d : t.diagonals) {
        auto map = [&](int v) { return reflect ? (rotation - v + t.n) % t.n : (v + rotation) % t.n; };
        const Edge e = ordered(map(d.u), map(d.v));
        key[i++] = static_cast<std::uint8_t>(e.u * 16 + e.v);
    }
    std::sort(key.begin(), key.begin() + static_cast<long>(i));
    return key;
}

DiagonalKey canonical_key(const Triangulation& t) {
    DiagonalKey best = key_under(t, 0, false);
    for (int r = 0; r < t.n; ++r) {
        for (bool reflect : {false, true}) {
            if (r == 0 && !reflect) continue;
            best = std::min(best, key_under(t, r, reflect));
        }
    }
    return best;
}

Triangulation from_key(int n, const DiagonalKey& key) {
    Triangulation t{n, {}};
    for (auto byte : key) {
        if (byte == 0xFF) break;
        t.diagonals.push_back({byte / 16, byte % 16});
    }
    return t;
}

struct Enumerator {
    const std::function<void(const Triangulation&)>& visit;
    Triangulation current;
    std::vector<std::vector<int>> pending;

    void step() {
        if (pending.empty()) {
            Triangulation out = current;
            std::sort(out.diagonals.begin(), out.diagonals.end());
            visit(out);
            return;
        }
        std::vector<int> poly = std::move(pending.back());
        pending.pop_back();
        const int m = static_cast<int>(poly.size());
        if (m == 3) {
            step();
        } else {
            for (int j = 2; j < m; ++j) {
                const std::size_t saved_diagonals = current.diagonals.size();
                const std::size_t saved_pending = pending.size();
                if (j > 2) {
                    current.diagonals.push_back(ordered(poly[1], poly[j]));
                    pending.emplace_back(poly.begin() + 1, poly.begin() + j + 1);
                }
                if (j < m - 1) {
                    current.diagonals.push_back(ordered(poly[j], poly[0]));
                    std::vector<int> right(poly.begin() + j, poly.end());
                    right.push_back(poly[0]);
                    pending.push_back(std::move(right));
                }
                step();
                current.diagonals.resize(saved_diagonals);
                pending.resize(saved_pending);
            }
        }
        pending.push_back(std::move(poly));
    }
};

}  // namespace

Graph Triangulation::graph() const {
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.push_back(ordered(v, (v + 1) % n));
    edges.insert(edges.end(), diagonals.begin(), diagonals.end());
    return Graph(n, edges);
}

bool chords_cross(Edge a, Edge b) {
    auto strictly_inside = [](int x, Edge e) { return e.u < x && x < e.v; };
    if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) return false;
    return strictly_inside(b.u, a) != strictly_inside(b.v, a);
}

bool is_valid_triangulation(const Triangulation& t) {
    if (t.n < 3 || t.n > Graph::kMaxVertices) return false;
    if (static_cast<int>(t.diagonals.size()) != t.n - 3) return false;
    for (std::size_t i = 0; i < t.diagonals.size(); ++i) {
        const Edge d = t.diagonals[i];
        if (d.u < 0 || d.v >= t.n || d.u >= d.v) return false;
        if (d.v - d.u == 1 || (d.u == 0 && d.v == t.n - 1)) return false;
        for (std::size_t j = 0; j < i; ++j) {
            if (t.diagonals[j] == d || chords_cross(t.diagonals[j], d)) return false;
        }
    }
    return true;
}

void enumerate_triangulations(int n, const std::function<void(const Triangulation&)>& visit) {
    check_polygon_size(n);
    Enumerator e{visit, Triangulation{n, {}}, {}};
    std::vector<int> polygon(n);
    for (int v = 0; v < n; ++v) polygon[v] = v;
    e.pending.push_back(std::move(polygon));
    e.step();
}

std::uint64_t count_triangulations(int n) {
    std::uint64_t count = 0;
    enumerate_triangulations(n, [&](const Triangulation&) { ++count; });
    return count;
}

Triangulation dihedral_canonical(const Triangulation& t) { return from_key(t.n, canonical_key(t)); }

std::vector<Triangulation> enumerate_mop_triangulations(int n) {
    check_polygon_size(n);
    std::map<DiagonalKey, bool> seen;
    enumerate_triangulations(n, [&](const Triangulation& t) { seen.emplace(canonical_key(t), true); });
    std::vector<Triangulation> out;
    out.reserve(seen.size());
    for (const auto& [key, _] : seen) out.push_back(from_key(n, key));
    return out;
}

std::vector<Graph> enumerate_mops(int n) {
    std::vector<Graph> out;
    for (const auto& t : enumerate_mop_triangulations(n)) out.push_back(t.graph());
    return out;
}

std::string format_triangulation(const Triangulation& t) {
    std::string out = std::to_string(t.n) + ":";
    for (std::size_t i = 0; i < t.diagonals.size(); ++i) {
        out += (i == 0 ? " " : ",");
        out += std::to_string(t.diagonals[i].u) + "-" + std::to_string(t.diagonals[i].v);
    }
    return out;
}

Triangulation parse_triangulation(std::string_view line) {
    auto fail = [&](const std::string& why) -> Triangulation {
        throw Error("bad triangulation line '" + std::string(line) + "': " + why);
    };
    auto read_int = [&](std::string_view& s, int& out) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        if (ec != std::errc{}) return false;
        s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
        return true;
    };
    std::string_view s = line;
    Triangulation t;
    if (!read_int(s, t.n) || s.empty() || s.front() != ':') return fail("expected 'n:'");
    s.remove_prefix(1);
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty()) {
        int u = 0;
        int v = 0;
        if (!read_int(s, u) || s.empty() || s.front() != '-') return fail("expected 'i-j'");
        s.remove_prefix(1);
        if (!read_int(s, v)) return fail("expected 'i-j'");
        t.diagonals.push_back(ordered(u, v));
        if (!s.empty()) {
            if (s.front() != ',') return fail("expected ','");
            s.remove_prefix(1);
        }
    }
    std::sort(t.diagonals.begin(), t.diagonals.end());
    if (!is_valid_triangulation(t)) return fail("not a triangulation of the " + std::to_string(t.n) + "-gon");
    return t;
}

}  // namespace mop
