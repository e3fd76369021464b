#include "mop/minors.hpp"

#include <array>

namespace mop {

namespace {

using Adjacency = std::array<VertexSet, Graph::kMaxVertices>;

bool touches(const Graph& g, VertexSet a, VertexSet b) {
    bool hit = false;
    for_each_bit(a, [&](int v) { hit = hit || (g.neighbors(v) & b) != 0; });
    return hit;
}

// Series-parallel reduction on a simple graph. Returns true if it stops with a
// non-empty graph of minimum degree >= 3, i.e. a K4 minor exists.
bool k4_reduction_stuck(Adjacency adj, VertexSet alive) {
    bool progress = true;
    while (progress && alive) {
        progress = false;
        for_each_bit(alive, [&](int v) {
            if (!((alive >> v) & 1U)) return;
            const VertexSet nb = adj[v] & alive;
            const int d = std::popcount(nb);
            if (d > 2) return;
            if (d == 2) {
                const int u = lowest(nb);
                const int w = lowest(nb & (nb - 1));
                adj[u] |= vertex_bit(w);
                adj[w] |= vertex_bit(u);
            }
            for_each_bit(nb, [&](int u) { adj[u] &= ~vertex_bit(v); });
            adj[v] = 0;
            alive &= ~vertex_bit(v);
            progress = true;
        });
    }
    return alive != 0;
}

// Current minor: vertex i (alive) stands for the original vertices in bags[i].
struct MinorState {
    Adjacency adj{};
    VertexSet alive = 0;
    std::array<VertexSet, Graph::kMaxVertices> bags{};

    bool has_k4() const { return k4_reduction_stuck(adj, alive); }

    MinorState without_vertex(int v) const {
        MinorState s = *this;
        for_each_bit(s.adj[v], [&](int u) { s.adj[u] &= ~vertex_bit(v); });
        s.adj[v] = 0;
        s.alive &= ~vertex_bit(v);
        s.bags[v] = 0;
        return s;
    }

    MinorState without_edge(int u, int v) const {
        MinorState s = *this;
        s.adj[u] &= ~vertex_bit(v);
        s.adj[v] &= ~vertex_bit(u);
        return s;
    }

    MinorState contracted(int keep, int gone) const {
        const VertexSet nb = adj[gone] & ~vertex_bit(keep);
        MinorState s = without_vertex(gone);
        s.bags[keep] = bags[keep] | bags[gone];
        s.adj[keep] |= nb;
        for_each_bit(nb, [&](int u) { s.adj[u] |= vertex_bit(keep); });
        return s;
    }
};

std::optional<MinorModel> find_k4(const Graph& g) {
    MinorState state;
    state.alive = g.vertices();
    for (int v = 0; v < g.order(); ++v) {
        state.adj[v] = g.neighbors(v);
        state.bags[v] = vertex_bit(v);
    }
    if (!state.has_k4()) return std::nullopt;

    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for_each_bit(state.alive, [&](int v) {
            if (MinorState s = state.without_vertex(v); s.has_k4()) {
                state = s;
                shrunk = true;
            }
        });
        for_each_bit(state.alive, [&](int u) {
            for_each_bit(state.adj[u] & ~((vertex_bit(u) - 1) | vertex_bit(u)), [&](int v) {
                if (!((state.adj[u] >> v) & 1U)) return;
                if (MinorState s = state.without_edge(u, v); s.has_k4()) {
                    state = s;
                    shrunk = true;
                }
            });
        });
        for_each_bit(state.alive, [&](int u) {
            if (!((state.alive >> u) & 1U)) return;
            for_each_bit(state.adj[u], [&](int v) {
                if (!((state.alive >> u) & 1U) || !((state.adj[u] >> v) & 1U)) return;
                if (MinorState s = state.contracted(u, v); s.has_k4()) {
                    state = s;
                    shrunk = true;
                }
            });
        });
    }

    MinorModel model{MinorPattern::K4, {}};
    for_each_bit(state.alive, [&](int v) { model.branch_sets.push_back(state.bags[v]); });
    return model;
}

// Up to `want` internally vertex-disjoint a-b paths avoiding the edge ab.
// Returns the interior vertex sets of the paths found.
std::vector<VertexSet> disjoint_paths(const Graph& g, int a, int b, int want) {
    const int n = g.order();
    // Node 2v = v_in, 2v+1 = v_out; the v_in -> v_out arc has capacity 1.
    const int nodes = 2 * n;
    std::vector<int> cap(static_cast<std::size_t>(nodes * nodes), 0);
    auto at = [&](int x, int y) -> int& { return cap[static_cast<std::size_t>(x * nodes + y)]; };
    for (int v = 0; v < n; ++v) at(2 * v, 2 * v + 1) = (v == a || v == b) ? want : 1;
    for (const auto& e : g.edges()) {
        if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) continue;
        at(2 * e.u + 1, 2 * e.v) = 1;
        at(2 * e.v + 1, 2 * e.u) = 1;
    }
    const std::vector<int> original = cap;
    const int source = 2 * a + 1;
    const int sink = 2 * b;
    int flow = 0;
    while (flow < want) {
        std::vector<int> parent(static_cast<std::size_t>(nodes), -1);
        std::vector<int> queue{source};
        parent[static_cast<std::size_t>(source)] = source;
        for (std::size_t qi = 0; qi < queue.size() && parent[static_cast<std::size_t>(sink)] < 0; ++qi) {
            const int x = queue[qi];
            for (int y = 0; y < nodes; ++y) {
                if (parent[static_cast<std::size_t>(y)] < 0 && at(x, y) > 0) {
                    parent[static_cast<std::size_t>(y)] = x;
                    queue.push_back(y);
                }
            }
        }
        if (parent[static_cast<std::size_t>(sink)] < 0) break;
        for (int y = sink; y != source; y = parent[static_cast<std::size_t>(y)]) {
            const int x = parent[static_cast<std::size_t>(y)];
            --at(x, y);
            ++at(y, x);
        }
        ++flow;
    }

    std::vector<VertexSet> interiors;
    auto carries = [&](int x, int y) { return original[static_cast<std::size_t>(x * nodes + y)] > 0 && at(x, y) == 0; };
    for (int first = 0; first < n && static_cast<int>(interiors.size()) < flow; ++first) {
        if (!carries(source, 2 * first) || first == b) continue;
        VertexSet interior = 0;
        int v = first;
        while (v != b) {
            interior |= vertex_bit(v);
            int next = -1;
            for (int w = 0; w < n && next < 0; ++w) {
                if (carries(2 * v + 1, 2 * w)) next = w;
            }
            v = next;
        }
        interiors.push_back(interior);
    }
    return interiors;
}

std::optional<MinorModel> find_k23(const Graph& g) {
    for (int a = 0; a < g.order(); ++a) {
        if (g.degree(a) < 3) continue;
        for (int b = a + 1; b < g.order(); ++b) {
            if (g.degree(b) < 3) continue;
            auto paths = disjoint_paths(g, a, b, 3);
            if (paths.size() == 3) {
                return MinorModel{MinorPattern::K23, {vertex_bit(a), vertex_bit(b), paths[0], paths[1], paths[2]}};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

bool is_valid_model(const Graph& g, const MinorModel& model) {
    const std::size_t want = model.pattern == MinorPattern::K4 ? 4 : 5;
    if (model.branch_sets.size() != want) return false;
    VertexSet used = 0;
    for (VertexSet s : model.branch_sets) {
        if (s == 0 || (s & ~g.vertices()) || (s & used) || !is_connected(g, s)) return false;
        used |= s;
    }
    const auto& sets = model.branch_sets;
    if (model.pattern == MinorPattern::K4) {
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j)
                if (!touches(g, sets[i], sets[j])) return false;
        return true;
    }
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 2; j < 5; ++j)
            if (!touches(g, sets[i], sets[j])) return false;
    return true;
}

std::optional<MinorModel> find_minor(const Graph& g, MinorPattern pattern) {
    auto model = pattern == MinorPattern::K4 ? find_k4(g) : find_k23(g);
    if (model && !is_valid_model(g, *model)) {
        throw Error("internal error: minor search produced an invalid model");
    }
    return model;
}

bool is_outerplanar(const Graph& g) {
    return !has_minor(g, MinorPattern::K4) && !has_minor(g, MinorPattern::K23);
}

}  // namespace mop
