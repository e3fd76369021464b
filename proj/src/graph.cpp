#include "mop/graph.hpp"

#include <algorithm>
#include <numeric>

namespace mop {

namespace {

VertexSet below(int v) { return v >= 32 ? ~VertexSet{0} : vertex_bit(v) - 1; }

}  // namespace

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) {
        throw Error("graph order " + std::to_string(n) + " outside [0, 32]");
    }
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const auto& e : edges) add_edge_checked(e.u, e.v);
    rebuild_edges();
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
    for (const auto& [u, v] : edges) add_edge_checked(u, v);
    rebuild_edges();
}

void Graph::add_edge_checked(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
        throw Error("edge {" + std::to_string(u) + "," + std::to_string(v) +
                    "} has an endpoint outside [0, " + std::to_string(n_) + ")");
    }
    if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) {
        throw Error("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    adj_[u] |= vertex_bit(v);
    adj_[v] |= vertex_bit(u);
}

void Graph::rebuild_edges() {
    edges_.clear();
    for (int u = 0; u < n_; ++u) {
        for_each_bit(adj_[u] & ~below(u + 1), [&](int v) { edges_.push_back({u, v}); });
    }
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n_ || u == v || !adjacent(u, v)) return -1;
    int index = 0;
    for (int w = 0; w < u; ++w) index += std::popcount(adj_[w] & ~below(w + 1));
    return index + std::popcount(adj_[u] & ~below(u + 1) & below(v));
}

Graph Graph::spanning_subgraph(EdgeSet keep) const {
    Graph h(n_);
    for_each_bit(keep, [&](int e) {
        h.adj_[edges_[e].u] |= vertex_bit(edges_[e].v);
        h.adj_[edges_[e].v] |= vertex_bit(edges_[e].u);
    });
    h.rebuild_edges();
    return h;
}

Graph Graph::relabeled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw Error("permutation length differs from graph order");
    Graph h(n_);
    for (const auto& e : edges_) {
        h.adj_[perm[e.u]] |= vertex_bit(perm[e.v]);
        h.adj_[perm[e.v]] |= vertex_bit(perm[e.u]);
    }
    h.rebuild_edges();
    return h;
}

DegreeStats degree_stats(const Graph& g) {
    DegreeStats s;
    for (int v = 0; v < g.order(); ++v) s.sequence.push_back(g.degree(v));
    std::sort(s.sequence.begin(), s.sequence.end());
    if (!s.sequence.empty()) {
        s.min_degree = s.sequence.front();
        s.max_degree = s.sequence.back();
    }
    return s;
}

int cut_edges(const Graph& g, VertexSet a, VertexSet b) {
    if (a & b) throw Error("cut_edges: vertex sets overlap");
    int count = 0;
    for_each_bit(a & g.vertices(), [&](int v) { count += std::popcount(g.neighbors(v) & b); });
    return count;
}

int induced_edges(const Graph& g, VertexSet s) {
    int twice = 0;
    for_each_bit(s & g.vertices(), [&](int v) { twice += std::popcount(g.neighbors(v) & s); });
    return twice / 2;
}

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
    std::vector<VertexSet> out;
    VertexSet left = within & g.vertices();
    while (left) {
        VertexSet comp = vertex_bit(lowest(left));
        VertexSet frontier = comp;
        while (frontier) {
            VertexSet next = 0;
            for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
            next &= left & ~comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

bool is_connected(const Graph& g, VertexSet within) { return components(g, within).size() <= 1; }

std::optional<Bipartition> bipartition_of(const Graph& g) {
    Bipartition bp;
    for (VertexSet comp : components(g)) {
        VertexSet side[2] = {vertex_bit(lowest(comp)), 0};
        VertexSet frontier = side[0];
        int parity = 0;
        while (frontier) {
            VertexSet next = 0;
            for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
            if (next & side[parity]) return std::nullopt;
            next &= ~side[parity ^ 1];
            parity ^= 1;
            side[parity] |= next;
            frontier = next;
        }
        if (std::popcount(side[0]) > std::popcount(side[1])) std::swap(side[0], side[1]);
        bp.x |= side[0];
        bp.y |= side[1];
    }
    // A frontier edge inside one side only shows up when both ends are reached
    // in the same wave, so verify explicitly.
    for (const auto& e : g.edges()) {
        if (((bp.x >> e.u) & 1U) == ((bp.x >> e.v) & 1U)) return std::nullopt;
    }
    return bp;
}

namespace named {

Graph complete(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    return Graph(n, e);
}

Graph cycle(int n) {
    std::vector<Edge> e;
    for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
    if (n >= 3) e.push_back({0, n - 1});
    return Graph(n, e);
}

Graph path(int n) {
    std::vector<Edge> e;
    for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
    return Graph(n, e);
}

Graph star(int n) {
    std::vector<Edge> e;
    for (int v = 1; v < n; ++v) e.push_back({0, v});
    return Graph(n, e);
}

Graph complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) e.push_back({u, a + v});
    return Graph(a + b, e);
}

Graph empty(int n) { return Graph(n); }

}  // namespace named

}  // namespace mop
