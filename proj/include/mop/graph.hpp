#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mop {

/// One bit per vertex; bit v set means vertex v is in the set.
using VertexSet = std::uint32_t;

/// One bit per edge index (graphs handled by the solver have at most 64 edges).
using EdgeSet = std::uint64_t;

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }
inline constexpr EdgeSet edge_bit(int e) { return EdgeSet{1} << e; }
inline int popcount(std::uint64_t x) { return std::popcount(x); }
inline int lowest(std::uint64_t x) { return std::countr_zero(x); }

/// Iterates the set bits of a mask, lowest first.
template <typename Fn>
inline void for_each_bit(std::uint64_t mask, Fn&& fn) {
    while (mask) {
        fn(std::countr_zero(mask));
        mask &= mask - 1;
    }
}

struct Edge {
    int u = 0;  // u < v
    int v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Small simple undirected graph, n <= 32, one adjacency word per vertex.
///
/// Edges are indexed in lexicographic (min endpoint, max endpoint) order; every
/// certificate in the project refers to edges by this index.
class Graph {
  public:
    static constexpr int kMaxVertices = 32;

    Graph() = default;
    explicit Graph(int n);
    /// Throws Error on self-loops, duplicate edges or out-of-range endpoints.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<std::pair<int, int>> edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    VertexSet vertices() const { return n_ == 32 ? ~VertexSet{0} : vertex_bit(n_) - 1; }
    VertexSet neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
    int degree(int v) const { return std::popcount(adj_[v]); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int index) const { return edges_[index]; }
    /// Index of edge {u,v} in the canonical edge order, or -1.
    int edge_index(int u, int v) const;

    /// Vertex mask of the two endpoints of edge `index`.
    VertexSet edge_ends(int index) const {
        return vertex_bit(edges_[index].u) | vertex_bit(edges_[index].v);
    }

    /// Spanning subgraph keeping the listed edges (mask over this graph's edge indices).
    Graph spanning_subgraph(EdgeSet keep) const;
    /// Graph with vertex v renamed to perm[v].
    Graph relabeled(std::span<const int> perm) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

  private:
    void add_edge_checked(int u, int v);
    void rebuild_edges();

    int n_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
    std::vector<Edge> edges_;
};

struct DegreeStats {
    int min_degree = 0;
    int max_degree = 0;
    std::vector<int> sequence;  // ascending
};

DegreeStats degree_stats(const Graph& g);

/// Number of edges with one end in `a` and the other in `b`. Throws on overlap.
int cut_edges(const Graph& g, VertexSet a, VertexSet b);

/// Number of edges with both ends in `s`.
int induced_edges(const Graph& g, VertexSet s);

/// Connected components of g restricted to `within`, each as a vertex mask,
/// ordered by lowest vertex.
std::vector<VertexSet> components(const Graph& g, VertexSet within);
inline std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

bool is_connected(const Graph& g, VertexSet within);

struct Bipartition {
    VertexSet x = 0;  // |x| <= |y|
    VertexSet y = 0;
};

/// Two-colouring with the smaller side minimised per component, or nullopt if
/// an odd cycle exists.
std::optional<Bipartition> bipartition_of(const Graph& g);

namespace named {
Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
/// Star with n vertices: centre 0, leaves 1..n-1.
Graph star(int n);
Graph complete_bipartite(int a, int b);
Graph empty(int n);
}  // namespace named

}  // namespace mop
