#pragma once

#include <functional>
#include <vector>

#include "mop/graph.hpp"

namespace mop {

/// A set of pairwise vertex-disjoint edges, as a mask over edge indices.
struct Matching {
    EdgeSet edges = 0;

    int size() const { return popcount(edges); }
    friend bool operator==(const Matching&, const Matching&) = default;
};

bool is_matching(const Graph& g, EdgeSet edges);

/// Maximum matching size of g restricted to `within`.
///
/// Branch on the lowest free vertex (skip it, or match it to each neighbour)
/// with memoised vertex-set states and a floor(|S|/2) early exit.
int matching_number(const Graph& g, VertexSet within);
inline int matching_number(const Graph& g) { return matching_number(g, g.vertices()); }

/// A maximum matching of g restricted to `within`.
Matching maximum_matching(const Graph& g, VertexSet within);
inline Matching maximum_matching(const Graph& g) { return maximum_matching(g, g.vertices()); }

bool has_perfect_matching(const Graph& g, VertexSet within);

/// Every vertex-deleted subgraph of G[within] has a perfect matching.
bool is_factor_critical(const Graph& g, VertexSet within);
inline bool is_factor_critical(const Graph& g) { return is_factor_critical(g, g.vertices()); }

/// Visits every matching with exactly k edges once, in lexicographic order of
/// the sorted edge-index lists. Stops early if `visit` returns false.
void for_each_k_matching(const Graph& g, int k, const std::function<bool(EdgeSet)>& visit);

std::vector<Matching> k_matchings(const Graph& g, int k);

}  // namespace mop
