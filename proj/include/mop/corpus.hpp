#pragma once

#include <vector>

#include "mop/graph.hpp"

namespace mop {

inline constexpr int kMaxCorpusOrder = 9;

/// Every bipartite outerplanar graph with 2 <= n <= n_max vertices, once per
/// isomorphism class, canonically labelled, ordered by (n, canonical graph6).
///
/// Outerplanar graphs on n vertices are exactly the spanning subgraphs of
/// maximal outerplanar graphs on n vertices, so each MOP's edge subsets are
/// walked with odd cycles cut off early. Isolated vertices and edgeless graphs
/// are included. Throws Error if n_max is outside [2, 9].
std::vector<Graph> bipartite_outerplanar_corpus(int n_max);

}  // namespace mop
