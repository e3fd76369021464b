#pragma once

#include <string>
#include <vector>

#include "mop/graph.hpp"

namespace mop {

struct CanonicalForm {
    /// label[v] is the canonical position of vertex v.
    std::vector<int> label;
    /// graph6 of g.relabeled(label).
    std::string graph6;
};

/// Canonical labelling by colour refinement plus exhaustive individualisation.
///
/// Two graphs get the same graph6 string iff they are isomorphic. The search
/// tree is pruned only through twin vertices (equal open or closed
/// neighbourhoods), so cost grows with the symmetry left after refinement;
/// fine for the n <= 16 graphs used here.
CanonicalForm canonical_form(const Graph& g);

/// The canonically relabelled graph itself.
Graph canonical_graph(const Graph& g);

/// Equal canonical strings.
bool isomorphic(const Graph& a, const Graph& b);

/// Vertex permutations p with g.relabeled(p) == g, at most `limit` of them,
/// identity first.
std::vector<std::vector<int>> automorphisms(const Graph& g, std::size_t limit = 256);

}  // namespace mop
