#pragma once

#include <optional>
#include <vector>

#include "mop/graph.hpp"

namespace mop {

enum class MinorPattern { K4, K23 };

/// Branch sets of a minor model. For K4 all four sets are pairwise adjacent.
/// For K_{2,3} sets 0,1 form the two-vertex side and sets 2,3,4 the other
/// side; each of 0,1 must touch each of 2,3,4.
struct MinorModel {
    MinorPattern pattern = MinorPattern::K4;
    std::vector<VertexSet> branch_sets;
};

/// Disjoint, non-empty, connected branch sets with every required adjacency.
bool is_valid_model(const Graph& g, const MinorModel& model);

/// Exact minor test. Returns a verified model when the minor exists.
///
/// K_{2,3}: both patterns have maximum degree 3, so a minor exists iff a
/// subdivision does; for K_{2,3} that is a pair a,b joined by three internally
/// disjoint paths of length >= 2, found with unit-capacity vertex flow.
/// K4: degree <= 1 deletion and degree-2 suppression reduce the graph; a K4
/// minor exists iff the reduction gets stuck on min degree >= 3. The model is
/// then recovered by greedy deletion/contraction while the minor persists.
std::optional<MinorModel> find_minor(const Graph& g, MinorPattern pattern);

inline bool has_minor(const Graph& g, MinorPattern pattern) { return find_minor(g, pattern).has_value(); }

/// No K4 minor and no K_{2,3} minor.
bool is_outerplanar(const Graph& g);

}  // namespace mop
