#pragma once

#include <chrono>
#include <cstdint>
#include <string>

#include "mop/graph.hpp"
#include "mop/rainbow.hpp"

namespace mop {

inline constexpr int kMaxMatchingSize = 8;
inline constexpr int kMaxBruteForceEdges = 10;

/// EXACT: value is ar(G, M_k). LOWER_BOUND: the search was interrupted.
/// BOUNDED: the search completed under a known floor; value is witnessed and
/// ar(G, M_k) <= upper_bound.
enum class SolveMode { Exact, LowerBound, Bounded };

const char* to_string(SolveMode mode);

/// Zero means unlimited.
struct SolverLimits {
    std::uint64_t max_nodes = 0;
    std::chrono::milliseconds budget{0};
    /// Entries kept in the symmetry transposition table (LRU); zero disables it.
    std::size_t transposition_capacity = 1U << 16;
    /// Only colourings with more than this many colours are searched for.
    /// When none exists the result is BOUNDED with this upper bound.
    int known_floor = 0;
};

struct ArResult {
    int value = 0;
    EdgeColoring witness;  // class-partition normal form, `value` colours
    SolveMode mode = SolveMode::Exact;
    int upper_bound = 0;   // equals value when EXACT
    std::uint64_t nodes = 0;
    std::uint64_t transposition_hits = 0;
    double elapsed_ms = 0.0;
};

/// ar(G, M_k): the most colours in a surjective edge colouring of g with no
/// rainbow k-matching.
///
/// Equivalent to the coarsest-to-finest question over edge partitions: find
/// the partition with most classes in which every k-matching has two edges in
/// one class. The search starts from the all-singleton partition, picks a
/// k-matching whose edges are still in distinct classes and branches over
/// merging each pair of its classes; pairs tried in earlier sibling branches
/// are forbidden, so sibling subtrees never share a partition. Nodes are cut
/// when the class count minus a packing lower bound on the merges still needed
/// cannot beat the incumbent.
///
/// Throws Error if k is outside [2, 8], g has no edges or more than 64 edges.
ArResult ar_exact(const Graph& g, int k, const SolverLimits& limits = {});

/// Independent oracle: maximum class count over every set partition of E(g)
/// in which each k-matching repeats a class. Throws Error if e(g) > 10.
int ar_brute_force(const Graph& g, int k);

/// Greedy rainbow-M_k-free colouring: repeatedly merge the class pair that
/// repairs the most rainbow k-matchings. Requires matching number >= k.
EdgeColoring seed_incumbent(const Graph& g, int k);

/// {"graph", "k", "value", "mode", "upper_bound", "witness": certificate, "nodes", "elapsed_ms"}
std::string ar_result_to_json(const Graph& g, int k, const ArResult& r);
ArResult ar_result_from_json(const std::string& text, Graph* graph = nullptr, int* k = nullptr);

}  // namespace mop
