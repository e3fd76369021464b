#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "mop/graph.hpp"

namespace mop {

/// A triangulation of the convex polygon 0,1,...,n-1 given by its n-3 chords.
struct Triangulation {
    int n = 0;
    std::vector<Edge> diagonals;  // each u < v, sorted

    Graph graph() const;

    friend bool operator==(const Triangulation&, const Triangulation&) = default;
};

inline constexpr int kMinPolygon = 3;
inline constexpr int kMaxPolygon = 16;

/// True iff the chords {a,b} and {c,d} cross in the interior of the polygon.
bool chords_cross(Edge a, Edge b);

/// Checks chord count, ranges, non-adjacency of endpoints and non-crossing.
bool is_valid_triangulation(const Triangulation& t);

/// Calls `visit` once for every triangulation of the convex n-gon, in a fixed
/// order. The triangle on polygon side {0,1} is chosen first, then each side
/// polygon recursively, so the count follows the Catalan recursion.
void enumerate_triangulations(int n, const std::function<void(const Triangulation&)>& visit);
std::uint64_t count_triangulations(int n);

/// Lexicographically least diagonal list over the 2n rotations and
/// reflections of the polygon.
Triangulation dihedral_canonical(const Triangulation& t);

/// One triangulation per isomorphism class of maximal outerplanar graphs of
/// order n, sorted by their dihedral-canonical diagonal lists.
std::vector<Triangulation> enumerate_mop_triangulations(int n);

/// The graphs of enumerate_mop_triangulations(n), labelled along the polygon.
std::vector<Graph> enumerate_mops(int n);

/// Text form "n: 0-2,0-3" (diagonal list may be empty: "3: ").
std::string format_triangulation(const Triangulation& t);
Triangulation parse_triangulation(std::string_view line);
inline constexpr std::string_view kTriangulationHeader = "# mop-triangulation v1";

}  // namespace mop
