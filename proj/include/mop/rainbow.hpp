#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mop/graph.hpp"
#include "mop/matching.hpp"

namespace mop {

/// color[e] in [0, num_colors) for every edge index e of the graph.
struct EdgeColoring {
    std::vector<int> color;
    int num_colors = 0;

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

/// Renumbers classes by first occurrence in edge order; num_colors becomes the
/// number of distinct values.
EdgeColoring normal_form(const EdgeColoring& c);

EdgeColoring all_distinct_coloring(int num_edges);
EdgeColoring monochromatic_coloring(int num_edges);

/// Every class as a mask over edge indices, indexed by colour.
std::vector<EdgeSet> color_classes(const EdgeColoring& c);

struct RainbowWitness {
    Matching matching;
    std::vector<int> colors;  // colour of each matching edge, ascending edge order
};

/// A k-matching whose edges carry k distinct colours, or nullopt.
/// Throws Error if the colouring length differs from g.size().
std::optional<RainbowWitness> find_rainbow_matching(const Graph& g, const EdgeColoring& c, int k);

enum class CertificateVerdict { Ok, Malformed, NotSurjective, WrongCount, RainbowFound };

const char* to_string(CertificateVerdict v);

struct CertificateCheck {
    CertificateVerdict verdict = CertificateVerdict::Ok;
    std::optional<RainbowWitness> witness;  // set for RainbowFound

    bool ok() const { return verdict == CertificateVerdict::Ok; }
};

/// Accepts iff c is a well-formed surjection onto exactly claimed_colors
/// colours and no rainbow k-matching exists.
CertificateCheck verify_certificate(const Graph& g, const EdgeColoring& c, int k, int claimed_colors);

/// A rainbow-M_k-free colouring claim, as exchanged between tools.
struct Certificate {
    Graph graph;
    int k = 0;
    EdgeColoring coloring;
};

/// {"graph": graph6, "k": k, "colors": [...], "num_colors": c}
std::string certificate_to_json(const Certificate& cert);
/// Throws Error on schema violations.
Certificate certificate_from_json(const std::string& text);

}  // namespace mop
