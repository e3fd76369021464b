#pragma once

#include <string>

#include "mop/graph.hpp"

namespace mop {

/// A barrier set T with o(G-T) odd components; `value` is
/// (n - odd_components + |T|) / 2, an upper bound on the matching number that
/// is tight for a proper choice of T.
struct TutteBergeCertificate {
    VertexSet barrier = 0;
    int odd_components = 0;
    int value = 0;
};

/// (n - o(G-T) + |T|) / 2 for the given T.
int tutte_berge_value(const Graph& g, VertexSet barrier, int* odd_components = nullptr);

inline constexpr int kMaxTutteBergeOrder = 14;

/// Scans T by increasing size (then lexicographically by bitmask) up to
/// |T| <= matching number, returning the first T whose value equals the
/// matching number, whose odd components of G-T are factor-critical and whose
/// even components have perfect matchings. Throws Error for n > 14.
TutteBergeCertificate tutte_berge_certificate(const Graph& g);

/// Recomputes the certificate fields and the component conditions from g.
bool check_tutte_berge_certificate(const Graph& g, const TutteBergeCertificate& cert);

/// {"T": [...], "odd_components": o, "value": v}
std::string tutte_berge_to_json(const TutteBergeCertificate& cert);

}  // namespace mop
