#include "mop/tutte_berge.hpp"

#include "json.hpp"

#include "mop/matching.hpp"

namespace mop {

namespace {

// Next larger mask with the same popcount (Gosper's hack), 0 when exhausted.
std::uint64_t next_same_popcount(std::uint64_t x, std::uint64_t limit) {
    const std::uint64_t c = x & -x;
    const std::uint64_t r = x + c;
    const std::uint64_t next = (((r ^ x) >> 2) / c) | r;
    return next < limit ? next : 0;
}

bool components_conform(const Graph& g, VertexSet barrier) {
    for (VertexSet comp : components(g, g.vertices() & ~barrier)) {
        if (std::popcount(comp) % 2 == 1) {
            if (!is_factor_critical(g, comp)) return false;
        } else if (!has_perfect_matching(g, comp)) {
            return false;
        }
    }
    return true;
}

}  // namespace

int tutte_berge_value(const Graph& g, VertexSet barrier, int* odd_components) {
    barrier &= g.vertices();
    int odd = 0;
    for (VertexSet comp : components(g, g.vertices() & ~barrier)) odd += std::popcount(comp) % 2;
    if (odd_components) *odd_components = odd;
    // n - o + |T| is always even: o has the parity of n - |T|.
    return (g.order() - odd + std::popcount(barrier)) / 2;
}

TutteBergeCertificate tutte_berge_certificate(const Graph& g) {
    const int n = g.order();
    if (n > kMaxTutteBergeOrder) {
        throw Error("tutte_berge_certificate: order " + std::to_string(n) + " exceeds 14");
    }
    const int beta = matching_number(g);
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (int size = 0; size <= beta; ++size) {
        std::uint64_t t = size == 0 ? 0 : (std::uint64_t{1} << size) - 1;
        while (true) {
            int odd = 0;
            const auto barrier = static_cast<VertexSet>(t);
            if (tutte_berge_value(g, barrier, &odd) == beta && components_conform(g, barrier)) {
                return {barrier, odd, beta};
            }
            if (size == 0) break;
            t = next_same_popcount(t, limit);
            if (t == 0) break;
        }
    }
    throw Error("internal error: no conforming Tutte-Berge barrier found");
}

bool check_tutte_berge_certificate(const Graph& g, const TutteBergeCertificate& cert) {
    if (cert.barrier & ~g.vertices()) return false;
    int odd = 0;
    const int value = tutte_berge_value(g, cert.barrier, &odd);
    return odd == cert.odd_components && value == cert.value && value == matching_number(g) &&
           components_conform(g, cert.barrier);
}

std::string tutte_berge_to_json(const TutteBergeCertificate& cert) {
    nlohmann::json t = nlohmann::json::array();
    for_each_bit(cert.barrier, [&](int v) { t.push_back(v); });
    nlohmann::json j;
    j["T"] = t;
    j["odd_components"] = cert.odd_components;
    j["value"] = cert.value;
    return j.dump();
}

}  // namespace mop
