#include "mop/matching.hpp"

#include <unordered_map>

namespace mop {

namespace {

class MatchingMemo {
  public:
    explicit MatchingMemo(const Graph& g) : g_(g) {}

    int solve(VertexSet s) {
        s = drop_isolated(s);
        if (std::popcount(s) < 2) return 0;
        if (auto it = memo_.find(s); it != memo_.end()) return it->second;
        const int v = lowest(s);
        const int ceiling = std::popcount(s) / 2;
        int best = 0;
        for_each_bit(g_.neighbors(v) & s, [&](int u) {
            if (best < ceiling) best = std::max(best, 1 + solve(s & ~vertex_bit(v) & ~vertex_bit(u)));
        });
        if (best < (std::popcount(s) - 1) / 2) best = std::max(best, solve(s & ~vertex_bit(v)));
        memo_.emplace(s, best);
        return best;
    }

    EdgeSet witness(VertexSet s) {
        EdgeSet out = 0;
        for (;;) {
            s = drop_isolated(s);
            const int target = solve(s);
            if (target == 0) return out;
            const int v = lowest(s);
            int partner = -1;
            for_each_bit(g_.neighbors(v) & s, [&](int u) {
                if (partner < 0 && 1 + solve(s & ~vertex_bit(v) & ~vertex_bit(u)) == target) partner = u;
            });
            if (partner >= 0) {
                out |= edge_bit(g_.edge_index(v, partner));
                s &= ~vertex_bit(v) & ~vertex_bit(partner);
            } else {
                s &= ~vertex_bit(v);
            }
        }
    }

  private:
    VertexSet drop_isolated(VertexSet s) const {
        VertexSet keep = 0;
        for_each_bit(s, [&](int v) {
            if (g_.neighbors(v) & s) keep |= vertex_bit(v);
        });
        return keep;
    }

    const Graph& g_;
    std::unordered_map<VertexSet, int> memo_;
};

}  // namespace

bool is_matching(const Graph& g, EdgeSet edges) {
    VertexSet covered = 0;
    bool ok = true;
    for_each_bit(edges, [&](int e) {
        if (e >= g.size()) {
            ok = false;
            return;
        }
        const VertexSet ends = g.edge_ends(e);
        if (covered & ends) ok = false;
        covered |= ends;
    });
    return ok;
}

int matching_number(const Graph& g, VertexSet within) {
    MatchingMemo memo(g);
    return memo.solve(within & g.vertices());
}

Matching maximum_matching(const Graph& g, VertexSet within) {
    if (g.size() > 64) throw Error("maximum_matching: edge masks hold at most 64 edges");
    MatchingMemo memo(g);
    return Matching{memo.witness(within & g.vertices())};
}

bool has_perfect_matching(const Graph& g, VertexSet within) {
    within &= g.vertices();
    const int n = std::popcount(within);
    return n % 2 == 0 && matching_number(g, within) == n / 2;
}

bool is_factor_critical(const Graph& g, VertexSet within) {
    within &= g.vertices();
    if (std::popcount(within) % 2 == 0) return false;
    bool ok = true;
    for_each_bit(within, [&](int v) { ok = ok && has_perfect_matching(g, within & ~vertex_bit(v)); });
    return ok;
}

void for_each_k_matching(const Graph& g, int k, const std::function<bool(EdgeSet)>& visit) {
    if (k < 0) throw Error("matching size must be non-negative");
    if (g.size() > 64) throw Error("for_each_k_matching: edge masks hold at most 64 edges");
    const int m = g.size();
    bool stop = false;
    auto extend = [&](auto&& self, int from, VertexSet covered, EdgeSet chosen, int left) -> void {
        if (left == 0) {
            stop = !visit(chosen);
            return;
        }
        for (int e = from; e + left <= m && !stop; ++e) {
            const VertexSet ends = g.edge_ends(e);
            if (covered & ends) continue;
            self(self, e + 1, covered | ends, chosen | edge_bit(e), left - 1);
        }
    };
    extend(extend, 0, 0, 0, k);
}

std::vector<Matching> k_matchings(const Graph& g, int k) {
    std::vector<Matching> out;
    for_each_k_matching(g, k, [&](EdgeSet edges) {
        out.push_back({edges});
        return true;
    });
    return out;
}

}  // namespace mop
