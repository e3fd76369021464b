#include "mop/corpus.hpp"

#include <array>
#include <map>
#include <string>

#include "mop/canonical.hpp"
#include "mop/triangulation.hpp"

namespace mop {

namespace {

// Union-find with parity to the root; small enough to copy per branch.
struct ParityForest {
    std::array<std::int8_t, 16> parent{};
    std::array<std::int8_t, 16> parity{};

    explicit ParityForest(int n) {
        for (int v = 0; v < n; ++v) parent[v] = static_cast<std::int8_t>(v);
    }

    std::pair<int, int> find(int v) const {
        int p = 0;
        while (parent[v] != v) {
            p ^= parity[v];
            v = parent[v];
        }
        return {v, p};
    }

    // False if the edge closes an odd cycle.
    bool join(int u, int v) {
        auto [ru, pu] = find(u);
        auto [rv, pv] = find(v);
        if (ru == rv) return pu != pv;
        parent[rv] = static_cast<std::int8_t>(ru);
        parity[rv] = static_cast<std::int8_t>(pu ^ pv ^ 1);
        return true;
    }
};

void collect_bipartite_subgraphs(const Graph& host, std::map<std::string, Graph>& out) {
    const int m = host.size();
    auto walk = [&](auto&& self, int e, EdgeSet chosen, const ParityForest& forest) -> void {
        if (e == m) {
            const Graph sub = host.spanning_subgraph(chosen);
            auto form = canonical_form(sub);
            if (!out.contains(form.graph6)) out.emplace(form.graph6, sub.relabeled(form.label));
            return;
        }
        self(self, e + 1, chosen, forest);
        ParityForest with = forest;
        if (with.join(host.edge(e).u, host.edge(e).v)) self(self, e + 1, chosen | edge_bit(e), with);
    };
    walk(walk, 0, 0, ParityForest(host.order()));
}

}  // namespace

std::vector<Graph> bipartite_outerplanar_corpus(int n_max) {
    if (n_max < 2 || n_max > kMaxCorpusOrder) {
        throw Error("corpus order " + std::to_string(n_max) + " outside [2, 9]");
    }
    std::vector<Graph> corpus;
    for (int n = 2; n <= n_max; ++n) {
        std::map<std::string, Graph> classes;
        const std::vector<Graph> hosts = n == 2 ? std::vector<Graph>{named::complete(2)} : enumerate_mops(n);
        for (const auto& host : hosts) collect_bipartite_subgraphs(host, classes);
        for (auto& [_, g] : classes) corpus.push_back(std::move(g));
    }
    return corpus;
}

}  // namespace mop
