#include "mop/canonical.hpp"

#include <array>
#include <functional>

#include "mop/graph6.hpp"

namespace mop {

namespace {

using Cells = std::vector<VertexSet>;
using LeafKey = std::array<std::uint64_t, 8>;  // 496 adjacency bits

// Equitable refinement: split every cell by neighbour counts into each
// splitter cell until stable. Depends only on cell order, never on labels.
void refine(const Graph& g, Cells& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
            const VertexSet splitter = cells[s];
            Cells next;
            next.reserve(cells.size() + 4);
            for (VertexSet cell : cells) {
                if (std::popcount(cell) == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::array<VertexSet, 33> by_count{};
                for_each_bit(cell, [&](int v) {
                    by_count[std::popcount(g.neighbors(v) & splitter)] |= vertex_bit(v);
                });
                for (VertexSet part : by_count)
                    if (part) next.push_back(part);
            }
            if (next.size() != cells.size()) {
                cells = std::move(next);
                changed = true;
            }
        }
    }
}

LeafKey leaf_key(const Graph& g, const std::vector<int>& label) {
    std::vector<VertexSet> adj(g.order(), 0);
    for (const auto& e : g.edges()) {
        adj[label[e.u]] |= vertex_bit(label[e.v]);
        adj[label[e.v]] |= vertex_bit(label[e.u]);
    }
    LeafKey key{};
    int bit = 0;
    for (int j = 1; j < g.order(); ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if ((adj[j] >> i) & 1U) key[bit / 64] |= std::uint64_t{1} << (63 - bit % 64);
        }
    }
    return key;
}

bool twins(const Graph& g, int u, int v) {
    return (g.neighbors(u) & ~vertex_bit(v)) == (g.neighbors(v) & ~vertex_bit(u));
}

struct Search {
    const Graph& g;
    bool have_best = false;
    LeafKey best{};
    std::vector<int> best_label;

    void run(Cells cells) {
        refine(g, cells);
        std::size_t target = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (std::popcount(cells[i]) > 1) {
                target = i;
                break;
            }
        }
        if (target == cells.size()) {
            std::vector<int> label(g.order());
            for (std::size_t i = 0; i < cells.size(); ++i) label[lowest(cells[i])] = static_cast<int>(i);
            LeafKey key = leaf_key(g, label);
            if (!have_best || key > best) {
                have_best = true;
                best = key;
                best_label = std::move(label);
            }
            return;
        }
        const VertexSet cell = cells[target];
        VertexSet tried = 0;
        for_each_bit(cell, [&](int v) {
            bool redundant = false;
            for_each_bit(tried, [&](int u) { redundant = redundant || twins(g, u, v); });
            tried |= vertex_bit(v);
            if (redundant) return;
            Cells next;
            next.reserve(cells.size() + 1);
            next.insert(next.end(), cells.begin(), cells.begin() + static_cast<long>(target));
            next.push_back(vertex_bit(v));
            next.push_back(cell & ~vertex_bit(v));
            next.insert(next.end(), cells.begin() + static_cast<long>(target) + 1, cells.end());
            run(std::move(next));
        });
    }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    if (g.order() == 0) return {{}, graph6_encode(g)};
    Search search{g, false, {}, {}};
    search.run(Cells{g.vertices()});
    CanonicalForm form;
    form.label = std::move(search.best_label);
    form.graph6 = graph6_encode(g.relabeled(form.label));
    return form;
}

Graph canonical_graph(const Graph& g) {
    if (g.order() == 0) return g;
    return g.relabeled(canonical_form(g).label);
}

bool isomorphic(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.size() == b.size() &&
           canonical_form(a).graph6 == canonical_form(b).graph6;
}

std::vector<std::vector<int>> automorphisms(const Graph& g, std::size_t limit) {
    const int n = g.order();
    std::vector<std::vector<int>> out;
    if (n == 0 || limit == 0) return out;

    // Vertices may only map within their refined cell.
    Cells cells{g.vertices()};
    refine(g, cells);
    std::vector<VertexSet> allowed(n);
    for (VertexSet cell : cells) for_each_bit(cell, [&](int v) { allowed[v] = cell; });

    std::vector<int> image(n, -1);
    VertexSet used = 0;
    std::function<void(int)> extend = [&](int v) {
        if (out.size() >= limit) return;
        if (v == n) {
            out.push_back(image);
            return;
        }
        for_each_bit(allowed[v] & ~used, [&](int w) {
            if (out.size() >= limit) return;
            for (int u = 0; u < v; ++u) {
                if (g.adjacent(u, v) != g.adjacent(image[u], w)) return;
            }
            image[v] = w;
            used |= vertex_bit(w);
            extend(v + 1);
            used &= ~vertex_bit(w);
            image[v] = -1;
        });
    };
    extend(0);
    return out;
}

}  // namespace mop
