#include "mop/ar_solver.hpp"

#include <algorithm>
#include <array>
#include <list>
#include <string_view>
#include <unordered_map>

#include "json.hpp"
#include "mop/canonical.hpp"
#include "mop/graph6.hpp"
#include "mop/matching.hpp"

namespace mop {

namespace {

using Clock = std::chrono::steady_clock;

void check_instance(const Graph& g, int k) {
    if (k < 2 || k > kMaxMatchingSize) {
        throw Error("matching size k=" + std::to_string(k) +
                    " outside [2, 8]; for k = 1 every edge is a rainbow 1-matching");
    }
    if (g.size() == 0) throw Error("graph has no edges");
    if (g.size() > 64) throw Error("graph has more than 64 edges");
}

std::vector<EdgeSet> all_k_matchings(const Graph& g, int k) {
    std::vector<EdgeSet> out;
    for_each_k_matching(g, k, [&](EdgeSet m) {
        out.push_back(m);
        return true;
    });
    return out;
}

// Partition of the edge set into classes living in fixed slots; a class keeps
// the slot of its lowest original member through merges.
struct Partition {
    std::array<EdgeSet, 64> cls{};
    std::array<std::uint64_t, 64> forbid{};  // slot pairs that must stay apart
    std::array<std::int8_t, 64> slot_of{};
    std::uint64_t alive = 0;

    static Partition singletons(int m) {
        Partition p;
        for (int e = 0; e < m; ++e) {
            p.cls[e] = edge_bit(e);
            p.slot_of[e] = static_cast<std::int8_t>(e);
        }
        p.alive = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
        return p;
    }

    int count() const { return popcount(alive); }

    std::uint64_t slots(EdgeSet matching) const {
        std::uint64_t s = 0;
        for_each_bit(matching, [&](int e) { s |= std::uint64_t{1} << slot_of[e]; });
        return s;
    }

    // Class pairs inside `slots` not yet forbidden.
    int open_pairs(std::uint64_t s) const {
        int count = 0;
        for_each_bit(s, [&](int i) { count += popcount(s & ~forbid[i] & ~((std::uint64_t{2} << i) - 1)); });
        return count;
    }

    void merge(int a, int b) {
        if (a > b) std::swap(a, b);
        for_each_bit(cls[b], [&](int e) { slot_of[e] = static_cast<std::int8_t>(a); });
        cls[a] |= cls[b];
        cls[b] = 0;
        alive &= ~(std::uint64_t{1} << b);
        for_each_bit(forbid[b], [&](int x) {
            forbid[x] = (forbid[x] & ~(std::uint64_t{1} << b)) | (std::uint64_t{1} << a);
        });
        forbid[a] |= forbid[b];
        forbid[b] = 0;
    }

    void separate(int a, int b) {
        forbid[a] |= std::uint64_t{1} << b;
        forbid[b] |= std::uint64_t{1} << a;
    }

    EdgeColoring coloring(int m) const {
        EdgeColoring c;
        c.color.assign(slot_of.begin(), slot_of.begin() + m);
        return normal_form(c);
    }
};

// Prunes states that are images, under an automorphism of the graph, of a
// state whose subtree was already exhausted with no more forbidden pairs.
class SymmetryTable {
  public:
    SymmetryTable(const Graph& g, std::size_t capacity) : m_(g.size()), capacity_(capacity) {
        if (capacity == 0) return;
        for (const auto& sigma : automorphisms(g, 512)) {
            std::array<std::int8_t, 64> inverse{};
            for (int e = 0; e < m_; ++e) {
                const auto& edge = g.edge(e);
                inverse[g.edge_index(sigma[edge.u], sigma[edge.v])] = static_cast<std::int8_t>(e);
            }
            inverse_perms_.push_back(inverse);
        }
        if (inverse_perms_.size() <= 1) inverse_perms_.clear();
    }

    bool active() const { return !inverse_perms_.empty(); }

    struct View {
        std::string key;
        std::vector<std::vector<std::uint64_t>> frames;  // forbid rows per minimal image
    };

    View view(const Partition& p) const {
        View v;
        std::string key(static_cast<std::size_t>(m_), '\0');
        std::array<std::int8_t, 64> label{};
        for (const auto& inv : inverse_perms_) {
            label.fill(-1);
            std::int8_t next = 0;
            for (int e = 0; e < m_; ++e) {
                const int slot = p.slot_of[inv[e]];
                if (label[slot] < 0) label[slot] = next++;
                key[static_cast<std::size_t>(e)] = static_cast<char>(label[slot]);
            }
            if (v.frames.empty() || key < v.key) {
                v.key = key;
                v.frames.clear();
            } else if (key != v.key) {
                continue;
            }
            std::vector<std::uint64_t> rows(static_cast<std::size_t>(next), 0);
            for_each_bit(p.alive, [&](int s) {
                std::uint64_t row = 0;
                for_each_bit(p.forbid[s], [&](int t) { row |= std::uint64_t{1} << label[t]; });
                rows[static_cast<std::size_t>(label[s])] = row;
            });
            v.frames.push_back(std::move(rows));
        }
        return v;
    }

    bool covered(const View& v) {
        auto it = index_.find(v.key);
        if (it == index_.end()) return false;
        const auto& stored = it->second->second;
        for (const auto& rows : v.frames) {
            bool subset = true;
            for (std::size_t i = 0; i < rows.size() && subset; ++i) subset = (stored[i] & ~rows[i]) == 0;
            if (subset) {
                lru_.splice(lru_.begin(), lru_, it->second);
                return true;
            }
        }
        return false;
    }

    void record(const View& v) {
        if (auto it = index_.find(v.key); it != index_.end()) {
            lru_.erase(it->second);
            index_.erase(it);
        }
        lru_.emplace_front(v.key, v.frames.front());
        index_[v.key] = lru_.begin();
        if (lru_.size() > capacity_) {
            index_.erase(lru_.back().first);
            lru_.pop_back();
        }
    }

  private:
    using Entry = std::pair<std::string, std::vector<std::uint64_t>>;
    int m_;
    std::size_t capacity_;
    std::vector<std::array<std::int8_t, 64>> inverse_perms_;
    std::list<Entry> lru_;
    std::unordered_map<std::string, std::list<Entry>::iterator> index_;
};

class PartitionSearch {
  public:
    PartitionSearch(const Graph& g, int k, const SolverLimits& limits)
        : g_(g), m_(g.size()), limits_(limits), symmetry_(g, limits.transposition_capacity) {
        matchings_ = all_k_matchings(g, k);
    }

    ArResult run(const EdgeColoring& seed) {
        start_ = Clock::now();
        best_ = std::max(seed.num_colors, limits_.known_floor);
        witness_ = seed;
        search(Partition::singletons(m_), matchings_);
        ArResult r;
        r.value = witness_.num_colors;
        r.witness = witness_;
        if (aborted_) {
            r.mode = SolveMode::LowerBound;
            r.upper_bound = m_;
        } else {
            r.mode = best_ == r.value ? SolveMode::Exact : SolveMode::Bounded;
            r.upper_bound = best_;
        }
        r.nodes = nodes_;
        r.transposition_hits = hits_;
        return r;
    }

  private:
    bool out_of_budget() {
        if (limits_.max_nodes && nodes_ > limits_.max_nodes) return true;
        if (limits_.budget.count() > 0 && (nodes_ & 255) == 0) {
            return Clock::now() - start_ > limits_.budget;
        }
        return false;
    }

    void search(Partition node, const std::vector<EdgeSet>& violated) {
        if (aborted_) return;
        ++nodes_;
        if (out_of_budget()) {
            aborted_ = true;
            return;
        }
        const int classes = node.count();
        if (violated.empty()) {
            if (classes > best_) {
                best_ = classes;
                witness_ = node.coloring(m_);
            }
            return;
        }

        // Each merge removes one class and can only repair matchings whose
        // class sets it touches twice, so class-disjoint violated matchings
        // need one merge each.
        std::uint64_t packed = 0;
        int disjoint = 0;
        std::size_t pick = 0;
        int pick_pairs = 1 << 30;
        for (std::size_t i = 0; i < violated.size(); ++i) {
            const std::uint64_t s = node.slots(violated[i]);
            const int pairs = node.open_pairs(s);
            if (pairs == 0) return;
            if ((s & packed) == 0) {
                packed |= s;
                if (classes - ++disjoint <= best_) return;
            }
            if (pairs < pick_pairs) {
                pick_pairs = pairs;
                pick = i;
            }
        }

        // One merge left to beat the incumbent: it must hit two classes of
        // every violated matching at once.
        if (classes - best_ - 1 == 1) {
            std::uint64_t common = ~std::uint64_t{0};
            for (EdgeSet m : violated) common &= node.slots(m);
            std::optional<std::pair<int, int>> finish;
            for_each_bit(common, [&](int a) {
                const std::uint64_t partners = common & ~node.forbid[a] & ~((std::uint64_t{2} << a) - 1);
                if (!finish && partners) finish = std::pair(a, lowest(partners));
            });
            if (finish) {
                node.merge(finish->first, finish->second);
                best_ = classes - 1;
                witness_ = node.coloring(m_);
            }
            return;
        }

        std::optional<SymmetryTable::View> view;
        if (symmetry_.active()) {
            view = symmetry_.view(node);
            if (symmetry_.covered(*view)) {
                ++hits_;
                return;
            }
        }

        const std::uint64_t s = node.slots(violated[pick]);
        std::vector<std::pair<int, int>> branches;
        for_each_bit(s, [&](int a) {
            for_each_bit(s & ~node.forbid[a] & ~((std::uint64_t{2} << a) - 1),
                         [&](int b) { branches.emplace_back(a, b); });
        });

        std::vector<EdgeSet> remaining;
        remaining.reserve(violated.size());
        for (const auto& [a, b] : branches) {
            const EdgeSet ca = node.cls[a];
            const EdgeSet cb = node.cls[b];
            remaining.clear();
            for (EdgeSet m : violated) {
                if (!((m & ca) && (m & cb))) remaining.push_back(m);
            }
            Partition child = node;
            child.merge(a, b);
            search(child, remaining);
            if (aborted_) return;
            node.separate(a, b);
        }

        if (view) symmetry_.record(*view);
    }

    const Graph& g_;
    int m_;
    SolverLimits limits_;
    SymmetryTable symmetry_;
    std::vector<EdgeSet> matchings_;
    Clock::time_point start_;
    int best_ = 0;
    EdgeColoring witness_;
    std::uint64_t nodes_ = 0;
    std::uint64_t hits_ = 0;
    bool aborted_ = false;
};

}  // namespace

const char* to_string(SolveMode mode) {
    switch (mode) {
        case SolveMode::Exact: return "EXACT";
        case SolveMode::LowerBound: return "LOWER_BOUND";
        case SolveMode::Bounded: return "BOUNDED";
    }
    return "?";
}

EdgeColoring seed_incumbent(const Graph& g, int k) {
    check_instance(g, k);
    if (matching_number(g) < k) throw Error("seed_incumbent: graph has no k-matching");
    Partition p = Partition::singletons(g.size());
    std::vector<EdgeSet> violated = all_k_matchings(g, k);
    while (!violated.empty()) {
        std::array<std::array<int, 64>, 64> repairs{};
        int best = 0;
        int best_a = 0;
        int best_b = 0;
        for (EdgeSet m : violated) {
            const std::uint64_t s = p.slots(m);
            for_each_bit(s, [&](int a) {
                for_each_bit(s & ~((std::uint64_t{2} << a) - 1), [&](int b) {
                    const int r = ++repairs[a][b];
                    if (r > best || (r == best && std::pair(a, b) < std::pair(best_a, best_b))) {
                        best = r;
                        best_a = a;
                        best_b = b;
                    }
                });
            });
        }
        const EdgeSet ca = p.cls[best_a];
        const EdgeSet cb = p.cls[best_b];
        std::erase_if(violated, [&](EdgeSet m) { return (m & ca) && (m & cb); });
        p.merge(best_a, best_b);
    }
    return p.coloring(g.size());
}

ArResult ar_exact(const Graph& g, int k, const SolverLimits& limits) {
    check_instance(g, k);
    const auto start = Clock::now();
    ArResult r;
    if (matching_number(g) < k) {
        r.value = g.size();
        r.upper_bound = g.size();
        r.witness = all_distinct_coloring(g.size());
    } else {
        PartitionSearch search(g, k, limits);
        r = search.run(seed_incumbent(g, k));
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return r;
}

int ar_brute_force(const Graph& g, int k) {
    check_instance(g, k);
    const int m = g.size();
    if (m > kMaxBruteForceEdges) {
        throw Error("ar_brute_force: " + std::to_string(m) + " edges exceeds 10");
    }
    std::vector<std::vector<int>> matchings;
    for_each_k_matching(g, k, [&](EdgeSet mask) {
        std::vector<int> edges;
        for_each_bit(mask, [&](int e) { edges.push_back(e); });
        matchings.push_back(std::move(edges));
        return true;
    });

    // Restricted growth strings: block[e] <= 1 + max(block[0..e-1]).
    std::vector<int> block(static_cast<std::size_t>(m), 0);
    int best = 0;
    auto rainbow_free = [&] {
        for (const auto& edges : matchings) {
            bool repeated = false;
            for (std::size_t i = 0; i < edges.size() && !repeated; ++i)
                for (std::size_t j = i + 1; j < edges.size() && !repeated; ++j)
                    repeated = block[static_cast<std::size_t>(edges[i])] == block[static_cast<std::size_t>(edges[j])];
            if (!repeated) return false;
        }
        return true;
    };
    auto assign = [&](auto&& self, int e, int blocks) -> void {
        if (e == m) {
            if (blocks > best && rainbow_free()) best = blocks;
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            block[static_cast<std::size_t>(e)] = b;
            self(self, e + 1, std::max(blocks, b + 1));
        }
    };
    assign(assign, 0, 0);
    return best;
}

std::string ar_result_to_json(const Graph& g, int k, const ArResult& r) {
    nlohmann::json j;
    j["graph"] = graph6_encode(g);
    j["k"] = k;
    j["value"] = r.value;
    j["mode"] = to_string(r.mode);
    j["upper_bound"] = r.upper_bound;
    j["witness"] = nlohmann::json::parse(certificate_to_json({g, k, r.witness}));
    j["nodes"] = r.nodes;
    j["elapsed_ms"] = r.elapsed_ms;
    return j.dump();
}

ArResult ar_result_from_json(const std::string& text, Graph* graph, int* k) {
    try {
        const auto j = nlohmann::json::parse(text);
        ArResult r;
        r.value = j.at("value").get<int>();
        const auto mode = j.at("mode").get<std::string>();
        if (mode == "EXACT") {
            r.mode = SolveMode::Exact;
        } else if (mode == "LOWER_BOUND") {
            r.mode = SolveMode::LowerBound;
        } else if (mode == "BOUNDED") {
            r.mode = SolveMode::Bounded;
        } else {
            throw Error("unknown mode '" + mode + "'");
        }
        const Certificate cert = certificate_from_json(j.at("witness").dump());
        r.witness = cert.coloring;
        r.upper_bound = j.at("upper_bound").get<int>();
        if (r.mode == SolveMode::Exact && r.upper_bound != r.value) {
            throw Error("EXACT result with upper_bound != value");
        }
        if (r.upper_bound < r.value) throw Error("upper_bound below value");
        r.nodes = j.at("nodes").get<std::uint64_t>();
        r.elapsed_ms = j.at("elapsed_ms").get<double>();
        if (graph) *graph = graph6_decode(j.at("graph").get<std::string>());
        if (k) *k = j.at("k").get<int>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("ArResult JSON: ") + e.what());
    }
}

}  // namespace mop
