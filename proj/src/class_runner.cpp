#include "mop/class_runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "mop/canonical.hpp"
#include "mop/corpus.hpp"
#include "mop/graph6.hpp"
#include "mop/triangulation.hpp"

namespace mop {

// ---------------------------------------------------------------- cache

ResultCache::ResultCache(std::filesystem::path path, std::ostream* warnings) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            Graph g;
            int k = 0;
            ArResult r = ar_result_from_json(line, &g, &k);
            remember(graph6_encode(g), k, std::move(r));
        } catch (const std::exception& e) {
            ++skipped_;
            if (warnings) *warnings << "warning: " << path_.string() << ":" << line_no << ": skipped (" << e.what() << ")\n";
        }
    }
}

std::optional<ArResult> ResultCache::find(const std::string& canonical_g6, int k) const {
    std::lock_guard lock(mutex_);
    auto it = entries_.find({canonical_g6, k});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void ResultCache::store(const Graph& canonical, int k, const ArResult& r) {
    const std::string line = ar_result_to_json(canonical, k, r) + "\n";
    std::lock_guard lock(mutex_);
    remember(graph6_encode(canonical), k, r);
    if (path_.empty()) return;
    // One write per line so concurrent readers only ever see whole lines.
    std::ofstream out(path_, std::ios::app | std::ios::binary);
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
    out.flush();
    if (!out) throw Error("cannot append to cache file " + path_.string());
}

void ResultCache::remember(const std::string& g6, int k, ArResult r) {
    if (r.mode == SolveMode::LowerBound) return;
    auto [it, inserted] = entries_.try_emplace({g6, k}, r);
    if (inserted || it->second.mode == SolveMode::Exact) return;
    if (r.mode == SolveMode::Exact || r.upper_bound < it->second.upper_bound) it->second = std::move(r);
}

std::size_t ResultCache::size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
}

// ---------------------------------------------------------------- classes

void check_class_range(int n, int k) {
    if (k < 2 || k > kMaxMatchingSize) throw Error("k=" + std::to_string(k) + " outside [2, 8]");
    if (n > kMaxPolygon) throw Error("n=" + std::to_string(n) + " exceeds 16");
    if (n < 2 * k) {
        throw Error("n=" + std::to_string(n) + " < 2k=" + std::to_string(2 * k) +
                    ": class members have no k-matching, the class value is not defined");
    }
}

namespace {

template <typename Fn>
void run_parallel(std::size_t count, unsigned jobs, Fn&& work) {
    if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(count, 1)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) work(i);
    };
    if (jobs <= 1) {
        worker();
        return;
    }
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
}

}  // namespace

ClassResult ar_class(int n, int k, const ClassOptions& options) {
    check_class_range(n, k);
    ClassResult out;
    out.n = n;
    out.k = k;

    for (const Graph& mop : enumerate_mops(n)) {
        auto form = canonical_form(mop);
        out.members.push_back({mop.relabeled(form.label), form.graph6, {}, false});
    }
    std::sort(out.members.begin(), out.members.end(),
              [](const MemberResult& a, const MemberResult& b) { return a.graph6 < b.graph6; });
    const std::size_t count = out.members.size();

    std::vector<std::optional<ArResult>> cached(count);
    if (options.cache) {
        for (std::size_t i = 0; i < count; ++i) cached[i] = options.cache->find(out.members[i].graph6, k);
    }

    if (options.class_floor) {
        std::vector<int> lower(count, 0);
        run_parallel(count, options.jobs, [&](std::size_t i) {
            lower[i] = cached[i] ? cached[i]->value : seed_incumbent(out.members[i].graph, k).num_colors;
        });
        out.floor = *std::max_element(lower.begin(), lower.end());
    }
    auto usable = [&](const ArResult& r) {
        return r.mode == SolveMode::Exact || (options.class_floor && r.upper_bound <= out.floor);
    };
    SolverLimits limits = options.limits;
    if (options.class_floor) limits.known_floor = out.floor;

    std::mutex progress_mutex;
    std::size_t done = 0;
    run_parallel(count, options.jobs, [&](std::size_t i) {
        MemberResult& m = out.members[i];
        if (cached[i] && usable(*cached[i])) {
            m.result = *cached[i];
            m.from_cache = true;
        } else {
            m.result = ar_exact(m.graph, k, limits);
            if (options.cache) options.cache->store(m.graph, k, m.result);
        }
        if (options.progress) {
            std::lock_guard lock(progress_mutex);
            options.progress(++done, count);
        }
    });

    // Audit a sample of cache hits: re-solve just above the cached claim.
    std::mt19937_64 rng(options.audit_seed);
    std::bernoulli_distribution pick(std::clamp(options.audit_fraction, 0.0, 1.0));
    std::vector<std::size_t> audit;
    for (std::size_t i = 0; i < count; ++i) {
        if (out.members[i].from_cache && pick(rng)) audit.push_back(i);
    }
    std::vector<std::optional<ArResult>> fresh(audit.size());
    run_parallel(audit.size(), options.jobs, [&](std::size_t i) {
        const ArResult& claim = out.members[audit[i]].result;
        SolverLimits check = options.limits;
        check.known_floor = claim.mode == SolveMode::Exact ? claim.value - 1 : claim.upper_bound;
        fresh[i] = ar_exact(out.members[audit[i]].graph, k, check);
    });
    for (std::size_t i = 0; i < audit.size(); ++i) {
        const auto& m = out.members[audit[i]];
        const ArResult& f = *fresh[i];
        if (f.mode == SolveMode::LowerBound) continue;
        const bool agrees = m.result.mode == SolveMode::Exact
                                ? f.mode == SolveMode::Exact && f.value == m.result.value
                                : f.upper_bound == m.result.upper_bound;
        if (!agrees) out.audit_failures.push_back(m.graph6);
    }

    int max_upper = 0;
    for (const auto& m : out.members) {
        if (!verify_certificate(m.graph, m.result.witness, k, m.result.value).ok()) {
            out.invalid_witnesses.push_back(m.graph6);
        }
        if (m.result.mode == SolveMode::LowerBound) out.unsolved.push_back(m.graph6);
        out.value = std::max(out.value, m.result.value);
        max_upper = std::max(max_upper, m.result.upper_bound);
        out.solve_ms += m.result.elapsed_ms;
    }
    out.complete = out.unsolved.empty() && max_upper <= out.value;
    for (const auto& m : out.members) {
        if (m.result.value == out.value) out.argmax.push_back(m.graph6);
    }
    return out;
}

// ---------------------------------------------------------------- bounds

const char* to_string(BoundVerdict v) {
    switch (v) {
        case BoundVerdict::Pass: return "PASS";
        case BoundVerdict::Fail: return "FAIL";
        case BoundVerdict::Vacuous: return "VACUOUS";
        case BoundVerdict::NotApplicable: return "N/A";
        case BoundVerdict::Undecided: return "UNDECIDED";
    }
    return "?";
}

BoundCheck make_bound_check(int n, int k, int value, bool exact) {
    BoundCheck b;
    b.n = n;
    b.k = k;
    b.value = value;
    b.exact = exact;
    b.lower = n + 2 * k - 6;
    b.upper = n + 4 * k - 9;
    b.trivial_cap = 2 * n - 3;

    if (k >= 3) {
        if (value >= b.lower) {
            b.lower_verdict = BoundVerdict::Pass;
        } else {
            b.lower_verdict = exact ? BoundVerdict::Fail : BoundVerdict::Undecided;
        }
    }
    if (k >= 2 && n >= 3 * k - 3) {
        if (b.trivial_cap <= b.upper) {
            b.upper_verdict = BoundVerdict::Vacuous;
        } else if (value > b.upper) {
            b.upper_verdict = BoundVerdict::Fail;
        } else {
            b.upper_verdict = exact ? BoundVerdict::Pass : BoundVerdict::Undecided;
        }
    }
    b.cap_verdict = value <= b.trivial_cap ? BoundVerdict::Pass : BoundVerdict::Fail;
    return b;
}

BoundCheck check_bounds(int n, int k, const ClassOptions& options) {
    const ClassResult r = ar_class(n, k, options);
    return make_bound_check(n, k, r.value, r.complete);
}

// ---------------------------------------------------------------- lemma

LemmaReport lemma_bipartite_check(int n_max) {
    LemmaReport report;
    report.n_max = n_max;
    for (const Graph& g : bipartite_outerplanar_corpus(n_max)) {
        const auto bp = bipartition_of(g);
        if (!bp) throw Error("internal error: corpus graph is not bipartite");
        LemmaReport::Entry entry{graph6_encode(g), g.order(), g.size(), std::popcount(bp->x)};
        ++report.graphs_per_order[g.order()];
        const int bound = entry.n + entry.x_size - 2;
        if (entry.edges > bound) {
            report.violations.push_back(entry);
        } else if (entry.edges == bound) {
            report.tight[entry.n].push_back(entry);
        }
    }
    return report;
}

// ---------------------------------------------------------------- tables

std::vector<TableRow> compute_table(int n_lo, int n_hi, int k_lo, int k_hi, const ClassOptions& options) {
    std::vector<TableRow> rows;
    for (int n = n_lo; n <= n_hi; ++n) {
        for (int k = k_lo; k <= k_hi; ++k) {
            if (n < 2 * k) continue;
            const ClassResult r = ar_class(n, k, options);
            rows.push_back({make_bound_check(n, k, r.value, r.complete), r.complete, r.members.size(), r.solve_ms});
        }
    }
    return rows;
}

std::string format_table(const std::vector<TableRow>& rows, TableFormat format) {
    std::ostringstream out;
    auto ms = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", v);
        return std::string(buf);
    };
    if (format == TableFormat::Csv) {
        out << "n,k,value,complete,members,lower,upper,cap,lower_verdict,upper_verdict,cap_verdict,solve_ms\n";
        for (const auto& r : rows) {
            const auto& b = r.bounds;
            out << b.n << ',' << b.k << ',' << b.value << ',' << (r.complete ? "true" : "false") << ',' << r.members
                << ',' << b.lower << ',' << b.upper << ',' << b.trivial_cap << ',' << to_string(b.lower_verdict) << ','
                << to_string(b.upper_verdict) << ',' << to_string(b.cap_verdict) << ',' << ms(r.solve_ms) << '\n';
        }
        return out.str();
    }
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        const auto& b = r.bounds;
        nlohmann::ordered_json j;
        j["n"] = b.n;
        j["k"] = b.k;
        j["value"] = b.value;
        j["complete"] = r.complete;
        j["members"] = r.members;
        j["lower"] = b.lower;
        j["upper"] = b.upper;
        j["cap"] = b.trivial_cap;
        j["lower_verdict"] = to_string(b.lower_verdict);
        j["upper_verdict"] = to_string(b.upper_verdict);
        j["cap_verdict"] = to_string(b.cap_verdict);
        j["solve_ms"] = std::round(r.solve_ms * 1000.0) / 1000.0;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

void emit_table(const std::filesystem::path& out, int n_lo, int n_hi, int k_lo, int k_hi, TableFormat format,
                const ClassOptions& options) {
    const std::string text = format_table(compute_table(n_lo, n_hi, k_lo, k_hi, options), format);
    std::ofstream file(out, std::ios::binary | std::ios::trunc);
    if (!file) throw Error("cannot open " + out.string() + " for writing");
    file << text;
    file.flush();
    if (!file) throw Error("write to " + out.string() + " failed");
}

}  // namespace mop
