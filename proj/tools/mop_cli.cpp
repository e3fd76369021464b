// mop: command-line front end for the maximal-outerplanar anti-Ramsey engine.
//
// Exit codes: 0 all checks pass, 1 violation found, 2 incomplete (budget),
// 3 bad input or I/O error.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mop/ar_solver.hpp"
#include "mop/canonical.hpp"
#include "mop/class_runner.hpp"
#include "mop/graph6.hpp"
#include "mop/matching.hpp"
#include "mop/triangulation.hpp"
#include "mop/tutte_berge.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kIncomplete = 2;
constexpr int kError = 3;

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw mop::Error("bad range '" + text + "', expected A..B");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw mop::Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct SweepFlags {
    unsigned jobs = 0;
    std::string cache_path;
    long long budget_ms = 0;
    bool extended = false;
    bool class_floor = false;
    bool progress = false;
};

void add_sweep_flags(CLI::App* cmd, SweepFlags& f) {
    cmd->add_option("--jobs", f.jobs, "worker threads (0 = all cores)");
    cmd->add_option("--cache", f.cache_path, "JSON-lines result cache");
    cmd->add_option("--budget-ms", f.budget_ms, "per-graph solver budget in milliseconds");
    cmd->add_flag("--extended", f.extended, "allow orders above 12 (long-running); implies --class-floor");
    cmd->add_flag("--class-floor", f.class_floor,
                  "solve members only up to the class floor (exact class value, per-graph values may be bounds)");
    cmd->add_flag("--progress", f.progress, "report progress on stderr");
}

constexpr long long kExtendedDefaultBudgetMs = 10LL * 60 * 1000;
constexpr const char* kExtendedDefaultCache = "mop-cache.jsonl";

mop::ClassOptions make_options(SweepFlags& f, std::unique_ptr<mop::ResultCache>& cache, int max_n) {
    if (max_n > mop::kDefaultMaxClassOrder && !f.extended) {
        throw mop::Error("orders above " + std::to_string(mop::kDefaultMaxClassOrder) +
                         " are long-running; pass --extended");
    }
    if (f.extended) {
        if (f.cache_path.empty()) f.cache_path = kExtendedDefaultCache;
        if (f.budget_ms == 0) f.budget_ms = kExtendedDefaultBudgetMs;
        f.class_floor = true;
    }
    mop::ClassOptions o;
    o.jobs = f.jobs;
    o.class_floor = f.class_floor;
    o.limits.budget = std::chrono::milliseconds(f.budget_ms);
    if (!f.cache_path.empty()) {
        cache = std::make_unique<mop::ResultCache>(f.cache_path, &std::cerr);
        o.cache = cache.get();
    }
    if (f.progress) {
        o.progress = [](std::size_t done, std::size_t total) {
            if (done % 100 == 0 || done == total) std::cerr << "  " << done << "/" << total << " graphs\n";
        };
    }
    return o;
}

int cmd_enumerate(int n, bool count_only, const std::string& format) {
    if (count_only) {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["labeled"] = mop::count_triangulations(n);
        j["classes"] = mop::enumerate_mop_triangulations(n).size();
        std::cout << j.dump() << "\n";
        return kOk;
    }
    const auto tris = mop::enumerate_mop_triangulations(n);
    if (format == "tri") {
        std::cout << mop::kTriangulationHeader << "\n";
        for (const auto& t : tris) std::cout << mop::format_triangulation(t) << "\n";
    } else {
        for (const auto& t : tris) std::cout << mop::graph6_encode(t.graph()) << "\n";
    }
    return kOk;
}

int cmd_ar(const std::string& g6, int k, bool oracle, long long budget_ms) {
    const mop::Graph g = mop::graph6_decode(g6);
    mop::SolverLimits limits;
    limits.budget = std::chrono::milliseconds(budget_ms);
    const mop::ArResult r = mop::ar_exact(g, k, limits);
    auto j = nlohmann::ordered_json::parse(mop::ar_result_to_json(g, k, r));
    int code = r.mode == mop::SolveMode::Exact ? kOk : kIncomplete;
    if (!mop::verify_certificate(g, r.witness, k, r.value).ok()) code = kViolation;
    if (oracle) {
        const int brute = mop::ar_brute_force(g, k);
        j["oracle"] = brute;
        if (r.mode == mop::SolveMode::Exact && brute != r.value) code = kViolation;
    }
    std::cout << j.dump() << "\n";
    return code;
}

int cmd_ar_class(int n, int k, SweepFlags& flags, bool members) {
    std::unique_ptr<mop::ResultCache> cache;
    const auto options = make_options(flags, cache, n);
    const mop::ClassResult r = mop::ar_class(n, k, options);
    const mop::BoundCheck b = mop::make_bound_check(n, k, r.value, r.complete);

    nlohmann::ordered_json j;
    j["n"] = n;
    j["k"] = k;
    j["value"] = r.value;
    j["complete"] = r.complete;
    if (options.class_floor) j["floor"] = r.floor;
    j["members"] = r.members.size();
    j["argmax"] = r.argmax;
    j["unsolved"] = r.unsolved;
    j["invalid_witnesses"] = r.invalid_witnesses;
    j["audit_failures"] = r.audit_failures;
    j["bounds"] = {{"lower", b.lower},
                   {"upper", b.upper},
                   {"cap", b.trivial_cap},
                   {"lower_verdict", mop::to_string(b.lower_verdict)},
                   {"upper_verdict", mop::to_string(b.upper_verdict)},
                   {"cap_verdict", mop::to_string(b.cap_verdict)}};
    for (const auto& m : r.members) {
        if (m.result.value == r.value) {
            j["witness"] = nlohmann::json::parse(mop::certificate_to_json({m.graph, k, m.result.witness}));
            break;
        }
    }
    if (members) {
        auto arr = nlohmann::json::array();
        for (const auto& m : r.members) arr.push_back(nlohmann::json::parse(mop::ar_result_to_json(m.graph, k, m.result)));
        j["results"] = std::move(arr);
    }
    std::cout << j.dump(2) << "\n";

    const bool failed = !r.invalid_witnesses.empty() || !r.audit_failures.empty() ||
                        b.lower_verdict == mop::BoundVerdict::Fail || b.upper_verdict == mop::BoundVerdict::Fail ||
                        b.cap_verdict == mop::BoundVerdict::Fail;
    if (failed) return kViolation;
    return r.complete ? kOk : kIncomplete;
}

int cmd_table(const std::string& n_range, const std::string& k_range, const std::string& out,
              const std::string& format, SweepFlags& flags) {
    const auto [n_lo, n_hi] = parse_range(n_range);
    const auto [k_lo, k_hi] = parse_range(k_range);
    std::unique_ptr<mop::ResultCache> cache;
    const auto options = make_options(flags, cache, n_hi);
    const auto rows = mop::compute_table(n_lo, n_hi, k_lo, k_hi, options);
    const std::string text = mop::format_table(rows, format == "json" ? mop::TableFormat::Json : mop::TableFormat::Csv);
    std::ofstream file(out, std::ios::binary | std::ios::trunc);
    if (!file || !(file << text) || !file.flush()) throw mop::Error("cannot write table to " + out);

    int code = kOk;
    for (const auto& r : rows) {
        const auto& b = r.bounds;
        if (b.lower_verdict == mop::BoundVerdict::Fail || b.upper_verdict == mop::BoundVerdict::Fail ||
            b.cap_verdict == mop::BoundVerdict::Fail) {
            return kViolation;
        }
        if (!r.complete) code = kIncomplete;
    }
    return code;
}

int cmd_verify(const std::string& path) {
    const auto j = nlohmann::json::parse(read_file(path));
    // Accepts a bare certificate or a solver result wrapping one.
    const bool wrapped = j.contains("witness");
    const mop::Certificate cert = mop::certificate_from_json((wrapped ? j.at("witness") : j).dump());
    const int claimed = wrapped ? j.at("value").get<int>() : cert.coloring.num_colors;
    const auto check = mop::verify_certificate(cert.graph, cert.coloring, cert.k, claimed);

    nlohmann::ordered_json out;
    out["verdict"] = mop::to_string(check.verdict);
    out["graph"] = mop::graph6_encode(cert.graph);
    out["k"] = cert.k;
    out["claimed_colors"] = claimed;
    if (check.witness) {
        std::vector<int> edges;
        mop::for_each_bit(check.witness->matching.edges, [&](int e) { edges.push_back(e); });
        out["rainbow_matching"] = edges;
        out["rainbow_colors"] = check.witness->colors;
    }
    std::cout << out.dump() << "\n";
    return check.ok() ? kOk : kViolation;
}

int cmd_lemma(int max_n) {
    const auto report = mop::lemma_bipartite_check(max_n);
    std::cout << "order  graphs  tight  example\n";
    int code = kOk;
    for (const auto& [n, count] : report.graphs_per_order) {
        const auto it = report.tight.find(n);
        const std::size_t tight = it == report.tight.end() ? 0 : it->second.size();
        std::cout << std::setw(5) << n << std::setw(8) << count << std::setw(7) << tight << "  "
                  << (tight ? it->second.front().graph6 : "-") << "\n";
        if (tight == 0) code = kViolation;
    }
    for (const auto& v : report.violations) {
        std::cout << "VIOLATION " << v.graph6 << ": e=" << v.edges << " > n+|X|-2=" << v.n + v.x_size - 2 << "\n";
    }
    std::cout << (report.ok() ? "no violations" : "violations found") << "\n";
    return report.ok() ? code : kViolation;
}

int cmd_tutte_berge(const std::string& g6) {
    const mop::Graph g = mop::graph6_decode(g6);
    const auto cert = mop::tutte_berge_certificate(g);
    std::cout << mop::tutte_berge_to_json(cert) << "\n";
    return mop::check_tutte_berge_certificate(g, cert) ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximal outerplanar graphs and anti-Ramsey numbers of matchings"};
    app.require_subcommand(1);

    int n = 0;
    int k = 0;
    bool count_only = false;
    std::string format = "g6";
    auto* enumerate = app.add_subcommand("enumerate", "list maximal outerplanar graphs of order n");
    enumerate->add_option("--n", n, "order")->required();
    enumerate->add_flag("--count-only", count_only, "print labelled and isomorphism-class counts");
    enumerate->add_option("--format", format, "g6 or tri")->check(CLI::IsMember({"g6", "tri"}));

    std::string g6;
    bool oracle = false;
    long long budget_ms = 0;
    auto* ar = app.add_subcommand("ar", "ar(G, M_k) for one graph");
    ar->add_option("--graph", g6, "graph6")->required();
    ar->add_option("--k", k, "matching size")->required();
    ar->add_flag("--oracle", oracle, "cross-check with full partition enumeration");
    ar->add_option("--budget-ms", budget_ms, "solver budget in milliseconds");

    SweepFlags sweep;
    bool members = false;
    auto* ar_class = app.add_subcommand("ar-class", "ar(O_n, M_k) over all maximal outerplanar graphs");
    ar_class->add_option("--n", n, "order")->required();
    ar_class->add_option("--k", k, "matching size")->required();
    ar_class->add_flag("--members", members, "include every member result");
    add_sweep_flags(ar_class, sweep);

    std::string n_range;
    std::string k_range;
    std::string out;
    std::string table_format = "csv";
    auto* table = app.add_subcommand("table", "class values and bound verdicts over ranges");
    table->add_option("--n", n_range, "A..B")->required();
    table->add_option("--k", k_range, "C..D")->required();
    table->add_option("--out", out, "output path")->required();
    table->add_option("--format", table_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    add_sweep_flags(table, sweep);

    std::string cert_path;
    auto* verify = app.add_subcommand("verify", "check a colouring certificate");
    verify->add_option("--cert", cert_path, "certificate or solver result JSON")->required();

    int max_n = 0;
    auto* lemma = app.add_subcommand("lemma-bipartite", "edge bound over bipartite outerplanar graphs");
    lemma->add_option("--max-n", max_n, "largest order (<= 9)")->required();

    auto* tutte = app.add_subcommand("tutte-berge", "Tutte-Berge barrier certificate");
    tutte->add_option("--graph", g6, "graph6")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*enumerate) return cmd_enumerate(n, count_only, format);
        if (*ar) return cmd_ar(g6, k, oracle, budget_ms);
        if (*ar_class) return cmd_ar_class(n, k, sweep, members);
        if (*table) return cmd_table(n_range, k_range, out, table_format, sweep);
        if (*verify) return cmd_verify(cert_path);
        if (*lemma) return cmd_lemma(max_n);
        if (*tutte) return cmd_tutte_berge(g6);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kOk;
}
