#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mop/ar_solver.hpp"
#include "mop/graph.hpp"

namespace mop {

/// Append-only JSON-lines store of solver results keyed by (canonical graph6, k).
///
/// Each line is an ArResult JSON object whose "graph" is the canonical graph6.
/// Unparseable lines are skipped with a warning. EXACT and BOUNDED results are
/// served (an EXACT entry is never replaced); LOWER_BOUND lines are ignored.
class ResultCache {
  public:
    ResultCache() = default;
    /// Loads an existing file; a missing file starts an empty cache.
    explicit ResultCache(std::filesystem::path path, std::ostream* warnings = nullptr);

    std::optional<ArResult> find(const std::string& canonical_g6, int k) const;
    /// Appends one line (flushed) and records the entry in memory.
    void store(const Graph& canonical, int k, const ArResult& r);

    std::size_t size() const;
    std::size_t skipped_lines() const { return skipped_; }

  private:
    void remember(const std::string& g6, int k, ArResult r);

    std::filesystem::path path_;
    std::map<std::pair<std::string, int>, ArResult> entries_;
    std::size_t skipped_ = 0;
    mutable std::mutex mutex_;
};

struct ClassOptions {
    SolverLimits limits;          // per class member
    unsigned jobs = 0;            // 0: hardware concurrency
    ResultCache* cache = nullptr;
    /// Fraction of cache hits that are re-solved and compared.
    double audit_fraction = 0.05;
    std::uint64_t audit_seed = 20240601;
    /// Called after each member finishes (from worker threads, serialised).
    std::function<void(std::size_t done, std::size_t total)> progress;
    /// Solve members only far enough to decide the class value: the largest
    /// greedy seed over the class is taken as a floor, and members with no
    /// colouring above it finish as BOUNDED instead of EXACT.
    bool class_floor = false;
};

struct MemberResult {
    Graph graph;  // canonical labelling
    std::string graph6;
    ArResult result;
    bool from_cache = false;
};

struct ClassResult {
    int n = 0;
    int k = 0;
    int value = 0;  // max over members; a lower bound unless complete
    std::vector<std::string> argmax;
    std::vector<MemberResult> members;  // ordered by canonical graph6
    bool complete = false;  // value is the exact class value
    int floor = 0;          // class floor used in class_floor mode
    std::vector<std::string> unsolved;
    std::vector<std::string> audit_failures;
    std::vector<std::string> invalid_witnesses;
    double solve_ms = 0.0;  // sum of per-member solver times (cached or fresh)
};

/// Largest order accepted without the extended flag.
inline constexpr int kDefaultMaxClassOrder = 12;

void check_class_range(int n, int k);

/// ar(O_n, M_k) over every maximal outerplanar graph of order n, 2k <= n <= 16.
ClassResult ar_class(int n, int k, const ClassOptions& options = {});

enum class BoundVerdict { Pass, Fail, Vacuous, NotApplicable, Undecided };
const char* to_string(BoundVerdict v);

struct BoundCheck {
    int n = 0;
    int k = 0;
    int lower = 0;        // n + 2k - 6
    int upper = 0;        // n + 4k - 9
    int trivial_cap = 0;  // 2n - 3
    int value = 0;
    bool exact = false;   // value is the exact class value
    BoundVerdict lower_verdict = BoundVerdict::NotApplicable;
    BoundVerdict upper_verdict = BoundVerdict::NotApplicable;
    BoundVerdict cap_verdict = BoundVerdict::NotApplicable;
};

/// Fills the bound fields and verdicts from (n, k, value, exact).
///
/// Lower bound: asserted for k >= 3 (for k = 2 the class value is 1, below
/// n - 2 once n >= 6). Upper bound: asserted for n >= 3k - 3, VACUOUS when
/// 2n - 3 <= n + 4k - 9. With an inexact value (incomplete run) a bound that
/// is neither met by a witness nor broken by one is UNDECIDED.
BoundCheck make_bound_check(int n, int k, int value, bool exact);

BoundCheck check_bounds(int n, int k, const ClassOptions& options = {});

struct LemmaReport {
    struct Entry {
        std::string graph6;
        int n = 0;
        int edges = 0;
        int x_size = 0;
    };
    int n_max = 0;
    std::map<int, int> graphs_per_order;
    std::map<int, std::vector<Entry>> tight;  // e = n + |X| - 2
    std::vector<Entry> violations;            // e > n + |X| - 2

    bool ok() const { return violations.empty(); }
};

/// Checks e(G) <= n + |X| - 2 with |X| the minimised bipartition side over
/// the bipartite outerplanar corpus of orders 2..n_max.
LemmaReport lemma_bipartite_check(int n_max);

enum class TableFormat { Csv, Json };

struct TableRow {
    BoundCheck bounds;
    bool complete = false;
    std::size_t members = 0;
    double solve_ms = 0.0;
};

/// Rows ordered by n then k; cells with n < 2k are skipped.
std::vector<TableRow> compute_table(int n_lo, int n_hi, int k_lo, int k_hi, const ClassOptions& options);
std::string format_table(const std::vector<TableRow>& rows, TableFormat format);
/// Throws Error naming the path on I/O failure.
void emit_table(const std::filesystem::path& out, int n_lo, int n_hi, int k_lo, int k_hi, TableFormat format,
                const ClassOptions& options);

}  // namespace mop
