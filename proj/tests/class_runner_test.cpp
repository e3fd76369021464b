#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mop/canonical.hpp"
#include "mop/class_runner.hpp"
#include "mop/graph6.hpp"
#include "mop/triangulation.hpp"

using namespace mop;
namespace fs = std::filesystem;

namespace {

class TempDir {
  public:
    TempDir() {
        const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
        path_ = fs::temp_directory_path() / (std::string("mop_") + info->test_suite_name() + "_" + info->name());
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    fs::path operator/(const std::string& name) const { return path_ / name; }

  private:
    fs::path path_;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST(ArClass, SmallClassValues) {
    const std::vector<std::tuple<int, int, int>> cells{{4, 2, 3}, {5, 2, 1}, {6, 2, 1}, {6, 3, 7},
                                                       {7, 3, 7}, {8, 3, 8}, {8, 4, 11}, {9, 4, 11}};
    for (auto [n, k, value] : cells) {
        const ClassResult r = ar_class(n, k);
        EXPECT_EQ(r.value, value) << "n=" << n << " k=" << k;
        EXPECT_TRUE(r.complete);
        EXPECT_FALSE(r.argmax.empty());
        EXPECT_TRUE(r.invalid_witnesses.empty());
        EXPECT_TRUE(r.unsolved.empty());
        EXPECT_EQ(r.members.size(), enumerate_mops(n).size());
    }
}

TEST(ArClass, MembersAreCanonicalAndSorted) {
    const ClassResult r = ar_class(8, 3);
    for (std::size_t i = 0; i < r.members.size(); ++i) {
        const auto& m = r.members[i];
        EXPECT_EQ(m.graph6, graph6_encode(m.graph));
        EXPECT_EQ(m.graph6, canonical_form(m.graph).graph6);
        if (i > 0) EXPECT_LT(r.members[i - 1].graph6, m.graph6);
    }
}

TEST(ArClass, RangeChecked) {
    EXPECT_THROW(ar_class(5, 3), Error);
    EXPECT_THROW(ar_class(17, 5), Error);
    EXPECT_THROW(ar_class(6, 1), Error);
    EXPECT_THROW(ar_class(20, 9), Error);
}

TEST(ArClass, ParallelRunMatchesSerialRun) {
    ClassOptions serial;
    serial.jobs = 1;
    ClassOptions parallel;
    parallel.jobs = 4;
    const ClassResult a = ar_class(10, 4, serial);
    const ClassResult b = ar_class(10, 4, parallel);
    ASSERT_EQ(a.members.size(), b.members.size());
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.argmax, b.argmax);
    for (std::size_t i = 0; i < a.members.size(); ++i) {
        EXPECT_EQ(a.members[i].graph6, b.members[i].graph6);
        EXPECT_EQ(a.members[i].result.value, b.members[i].result.value);
        EXPECT_EQ(a.members[i].result.witness, b.members[i].result.witness);
    }
}

TEST(ArClass, FloorModeGivesTheSameClassValues) {
    ClassOptions floor_mode;
    floor_mode.class_floor = true;
    for (int n = 6; n <= 11; ++n) {
        for (int k = 2; 2 * k <= n; ++k) {
            const ClassResult exact = ar_class(n, k);
            const ClassResult fast = ar_class(n, k, floor_mode);
            EXPECT_EQ(fast.value, exact.value) << "n=" << n << " k=" << k;
            EXPECT_TRUE(fast.complete);
            EXPECT_LE(fast.floor, fast.value);
            EXPECT_TRUE(fast.invalid_witnesses.empty());
            for (const auto& m : fast.members) {
                EXPECT_NE(m.result.mode, SolveMode::LowerBound);
                EXPECT_LE(m.result.upper_bound, fast.value);
            }
        }
    }
}

TEST(ArClass, IncompleteWhenBudgetRunsOut) {
    ClassOptions options;
    options.limits.max_nodes = 1;
    const ClassResult r = ar_class(11, 5, options);
    EXPECT_FALSE(r.complete);
    EXPECT_FALSE(r.unsolved.empty());
    EXPECT_TRUE(r.invalid_witnesses.empty());
    EXPECT_EQ(make_bound_check(11, 5, r.value, r.complete).lower_verdict,
              r.value >= 15 ? BoundVerdict::Pass : BoundVerdict::Undecided);
}

TEST(ResultCache, BoundedEntriesServeOnlyFloorRuns) {
    TempDir dir;
    const fs::path file = dir / "cache.jsonl";
    ClassOptions floor_mode;
    floor_mode.class_floor = true;
    {
        ResultCache cache(file);
        floor_mode.cache = &cache;
        ar_class(10, 5, floor_mode);
    }
    ResultCache cache(file);
    floor_mode.cache = &cache;
    floor_mode.audit_fraction = 1.0;
    const ClassResult again = ar_class(10, 5, floor_mode);
    EXPECT_TRUE(again.audit_failures.empty());
    for (const auto& m : again.members) EXPECT_TRUE(m.from_cache);

    ClassOptions exact_mode;
    exact_mode.cache = &cache;
    const ClassResult exact = ar_class(10, 5, exact_mode);
    EXPECT_EQ(exact.value, again.value);
    for (const auto& m : exact.members) {
        EXPECT_EQ(m.result.mode, SolveMode::Exact);
        if (m.from_cache) EXPECT_EQ(cache.find(m.graph6, 5)->mode, SolveMode::Exact);
    }
}

TEST(ResultCache, AuditCatchesUnderstatedBounds) {
    TempDir dir;
    const fs::path file = dir / "cache.jsonl";
    std::map<std::string, bool> lies;
    {
        ResultCache cache(file);
        for (const Graph& mop : enumerate_mops(8)) {
            const Graph g = canonical_graph(mop);
            ArResult claim;
            claim.witness = seed_incumbent(g, 4);
            claim.value = claim.witness.num_colors;
            claim.upper_bound = claim.value;
            claim.mode = SolveMode::Bounded;
            cache.store(g, 4, claim);
            lies[graph6_encode(g)] = ar_exact(g, 4).value > claim.value;
        }
    }
    ResultCache cache(file);
    ClassOptions options;
    options.cache = &cache;
    options.class_floor = true;
    options.audit_fraction = 1.0;
    const ClassResult r = ar_class(8, 4, options);
    std::vector<std::string> expected;
    for (const auto& m : r.members) {
        EXPECT_TRUE(m.from_cache);
        if (lies.at(m.graph6)) expected.push_back(m.graph6);
    }
    EXPECT_FALSE(expected.empty());
    EXPECT_EQ(r.audit_failures, expected);
}

TEST(ResultCache, ServesStoredExactResults) {
    TempDir dir;
    const fs::path file = dir / "cache.jsonl";
    {
        ResultCache cache(file);
        ClassOptions options;
        options.cache = &cache;
        const ClassResult first = ar_class(7, 3, options);
        EXPECT_EQ(cache.size(), first.members.size());
    }
    ResultCache cache(file);
    ClassOptions options;
    options.cache = &cache;
    options.audit_fraction = 1.0;
    const ClassResult second = ar_class(7, 3, options);
    EXPECT_EQ(second.value, 7);
    EXPECT_TRUE(second.audit_failures.empty());
    for (const auto& m : second.members) EXPECT_TRUE(m.from_cache);
}

TEST(ResultCache, SkipsCorruptLinesAndIgnoresLowerBounds) {
    TempDir dir;
    const fs::path file = dir / "cache.jsonl";
    const Graph g = canonical_graph(enumerate_mops(6).front());
    ArResult r = ar_exact(g, 3);
    {
        std::ofstream out(file);
        out << "{not json\n";
        out << ar_result_to_json(g, 3, r) << "\n";
        ArResult partial = r;
        partial.mode = SolveMode::LowerBound;
        out << ar_result_to_json(g, 2, partial) << "\n";
        out << "{\"graph\":\"Bw\"}\n";
    }
    std::ostringstream warnings;
    ResultCache cache(file, &warnings);
    EXPECT_EQ(cache.skipped_lines(), 2U);
    EXPECT_NE(warnings.str().find("cache.jsonl:1"), std::string::npos);
    EXPECT_TRUE(cache.find(graph6_encode(g), 3).has_value());
    EXPECT_FALSE(cache.find(graph6_encode(g), 2).has_value());
}

TEST(ResultCache, AuditCatchesTamperedEntries) {
    TempDir dir;
    const fs::path file = dir / "cache.jsonl";
    {
        ResultCache cache(file);
        for (const Graph& mop : enumerate_mops(6)) {
            const Graph g = canonical_graph(mop);
            ArResult r = ar_exact(g, 3);
            r.value += 1;
            r.upper_bound += 1;
            cache.store(g, 3, r);
        }
    }
    ResultCache cache(file);
    ClassOptions options;
    options.cache = &cache;
    options.audit_fraction = 1.0;
    const ClassResult r = ar_class(6, 3, options);
    EXPECT_EQ(r.audit_failures.size(), r.members.size());
    EXPECT_EQ(r.invalid_witnesses.size(), r.members.size());
}

TEST(Bounds, Examples) {
    const auto twelve = make_bound_check(12, 5, 16, true);
    EXPECT_EQ(twelve.lower, 16);
    EXPECT_EQ(twelve.lower_verdict, BoundVerdict::Pass);
    EXPECT_EQ(twelve.upper_verdict, BoundVerdict::Vacuous);
    EXPECT_EQ(twelve.trivial_cap, 21);

    const auto seven = make_bound_check(7, 3, 7, true);
    EXPECT_EQ(seven.lower_verdict, BoundVerdict::Pass);
    EXPECT_EQ(seven.upper, 10);
    EXPECT_EQ(seven.upper_verdict, BoundVerdict::Pass);

    const auto ten = make_bound_check(10, 5, 15, true);
    EXPECT_EQ(ten.lower, 14);
    EXPECT_EQ(ten.lower_verdict, BoundVerdict::Pass);
    EXPECT_EQ(ten.upper_verdict, BoundVerdict::NotApplicable);
    EXPECT_EQ(ten.cap_verdict, BoundVerdict::Pass);
}

TEST(Bounds, FailuresAndUndecided) {
    EXPECT_EQ(make_bound_check(10, 5, 13, true).lower_verdict, BoundVerdict::Fail);
    EXPECT_EQ(make_bound_check(10, 5, 13, false).lower_verdict, BoundVerdict::Undecided);
    EXPECT_EQ(make_bound_check(15, 5, 27, true).upper_verdict, BoundVerdict::Fail);
    EXPECT_EQ(make_bound_check(15, 5, 19, false).upper_verdict, BoundVerdict::Undecided);
    EXPECT_EQ(make_bound_check(15, 5, 19, true).upper_verdict, BoundVerdict::Pass);
    EXPECT_EQ(make_bound_check(8, 4, 14, true).cap_verdict, BoundVerdict::Fail);
    EXPECT_EQ(make_bound_check(8, 2, 1, true).lower_verdict, BoundVerdict::NotApplicable);
    EXPECT_STREQ(to_string(BoundVerdict::Vacuous), "VACUOUS");
}

TEST(Bounds, CheckedAgainstComputedClasses) {
    const auto b = check_bounds(9, 3);
    EXPECT_EQ(b.value, 9);
    EXPECT_TRUE(b.exact);
    EXPECT_EQ(b.lower_verdict, BoundVerdict::Pass);
    EXPECT_EQ(b.upper_verdict, BoundVerdict::Pass);
}

TEST(Lemma, HoldsWithTightGraphsAtEveryOrder) {
    const LemmaReport report = lemma_bipartite_check(7);
    EXPECT_TRUE(report.ok());
    for (int n = 2; n <= 7; ++n) {
        EXPECT_GT(report.graphs_per_order.at(n), 0);
        EXPECT_FALSE(report.tight.at(n).empty()) << "n=" << n;
    }
    auto tight_at = [&](const Graph& g) {
        const std::string code = graph6_encode(canonical_graph(g));
        for (const auto& e : report.tight.at(g.order()))
            if (graph6_encode(canonical_graph(graph6_decode(e.graph6))) == code) return true;
        return false;
    };
    EXPECT_TRUE(tight_at(named::star(4)));
    EXPECT_TRUE(tight_at(Graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}})));
    EXPECT_FALSE(tight_at(named::cycle(6)));
}

TEST(Table, RowsAndFormats) {
    ClassOptions options;
    const auto rows = compute_table(4, 6, 2, 3, options);
    ASSERT_EQ(rows.size(), 4U);  // (4,2) (5,2) (6,2) (6,3)
    EXPECT_EQ(rows[0].bounds.value, 3);
    EXPECT_EQ(rows[1].bounds.value, 1);
    EXPECT_EQ(rows[3].bounds.value, 7);

    const std::string csv = format_table(rows, TableFormat::Csv);
    EXPECT_EQ(csv.substr(0, csv.find('\n')),
              "n,k,value,complete,members,lower,upper,cap,lower_verdict,upper_verdict,cap_verdict,solve_ms");
    EXPECT_NE(csv.find("\n4,2,3,true,1,"), std::string::npos);
    EXPECT_NE(csv.find("\n5,2,1,true,1,"), std::string::npos);

    const auto json = nlohmann::json::parse(format_table(rows, TableFormat::Json));
    ASSERT_EQ(json.size(), 4U);
    EXPECT_EQ(json[0]["value"], 3);
    EXPECT_EQ(json[1]["value"], 1);
}

TEST(Table, WarmCacheRerunIsByteIdentical) {
    TempDir dir;
    auto run = [&](const std::string& name) {
        ResultCache cache(dir / "cache.jsonl");
        ClassOptions options;
        options.cache = &cache;
        options.jobs = 2;
        emit_table(dir / name, 4, 9, 2, 4, TableFormat::Csv, options);
        return slurp(dir / name);
    };
    const std::string cold = run("cold.csv");
    const std::string warm = run("warm.csv");
    EXPECT_FALSE(cold.empty());
    EXPECT_EQ(cold, warm);
}

TEST(Table, UnwritablePathNamesThePath) {
    try {
        emit_table("/nonexistent-dir/table.csv", 4, 4, 2, 2, TableFormat::Csv, {});
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("/nonexistent-dir/table.csv"), std::string::npos);
    }
}
