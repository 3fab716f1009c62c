#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qslab/bench.hpp"

using namespace qslab;

namespace {

struct PublishedCell {
    WorkloadKind kind;
    std::size_t n;
    std::uint64_t traditional_us;
    std::uint64_t simplified_us;
    long long percent;
};

// Microsecond medians and rounded percent differences reproduced from the
// published two-scheme comparison this tool's report format mirrors.
const std::vector<PublishedCell>& published_table() {
    static const std::vector<PublishedCell> t = {
        {WorkloadKind::Ascending, 10, 7, 8, 14},
        {WorkloadKind::Ascending, 100, 18, 20, 11},
        {WorkloadKind::Ascending, 1000, 111, 126, 14},
        {WorkloadKind::Ascending, 10000, 1071, 1239, 16},
        {WorkloadKind::Ascending, 50000, 4893, 5867, 20},
        {WorkloadKind::Ascending, 100000, 9479, 11131, 17},
        {WorkloadKind::Ascending, 1000000, 115248, 137658, 19},
        {WorkloadKind::Descending, 10, 7, 7, 0},
        {WorkloadKind::Descending, 100, 18, 19, 6},
        {WorkloadKind::Descending, 1000, 106, 142, 34},
        {WorkloadKind::Descending, 10000, 1020, 1167, 14},
        {WorkloadKind::Descending, 50000, 4757, 5411, 14},
        {WorkloadKind::Descending, 100000, 9378, 11132, 19},
        {WorkloadKind::Descending, 1000000, 118696, 138311, 17},
        {WorkloadKind::Shuffled, 10, 6, 6, 0},
        {WorkloadKind::Shuffled, 100, 25, 25, 0},
        {WorkloadKind::Shuffled, 1000, 264, 249, -6},
        {WorkloadKind::Shuffled, 10000, 2949, 3065, 4},
        {WorkloadKind::Shuffled, 50000, 16565, 17943, 8},
        {WorkloadKind::Shuffled, 100000, 34005, 36400, 7},
        {WorkloadKind::Shuffled, 1000000, 380477, 406659, 7},
    };
    return t;
}

BenchRow make_row(SchemeId scheme, WorkloadKind kind, std::size_t n, std::uint64_t median) {
    BenchRow r;
    r.scheme = scheme;
    r.workload = WorkloadSpec{kind, n, 0};
    r.trials = 3;
    r.median_ns = median;
    r.valid = true;
    return r;
}

}  // namespace

TEST_CASE("percent difference rounds half away from zero") {
    CHECK(percent_difference(100, 114) == 14);
    CHECK(percent_difference(100, 93) == -7);
    CHECK(percent_difference(8, 9) == 13);     // 12.5 rounds up
    CHECK(percent_difference(200, 199) == -1);  // -0.5 rounds away from zero
    CHECK(percent_difference(5, 5) == 0);
    CHECK_THROWS_AS(percent_difference(0, 10), std::invalid_argument);
}

TEST_CASE("percent difference reproduces every published cell") {
    for (const auto& cell : published_table()) {
        INFO("n=" << cell.n << " t=" << cell.traditional_us << " s=" << cell.simplified_us);
        CHECK(percent_difference(cell.traditional_us, cell.simplified_us) == cell.percent);
    }
}

TEST_CASE("grid runs demand enough trials for a median") {
    CHECK_THROWS_AS(run_grid({SchemeId::HoareNested}, {WorkloadSpec{WorkloadKind::Shuffled, 0, 0}},
                             {100}, 1, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_grid({SchemeId::HoareNested}, {WorkloadSpec{WorkloadKind::Shuffled, 0, 0}},
                             {100}, 2, 0),
                    std::invalid_argument);
}

TEST_CASE("grid rows are valid and their counter columns are reproducible") {
    const std::vector<SchemeId> schemes{SchemeId::HoareNested, SchemeId::HoareSingleLoop};
    const std::vector<WorkloadSpec> workloads{WorkloadSpec{WorkloadKind::Shuffled, 0, 0}};
    const std::vector<std::size_t> sizes{1000};

    const auto first = run_grid(schemes, workloads, sizes, 3, 11);
    const auto second = run_grid(schemes, workloads, sizes, 3, 11);
    REQUIRE(first.size() == 2);
    REQUIRE(second.size() == 2);
    for (std::size_t i = 0; i < first.size(); ++i) {
        INFO(scheme_name(first[i].scheme));
        CHECK(first[i].valid);
        CHECK(first[i].workload.n == 1000);
        CHECK(first[i].trials == 3);
        CHECK(first[i].comparisons == second[i].comparisons);
        CHECK(first[i].swaps == second[i].swaps);
        CHECK(first[i].max_depth == second[i].max_depth);
        CHECK(first[i].comparisons > 0);
    }
    // The two rewrites perform identical comparison work on the same input.
    CHECK(first[0].comparisons == first[1].comparisons);
}

TEST_CASE("a quadratic cell still completes and reports honest counters") {
    const auto rows = run_grid({SchemeId::Lomuto}, {WorkloadSpec{WorkloadKind::Constant, 0, 0}},
                               {2000}, 3, 0);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].valid);
    CHECK(rows[0].comparisons >= 2000ULL * 2000ULL / 4ULL);
}

TEST_CASE("csv output has the fixed header and field order") {
    CHECK(emit_csv({}) == "scheme,workload,n,trials,median_ns,comparisons,swaps,max_depth\n");

    BenchRow r = make_row(SchemeId::Lomuto, WorkloadKind::FewDistinct, 32, 555);
    r.workload.distinct = 4;
    r.trials = 5;
    r.comparisons = 7;
    r.swaps = 6;
    r.max_depth = 3;
    const std::string csv = emit_csv({r});
    CHECK(csv ==
          "scheme,workload,n,trials,median_ns,comparisons,swaps,max_depth\n"
          "lomuto,few-distinct-4,32,5,555,7,6,3\n");
}

TEST_CASE("comparison pairing reproduces the published percent column") {
    std::vector<BenchRow> rows;
    for (const auto& cell : published_table()) {
        rows.push_back(make_row(SchemeId::HoareNested, cell.kind, cell.n, cell.traditional_us));
        rows.push_back(make_row(SchemeId::HoareSingleLoop, cell.kind, cell.n, cell.simplified_us));
    }
    const auto pairs = make_compare_rows(rows, SchemeId::HoareNested, SchemeId::HoareSingleLoop);
    REQUIRE(pairs.size() == published_table().size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        INFO("row " << i);
        CHECK(pairs[i].percent_diff == published_table()[i].percent);
    }

    const std::string md = emit_markdown(pairs);
    const auto asc = md.find("### ascending");
    const auto desc = md.find("### descending");
    const auto shuf = md.find("### shuffled");
    REQUIRE(asc != std::string::npos);
    REQUIRE(desc != std::string::npos);
    REQUIRE(shuf != std::string::npos);
    CHECK(asc < desc);
    CHECK(desc < shuf);
    CHECK(md.find("| n | hoare-nested (ns) | hoare-single-loop (ns) | percent difference |") !=
          std::string::npos);
    CHECK(md.find("| 1000000 | 115248 | 137658 | 19% |") != std::string::npos);
    CHECK(md.find("| 1000 | 264 | 249 | -6% |") != std::string::npos);
}

TEST_CASE("invalid rows are excluded from comparisons") {
    std::vector<BenchRow> rows;
    rows.push_back(make_row(SchemeId::HoareNested, WorkloadKind::Shuffled, 100, 10));
    BenchRow broken = make_row(SchemeId::HoareSingleLoop, WorkloadKind::Shuffled, 100, 11);
    broken.valid = false;
    rows.push_back(broken);
    CHECK(make_compare_rows(rows, SchemeId::HoareNested, SchemeId::HoareSingleLoop).empty());
}

TEST_CASE("raw markdown rendering flags invalid rows") {
    BenchRow ok = make_row(SchemeId::HoareNested, WorkloadKind::Ascending, 10, 1);
    BenchRow bad = make_row(SchemeId::Lomuto, WorkloadKind::Ascending, 10, 2);
    bad.valid = false;
    const std::string md = emit_markdown(std::vector<BenchRow>{ok, bad});
    CHECK(md.find("| yes |") != std::string::npos);
    CHECK(md.find("| NO |") != std::string::npos);
}
