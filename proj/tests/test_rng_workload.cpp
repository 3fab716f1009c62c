#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qslab/rng.hpp"
#include "qslab/workload.hpp"

using namespace qslab;

namespace {

std::vector<Key> read_golden(const std::string& name) {
    std::ifstream f(std::string(QSLAB_GOLDEN_DIR) + "/" + name);
    REQUIRE(f.good());
    std::vector<Key> out;
    Key v;
    while (f >> v) out.push_back(v);
    return out;
}

}  // namespace

TEST_CASE("splitmix64 is deterministic and advances state additively") {
    SplitMix64 a(123);
    SplitMix64 b(123);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    SplitMix64 c(0);
    c.next();
    CHECK(c.state == 0x9E3779B97F4A7C15ULL);  // the documented state update
    for (int i = 0; i < 50; ++i) CHECK(c.next_below(7) < 7);
}

TEST_CASE("mix_seed varies with every salt") {
    CHECK(mix_seed(1, 2) != mix_seed(1, 3));
    CHECK(mix_seed(1, 2) != mix_seed(2, 2));
    CHECK(mix_seed(1, 2, 3) != mix_seed(1, 2, 4));
    CHECK(mix_seed(1, 2) == mix_seed(1, 2));
}

TEST_CASE("deterministic workload shapes") {
    WorkloadSpec asc{WorkloadKind::Ascending, 5, 0, 16};
    CHECK(generate(asc) == std::vector<Key>{0, 1, 2, 3, 4});

    WorkloadSpec desc{WorkloadKind::Descending, 3, 0, 16};
    CHECK(generate(desc) == std::vector<Key>{2, 1, 0});

    WorkloadSpec con{WorkloadKind::Constant, 4, 0, 16};
    CHECK(generate(con) == std::vector<Key>{0, 0, 0, 0});

    WorkloadSpec empty{WorkloadKind::Shuffled, 0, 1, 16};
    CHECK(generate(empty).empty());
}

TEST_CASE("shuffled output is a permutation, reproducible, and actually shuffled") {
    WorkloadSpec spec{WorkloadKind::Shuffled, 64, 1, 16};
    const auto a = generate(spec);
    const auto b = generate(spec);
    CHECK(a == b);

    auto sorted = a;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Key> iota(64);
    for (std::size_t i = 0; i < 64; ++i) iota[i] = static_cast<Key>(i);
    CHECK(sorted == iota);

    // Kendall-tau distance from sorted order is positive for this seed.
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[j] < a[i]) ++inversions;
    CHECK(inversions > 0);
}

TEST_CASE("few-distinct draws stay inside the alphabet") {
    WorkloadSpec spec{WorkloadKind::FewDistinct, 200, 9, 4};
    const auto v = generate(spec);
    REQUIRE(v.size() == 200);
    for (Key k : v) {
        CHECK(k >= 0);
        CHECK(k < 4);
    }
    CHECK(generate(spec) == v);

    WorkloadSpec bad = spec;
    bad.distinct = 0;
    CHECK_THROWS_AS(generate(bad), std::invalid_argument);
    bad.distinct = 300;  // k > n
    CHECK_THROWS_AS(generate(bad), std::invalid_argument);
}

TEST_CASE("workload names round-trip") {
    CHECK(workload_label({WorkloadKind::Ascending, 5, 0, 16}) == "ascending");
    CHECK(workload_label({WorkloadKind::FewDistinct, 5, 0, 12}) == "few-distinct-12");

    auto p = parse_workload("few-distinct-8");
    REQUIRE(p.has_value());
    CHECK(p->kind == WorkloadKind::FewDistinct);
    CHECK(p->distinct == 8);

    auto bare = parse_workload("few-distinct");
    REQUIRE(bare.has_value());
    CHECK(bare->distinct == 16);

    CHECK(parse_workload("shuffled")->kind == WorkloadKind::Shuffled);
    CHECK_FALSE(parse_workload("bogus").has_value());
    CHECK_FALSE(parse_workload("few-distinct-").has_value());
    CHECK_FALSE(parse_workload("few-distinct-x").has_value());
    CHECK_FALSE(parse_workload("few-distinct-0").has_value());
}

TEST_CASE("golden files pin the generator outputs") {
    struct Row {
        const char* file;
        WorkloadSpec spec;
    };
    const Row rows[] = {
        {"ascending-n10-seed0.txt", {WorkloadKind::Ascending, 10, 0, 16}},
        {"descending-n10-seed0.txt", {WorkloadKind::Descending, 10, 0, 16}},
        {"constant-n10-seed0.txt", {WorkloadKind::Constant, 10, 0, 16}},
        {"shuffled-n5-seed1.txt", {WorkloadKind::Shuffled, 5, 1, 16}},
        {"shuffled-n10-seed42.txt", {WorkloadKind::Shuffled, 10, 42, 16}},
        {"few-distinct4-n10-seed7.txt", {WorkloadKind::FewDistinct, 10, 7, 4}},
    };
    for (const Row& row : rows) {
        INFO(row.file);
        CHECK(generate(row.spec) == read_golden(row.file));
    }
}
