#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <vector>

#include "qslab/oracle.hpp"
#include "qslab/partition.hpp"
#include "qslab/rng.hpp"

using namespace qslab;
using V = std::vector<long long>;

TEST_CASE("the rewrite chain is step-for-step interchangeable on small spans") {
    EquivalenceOptions opt;
    opt.compare_comparisons = true;
    const auto v = exhaustive_equivalence(stage_chain_schemes(), 7, opt);
    INFO(v.detail);
    CHECK(v.passed);
}

TEST_CASE("a single scheme is trivially equivalent to itself") {
    CHECK(exhaustive_equivalence({SchemeId::HoareNested}, 5).passed);
    CHECK(exhaustive_equivalence({}, 5).passed);
}

TEST_CASE("schemes with different contracts are reported as mismatched") {
    const auto v = exhaustive_equivalence({SchemeId::HoareNested, SchemeId::Lomuto}, 4);
    REQUIRE_FALSE(v.passed);
    REQUIRE(v.failure_kind.has_value());
    CHECK(*v.failure_kind == FailureKind::StageMismatch);
    CHECK_FALSE(v.detail.empty());
}

TEST_CASE("exhaustive sweeps refuse sizes past the factorial wall") {
    CHECK_THROWS_AS(exhaustive_equivalence(stage_chain_schemes(), 9), std::invalid_argument);
}

TEST_CASE("the rewrite chain agrees on large random spans, comparisons included") {
    const auto chain = stage_chain_schemes();
    REQUIRE(chain.size() == 5);
    SplitMix64 g(0x5eedULL);
    for (int round = 0; round < 10000; ++round) {
        const std::size_t n = 1 + static_cast<std::size_t>(g.next_below(64));
        V base(n);
        for (auto& x : base) x = static_cast<long long>(g.next_below(2 * n + 1));

        V ref = base;
        Counters rc;
        const auto ro = partition(chain.front(), ref, {0, n}, rc);
        for (std::size_t k = 1; k < chain.size(); ++k) {
            V alt = base;
            Counters ac;
            const auto ao = partition(chain[k], alt, {0, n}, ac);
            INFO("round " << round << " n=" << n << " scheme=" << scheme_name(chain[k]));
            REQUIRE(ao.pivot_index == ro.pivot_index);
            REQUIRE(alt == ref);
            REQUIRE(ac.comparisons == rc.comparisons);
        }
    }
}
