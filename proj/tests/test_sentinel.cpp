#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "qslab/oracle.hpp"
#include "qslab/partition.hpp"
#include "qslab/pivot.hpp"

using namespace qslab;
using V = std::vector<long long>;

TEST_CASE("bounds-checked view rejects reads outside the active window") {
    V d{10, 20, 30, 40, 50};
    BoundsCheckedSeq<V> view{d, {1, 4}};
    CHECK(view.size() == 5);
    CHECK(view[1] == 20);
    CHECK(view[3] == 40);
    CHECK_THROWS_AS(view[0], out_of_span_access);
    CHECK_THROWS_AS(view[4], out_of_span_access);
    CHECK_THROWS_AS(view[9], out_of_span_access);
    view[2] = 99;
    CHECK(d[2] == 99);
}

TEST_CASE("sentinel kernels pinned outcomes") {
    // Three elements already in layout order: min, pivot, max.
    V d{2, 5, 9};
    const auto o = partition(SchemeId::HoareNestedSentinel, d, {0, 3});
    CHECK(o.pivot_index == 1);
    CHECK(d == V{2, 5, 9});

    V e{1, 5, 3, 4, 2, 9};  // min at front, max at back, pivot second
    const auto o2 = partition(SchemeId::HoareNestedSentinel, e, {0, 6});
    CHECK(o2.pivot_index == 4);
    CHECK(e == V{1, 2, 3, 4, 5, 9});

    V f{6, 6, 6};
    const auto o3 = partition(SchemeId::HoareNestedSentinel, f, {0, 3});
    CHECK(o3.pivot_index == 1);
}

TEST_CASE("both sentinel kernels trace the same cursor path") {
    // Array contents and returned index match on every prepared input
    // up to n = 7; only the comparison tallies may differ.
    const auto v = exhaustive_equivalence(
        {SchemeId::HoareNestedSentinel, SchemeId::HoareSingleLoopSentinel}, 7);
    INFO(v.detail);
    CHECK(v.passed);
}

TEST_CASE("sentinel scans never probe outside the span") {
    RandomCheckOptions opt;
    opt.cases = 2000;
    opt.seed = 3;
    opt.bounds_checked = true;
    for (SchemeId s : {SchemeId::HoareNestedSentinel, SchemeId::HoareSingleLoopSentinel}) {
        const auto v = check_scheme_on_random_corpus(s, opt);
        INFO(scheme_name(s) << ": " << v.detail);
        CHECK(v.passed);
    }
}

TEST_CASE("prepared layout plus kernel meets the partition contract") {
    SplitMix64 g(17);
    for (SchemeId s : {SchemeId::HoareNestedSentinel, SchemeId::HoareSingleLoopSentinel}) {
        for (int round = 0; round < 3000; ++round) {
            const std::size_t n = 3 + static_cast<std::size_t>(g.next_below(30));
            V d(n);
            for (auto& x : d) x = static_cast<long long>(g.next_below(8));
            const V original = d;
            Counters c;
            SplitMix64 lay(g.next());
            init_swap(d, {0, n}, lay, c);
            const auto o = partition(s, d, {0, n}, c);
            const auto v = check_partition(original, d, {0, n}, o.pivot_index);
            INFO(scheme_name(s) << " round " << round << ": " << v.detail);
            REQUIRE(v.passed);
        }
    }
}
