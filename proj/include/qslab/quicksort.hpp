#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>

#include "qslab/counters.hpp"
#include "qslab/partition.hpp"
#include "qslab/pivot.hpp"
#include "qslab/rng.hpp"
#include "qslab/scheme.hpp"
#include "qslab/span.hpp"

namespace qslab {

/// Everything a sort run depends on. Two runs with equal configs on equal
/// data produce identical reports, including the randomized pieces: the
/// probe generator is seeded from `seed` and nothing else.
struct SortConfig {
    SchemeId scheme = SchemeId::HoareNested;
    PivotRule pivot_rule = PivotRule::first();
    std::size_t small_span_cutoff = 0;  // 0 disables the insertion-sort tail
    std::uint64_t seed = 0;
};

struct SortReport {
    Counters counters{};
    std::size_t max_recursion_depth = 0;  // root level counts as 1; 0 for n < 2
    std::size_t partitions = 0;
};

namespace detail {

/// Insertion sort with a binary search for the insertion slot. Used below
/// the small-span cutoff; moves are counted as adjacent swaps.
template <class Seq>
void binary_insertion_sort(Seq& data, Span span, Counters& c) {
    for (std::size_t i = span.start + 1; i < span.end; ++i) {
        std::size_t lo = span.start;
        std::size_t hi = i;
        while (lo < hi) {
            c.step();
            const std::size_t mid = lo + (hi - lo) / 2;
            if (c.less(data[i], data[mid]))
                hi = mid;
            else
                lo = mid + 1;  // after equals: keeps the sort stable
        }
        for (std::size_t j = i; j > lo; --j) {
            c.step();
            counted_swap(data, j, j - 1, c);
        }
    }
}

template <class Seq>
class SortDriver {
  public:
    SortDriver(Seq& data, const SortConfig& cfg) : data_(data), cfg_(cfg), rng_(cfg.seed) {}

    SortReport run(Span span) {
        sort(span, 1);
        return rep_;
    }

  private:
    void sort(Span span, std::size_t depth) {
        if (span.length() < 2) return;
        rep_.max_recursion_depth = std::max(rep_.max_recursion_depth, depth);
        if (cfg_.small_span_cutoff != 0 && span.length() <= cfg_.small_span_cutoff) {
            binary_insertion_sort(data_, span, rep_.counters);
            return;
        }
        if (is_sentinel_scheme(cfg_.scheme) && span.length() < 3) {
            // Sentinel kernels need three slots; a two-element span is
            // finished directly.
            if (rep_.counters.less(data_[span.start + 1], data_[span.start]))
                counted_swap(data_, span.start, span.start + 1, rep_.counters);
            return;
        }
        const std::size_t p = partition_once(span);
        ++rep_.partitions;
        sort({span.start, p}, depth + 1);
        sort({p + 1, span.end}, depth + 1);
    }

    std::size_t partition_once(Span span) {
        Counters& c = rep_.counters;
        if (is_sentinel_scheme(cfg_.scheme)) {
            // The sentinel layout elects its own median-of-three pivot, so
            // the configured pivot rule does not apply to these schemes.
            init_swap(data_, span, rng_, c);
        } else {
            const PivotRule rule = effective_rule(span);
            const bool median_rule = rule.kind == PivotRule::Kind::MedianOfThree ||
                                     rule.kind == PivotRule::Kind::RandomMedianOfThree;
            // Median rules spread their probes so the outer two fence the
            // span; see arrange_probes for why plain selection is not enough.
            const std::size_t chosen = median_rule ? arrange_probes(data_, span, rule, c)
                                                   : select_pivot(data_, span, rule, c);
            if (pivot_placement(cfg_.scheme) == PivotPlacement::Tail)
                counted_swap(data_, chosen, span.end - 1, c);
            else
                place_pivot_at_head(data_, span, chosen, c);
        }
        return partition(cfg_.scheme, data_, span, c).pivot_index;
    }

    /// Median rules need three elements; shorter spans fall back to the
    /// first element so the recursion can always bottom out.
    PivotRule effective_rule(Span span) const {
        if (span.length() < cfg_.pivot_rule.min_span()) return PivotRule::first();
        return cfg_.pivot_rule;
    }

    Seq& data_;
    SortConfig cfg_;
    SortReport rep_;
    SplitMix64 rng_;
};

}  // namespace detail

/// Recursive quicksort over data[span] under the configured scheme and
/// pivot rule. Plain two-call recursion: [start, p) then (p, end), with the
/// pivot excluded. Spans shorter than two return untouched.
template <class Seq>
SortReport quicksort(Seq& data, Span span, const SortConfig& config) {
    require_valid_span(span, data.size());
    detail::SortDriver<Seq> driver(data, config);
    return driver.run(span);
}

/// Whole-sequence convenience overload.
template <class Seq>
SortReport quicksort(Seq& data, const SortConfig& config) {
    return quicksort(data, Span{0, data.size()}, config);
}

}  // namespace qslab
