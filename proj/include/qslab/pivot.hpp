#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "qslab/counters.hpp"
#include "qslab/rng.hpp"
#include "qslab/span.hpp"

namespace qslab {

/// How the element to pivot on is chosen. The median rules need a span of
/// at least three; the positional rules work from length one.
struct PivotRule {
    enum class Kind {
        FirstElement,
        LastElement,
        MiddleElement,
        MedianOfThree,
        RandomMedianOfThree,
    };

    Kind kind = Kind::FirstElement;
    std::uint64_t seed = 0;

    static constexpr PivotRule first() { return {Kind::FirstElement, 0}; }
    static constexpr PivotRule last() { return {Kind::LastElement, 0}; }
    static constexpr PivotRule middle() { return {Kind::MiddleElement, 0}; }
    static constexpr PivotRule median_of_three() { return {Kind::MedianOfThree, 0}; }
    static constexpr PivotRule random_median_of_three(std::uint64_t seed) {
        return {Kind::RandomMedianOfThree, seed};
    }

    constexpr std::size_t min_span() const {
        return (kind == Kind::MedianOfThree || kind == Kind::RandomMedianOfThree) ? 3 : 1;
    }
};

inline std::string_view pivot_rule_name(PivotRule::Kind kind) {
    switch (kind) {
        case PivotRule::Kind::FirstElement: return "first";
        case PivotRule::Kind::LastElement: return "last";
        case PivotRule::Kind::MiddleElement: return "middle";
        case PivotRule::Kind::MedianOfThree: return "median-of-three";
        case PivotRule::Kind::RandomMedianOfThree: return "random-median-of-three";
    }
    throw std::invalid_argument("unknown pivot rule");
}

inline std::optional<PivotRule::Kind> parse_pivot_rule(std::string_view name) {
    using K = PivotRule::Kind;
    for (K k : {K::FirstElement, K::LastElement, K::MiddleElement, K::MedianOfThree,
                K::RandomMedianOfThree})
        if (pivot_rule_name(k) == name) return k;
    return std::nullopt;
}

namespace detail {

/// Index of the median among three probed slots. Counted comparisons only;
/// the data is not touched.
template <class Seq>
std::size_t median_index_of_three(const Seq& data, std::size_t a, std::size_t b, std::size_t c,
                                  Counters& ctr) {
    // Const access through a possibly non-const counted comparator.
    const auto& va = data[a];
    const auto& vb = data[b];
    const auto& vc = data[c];
    if (ctr.less(va, vb)) {
        if (ctr.less(vb, vc)) return b;       // a < b < c
        return ctr.less(va, vc) ? c : a;      // a < b, c <= b
    }
    if (ctr.less(va, vc)) return a;           // b <= a < c
    return ctr.less(vb, vc) ? c : b;          // b <= a, c <= a
}

/// Three distinct probe indices inside the span, drawn from the seeded
/// generator. A span of exactly three uses every slot and draws nothing.
inline void three_distinct_probes(Span span, SplitMix64& rng, std::size_t out[3]) {
    const std::size_t n = span.length();
    if (n == 3) {
        out[0] = span.start;
        out[1] = span.start + 1;
        out[2] = span.start + 2;
        return;
    }
    std::size_t picked = 0;
    while (picked < 3) {
        std::size_t candidate = span.start + static_cast<std::size_t>(rng.next_below(n));
        bool fresh = true;
        for (std::size_t k = 0; k < picked; ++k)
            if (out[k] == candidate) fresh = false;
        if (fresh) out[picked++] = candidate;
    }
}

}  // namespace detail

/// Picks the pivot slot for a span under the given rule. Read-only: the
/// caller moves the element afterwards. Median rules refuse spans shorter
/// than three; every rule refuses an empty span.
template <class Seq>
std::size_t select_pivot(const Seq& data, Span span, PivotRule rule, Counters& ctr) {
    require_valid_span(span, data.size());
    if (span.length() < rule.min_span())
        throw std::invalid_argument("span shorter than the pivot rule's minimum");

    switch (rule.kind) {
        case PivotRule::Kind::FirstElement:
            return span.start;
        case PivotRule::Kind::LastElement:
            return span.end - 1;
        case PivotRule::Kind::MiddleElement:
            return span.start + span.length() / 2;
        case PivotRule::Kind::MedianOfThree:
            return detail::median_index_of_three(data, span.start, span.start + span.length() / 2,
                                                 span.end - 1, ctr);
        case PivotRule::Kind::RandomMedianOfThree: {
            // Probes derive from (seed, span), so a whole sort is a pure
            // function of its configuration.
            SplitMix64 rng(mix_seed(rule.seed, span.start, span.end));
            std::size_t probes[3];
            detail::three_distinct_probes(span, rng, probes);
            return detail::median_index_of_three(data, probes[0], probes[1], probes[2], ctr);
        }
    }
    throw std::invalid_argument("unknown pivot rule");
}

/// Moves the chosen pivot to span.start, where the head-convention kernels
/// expect it. Self-placement counts no swap.
template <class Seq>
void place_pivot_at_head(Seq& data, Span span, std::size_t pivot_index, Counters& ctr) {
    require_valid_span(span, data.size());
    if (span.empty() || !span.contains(pivot_index))
        throw std::invalid_argument("pivot index outside the span");
    counted_swap(data, span.start, pivot_index, ctr);
}

/// Elects the pivot with select_pivot, then spreads the three probed keys
/// across their own slots: smallest on the leftmost probe slot, the elected
/// median on the middle one, largest on the rightmost. Returns the middle
/// slot. Median rules only.
///
/// The spreading matters for balance, not safety: moving only the median
/// leaves the other two probes in place, and on a run shaped like one
/// maximum followed by an ascending tail the rightmost probe is then always
/// the second-largest key, so every split peels off two elements and the
/// recursion goes linear. Exactly that shape re-arises from descending
/// input. With the extremes parked on the outer slots the halves come out
/// ascending instead, and ascending spans keep electing true medians.
/// Costs at most one comparison and two swaps on top of select_pivot.
template <class Seq>
std::size_t arrange_probes(Seq& data, Span span, PivotRule rule, Counters& ctr) {
    if (rule.kind != PivotRule::Kind::MedianOfThree &&
        rule.kind != PivotRule::Kind::RandomMedianOfThree)
        throw std::invalid_argument("probe arrangement applies to the median rules only");
    require_valid_span(span, data.size());
    if (span.length() < rule.min_span())
        throw std::invalid_argument("span shorter than the pivot rule's minimum");

    std::size_t probe[3];
    if (rule.kind == PivotRule::Kind::MedianOfThree) {
        probe[0] = span.start;
        probe[1] = span.start + span.length() / 2;
        probe[2] = span.end - 1;
    } else {
        // The same derivation select_pivot uses, so the same three slots.
        SplitMix64 rng(mix_seed(rule.seed, span.start, span.end));
        detail::three_distinct_probes(span, rng, probe);
        auto order = [](std::size_t& x, std::size_t& y) {
            if (y < x) std::swap(x, y);
        };
        order(probe[0], probe[1]);
        order(probe[1], probe[2]);
        order(probe[0], probe[1]);
    }

    const std::size_t median = select_pivot(data, span, rule, ctr);
    if (median != probe[1]) counted_swap(data, median, probe[1], ctr);
    // The outer slots now hold the two non-elected probes; order them.
    if (ctr.less(data[probe[2]], data[probe[0]])) counted_swap(data, probe[0], probe[2], ctr);
    return probe[1];
}

/// Builds the sentinel layout: probes three distinct slots, then places the
/// probed minimum at span.start, the probed median (the pivot) at
/// span.start + 1 and the probed maximum at span.end - 1. The two extremes
/// later stop the scan cursors by value, which is what lets the sentinel
/// kernels drop their bound checks. Needs a span of at least three.
template <class Seq>
void init_swap(Seq& data, Span span, SplitMix64& rng, Counters& ctr) {
    require_valid_span(span, data.size());
    if (span.length() < 3) throw std::invalid_argument("sentinel layout needs at least 3 elements");

    std::size_t probe[3];
    detail::three_distinct_probes(span, rng, probe);

    // Sort the three probe indices by their values (stable on ties).
    auto order = [&](std::size_t& x, std::size_t& y) {
        if (ctr.less(data[y], data[x])) std::swap(x, y);
    };
    order(probe[0], probe[1]);
    order(probe[1], probe[2]);
    order(probe[0], probe[1]);
    std::size_t lo = probe[0], mid = probe[1], hi = probe[2];

    // Three placement swaps. Each swap may displace a value another tracked
    // index still points at, so the labels are patched after every move.
    auto relocate = [&](std::size_t from, std::size_t to) {
        counted_swap(data, from, to, ctr);
        if (mid == to) mid = from;
        if (hi == to) hi = from;
    };
    relocate(lo, span.start);
    relocate(hi, span.end - 1);
    counted_swap(data, mid, span.start + 1, ctr);
}

}  // namespace qslab
