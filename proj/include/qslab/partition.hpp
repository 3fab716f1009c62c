#pragma once

#include <cstddef>
#include <stdexcept>

#include "qslab/counters.hpp"
#include "qslab/scheme.hpp"
#include "qslab/span.hpp"

namespace qslab {

/// Result of one partition call: the slot the pivot ended up in plus the
/// work done by just this call.
struct PartitionOutcome {
    std::size_t pivot_index = 0;
    Counters counters_delta{};
};

namespace detail {

// ---------------------------------------------------------------------------
// Head-convention kernels. Contract: the partitioning key sits at span.start
// on entry. On return it sits at the returned index p with every key in
// [span.start, p) <= pivot and every key in (p, span.end) >= pivot.
// ---------------------------------------------------------------------------

/// Boundary-sweep kernel: a single scout pass grows a "smaller than pivot"
/// prefix behind a boundary cursor, then the pivot is swapped onto the
/// boundary. One comparison per non-pivot element, always.
template <class Seq>
std::size_t lomuto(Seq& data, Span span, Counters& c) {
    const auto pivot = data[span.start];
    std::size_t boundary = span.start;
    for (std::size_t scout = span.start + 1; scout < span.end; ++scout) {
        c.step();
        if (c.less(data[scout], pivot)) {
            ++boundary;
            counted_swap(data, scout, boundary, c);
        }
    }
    counted_swap(data, span.start, boundary, c);
    return boundary;
}

// The five hoare_* kernels below are one procedure at five refactoring
// stages, from fully nested scan loops down to a single flat loop. Each
// stage must be observably identical to the previous one: same output
// array, same returned index, same comparison count on every input. The
// cursors pack the move into the comparison operand (data[++s], data[--e]);
// the left guard `s + 1 < e` keeps the incremented cursor strictly inside
// the window so data[span.end] is never read, even when the pivot is the
// strict maximum.

/// Stage 0: classic nested form. Outer loop alternates an inward left scan
/// (stops at the first key >= pivot) and an inward right scan (stops at the
/// first key <= pivot); crossing cursors end the round with the pivot
/// swapped onto the right cursor.
template <class Seq>
std::size_t hoare_nested(Seq& data, Span span, Counters& c) {
    const auto pivot = data[span.start];
    std::size_t s = span.start;
    std::size_t e = span.end;
    for (;;) {
        c.step();
        while (s + 1 < e && c.less(data[++s], pivot)) c.step();
        while (span.start < e && c.less(pivot, data[--e])) c.step();
        if (s < e) {
            counted_swap(data, s, e, c);
        } else {
            counted_swap(data, span.start, e, c);
            return e;
        }
    }
}

/// Stage 1: the packed scan conditions are unfolded into guarded do-while
/// loops. The cursor move happens first in the body, so the guard that used
/// to run before the move now runs after the comparison.
template <class Seq>
std::size_t hoare_stage_do_while(Seq& data, Span span, Counters& c) {
    const auto pivot = data[span.start];
    std::size_t s = span.start;
    std::size_t e = span.end;
    for (;;) {
        c.step();
        if (s + 1 < e) {
            do {
                ++s;
                c.step();
            } while (c.less(data[s], pivot) && s + 1 < e);
        }
        if (span.start < e) {
            do {
                --e;
                c.step();
            } while (c.less(pivot, data[e]) && span.start < e);
        }
        if (s < e) {
            counted_swap(data, s, e, c);
        } else {
            counted_swap(data, span.start, e, c);
            return e;
        }
    }
}

/// Stage 2: each do-while is rotated into a pre-tested while with the first
/// cursor move hoisted in front of it.
template <class Seq>
std::size_t hoare_stage_while(Seq& data, Span span, Counters& c) {
    const auto pivot = data[span.start];
    std::size_t s = span.start;
    std::size_t e = span.end;
    for (;;) {
        c.step();
        if (s + 1 < e) {
            ++s;
            c.step();
            while (c.less(data[s], pivot) && s + 1 < e) {
                ++s;
                c.step();
            }
        }
        if (span.start < e) {
            --e;
            c.step();
            while (c.less(pivot, data[e]) && span.start < e) {
                --e;
                c.step();
            }
        }
        if (s < e) {
            counted_swap(data, s, e, c);
        } else {
            counted_swap(data, span.start, e, c);
            return e;
        }
    }
}

/// Stage 3: both hoisted cursor moves are relocated in front of the two scan
/// loops. The right cursor's entry guard always holds in reachable states,
/// so --e always fires; the left scan guard compensates for the early
/// decrement by comparing against e + 1's old value, i.e. `s < e`.
template <class Seq>
std::size_t hoare_stage_pre_inner_relocated(Seq& data, Span span, Counters& c) {
    const auto pivot = data[span.start];
    std::size_t s = span.start;
    std::size_t e = span.end;
    for (;;) {
        c.step();
        const bool scan_left = s + 1 < e;
        if (scan_left) ++s;
        if (span.start < e) --e;
        if (scan_left) {
            while (c.less(data[s], pivot) && s < e) {
                ++s;
                c.step();
            }
        }
        while (c.less(pivot, data[e]) && span.start < e) {
            --e;
            c.step();
        }
        if (s < e) {
            counted_swap(data, s, e, c);
        } else {
            counted_swap(data, span.start, e, c);
            return e;
        }
    }
}

/// Stage 4: the whole round is flattened into one loop driven by a phase
/// flag. scan_left remembers that the left scan already finished, which
/// keeps the comparison sequence identical to the nested stages — a
/// memoryless cascade would re-test the left condition while the right
/// cursor is still moving.
template <class Seq>
std::size_t hoare_single_loop(Seq& data, Span span, Counters& c) {
    const auto pivot = data[span.start];
    std::size_t s = span.start;
    std::size_t e = span.end;
    bool scan_left = s + 1 < e;
    if (scan_left) ++s;
    if (span.start < e) --e;
    for (;;) {
        c.step();
        if (scan_left) {
            if (c.less(data[s], pivot) && s < e) {
                ++s;
            } else {
                scan_left = false;
            }
        } else if (c.less(pivot, data[e]) && span.start < e) {
            --e;
        } else if (s < e) {
            counted_swap(data, s, e, c);
            scan_left = s + 1 < e;
            if (scan_left) ++s;
            if (span.start < e) --e;
        } else {
            counted_swap(data, span.start, e, c);
            return e;
        }
    }
}

// ---------------------------------------------------------------------------
// Sentinel kernels. Contract: the smallest probed key sits at span.start,
// the partitioning key at span.start + 1 and the largest probed key at
// span.end - 1 (see init_swap). The two extremes stop the scan cursors by
// value, so the scan loops carry no index-bound test at all. Minimum span
// length is 3; the returned index is always strictly inside (start, end-1).
// ---------------------------------------------------------------------------

/// Nested sentinel kernel: stage-0 loop shape with every index guard
/// dropped. The left scan stops at the max slot at the latest; the right
/// scan stops at the pivot slot at the latest, so neither cursor can leave
/// the span.
template <class Seq>
std::size_t hoare_nested_sentinel(Seq& data, Span span, Counters& c) {
    const std::size_t lo = span.start + 1;
    const auto pivot = data[lo];
    std::size_t s = lo;
    std::size_t e = span.end - 1;
    for (;;) {
        c.step();
        while (c.less(data[++s], pivot)) c.step();
        while (c.less(pivot, data[--e])) c.step();
        if (s < e) {
            counted_swap(data, s, e, c);
        } else {
            counted_swap(data, lo, e, c);
            return e;
        }
    }
}

/// Flat sentinel kernel: one loop, no index guards in the scan branches.
/// The cursors sit one slot outside the keys they test (data[s + 1],
/// data[e - 1]), which makes the array trajectory and returned index
/// identical to the nested sentinel kernel; the comparison totals differ
/// because the left condition is re-tested while the right cursor moves.
template <class Seq>
std::size_t hoare_single_loop_sentinel(Seq& data, Span span, Counters& c) {
    const std::size_t lo = span.start + 1;
    const auto pivot = data[lo];
    std::size_t s = lo;
    std::size_t e = span.end - 1;
    for (;;) {
        c.step();
        if (c.less(data[s + 1], pivot)) {
            ++s;
        } else if (c.less(pivot, data[e - 1])) {
            --e;
        } else if (s + 1 < e - 1) {
            counted_swap(data, s + 1, e - 1, c);
            ++s;
            --e;
        } else {
            counted_swap(data, lo, e - 1, c);
            return e - 1;
        }
    }
}

// ---------------------------------------------------------------------------
// Numbered variants: the stage-0 loop shape with different comparison
// strictness, scan order or return convention.
// ---------------------------------------------------------------------------

/// Variant 1: both scans also step over keys equal to the pivot, so runs of
/// duplicates are never swapped pair by pair. An all-equal span costs zero
/// swaps and returns span.start.
template <class Seq>
std::size_t hoare_variant_1(Seq& data, Span span, Counters& c) {
    const auto pivot = data[span.start];
    std::size_t s = span.start;
    std::size_t e = span.end;
    for (;;) {
        c.step();
        while (s + 1 < e && !c.less(pivot, data[++s])) c.step();
        while (span.start < e && !c.less(data[--e], pivot)) c.step();
        if (s < e) {
            counted_swap(data, s, e, c);
        } else {
            counted_swap(data, span.start, e, c);
            return e;
        }
    }
}

/// Variant 2: strict left scan, equal-skipping right scan. Duplicates of
/// the pivot all drift right, so an all-equal span returns span.start.
template <class Seq>
std::size_t hoare_variant_2(Seq& data, Span span, Counters& c) {
    const auto pivot = data[span.start];
    std::size_t s = span.start;
    std::size_t e = span.end;
    for (;;) {
        c.step();
        while (s + 1 < e && c.less(data[++s], pivot)) c.step();
        while (span.start < e && !c.less(data[--e], pivot)) c.step();
        if (s < e) {
            counted_swap(data, s, e, c);
        } else {
            counted_swap(data, span.start, e, c);
            return e;
        }
    }
}

/// Variant 3: exact mirror of variant 2. The pivot starts at span.end - 1,
/// the strict scan runs right-to-left first, the equal-skipping scan
/// left-to-right second, and the pivot lands on the left cursor. Cursors
/// are signed because s starts one slot before the span. An all-equal span
/// returns span.end - 1.
template <class Seq>
std::size_t hoare_variant_3(Seq& data, Span span, Counters& c) {
    using diff = std::ptrdiff_t;
    const diff first = static_cast<diff>(span.start);
    const diff last = static_cast<diff>(span.end) - 1;
    const auto pivot = data[static_cast<std::size_t>(last)];
    diff s = first - 1;
    diff e = last;
    for (;;) {
        c.step();
        while (s < e - 1 && c.less(pivot, data[static_cast<std::size_t>(--e)])) c.step();
        while (s < last && !c.less(pivot, data[static_cast<std::size_t>(++s)])) c.step();
        if (s < e) {
            counted_swap(data, static_cast<std::size_t>(s), static_cast<std::size_t>(e), c);
        } else {
            counted_swap(data, static_cast<std::size_t>(last), static_cast<std::size_t>(s), c);
            return static_cast<std::size_t>(s);
        }
    }
}

/// Variant 4: strict left scan as in stage 0, but the right scan tests
/// data[e - 1] and only then commits the move, so e rests one slot past the
/// key it stopped on. Swap and return sites compensate with e - 1. An
/// all-equal span of four returns index 2.
template <class Seq>
std::size_t hoare_variant_4(Seq& data, Span span, Counters& c) {
    const auto pivot = data[span.start];
    std::size_t s = span.start;
    std::size_t e = span.end;
    for (;;) {
        c.step();
        while (s + 1 < e && c.less(data[++s], pivot)) c.step();
        while (span.start < e - 1 && c.less(pivot, data[e - 1])) {
            --e;
            c.step();
        }
        if (s < e - 1) {
            counted_swap(data, s, e - 1, c);
            --e;
        } else {
            counted_swap(data, span.start, e - 1, c);
            return e - 1;
        }
    }
}

template <class Seq>
std::size_t run_kernel(SchemeId scheme, Seq& data, Span span, Counters& c) {
    switch (scheme) {
        case SchemeId::Lomuto: return lomuto(data, span, c);
        case SchemeId::HoareNested: return hoare_nested(data, span, c);
        case SchemeId::HoareStageDoWhile: return hoare_stage_do_while(data, span, c);
        case SchemeId::HoareStageWhile: return hoare_stage_while(data, span, c);
        case SchemeId::HoareStagePreInnerRelocated:
            return hoare_stage_pre_inner_relocated(data, span, c);
        case SchemeId::HoareSingleLoop: return hoare_single_loop(data, span, c);
        case SchemeId::HoareNestedSentinel: return hoare_nested_sentinel(data, span, c);
        case SchemeId::HoareSingleLoopSentinel: return hoare_single_loop_sentinel(data, span, c);
        case SchemeId::HoareVariant1: return hoare_variant_1(data, span, c);
        case SchemeId::HoareVariant2: return hoare_variant_2(data, span, c);
        case SchemeId::HoareVariant3: return hoare_variant_3(data, span, c);
        case SchemeId::HoareVariant4: return hoare_variant_4(data, span, c);
    }
    throw std::invalid_argument("unknown scheme id");
}

}  // namespace detail

/// Runs one partition step of `scheme` on data[span] and reports where the
/// pivot landed plus the work spent. The span must fit the sequence and be
/// at least min_span_length(scheme) long. Sentinel schemes additionally
/// expect the layout produced by init_swap; head schemes expect the pivot
/// at span.start, variant 3 expects it at span.end - 1.
template <class Seq>
PartitionOutcome partition(SchemeId scheme, Seq& data, Span span, Counters& c) {
    require_valid_span(span, data.size());
    if (span.length() < min_span_length(scheme))
        throw std::invalid_argument("span shorter than the scheme's minimum");
    const Counters before = c;
    const std::size_t p = detail::run_kernel(scheme, data, span, c);
    PartitionOutcome out;
    out.pivot_index = p;
    out.counters_delta = c.delta_since(before);
    return out;
}

/// Convenience overload with a throwaway counter set.
template <class Seq>
PartitionOutcome partition(SchemeId scheme, Seq& data, Span span) {
    Counters c;
    return partition(scheme, data, span, c);
}

}  // namespace qslab
