#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qslab/counters.hpp"
#include "qslab/partition.hpp"
#include "qslab/pivot.hpp"
#include "qslab/rng.hpp"
#include "qslab/scheme.hpp"
#include "qslab/span.hpp"

namespace qslab {

enum class FailureKind {
    NotPermutation,
    PostconditionViolated,
    PivotOutOfSpan,
    StepBudgetExceeded,
    OutOfSpanAccess,
    NotSorted,
    StageMismatch,
};

inline std::string_view failure_kind_name(FailureKind kind) {
    switch (kind) {
        case FailureKind::NotPermutation: return "NotPermutation";
        case FailureKind::PostconditionViolated: return "PostconditionViolated";
        case FailureKind::PivotOutOfSpan: return "PivotOutOfSpan";
        case FailureKind::StepBudgetExceeded: return "StepBudgetExceeded";
        case FailureKind::OutOfSpanAccess: return "OutOfSpanAccess";
        case FailureKind::NotSorted: return "NotSorted";
        case FailureKind::StageMismatch: return "StageMismatch";
    }
    return "Unknown";
}

/// One verification result. `failure_kind` is set exactly when the check
/// failed; `detail` carries the offending indices and values.
struct Verdict {
    bool passed = true;
    std::optional<FailureKind> failure_kind{};
    std::string detail;

    static Verdict pass() { return {}; }
    static Verdict fail(FailureKind kind, std::string detail_text) {
        Verdict v;
        v.passed = false;
        v.failure_kind = kind;
        v.detail = std::move(detail_text);
        return v;
    }
    explicit operator bool() const { return passed; }
};

/// Thrown by BoundsCheckedSeq on any access outside the active span.
struct out_of_span_access : std::logic_error {
    std::size_t index;
    explicit out_of_span_access(std::size_t i)
        : std::logic_error("element access outside the active span, index " + std::to_string(i)),
          index(i) {}
};

/// Sequence adapter that polices every element access against an active
/// span (and the underlying size). Partitioning through this wrapper proves
/// a kernel touches nothing it should not — the certification mechanism for
/// the sentinel kernels' removed bound checks.
template <class Seq>
class BoundsCheckedSeq {
  public:
    using value_type = typename Seq::value_type;

    BoundsCheckedSeq(Seq& base, Span active) : base_(&base), active_(active) {}

    std::size_t size() const { return base_->size(); }
    value_type& operator[](std::size_t i) {
        check(i);
        return (*base_)[i];
    }
    const value_type& operator[](std::size_t i) const {
        check(i);
        return (*base_)[i];
    }

  private:
    void check(std::size_t i) const {
        if (i >= base_->size() || !active_.contains(i)) throw out_of_span_access(i);
    }

    Seq* base_;
    Span active_;
};

/// The step allowance for one partition call over n elements: generous
/// against the ~2n cursor moves a healthy kernel needs, tight enough that a
/// kernel failing to make progress trips it within one call.
constexpr std::uint64_t termination_step_budget(std::size_t n) {
    return 8 * static_cast<std::uint64_t>(n) + 16;
}

namespace detail {

template <class K>
bool keys_equal(const K& a, const K& b) {
    return !(a < b) && !(b < a);
}

template <class Seq>
std::string slice_to_string(const Seq& data, std::size_t limit = 24) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < data.size() && i < limit; ++i) {
        if (i) os << ",";
        os << data[i];
    }
    if (data.size() > limit) os << ",...";
    os << "]";
    return os.str();
}

}  // namespace detail

/// Checks one partition result against the full contract: pivot index in
/// span, everything outside the span untouched, the span a permutation of
/// what it was, and the two-sided <=/>= ordering around the pivot. Accepts
/// any index satisfying the contract, so it is scheme-agnostic.
template <class Seq>
Verdict check_partition(const Seq& before, const Seq& after, Span span, std::size_t p) {
    if (before.size() != after.size())
        throw std::invalid_argument("before/after sequences differ in length");
    require_valid_span(span, after.size());

    if (!span.contains(p)) {
        std::ostringstream os;
        os << "pivot index " << p << " outside span [" << span.start << "," << span.end << ")";
        return Verdict::fail(FailureKind::PivotOutOfSpan, os.str());
    }

    for (std::size_t i = 0; i < before.size(); ++i) {
        if (span.contains(i)) continue;
        if (!detail::keys_equal(before[i], after[i])) {
            std::ostringstream os;
            os << "element outside the span changed at index " << i << ": " << before[i] << " -> "
               << after[i];
            return Verdict::fail(FailureKind::OutOfSpanAccess, os.str());
        }
    }

    using Key = typename Seq::value_type;
    std::vector<Key> was(std::begin(before) + span.start, std::begin(before) + span.end);
    std::vector<Key> now(std::begin(after) + span.start, std::begin(after) + span.end);
    std::sort(was.begin(), was.end());
    std::sort(now.begin(), now.end());
    if (was != now)
        return Verdict::fail(FailureKind::NotPermutation,
                             "span multiset changed: before " + detail::slice_to_string(was) +
                                 " after " + detail::slice_to_string(now));

    const Key& pivot = after[p];
    for (std::size_t i = span.start; i < p; ++i) {
        if (pivot < after[i]) {
            std::ostringstream os;
            os << "left side violates <=: after[" << i << "]=" << after[i] << " > pivot " << pivot
               << " at " << p;
            return Verdict::fail(FailureKind::PostconditionViolated, os.str());
        }
    }
    for (std::size_t i = p + 1; i < span.end; ++i) {
        if (after[i] < pivot) {
            std::ostringstream os;
            os << "right side violates >=: after[" << i << "]=" << after[i] << " < pivot " << pivot
               << " at " << p;
            return Verdict::fail(FailureKind::PostconditionViolated, os.str());
        }
    }
    return Verdict::pass();
}

/// Independent ground truth: stable merge sort, sharing no code with the
/// quicksort engine.
template <class T>
std::vector<T> reference_sort(const std::vector<T>& input) {
    std::vector<T> a = input;
    std::vector<T> scratch(a.size());
    for (std::size_t width = 1; width < a.size(); width *= 2) {
        for (std::size_t lo = 0; lo + width < a.size(); lo += 2 * width) {
            const std::size_t mid = lo + width;
            const std::size_t hi = std::min(lo + 2 * width, a.size());
            std::size_t i = lo, j = mid, k = lo;
            while (i < mid && j < hi) {
                if (a[j] < a[i])
                    scratch[k++] = a[j++];
                else
                    scratch[k++] = a[i++];  // left first on ties: stable
            }
            while (i < mid) scratch[k++] = a[i++];
            while (j < hi) scratch[k++] = a[j++];
            for (std::size_t t = lo; t < hi; ++t) a[t] = scratch[t];
        }
    }
    return a;
}

struct EquivalenceOptions {
    bool compare_comparisons = false;  // also require equal comparison counts
    std::uint64_t layout_seed = 1;     // drives init_swap for sentinel schemes
};

/// Runs every listed scheme over every permutation of [1..n] for n up to
/// max_n and demands identical output arrays and pivot indices (and, when
/// asked, identical comparison counts). Sentinel schemes get the sentinel
/// layout applied first, derived from the same per-case seed for every
/// scheme so their inputs match. n starts at the largest scheme minimum in
/// the list. max_n is capped at 8 to keep the factorial sweep sane.
inline Verdict exhaustive_equivalence(const std::vector<SchemeId>& schemes, std::size_t max_n,
                                      EquivalenceOptions opt = {}) {
    if (max_n > 8) throw std::invalid_argument("exhaustive sweep capped at max_n = 8");
    if (schemes.size() < 2) return Verdict::pass();

    std::size_t min_n = 1;
    for (SchemeId s : schemes) min_n = std::max(min_n, min_span_length(s));

    for (std::size_t n = min_n; n <= max_n; ++n) {
        std::vector<std::int64_t> perm(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<std::int64_t>(i + 1);
        std::uint64_t case_index = 0;
        const Span span{0, n};
        do {
            std::vector<std::int64_t> base_out;
            std::size_t base_p = 0;
            std::uint64_t base_comps = 0;
            for (std::size_t si = 0; si < schemes.size(); ++si) {
                const SchemeId scheme = schemes[si];
                std::vector<std::int64_t> work = perm;
                Counters layout_ctr;
                if (is_sentinel_scheme(scheme)) {
                    SplitMix64 lay(mix_seed(opt.layout_seed, n, case_index));
                    init_swap(work, span, lay, layout_ctr);
                }
                Counters c;
                const PartitionOutcome out = partition(scheme, work, span, c);
                if (si == 0) {
                    base_out = work;
                    base_p = out.pivot_index;
                    base_comps = out.counters_delta.comparisons;
                    continue;
                }
                const bool same_array = work == base_out;
                const bool same_p = out.pivot_index == base_p;
                const bool same_comps =
                    !opt.compare_comparisons || out.counters_delta.comparisons == base_comps;
                if (!(same_array && same_p && same_comps)) {
                    std::ostringstream os;
                    os << "n=" << n << " case " << case_index << " input "
                       << detail::slice_to_string(perm) << ": " << scheme_name(schemes[0])
                       << " gave p=" << base_p << " " << detail::slice_to_string(base_out)
                       << " (comparisons " << base_comps << ") but " << scheme_name(scheme)
                       << " gave p=" << out.pivot_index << " " << detail::slice_to_string(work)
                       << " (comparisons " << out.counters_delta.comparisons << ")";
                    return Verdict::fail(FailureKind::StageMismatch, os.str());
                }
            }
            ++case_index;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return Verdict::pass();
}

/// Runs one partition call under a step governor on a private copy of the
/// data. Fails with StepBudgetExceeded exactly when the kernel's loop-step
/// count passes the budget — the tripwire for non-terminating loop bugs.
template <class Seq>
Verdict bounded_run(SchemeId scheme, const Seq& data, Span span, std::uint64_t step_budget,
                    std::uint64_t layout_seed = 1) {
    if (step_budget < 1) throw std::invalid_argument("step budget must be at least 1");
    std::vector<typename Seq::value_type> work(std::begin(data), std::end(data));
    Counters layout_ctr;
    if (is_sentinel_scheme(scheme)) {
        SplitMix64 lay(layout_seed);
        init_swap(work, span, lay, layout_ctr);
    }
    Counters c;
    c.step_limit = step_budget;
    try {
        partition(scheme, work, span, c);
    } catch (const step_budget_error&) {
        std::ostringstream os;
        os << scheme_name(scheme) << " exceeded " << step_budget << " loop steps on span length "
           << span.length();
        return Verdict::fail(FailureKind::StepBudgetExceeded, os.str());
    }
    return Verdict::pass();
}

struct RandomCheckOptions {
    std::size_t cases = 10000;
    std::uint64_t seed = 0;
    std::size_t min_n = 0;  // 0 = use the scheme's own minimum span length
    std::size_t max_n = 64;
    std::uint64_t value_bound = 16;  // keys drawn from [0, value_bound)
    bool bounds_checked = false;     // run through the span-policing wrapper
};

/// Hammers one scheme with seeded random arrays (sizes and values drawn
/// from one deterministic stream, so every scheme with the same minimum
/// span sees the same corpus). Each case must pass check_partition and a
/// bounded_run at the standard step budget; with bounds_checked set, any
/// access outside the span fails the whole sweep.
inline Verdict check_scheme_on_random_corpus(SchemeId scheme, const RandomCheckOptions& opt = {}) {
    const std::size_t min_n = opt.min_n != 0 ? opt.min_n : min_span_length(scheme);
    if (min_n > opt.max_n) throw std::invalid_argument("min_n exceeds max_n");

    SplitMix64 gen(mix_seed(opt.seed, 0x636f7270));  // corpus stream
    for (std::size_t case_index = 0; case_index < opt.cases; ++case_index) {
        const std::size_t n = min_n + static_cast<std::size_t>(gen.next_below(opt.max_n - min_n + 1));
        std::vector<std::int64_t> original(n);
        for (auto& v : original) v = static_cast<std::int64_t>(gen.next_below(opt.value_bound));
        const Span span{0, n};
        const std::uint64_t layout_seed = mix_seed(opt.seed, case_index, 99);

        auto describe = [&](const Verdict& v) {
            std::ostringstream os;
            os << scheme_name(scheme) << " case " << case_index << " n=" << n << " input "
               << detail::slice_to_string(original) << ": " << v.detail;
            return Verdict::fail(*v.failure_kind, os.str());
        };

        std::vector<std::int64_t> work = original;
        std::size_t p = 0;
        Counters c;
        c.step_limit = termination_step_budget(n);
        try {
            Counters layout_ctr;
            if (opt.bounds_checked) {
                BoundsCheckedSeq<std::vector<std::int64_t>> view(work, span);
                if (is_sentinel_scheme(scheme)) {
                    SplitMix64 lay(layout_seed);
                    init_swap(view, span, lay, layout_ctr);
                }
                p = partition(scheme, view, span, c).pivot_index;
            } else {
                if (is_sentinel_scheme(scheme)) {
                    SplitMix64 lay(layout_seed);
                    init_swap(work, span, lay, layout_ctr);
                }
                p = partition(scheme, work, span, c).pivot_index;
            }
        } catch (const out_of_span_access& e) {
            return describe(Verdict::fail(FailureKind::OutOfSpanAccess, e.what()));
        } catch (const step_budget_error&) {
            return describe(
                Verdict::fail(FailureKind::StepBudgetExceeded, "main run tripped the step budget"));
        }

        if (Verdict v = check_partition(original, work, span, p); !v.passed) return describe(v);
        if (Verdict v = bounded_run(scheme, original, span, termination_step_budget(n), layout_seed);
            !v.passed)
            return describe(v);
    }
    return Verdict::pass();
}

}  // namespace qslab
