#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace qslab {

/// Raised by Counters::step() when a step budget is armed and exhausted.
/// Lets a test harness cut off a kernel that loops instead of terminating.
struct step_budget_error : std::runtime_error {
    step_budget_error() : std::runtime_error("loop-step budget exhausted") {}
};

/// Work counters threaded through every kernel.
///
///  - comparisons counts key-vs-key order tests only; index and bound
///    tests are free.
///  - swaps counts element exchanges between two distinct slots.
///  - steps counts loop-body executions and backs the termination budget.
///
/// All three grow monotonically. step_limit = 0 means unbounded.
struct Counters {
    std::uint64_t comparisons = 0;
    std::uint64_t swaps = 0;
    std::uint64_t steps = 0;
    std::uint64_t step_limit = 0;

    /// Counted `a < b`. Every key ordering in the library funnels through
    /// here so the comparison totals stay comparable across schemes.
    template <class K>
    bool less(const K& a, const K& b) {
        ++comparisons;
        return a < b;
    }

    void step() {
        ++steps;
        if (step_limit != 0 && steps > step_limit) throw step_budget_error{};
    }

    /// Work done since `base` was captured.
    Counters delta_since(const Counters& base) const {
        Counters d;
        d.comparisons = comparisons - base.comparisons;
        d.swaps = swaps - base.swaps;
        d.steps = steps - base.steps;
        return d;
    }
};

/// Counted element exchange. A self-swap (i == j) is a no-op and does not
/// count. Indices are checked against the whole sequence, not the span, so
/// a kernel bug fails loudly instead of corrupting memory.
template <class Seq>
void counted_swap(Seq& data, std::size_t i, std::size_t j, Counters& c) {
    if (i >= data.size() || j >= data.size())
        throw std::out_of_range("swap index outside the sequence");
    if (i == j) return;
    using std::swap;
    swap(data[i], data[j]);
    ++c.swaps;
}

}  // namespace qslab
