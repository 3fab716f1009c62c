#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qslab/oracle.hpp"
#include "qslab/quicksort.hpp"
#include "qslab/scheme.hpp"
#include "qslab/workload.hpp"

namespace qslab {

/// One measured grid cell. Counter columns are deterministic for a fixed
/// (scheme, workload, n, seed); the time column is not.
struct BenchRow {
    SchemeId scheme = SchemeId::HoareNested;
    WorkloadSpec workload{};
    std::size_t trials = 0;
    std::uint64_t median_ns = 0;
    std::uint64_t comparisons = 0;
    std::uint64_t swaps = 0;
    std::size_t max_depth = 0;
    bool valid = false;
    Verdict verdict{};  // diagnostic when !valid
};

/// Signed integer percent change from `traditional` to `simplified`,
/// rounded half away from zero. The baseline must be positive.
inline long long percent_difference(std::uint64_t traditional, std::uint64_t simplified) {
    if (traditional == 0) throw std::invalid_argument("baseline duration must be positive");
    const double relative = 100.0 * (static_cast<double>(simplified) - static_cast<double>(traditional)) /
                            static_cast<double>(traditional);
    return std::llround(relative);
}

/// A baseline/candidate pairing over the same (workload, n) cell.
struct CompareRow {
    BenchRow baseline{};
    BenchRow candidate{};
    long long percent_diff = 0;
};

/// Times every (workload, size, scheme) cell: one untimed warm-up, then
/// `trials` timed runs on fresh copies under a monotonic clock, reporting
/// the median. Every run's output is checked against an independent
/// reference sort; a cell whose output is ever wrong is marked invalid and
/// carries no timing. The pivot rule is fixed to median-of-three so sorted
/// inputs cannot skew the recursion. Timing rows need at least 3 trials.
inline std::vector<BenchRow> run_grid(const std::vector<SchemeId>& schemes,
                                      const std::vector<WorkloadSpec>& workloads,
                                      const std::vector<std::size_t>& sizes, std::size_t trials,
                                      std::uint64_t seed) {
    if (trials < 3) throw std::invalid_argument("timing rows need at least 3 trials");

    std::vector<BenchRow> rows;
    for (const WorkloadSpec& base_spec : workloads) {
        for (std::size_t n : sizes) {
            WorkloadSpec spec = base_spec;
            spec.n = n;
            spec.seed = seed;
            const std::vector<Key> data = generate(spec);
            const std::vector<Key> expected = reference_sort(data);

            for (SchemeId scheme : schemes) {
                BenchRow row;
                row.scheme = scheme;
                row.workload = spec;
                row.trials = trials;

                SortConfig cfg;
                cfg.scheme = scheme;
                cfg.pivot_rule = PivotRule::median_of_three();
                cfg.seed = seed;

                // Warm-up: verifies the configuration and caches; also the
                // source of the deterministic counter columns.
                std::vector<Key> warm = data;
                const SortReport report = quicksort(warm, cfg);
                row.comparisons = report.counters.comparisons;
                row.swaps = report.counters.swaps;
                row.max_depth = report.max_recursion_depth;
                if (warm != expected) {
                    row.valid = false;
                    row.verdict = Verdict::fail(FailureKind::NotSorted,
                                                "warm-up output does not match the reference sort");
                    rows.push_back(row);
                    continue;
                }

                std::vector<std::uint64_t> times;
                times.reserve(trials);
                bool all_sorted = true;
                for (std::size_t t = 0; t < trials; ++t) {
                    std::vector<Key> work = data;
                    const auto t0 = std::chrono::steady_clock::now();
                    quicksort(work, cfg);
                    const auto t1 = std::chrono::steady_clock::now();
                    times.push_back(static_cast<std::uint64_t>(
                        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()));
                    if (work != expected) {
                        all_sorted = false;
                        break;
                    }
                }
                if (!all_sorted) {
                    row.valid = false;
                    row.verdict = Verdict::fail(FailureKind::NotSorted,
                                                "a timed run's output does not match the reference");
                    rows.push_back(row);
                    continue;
                }

                std::sort(times.begin(), times.end());
                row.median_ns = times.size() % 2 == 1
                                    ? times[times.size() / 2]
                                    : (times[times.size() / 2 - 1] + times[times.size() / 2]) / 2;
                row.valid = true;
                rows.push_back(row);
            }
        }
    }
    return rows;
}

/// CSV with the fixed header `scheme,workload,n,trials,median_ns,
/// comparisons,swaps,max_depth`, one row per cell in grid order.
inline std::string emit_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream os;
    os << "scheme,workload,n,trials,median_ns,comparisons,swaps,max_depth\n";
    for (const BenchRow& r : rows) {
        os << scheme_name(r.scheme) << ',' << workload_label(r.workload) << ',' << r.workload.n
           << ',' << r.trials << ',' << r.median_ns << ',' << r.comparisons << ',' << r.swaps
           << ',' << r.max_depth << '\n';
    }
    return os.str();
}

/// Pairs baseline rows with candidate rows cell by cell. Only cells where
/// both rows are valid produce a comparison.
inline std::vector<CompareRow> make_compare_rows(const std::vector<BenchRow>& rows,
                                                 SchemeId baseline, SchemeId candidate) {
    std::vector<CompareRow> out;
    for (const BenchRow& b : rows) {
        if (b.scheme != baseline || !b.valid) continue;
        for (const BenchRow& c : rows) {
            if (c.scheme != candidate || !c.valid) continue;
            if (c.workload.n != b.workload.n || workload_label(c.workload) != workload_label(b.workload))
                continue;
            CompareRow pair;
            pair.baseline = b;
            pair.candidate = c;
            pair.percent_diff = percent_difference(b.median_ns, c.median_ns);
            out.push_back(pair);
            break;
        }
    }
    return out;
}

/// Markdown comparison report, grouped by workload (ascending, descending,
/// shuffled, then the duplicate workloads), sizes ascending within a group.
inline std::string emit_markdown(const std::vector<CompareRow>& rows) {
    std::ostringstream os;
    const WorkloadKind order[] = {WorkloadKind::Ascending, WorkloadKind::Descending,
                                  WorkloadKind::Shuffled, WorkloadKind::Constant,
                                  WorkloadKind::FewDistinct};
    for (WorkloadKind kind : order) {
        std::vector<const CompareRow*> group;
        for (const CompareRow& r : rows)
            if (r.baseline.workload.kind == kind) group.push_back(&r);
        if (group.empty()) continue;
        std::sort(group.begin(), group.end(), [](const CompareRow* a, const CompareRow* b) {
            return a->baseline.workload.n < b->baseline.workload.n;
        });

        os << "### " << workload_label(group.front()->baseline.workload) << "\n\n";
        os << "| n | " << scheme_name(group.front()->baseline.scheme) << " (ns) | "
           << scheme_name(group.front()->candidate.scheme) << " (ns) | percent difference |\n";
        os << "| ---: | ---: | ---: | ---: |\n";
        for (const CompareRow* r : group) {
            os << "| " << r->baseline.workload.n << " | " << r->baseline.median_ns << " | "
               << r->candidate.median_ns << " | " << r->percent_diff << "% |\n";
        }
        os << "\n";
    }
    return os.str();
}

/// Markdown rendering of raw measurement rows (the `bench` report format).
inline std::string emit_markdown(const std::vector<BenchRow>& rows) {
    std::ostringstream os;
    os << "| scheme | workload | n | trials | median_ns | comparisons | swaps | max_depth | ok |\n";
    os << "| --- | --- | ---: | ---: | ---: | ---: | ---: | ---: | --- |\n";
    for (const BenchRow& r : rows) {
        os << "| " << scheme_name(r.scheme) << " | " << workload_label(r.workload) << " | "
           << r.workload.n << " | " << r.trials << " | " << r.median_ns << " | " << r.comparisons
           << " | " << r.swaps << " | " << r.max_depth << " | " << (r.valid ? "yes" : "NO")
           << " |\n";
    }
    return os.str();
}

}  // namespace qslab
