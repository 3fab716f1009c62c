#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qslab/rng.hpp"

namespace qslab {

/// The benchmark key type. Kernels stay generic; everything measured or
/// verified end to end runs on 64-bit signed integers.
using Key = std::int64_t;

enum class WorkloadKind { Ascending, Descending, Shuffled, Constant, FewDistinct };

/// A dataset recipe. Same spec, same bytes — on any platform — because the
/// only randomness source is the SplitMix64 stream documented in rng.hpp.
struct WorkloadSpec {
    WorkloadKind kind = WorkloadKind::Shuffled;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::uint64_t distinct = 16;  // value alphabet size, FewDistinct only
};

inline std::string_view workload_kind_name(WorkloadKind kind) {
    switch (kind) {
        case WorkloadKind::Ascending: return "ascending";
        case WorkloadKind::Descending: return "descending";
        case WorkloadKind::Shuffled: return "shuffled";
        case WorkloadKind::Constant: return "constant";
        case WorkloadKind::FewDistinct: return "few-distinct";
    }
    return "unknown";
}

/// Row label used in reports: plain kind name, with the alphabet size
/// appended for few-distinct (e.g. "few-distinct-16").
inline std::string workload_label(const WorkloadSpec& spec) {
    std::string name{workload_kind_name(spec.kind)};
    if (spec.kind == WorkloadKind::FewDistinct) name += "-" + std::to_string(spec.distinct);
    return name;
}

/// Parses a workload token: the plain kind names, plus "few-distinct-<k>".
/// Bare "few-distinct" keeps the default alphabet of 16.
inline std::optional<WorkloadSpec> parse_workload(std::string_view token) {
    WorkloadSpec spec;
    for (WorkloadKind k : {WorkloadKind::Ascending, WorkloadKind::Descending,
                           WorkloadKind::Shuffled, WorkloadKind::Constant}) {
        if (token == workload_kind_name(k)) {
            spec.kind = k;
            return spec;
        }
    }
    constexpr std::string_view prefix = "few-distinct";
    if (token.substr(0, prefix.size()) == prefix) {
        spec.kind = WorkloadKind::FewDistinct;
        std::string_view rest = token.substr(prefix.size());
        if (rest.empty()) return spec;
        if (rest.front() != '-' || rest.size() < 2) return std::nullopt;
        std::uint64_t k = 0;
        for (char ch : rest.substr(1)) {
            if (ch < '0' || ch > '9') return std::nullopt;
            k = k * 10 + static_cast<std::uint64_t>(ch - '0');
        }
        if (k == 0) return std::nullopt;
        spec.distinct = k;
        return spec;
    }
    return std::nullopt;
}

/// Materializes a dataset. Shuffled is a uniform permutation of [0, n) by
/// an inside-out Fisher–Yates walk: for i = n-1 down to 1, j =
/// next_below(i + 1), swap(v[i], v[j]). FewDistinct draws each key from
/// [0, distinct) and requires 1 <= distinct <= n.
inline std::vector<Key> generate(const WorkloadSpec& spec) {
    std::vector<Key> v(spec.n);
    switch (spec.kind) {
        case WorkloadKind::Ascending:
            for (std::size_t i = 0; i < spec.n; ++i) v[i] = static_cast<Key>(i);
            return v;
        case WorkloadKind::Descending:
            for (std::size_t i = 0; i < spec.n; ++i) v[i] = static_cast<Key>(spec.n - 1 - i);
            return v;
        case WorkloadKind::Constant:
            return v;  // all zeros
        case WorkloadKind::Shuffled: {
            for (std::size_t i = 0; i < spec.n; ++i) v[i] = static_cast<Key>(i);
            SplitMix64 g(spec.seed);
            for (std::size_t i = spec.n; i-- > 1;) {
                const std::size_t j = static_cast<std::size_t>(g.next_below(i + 1));
                std::swap(v[i], v[j]);
            }
            return v;
        }
        case WorkloadKind::FewDistinct: {
            if (spec.distinct < 1 || spec.distinct > spec.n)
                throw std::invalid_argument("few-distinct alphabet must satisfy 1 <= k <= n");
            SplitMix64 g(spec.seed);
            for (std::size_t i = 0; i < spec.n; ++i)
                v[i] = static_cast<Key>(g.next_below(spec.distinct));
            return v;
        }
    }
    throw std::invalid_argument("unknown workload kind");
}

}  // namespace qslab
