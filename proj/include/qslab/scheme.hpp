#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qslab {

/// Every partition kernel the laboratory ships. The five Hoare entries from
/// Nested through SingleLoop form a refactoring chain with identical
/// observable behaviour (output array, pivot index, comparison count); the
/// sentinel pair trades bound checks for guard elements; the numbered
/// variants explore comparison strictness, loop order and return convention.
enum class SchemeId {
    Lomuto,
    HoareNested,
    HoareStageDoWhile,
    HoareStageWhile,
    HoareStagePreInnerRelocated,
    HoareSingleLoop,
    HoareNestedSentinel,
    HoareSingleLoopSentinel,
    HoareVariant1,
    HoareVariant2,
    HoareVariant3,
    HoareVariant4,
};

/// Where the dispatcher expects the pivot before the kernel runs.
enum class PivotPlacement {
    Head,      // pivot sits at span.start
    Tail,      // pivot sits at span.end - 1
    Sentinel,  // min at start, pivot at start + 1, max at end - 1
};

namespace detail {
struct SchemeRow {
    SchemeId id;
    std::string_view name;
    std::size_t min_span;
    PivotPlacement placement;
};

inline constexpr std::array<SchemeRow, 12> scheme_table{{
    {SchemeId::Lomuto, "lomuto", 1, PivotPlacement::Head},
    {SchemeId::HoareNested, "hoare-nested", 1, PivotPlacement::Head},
    {SchemeId::HoareStageDoWhile, "hoare-stage-do-while", 1, PivotPlacement::Head},
    {SchemeId::HoareStageWhile, "hoare-stage-while", 1, PivotPlacement::Head},
    {SchemeId::HoareStagePreInnerRelocated, "hoare-stage-pre-inner-relocated", 1,
     PivotPlacement::Head},
    {SchemeId::HoareSingleLoop, "hoare-single-loop", 1, PivotPlacement::Head},
    {SchemeId::HoareNestedSentinel, "hoare-sentinel-nested", 3, PivotPlacement::Sentinel},
    {SchemeId::HoareSingleLoopSentinel, "hoare-sentinel-single-loop", 3,
     PivotPlacement::Sentinel},
    {SchemeId::HoareVariant1, "hoare-variant-1", 1, PivotPlacement::Head},
    {SchemeId::HoareVariant2, "hoare-variant-2", 1, PivotPlacement::Head},
    {SchemeId::HoareVariant3, "hoare-variant-3", 1, PivotPlacement::Tail},
    {SchemeId::HoareVariant4, "hoare-variant-4", 1, PivotPlacement::Head},
}};

inline constexpr const SchemeRow& scheme_row(SchemeId id) {
    for (const auto& row : scheme_table)
        if (row.id == id) return row;
    throw std::invalid_argument("unknown scheme id");
}
}  // namespace detail

inline constexpr std::string_view scheme_name(SchemeId id) { return detail::scheme_row(id).name; }

/// Shortest span a kernel accepts: 3 for the sentinel schemes (two guard
/// slots plus the pivot), 1 for everything else.
inline constexpr std::size_t min_span_length(SchemeId id) { return detail::scheme_row(id).min_span; }

inline constexpr PivotPlacement pivot_placement(SchemeId id) {
    return detail::scheme_row(id).placement;
}

inline constexpr bool is_sentinel_scheme(SchemeId id) {
    return pivot_placement(id) == PivotPlacement::Sentinel;
}

/// Kebab-case name -> id. Empty when the name is unknown.
inline std::optional<SchemeId> parse_scheme(std::string_view name) {
    for (const auto& row : detail::scheme_table)
        if (row.name == name) return row.id;
    return std::nullopt;
}

inline std::vector<SchemeId> all_schemes() {
    std::vector<SchemeId> out;
    out.reserve(detail::scheme_table.size());
    for (const auto& row : detail::scheme_table) out.push_back(row.id);
    return out;
}

/// The refactoring chain whose members must be observably identical.
inline std::vector<SchemeId> stage_chain_schemes() {
    return {SchemeId::HoareNested, SchemeId::HoareStageDoWhile, SchemeId::HoareStageWhile,
            SchemeId::HoareStagePreInnerRelocated, SchemeId::HoareSingleLoop};
}

}  // namespace qslab
