#pragma once

#include <cstddef>
#include <stdexcept>

namespace qslab {

/// Half-open index window [start, end) into a key sequence.
/// All partition and sort operations take one of these; end is one past the
/// last element and is never dereferenced.
struct Span {
    std::size_t start = 0;
    std::size_t end = 0;

    constexpr std::size_t length() const { return end - start; }
    constexpr bool empty() const { return start >= end; }
    constexpr bool contains(std::size_t i) const { return start <= i && i < end; }
};

constexpr bool operator==(Span a, Span b) { return a.start == b.start && a.end == b.end; }

/// Throws if the span does not describe a valid window of a sequence with
/// `size` elements.
inline void require_valid_span(Span span, std::size_t size) {
    if (span.start > span.end || span.end > size)
        throw std::invalid_argument("span does not fit the sequence");
}

}  // namespace qslab
