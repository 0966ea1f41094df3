#pragma once

#include <cstdint>

namespace sitcalc {

/// Half-open byte range [begin, end) into a source buffer, plus the 1-based
/// line/column of `begin` for human-facing output.
struct Span {
    std::uint32_t begin = 0;
    std::uint32_t end = 0;
    std::uint32_t line = 0;
    std::uint32_t column = 0;

    bool valid() const { return line > 0; }

    friend bool operator==(const Span&, const Span&) = default;
};

} // namespace sitcalc
