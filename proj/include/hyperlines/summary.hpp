#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hyperlines/colouring.hpp"

namespace hyperlines {

/// Deduplicated line sets of a system. Red and blue lines are kept in
/// separate sets and counted separately even when equal as point sets.
struct LineSummary {
    std::vector<PointSet> red_lines;   // sorted by mask
    std::vector<PointSet> blue_lines;  // sorted by mask
    std::size_t m_red = 0;
    std::size_t m_blue = 0;
    std::size_t m = 0;           // m_red + m_blue
    std::uint64_t m_star = 0;    // m_red * m_blue
};

LineSummary summarize(const Colouring& s);

/// m_red + m_blue without materializing the line sets.
std::size_t count_m(const Colouring& s);

/// For each distinct line, the unordered point pairs that generate it.
/// Per colour the pair lists partition all C(n,2) pairs.
struct GeneratingPairMap {
    struct Entry {
        PointSet line;
        std::vector<std::pair<int, int>> pairs;  // (u,v) with u < v
    };
    std::vector<Entry> red;   // sorted by line mask
    std::vector<Entry> blue;  // sorted by line mask

    const std::vector<Entry>& side(Colour c) const { return c == Colour::red ? red : blue; }
    /// nullptr when the line is not present in the given colour.
    const Entry* find(Colour c, std::uint64_t line_mask) const;
};

GeneratingPairMap generating_pairs(const Colouring& s);

/// Largest size of the intersection of two distinct red lines.
/// Requires at least two distinct red lines.
int max_red_intersection(const Colouring& s);

/// Entry [t] = number of distinct lines of colour c with exactly t points
/// (entries 0 and 1 are always zero; vector length n+1).
std::vector<std::size_t> line_size_distribution(const Colouring& s, Colour c);

}  // namespace hyperlines
