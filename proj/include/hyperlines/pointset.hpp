#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "hyperlines/common.hpp"

namespace hyperlines {

/// A subset of the points 0..n-1 packed into one machine word.
/// Lines are PointSets; the n <= 64 cap keeps every set operation O(1).
struct PointSet {
    std::uint64_t mask = 0;
    int n = 0;

    PointSet() = default;

    PointSet(std::uint64_t mask_, int n_) : mask(mask_), n(n_) {
        if (n_ < 0 || n_ > 64)
            throw std::invalid_argument("PointSet: ambient size must be in 0..64");
        if (n_ < 64 && (mask_ >> n_) != 0)
            throw std::invalid_argument("PointSet: bit set beyond ambient size");
    }

    static PointSet empty_set(int n) { return PointSet(0, n); }

    static PointSet full(int n) {
        return PointSet(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1, n);
    }

    static PointSet of(std::initializer_list<int> pts, int n) {
        PointSet s(0, n);
        for (int p : pts) s.add(p);
        return s;
    }

    bool contains(int p) const { return p >= 0 && p < n && ((mask >> p) & 1u) != 0; }

    void add(int p) {
        if (p < 0 || p >= n) throw std::invalid_argument("PointSet: point out of range");
        mask |= std::uint64_t{1} << p;
    }

    int size() const { return std::popcount(mask); }

    std::vector<int> points() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t m = mask; m != 0; m &= m - 1)
            out.push_back(std::countr_zero(m));
        return out;
    }

    /// "{0,2,5}", for diagnostics.
    std::string str() const {
        std::string s = "{";
        bool first = true;
        for (int p : points()) {
            if (!first) s += ",";
            s += std::to_string(p);
            first = false;
        }
        return s + "}";
    }

    friend bool operator==(const PointSet&, const PointSet&) = default;
    friend auto operator<=>(const PointSet&, const PointSet&) = default;
};

inline PointSet set_union(PointSet a, PointSet b) { return PointSet(a.mask | b.mask, a.n); }
inline PointSet set_intersect(PointSet a, PointSet b) { return PointSet(a.mask & b.mask, a.n); }

}  // namespace hyperlines
