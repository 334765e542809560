#include "hyperlines/generators.hpp"

#include <array>
#include <set>
#include <stdexcept>

#include "hyperlines/common.hpp"

namespace hyperlines {

Colouring uniform(int n, Colour c) {
    if (n < 2 || n > 64) throw std::invalid_argument("point count outside 2..64");
    return Colouring::solid(n, c);
}

Colouring steiner(int n) {
    if (n == 7) {
        Colouring s(7);
        static constexpr std::array<std::array<int, 3>, 7> fano{{{0, 1, 2},
                                                                 {0, 3, 4},
                                                                 {0, 5, 6},
                                                                 {1, 3, 5},
                                                                 {1, 4, 6},
                                                                 {2, 3, 6},
                                                                 {2, 4, 5}}};
        for (auto [i, j, k] : fano) s.set_colour(i, j, k, Colour::red);
        return s;
    }
    if (n < 3 || n > 63 || n % 6 != 3)
        throw capability_error("triple system order must be 7 or 3 mod 6, at most 63");
    const int m = n / 3;  // odd
    const int half = (m + 1) / 2;
    auto idx = [&](int x, int j) { return 3 * x + j; };
    auto mul = [&](int x, int y) { return static_cast<int>((static_cast<long long>(x + y) * half) % m); };
    Colouring s(n);
    auto paint = [&](int a, int b, int c) {
        int lo = std::min({a, b, c}), hi = std::max({a, b, c});
        s.set_colour(lo, a + b + c - lo - hi, hi, Colour::red);
    };
    for (int x = 0; x < m; ++x) paint(idx(x, 0), idx(x, 1), idx(x, 2));
    for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y)
            for (int j = 0; j < 3; ++j) paint(idx(x, j), idx(y, j), idx(mul(x, y), (j + 1) % 3));
    return s;
}

Colouring projective_plane(int q) {
    if (q != 2 && q != 3 && q != 5 && q != 7)
        throw std::invalid_argument("order must be a prime with q^2+q+1 <= 64");
    std::vector<std::array<int, 3>> pts;
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c) {
                int first = a ? a : b ? b : c;
                if (first == 1) pts.push_back({a, b, c});
            }
    const int n = q * q + q + 1;
    if (static_cast<int>(pts.size()) != n) throw std::logic_error("point count mismatch");
    Colouring s(n);
    auto det = [&](const std::array<int, 3>& x, const std::array<int, 3>& y,
                   const std::array<int, 3>& z) {
        long long d = static_cast<long long>(x[0]) * (y[1] * z[2] - y[2] * z[1]) -
                      static_cast<long long>(x[1]) * (y[0] * z[2] - y[2] * z[0]) +
                      static_cast<long long>(x[2]) * (y[0] * z[1] - y[1] * z[0]);
        return static_cast<int>(((d % q) + q) % q);
    };
    for (auto [i, j, k] : all_triples(n))
        if (det(pts[i], pts[j], pts[k]) == 0) s.set_colour(i, j, k, Colour::red);
    return s;
}

Colouring planar(const std::vector<std::pair<std::int64_t, std::int64_t>>& pts) {
    const int n = static_cast<int>(pts.size());
    if (n < 2 || n > 64) throw std::invalid_argument("need 2..64 points");
    constexpr std::int64_t lim = 1ll << 30;
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (const auto& p : pts) {
        if (p.first < -lim || p.first > lim || p.second < -lim || p.second > lim)
            throw std::invalid_argument("coordinate outside +-2^30");
        if (!seen.insert(p).second) throw std::invalid_argument("duplicate point");
    }
    Colouring s(n);
    for (auto [i, j, k] : all_triples(n)) {
        __int128 cross = static_cast<__int128>(pts[j].first - pts[i].first) *
                             (pts[k].second - pts[i].second) -
                         static_cast<__int128>(pts[j].second - pts[i].second) *
                             (pts[k].first - pts[i].first);
        if (cross == 0) s.set_colour(i, j, k, Colour::red);
    }
    return s;
}

Colouring btree_colouring(int n) {
    if (n < 2 || n > 64) throw std::invalid_argument("point count outside 2..64");
    Colouring s(n);
    for (auto [i, j, k] : all_triples(n)) {
        int lo = 0, size = n;
        for (;;) {
            int mid = lo + (size + 1) / 2;  // left subtree takes ceil(size/2) leaves
            int inside = (i < mid) + (j < mid) + (k < mid);
            if (inside == 3) {
                size = mid - lo;
            } else if (inside == 0) {
                size -= mid - lo;
                lo = mid;
            } else {
                if (inside == 2) s.set_colour(i, j, k, Colour::red);
                break;
            }
        }
    }
    return s;
}

Colouring compose(const Colouring& s1, const Colouring& s2) {
    const int n1 = s1.n(), n2 = s2.n();
    if (n1 + n2 > 64) throw capability_error("composed system exceeds 64 points");
    Colouring s(n1 + n2);
    for (auto [i, j, k] : all_triples(n1 + n2)) {
        Colour c;
        if (k < n1)
            c = s1.colour(i, j, k);
        else if (i >= n1)
            c = s2.colour(i - n1, j - n1, k - n1);
        else
            c = (j < n1) ? Colour::red : Colour::blue;  // red iff two points in part 1
        if (c == Colour::red) s.set_colour(i, j, k, Colour::red);
    }
    return s;
}

}  // namespace hyperlines
