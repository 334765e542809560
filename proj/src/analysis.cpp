#include "hyperlines/analysis.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <set>

#include "hyperlines/common.hpp"
#include "hyperlines/generators.hpp"

namespace hyperlines {

namespace {

std::uint64_t isqrt_floor(std::uint64_t v) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

}  // namespace

std::uint64_t sum_lower_bound(int n) {
    if (n < 2) throw std::invalid_argument("bound defined for n >= 2");
    std::uint64_t q = 4 * choose2(n);  // bound = sqrt(4*C(n,2)), rounded up
    std::uint64_t r = isqrt_floor(q);
    return r + (r * r < q ? 1 : 0);
}

std::uint64_t product_lower_bound(int n) {
    if (n < 2) throw std::invalid_argument("bound defined for n >= 2");
    return choose2(n);
}

std::uint64_t small_intersection_bound(int n, int k) {
    if (n < 2 || k < 1) throw std::invalid_argument("need n >= 2 and k >= 1");
    std::uint64_t den = choose2(k + 2);
    return (choose2(n) + den - 1) / den;
}

EasyBoundReport check_easy_bound(const Colouring& s) {
    EasyBoundReport r;
    LineSummary sum = summarize(s);
    r.m = sum.m;
    r.m_star = sum.m_star;
    r.sum_bound = sum_lower_bound(s.n());
    r.product_bound = product_lower_bound(s.n());
    r.sum_ok = r.m >= r.sum_bound;
    r.product_ok = r.m_star >= r.product_bound;
    r.product_equality = r.m_star == r.product_bound;
    r.uniform = s.red_count() == 0 || s.red_count() == choose3(s.n());
    r.equality_consistent = r.product_equality == r.uniform;
    r.pass = r.sum_ok && r.product_ok && r.equality_consistent;
    return r;
}

SimpleLemmaReport check_lemma_simple(const Colouring& s) {
    SimpleLemmaReport r;
    r.distinct_ok = r.trace_ok = true;
    GeneratingPairMap gp = generating_pairs(s);
    for (Colour c : {Colour::red, Colour::blue}) {
        for (const auto& entry : gp.side(c)) {
            ++r.lines_checked;
            std::uint64_t x = 0;  // union of the generating pairs
            for (auto [a, b] : entry.pairs) x |= (1ull << a) | (1ull << b);
            std::set<std::uint64_t> others;
            for (auto [a, b] : entry.pairs) {
                std::uint64_t other = s.line(a, b, opposite(c)).mask;
                others.insert(other);
                if ((other & x) != ((1ull << a) | (1ull << b))) r.trace_ok = false;
            }
            if (others.size() != entry.pairs.size()) r.distinct_ok = false;
        }
    }
    r.pass = r.distinct_ok && r.trace_ok;
    return r;
}

SmallIntersectionReport check_small_intersection(const Colouring& s) {
    SmallIntersectionReport r;
    r.k = max_red_intersection(s);
    LineSummary sum = summarize(s);
    r.m = sum.m;
    r.bound = small_intersection_bound(s.n(), r.k);
    r.bound_ok = r.m >= r.bound;

    const std::uint64_t cap = choose2(r.k + 2);
    std::map<std::uint64_t, std::uint64_t> red_seen, blue_seen;
    for (int a = 0; a < s.n(); ++a)
        for (int b = a + 1; b < s.n(); ++b) {
            std::uint64_t red = 0, blue = 0;
            s.line_masks(a, b, red, blue);
            if (static_cast<std::uint64_t>(std::popcount(red)) <= static_cast<std::uint64_t>(r.k) + 2)
                ++red_seen[red];
            else
                ++blue_seen[blue];
        }
    r.red_repeat_ok = r.blue_unique_ok = true;
    for (const auto& [mask, count] : red_seen) {
        r.red_entries += count;
        if (count > cap) r.red_repeat_ok = false;
    }
    for (const auto& [mask, count] : blue_seen) {
        r.blue_entries += count;
        if (count > 1) r.blue_unique_ok = false;
    }
    r.pass = r.bound_ok && r.red_repeat_ok && r.blue_unique_ok &&
             r.red_entries + r.blue_entries == choose2(s.n());
    return r;
}

PairCountReport check_pair_count(const Colouring& s, Colour c) {
    PairCountReport r;
    r.colour = c;
    r.total_pairs = choose2(s.n());
    r.strengthened = true;
    GeneratingPairMap gp = generating_pairs(s);
    for (const auto& entry : gp.side(c)) {
        r.gp_sum += entry.pairs.size();
        if (entry.pairs.size() != choose2(entry.line.size())) r.strengthened = false;
    }
    r.partition_ok = r.gp_sum == r.total_pairs;
    r.pass = r.partition_ok;
    return r;
}

CompositionReport check_composition(const Colouring& s1, const Colouring& s2) {
    CompositionReport r;
    const int n1 = s1.n(), n2 = s2.n(), n = n1 + n2;
    Colouring s = compose(s1, s2);
    r.m1 = count_m(s1);
    r.m2 = count_m(s2);
    r.m_composed = count_m(s);
    r.budget = r.m1 + r.m2 + static_cast<std::uint64_t>(n);
    r.bound_ok = r.m_composed <= r.budget;
    r.slack = r.budget - std::min(r.budget, r.m_composed);

    // Every pair's lines must take the six predicted shapes.
    const std::uint64_t part1 = (n1 == 64) ? ~0ull : (1ull << n1) - 1;
    const std::uint64_t part2 = ((n == 64) ? ~0ull : (1ull << n) - 1) & ~part1;
    r.families_ok = true;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            std::uint64_t red = 0, blue = 0;
            s.line_masks(a, b, red, blue);
            if (b < n1) {
                std::uint64_t r1 = 0, b1 = 0;
                s1.line_masks(a, b, r1, b1);
                if (red != (r1 | part2) || blue != b1) r.families_ok = false;
            } else if (a >= n1) {
                std::uint64_t r2 = 0, b2 = 0;
                s2.line_masks(a - n1, b - n1, r2, b2);
                if (red != r2 << n1 || blue != ((b2 << n1) | part1)) r.families_ok = false;
            } else {
                if (red != (part1 | (1ull << b))) r.families_ok = false;
                if (blue != (part2 | (1ull << a))) r.families_ok = false;
            }
        }
    r.pass = r.bound_ok && r.families_ok;
    return r;
}

}  // namespace hyperlines
