#pragma once

#include <cstdint>

#include "hyperlines/colouring.hpp"
#include "hyperlines/summary.hpp"

namespace hyperlines {

/// Integer form of the sum bound: every system on n points has
/// m >= ceil(2*sqrt(C(n,2))).
std::uint64_t sum_lower_bound(int n);

/// Product bound: every system on n points has m_red * m_blue >= C(n,2),
/// with equality exactly for the all-red and all-blue systems.
std::uint64_t product_lower_bound(int n);

/// Every system whose red lines pairwise intersect in at most k points has
/// m >= ceil(C(n,2) / C(k+2,2)).
std::uint64_t small_intersection_bound(int n, int k);

struct EasyBoundReport {
    bool pass = false;
    std::uint64_t m = 0;
    std::uint64_t m_star = 0;
    std::uint64_t sum_bound = 0;
    std::uint64_t product_bound = 0;
    bool sum_ok = false;
    bool product_ok = false;
    bool product_equality = false;
    bool uniform = false;  // all triples one colour
    bool equality_consistent = false;  // product_equality <=> uniform
};

EasyBoundReport check_easy_bound(const Colouring& s);

/// For each line: the opposite-colour lines of its generating pairs are
/// pairwise distinct and each meets the union X of those pairs exactly in its
/// own pair. Checked for both colours.
struct SimpleLemmaReport {
    bool pass = false;
    int lines_checked = 0;
    bool distinct_ok = false;
    bool trace_ok = false;
};

SimpleLemmaReport check_lemma_simple(const Colouring& s);

/// Builds the generator-line multiset that lists R(ab) when |R(ab)| <= k+2
/// and B(ab) otherwise (k = max pairwise red-line intersection), and checks
/// the counting facts behind the bound: red entries repeat at most
/// C(k+2,2) times, blue entries never repeat, and m >= the bound.
struct SmallIntersectionReport {
    bool pass = false;
    int k = 0;
    std::uint64_t m = 0;
    std::uint64_t bound = 0;
    std::uint64_t red_entries = 0;
    std::uint64_t blue_entries = 0;
    bool bound_ok = false;
    bool red_repeat_ok = false;
    bool blue_unique_ok = false;
};

SmallIntersectionReport check_small_intersection(const Colouring& s);

/// Generating pairs of colour-c lines partition the C(n,2) point pairs
/// (always true). The strengthened form gp(L) = C(|L|,2) per line, hence
/// sum over sizes of C(t,2)*m_t = C(n,2), holds for geometric systems and
/// is reported separately.
struct PairCountReport {
    bool pass = false;
    Colour colour = Colour::red;
    std::uint64_t total_pairs = 0;
    std::uint64_t gp_sum = 0;
    bool partition_ok = false;
    bool strengthened = false;
};

PairCountReport check_pair_count(const Colouring& s, Colour c);

/// Checks the disjoint-union construction: every line of compose(s1,s2)
/// has the predicted shape (six families), so m <= m(s1) + m(s2) + n.
struct CompositionReport {
    bool pass = false;
    std::uint64_t m_composed = 0;
    std::uint64_t m1 = 0;
    std::uint64_t m2 = 0;
    std::uint64_t budget = 0;  // m1 + m2 + n
    bool bound_ok = false;
    bool families_ok = false;
    std::uint64_t slack = 0;  // budget - m_composed
};

CompositionReport check_composition(const Colouring& s1, const Colouring& s2);

}  // namespace hyperlines
