#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperlines/colouring.hpp"

namespace hyperlines {

struct WeightedEdge {
    int u = 0;
    int v = 0;
    std::int64_t w = 1;
};

/// Positively edge-weighted graph; must be connected when a metric is
/// derived from it.
struct WeightedGraph {
    int n = 0;
    std::vector<WeightedEdge> edges;
};

/// Exact integer metric: symmetric, zero diagonal, positive off-diagonal,
/// triangle inequality.
struct DistanceMatrix {
    int n = 0;
    std::vector<std::int64_t> d;  // row-major n*n

    std::int64_t at(int i, int j) const { return d[static_cast<std::size_t>(i) * n + j]; }
    std::int64_t& at(int i, int j) { return d[static_cast<std::size_t>(i) * n + j]; }
};

/// Floyd-Warshall over all vertex pairs. Rejects invalid or disconnected
/// input.
DistanceMatrix all_pairs_shortest(const WeightedGraph& g);

/// System of the metric: a triple is red iff one of its points sits
/// metrically between the other two (some ordering attains equality in the
/// triangle inequality).
Colouring derive(const DistanceMatrix& dist);

/// Unweighted tree on n vertices (n-1 edges, connected).
struct Tree {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

Tree make_tree(int n, std::vector<std::pair<int, int>> edges);
Tree path(int n);
Tree star(int n);

/// Path on q vertices u_0..u_{q-1} with p extra leaves attached to u_0.
/// Requires p >= 2 and q >= 3 so the far end of the path is not itself a
/// twin of the attached leaves.
Tree s_tree(int p, int q);

/// Metric system of the tree with unit edge lengths (edge weights do not
/// change tree betweenness).
Colouring derive_tree(const Tree& t);

std::vector<int> degrees(const Tree& t);
bool is_path(const Tree& t);
bool is_star(const Tree& t);

/// Vertices of the unique x-y path, endpoints included.
std::vector<int> tree_path_between(const Tree& t, int x, int y);

/// Maximal groups of >= 2 leaves sharing one neighbour (the anchor),
/// plus the derived sizes a = total twins, b = n - a, s = class count.
struct TwinDecomposition {
    std::vector<PointSet> classes;  // ordered by anchor index
    std::vector<int> anchors;
    int a = 0;
    int b = 0;
    int s = 0;
};

TwinDecomposition twin_decomposition(const Tree& t);

/// Closed-form count of distinct blue lines of a tree-derived system:
/// C(b,2) + a + b*s + C(s,2).
std::uint64_t tree_blue_count(const TwinDecomposition& dec);

/// Lower bound C(a,2) + a + 1 on distinct red lines; only defined when the
/// tree is neither a path nor a star.
std::uint64_t tree_red_floor(const Tree& t);

/// Minimum of m over systems derived from trees on n vertices:
/// C(n,2)+1 for n <= 6, floor(n^2/4 + n + 1) for n >= 6 (both give 16 at 6).
std::uint64_t tree_m_lower_bound(int n);

/// True iff the tree attains tree_m_lower_bound: a path when n <= 6, or
/// S(a*, n-a*) when n >= 6 with a* = (n-1)/2 for odd n and
/// a* in {n/2-1, n/2} for even n.
bool is_extremal_tree(const Tree& t);

/// True iff the tree is S(p,q) for some p >= 2, q >= 3.
bool is_s_tree(const Tree& t);

/// True iff the tree is a path with >= 2 twin leaves attached at each end.
bool is_double_broom(const Tree& t);

/// Canonical centre-rooted encoding; equal strings iff isomorphic.
/// Valid for any n <= 64.
std::string ahu_encoding(const Tree& t);

/// Decode a Pruefer sequence over 0..n-1 (length n-2) into a labelled tree.
Tree prufer_tree(int n, std::span<const int> seq);

/// Every isomorphism class of trees on n vertices, 2 <= n <= 8, obtained by
/// scanning all Pruefer sequences and deduplicating by canonical encoding.
/// Returned in encoding order.
std::vector<Tree> enumerate_trees(int n);

/// Uniformly random labelled tree on n vertices (random Pruefer sequence).
Tree random_labelled_tree(int n, std::mt19937_64& rng);

/// One-stop verification of the tree-metric facts on a single tree:
/// blue-count formula, global lower bound with extremality, red floor with
/// its equality family, and the per-pair line/twin structure properties.
struct TreeCheckReport {
    bool pass = false;
    std::uint64_t m_blue_measured = 0;
    std::uint64_t m_blue_formula = 0;
    std::uint64_t m_red_measured = 0;
    std::uint64_t m_measured = 0;
    std::uint64_t m_bound = 0;
    bool extremal = false;
    bool bound_equality = false;
    bool has_red_floor = false;  // false for paths and stars
    std::uint64_t red_floor = 0;
    bool red_floor_family = false;
    bool blue_formula_ok = false;
    bool bound_ok = false;
    bool extremal_ok = false;  // equality <=> extremal
    bool red_floor_ok = false;
    bool line_structure_ok = false;  // path containment / twin intersections
    bool twin_collision_ok = false;  // equal blue lines force twins
    std::string note;
};

TreeCheckReport check_tree(const Tree& t);

}  // namespace hyperlines
