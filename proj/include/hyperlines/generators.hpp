#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hyperlines/colouring.hpp"

namespace hyperlines {

/// All triples coloured c, 2 <= n <= 64.
Colouring uniform(int n, Colour c);

/// Red triples form a Steiner triple system: every pair lies in exactly one
/// red triple. Supported orders: n = 7 (hard-coded) and n == 3 (mod 6) up
/// to 63 (Bose construction over an odd group order n/3).
Colouring steiner(int n);

/// Points are the 1-dimensional subspaces of GF(q)^3 (first nonzero
/// coordinate normalised to 1, listed in lexicographic order); a triple is
/// red iff the three points are collinear in PG(2,q). q prime with
/// q^2+q+1 <= 64, i.e. q in {2,3,5,7}.
Colouring projective_plane(int q);

/// Exact planar point set: a triple is red iff its points are collinear
/// (integer cross product zero). Points pairwise distinct, coordinates
/// within +-2^30, at most 64 of them.
Colouring planar(const std::vector<std::pair<std::int64_t, std::int64_t>>& pts);

/// Points are the leaves, left to right, of a balanced binary tree whose
/// node over k leaves puts ceil(k/2) of them in its left subtree. A triple
/// is red iff exactly two of its points fall in the left subtree of the
/// lowest common ancestor of all three. Achieves m <= n*ceil(log2 n).
Colouring btree_colouring(int n);

/// Disjoint union with the points of s2 shifted past those of s1: triples
/// within one part keep that part's colour, and a crossing triple is red
/// iff exactly two of its points belong to the first part. Guarantees
/// m(result) <= m(s1) + m(s2) + n.
Colouring compose(const Colouring& s1, const Colouring& s2);

}  // namespace hyperlines
