#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "hyperlines/common.hpp"
#include "hyperlines/pointset.hpp"

namespace hyperlines {

/// Colexicographic rank of the triple i < j < k: C(i,1) + C(j,2) + C(k,3).
/// Bijective onto 0..C(n,3)-1 for triples drawn from 0..n-1.
std::size_t triple_rank(int i, int j, int k);

/// Inverse of triple_rank.
std::array<int, 3> triple_unrank(std::size_t rank);

/// All triples of 0..n-1 in colex order (cached per n).
const std::vector<std::array<int, 3>>& all_triples(int n);

/// A total red/blue assignment on the 3-subsets of {0..n-1}, stored as a
/// bit array over colex ranks (bit set = red). The bit array has exactly
/// C(n,3) bits; n = 2 is admitted with an empty array.
class Colouring {
  public:
    /// All-blue system on n points, 2 <= n <= 64.
    explicit Colouring(int n);

    static Colouring solid(int n, Colour c);

    int n() const { return n_; }
    std::size_t triple_count() const { return triples_; }

    Colour colour(int a, int b, int c) const;
    bool red(int a, int b, int c) const { return colour(a, b, c) == Colour::red; }
    void set_colour(int a, int b, int c, Colour col);

    bool rank_red(std::size_t r) const;
    void set_rank(std::size_t r, bool red);
    void flip_rank(std::size_t r);

    /// Number of red triples.
    std::size_t red_count() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

    /// The line through u and v in colour c: {u,v} plus every p whose
    /// triple {u,v,p} has colour c.
    PointSet line(int u, int v, Colour c) const;

    /// Red and blue line masks of the pair in one pass.
    void line_masks(int u, int v, std::uint64_t& red_mask, std::uint64_t& blue_mask) const;

    /// Every triple flipped; swaps the roles of the red and blue line sets.
    Colouring complemented() const;

    /// Relabels points: the image triple {s(i),s(j),s(k)} gets the colour
    /// of {i,j,k}. sigma must be a bijection on 0..n-1.
    Colouring permuted(std::span<const int> sigma) const;

    /// Lexicographic order on the bit sequence, rank 0 first.
    bool lex_less(const Colouring& other) const;

    friend bool operator==(const Colouring&, const Colouring&) = default;

  private:
    int n_ = 0;
    std::size_t triples_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Uniformly random colouring; consumes words of rng so runs are
/// reproducible from the seed alone.
Colouring random_colouring(int n, std::mt19937_64& rng);

}  // namespace hyperlines
