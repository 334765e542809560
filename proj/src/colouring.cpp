#include "hyperlines/colouring.hpp"

#include <algorithm>
#include <mutex>

namespace hyperlines {

std::size_t triple_rank(int i, int j, int k) {
    if (i < 0 || i >= j || j >= k)
        throw std::invalid_argument("triple_rank: need 0 <= i < j < k");
    return static_cast<std::size_t>(i) + choose2(static_cast<std::uint64_t>(j)) +
           choose3(static_cast<std::uint64_t>(k));
}

std::array<int, 3> triple_unrank(std::size_t rank) {
    // Greedy inversion of the combinatorial number system.
    int k = 2;
    while (choose3(static_cast<std::uint64_t>(k + 1)) <= rank) ++k;
    std::size_t rem = rank - choose3(static_cast<std::uint64_t>(k));
    int j = 1;
    while (choose2(static_cast<std::uint64_t>(j + 1)) <= rem) ++j;
    int i = static_cast<int>(rem - choose2(static_cast<std::uint64_t>(j)));
    return {i, j, k};
}

const std::vector<std::array<int, 3>>& all_triples(int n) {
    if (n < 0 || n > 64) throw std::invalid_argument("all_triples: n must be in 0..64");
    static std::array<std::vector<std::array<int, 3>>, 65> cache;
    static std::once_flag flags[65];
    std::call_once(flags[n], [n] {
        auto& v = cache[n];
        v.reserve(choose3(static_cast<std::uint64_t>(n)));
        for (int k = 2; k < n; ++k)
            for (int j = 1; j < k; ++j)
                for (int i = 0; i < j; ++i) v.push_back({i, j, k});
    });
    return cache[n];
}

namespace {

void sort3(int& a, int& b, int& c) {
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
}

}  // namespace

Colouring::Colouring(int n) : n_(n) {
    if (n < 2 || n > 64) throw std::invalid_argument("Colouring: n must be in 2..64");
    triples_ = choose3(static_cast<std::uint64_t>(n));
    words_.assign((triples_ + 63) / 64, 0);
}

Colouring Colouring::solid(int n, Colour c) {
    Colouring s(n);
    if (c == Colour::red)
        for (std::size_t r = 0; r < s.triples_; ++r) s.set_rank(r, true);
    return s;
}

Colour Colouring::colour(int a, int b, int c) const {
    sort3(a, b, c);
    if (a < 0 || c >= n_ || a == b || b == c)
        throw std::invalid_argument("Colouring: triple must be three distinct points below n");
    return rank_red(triple_rank(a, b, c)) ? Colour::red : Colour::blue;
}

void Colouring::set_colour(int a, int b, int c, Colour col) {
    sort3(a, b, c);
    if (a < 0 || c >= n_ || a == b || b == c)
        throw std::invalid_argument("Colouring: triple must be three distinct points below n");
    set_rank(triple_rank(a, b, c), col == Colour::red);
}

bool Colouring::rank_red(std::size_t r) const {
    if (r >= triples_) throw std::invalid_argument("Colouring: rank out of range");
    return ((words_[r >> 6] >> (r & 63)) & 1u) != 0;
}

void Colouring::set_rank(std::size_t r, bool red) {
    if (r >= triples_) throw std::invalid_argument("Colouring: rank out of range");
    std::uint64_t bit = std::uint64_t{1} << (r & 63);
    if (red)
        words_[r >> 6] |= bit;
    else
        words_[r >> 6] &= ~bit;
}

void Colouring::flip_rank(std::size_t r) {
    if (r >= triples_) throw std::invalid_argument("Colouring: rank out of range");
    words_[r >> 6] ^= std::uint64_t{1} << (r & 63);
}

std::size_t Colouring::red_count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

void Colouring::line_masks(int u, int v, std::uint64_t& red_mask, std::uint64_t& blue_mask) const {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("line: u and v must be distinct points below n");
    if (u > v) std::swap(u, v);
    std::uint64_t pair = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    std::uint64_t red = pair, blue = pair;
    // p runs through the three ranges that keep {u,v,p} sorted without a sort.
    std::uint64_t c2u = choose2(static_cast<std::uint64_t>(u));
    std::uint64_t c2v = choose2(static_cast<std::uint64_t>(v));
    std::uint64_t c3v = choose3(static_cast<std::uint64_t>(v));
    for (int p = 0; p < u; ++p) {
        std::size_t r = static_cast<std::size_t>(p) + c2u + c3v;
        bool isred = ((words_[r >> 6] >> (r & 63)) & 1u) != 0;
        (isred ? red : blue) |= std::uint64_t{1} << p;
    }
    for (int p = u + 1; p < v; ++p) {
        std::size_t r = static_cast<std::size_t>(u) + choose2(static_cast<std::uint64_t>(p)) + c3v;
        bool isred = ((words_[r >> 6] >> (r & 63)) & 1u) != 0;
        (isred ? red : blue) |= std::uint64_t{1} << p;
    }
    for (int p = v + 1; p < n_; ++p) {
        std::size_t r = static_cast<std::size_t>(u) + c2v + choose3(static_cast<std::uint64_t>(p));
        bool isred = ((words_[r >> 6] >> (r & 63)) & 1u) != 0;
        (isred ? red : blue) |= std::uint64_t{1} << p;
    }
    red_mask = red;
    blue_mask = blue;
}

PointSet Colouring::line(int u, int v, Colour c) const {
    std::uint64_t red = 0, blue = 0;
    line_masks(u, v, red, blue);
    return PointSet(c == Colour::red ? red : blue, n_);
}

Colouring Colouring::complemented() const {
    Colouring out = *this;
    for (auto& w : out.words_) w = ~w;
    // keep unused high bits zero
    std::size_t tail = triples_ & 63;
    if (!out.words_.empty() && tail != 0)
        out.words_.back() &= (std::uint64_t{1} << tail) - 1;
    return out;
}

Colouring Colouring::permuted(std::span<const int> sigma) const {
    if (static_cast<int>(sigma.size()) != n_)
        throw std::invalid_argument("permuted: sigma must have length n");
    std::uint64_t seen = 0;
    for (int v : sigma) {
        if (v < 0 || v >= n_) throw std::invalid_argument("permuted: sigma value out of range");
        seen |= std::uint64_t{1} << v;
    }
    if (std::popcount(seen) != n_) throw std::invalid_argument("permuted: sigma is not a bijection");

    Colouring out(n_);
    const auto& triples = all_triples(n_);
    for (std::size_t r = 0; r < triples_; ++r) {
        if (!rank_red(r)) continue;
        auto [i, j, k] = triples[r];
        int a = sigma[i], b = sigma[j], c = sigma[k];
        sort3(a, b, c);
        out.set_rank(triple_rank(a, b, c), true);
    }
    return out;
}

bool Colouring::lex_less(const Colouring& other) const {
    if (n_ != other.n_) throw std::invalid_argument("lex_less: mismatched sizes");
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t a = words_[w], b = other.words_[w];
        if (a == b) continue;
        std::uint64_t low = (a ^ b) & (~(a ^ b) + 1);  // lowest differing rank
        return (a & low) == 0;
    }
    return false;
}

Colouring random_colouring(int n, std::mt19937_64& rng) {
    Colouring s(n);
    for (std::size_t r = 0, t = s.triple_count(); r < t; r += 64) {
        std::uint64_t w = rng();
        for (std::size_t b = 0; b < 64 && r + b < t; ++b)
            if ((w >> b) & 1u) s.set_rank(r + b, true);
    }
    return s;
}

}  // namespace hyperlines
