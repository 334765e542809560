#include "hyperlines/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include "hyperlines/analysis.hpp"
#include "hyperlines/common.hpp"
#include "hyperlines/summary.hpp"

namespace hyperlines {

const char* search_mode_name(SearchMode m) {
    switch (m) {
        case SearchMode::exhaustive: return "exhaustive";
        case SearchMode::anneal: return "anneal";
        case SearchMode::bnb: return "bnb";
    }
    return "?";
}

namespace {

// Bit-parallel line counting for n <= 8: the whole colouring is one 64-bit
// word (C(8,3) = 56 ranks) and every line mask fits in 8 bits, so the
// distinct-line sets are bitsets over mask values.
struct SmallTables {
    struct Entry {
        std::uint8_t third;
        std::uint8_t rank;
    };
    int n = 0;
    int pairs = 0;
    std::array<std::uint64_t, 28> base{};
    std::array<std::array<Entry, 6>, 28> entries{};
    std::array<std::uint8_t, 28> entry_count{};

    static const SmallTables& get(int n);
};

const SmallTables& SmallTables::get(int n) {
    static const std::array<SmallTables, 9> cache = [] {
        std::array<SmallTables, 9> all{};
        for (int n = 2; n <= 8; ++n) {
            SmallTables& t = all[n];
            t.n = n;
            for (int v = 0; v < n; ++v)
                for (int u = 0; u < v; ++u) {
                    int pid = static_cast<int>(choose2(v)) + u;
                    t.base[pid] = (1ull << u) | (1ull << v);
                    for (int p = 0; p < n; ++p) {
                        if (p == u || p == v) continue;
                        int a = u, b = v, c = p;
                        if (c < a) std::swap(a, c);
                        if (c < b) std::swap(b, c);
                        if (b < a) std::swap(a, b);
                        t.entries[pid][t.entry_count[pid]++] = {
                            static_cast<std::uint8_t>(p),
                            static_cast<std::uint8_t>(triple_rank(a, b, c))};
                    }
                }
            t.pairs = static_cast<int>(choose2(n));
        }
        return all;
    }();
    return cache.at(n);
}

std::uint64_t count_m_word(const SmallTables& t, std::uint64_t word) {
    std::array<std::uint64_t, 4> seen_r{}, seen_b{};
    for (int p = 0; p < t.pairs; ++p) {
        std::uint64_t rm = t.base[p], bm = t.base[p];
        for (int e = 0; e < t.entry_count[p]; ++e) {
            const auto& en = t.entries[p][e];
            if (word >> en.rank & 1)
                rm |= 1ull << en.third;
            else
                bm |= 1ull << en.third;
        }
        seen_r[rm >> 6] |= 1ull << (rm & 63);
        seen_b[bm >> 6] |= 1ull << (bm & 63);
    }
    std::uint64_t m = 0;
    for (int i = 0; i < 4; ++i) m += std::popcount(seen_r[i]) + std::popcount(seen_b[i]);
    return m;
}

Colouring colouring_from_word(int n, std::uint64_t word) {
    Colouring s(n);
    for (std::size_t r = 0; r < choose3(n); ++r)
        if (word >> r & 1) s.set_rank(r, true);
    return s;
}

// Rank-permutation tables: maps[p][r] = rank of the p-th point permutation
// applied to the triple of rank r. maps[0] is the identity.
std::vector<std::array<std::uint8_t, 20>> rank_permutations(int n) {
    std::vector<std::array<std::uint8_t, 20>> maps;
    const std::size_t T = choose3(n);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        std::array<std::uint8_t, 20> map{};
        for (std::size_t r = 0; r < T; ++r) {
            auto [i, j, k] = triple_unrank(r);
            int a = perm[i], b = perm[j], c = perm[k];
            if (b < a) std::swap(a, b);
            if (c < b) std::swap(b, c);
            if (b < a) std::swap(a, b);
            map[r] = static_cast<std::uint8_t>(triple_rank(a, b, c));
        }
        maps.push_back(map);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return maps;
}

struct ScanResult {
    std::uint64_t best_m = ~0ull;
    std::uint64_t best_word = 0;
    std::uint64_t nodes = 0;
};

}  // namespace

SearchReport exhaustive_min(int n, bool symmetry, int threads) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    if (n > 6) throw capability_error("exhaustive scan supported up to n = 6; use anneal or bnb");
    if (threads < 1) throw std::invalid_argument("thread count must be positive");

    const SmallTables& tab = SmallTables::get(n);
    const std::size_t T = choose3(n);
    const std::uint64_t total = 1ull << T;
    const auto maps = symmetry ? rank_permutations(n) : std::vector<std::array<std::uint8_t, 20>>{};

    auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
        ScanResult res;
        for (std::uint64_t w = lo; w < hi; ++w) {
            if (symmetry) {
                bool min_rep = true;
                for (std::size_t pi = 0; pi < maps.size() && min_rep; ++pi)
                    for (int flip = 0; flip < 2; ++flip) {
                        if (pi == 0 && flip == 0) continue;
                        const auto& mp = maps[pi];
                        for (std::size_t r = 0; r < T; ++r) {
                            unsigned tb = static_cast<unsigned>(w >> mp[r] & 1) ^ static_cast<unsigned>(flip);
                            unsigned wb = static_cast<unsigned>(w >> r & 1);
                            if (tb != wb) {
                                if (tb < wb) min_rep = false;
                                break;
                            }
                        }
                        if (!min_rep) break;
                    }
                if (!min_rep) continue;
            }
            ++res.nodes;
            std::uint64_t m = count_m_word(tab, w);
            if (m < res.best_m) {
                res.best_m = m;
                res.best_word = w;
            }
        }
        return res;
    };

    std::vector<ScanResult> parts;
    if (threads == 1 || total < 1024) {
        parts.push_back(scan(0, total));
    } else {
        parts.resize(threads);
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (total + threads - 1) / threads;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                std::uint64_t lo = chunk * t;
                parts[t] = scan(lo, std::min(total, lo + chunk));
            });
        for (auto& th : pool) th.join();
    }

    ScanResult best;
    for (const auto& p : parts) {
        best.nodes += p.nodes;
        if (p.best_m < best.best_m ||
            (p.best_m == best.best_m && p.best_word < best.best_word)) {
            best.best_m = p.best_m;
            best.best_word = p.best_word;
        }
    }

    SearchReport rep;
    rep.n = n;
    rep.best_m = best.best_m;
    rep.witness = colouring_from_word(n, best.best_word);
    rep.exhaustive = true;
    rep.nodes_visited = best.nodes;
    rep.mode = SearchMode::exhaustive;
    return rep;
}

namespace {

struct ChainResult {
    std::uint64_t best_m = ~0ull;
    std::optional<Colouring> best;
    std::uint64_t nodes = 0;
};

ChainResult anneal_chain(int n, std::uint64_t seed, const AnnealOptions& opts,
                         const std::optional<Colouring>& start) {
    std::mt19937_64 rng(seed);
    const std::size_t T = choose3(n);
    ChainResult out;
    auto uniform01 = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    if (n <= 8) {
        const SmallTables& tab = SmallTables::get(n);
        std::uint64_t word = start ? start->words()[0] : random_colouring(n, rng).words()[0];
        std::uint64_t cur = count_m_word(tab, word);
        std::uint64_t best = cur, best_word = word;
        double temp = opts.t0;
        for (std::uint64_t step = 0; step < opts.steps; ++step) {
            std::size_t r = static_cast<std::size_t>(rng() % T);
            word ^= 1ull << r;
            std::uint64_t cand = count_m_word(tab, word);
            bool accept = cand <= cur ||
                          uniform01() < std::exp(-static_cast<double>(cand - cur) / temp);
            if (accept) {
                cur = cand;
                if (cur < best) {
                    best = cur;
                    best_word = word;
                }
            } else {
                word ^= 1ull << r;
            }
            temp *= opts.cooling;
        }
        out.best_m = best;
        out.best = colouring_from_word(n, best_word);
    } else {
        Colouring state = start ? *start : random_colouring(n, rng);
        std::uint64_t cur = count_m(state);
        std::uint64_t best = cur;
        Colouring best_state = state;
        double temp = opts.t0;
        for (std::uint64_t step = 0; step < opts.steps; ++step) {
            std::size_t r = static_cast<std::size_t>(rng() % T);
            state.flip_rank(r);
            std::uint64_t cand = count_m(state);
            bool accept = cand <= cur ||
                          uniform01() < std::exp(-static_cast<double>(cand - cur) / temp);
            if (accept) {
                cur = cand;
                if (cur < best) {
                    best = cur;
                    best_state = state;
                }
            } else {
                state.flip_rank(r);
            }
            temp *= opts.cooling;
        }
        out.best_m = best;
        out.best = std::move(best_state);
    }
    out.nodes = opts.steps;
    return out;
}

}  // namespace

SearchReport anneal_min(int n, const AnnealOptions& opts, const std::optional<Colouring>& start,
                        int threads) {
    if (n < 3 || n > 64) throw std::invalid_argument("annealing supports 3 <= n <= 64");
    if (threads < 1) throw std::invalid_argument("thread count must be positive");
    if (start && start->n() != n) throw std::invalid_argument("start colouring has wrong size");

    std::vector<ChainResult> chains(threads);
    if (threads == 1) {
        chains[0] = anneal_chain(n, opts.seed, opts, start);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&, t] { chains[t] = anneal_chain(n, opts.seed + t, opts, start); });
        for (auto& th : pool) th.join();
    }

    std::size_t pick = 0;
    for (std::size_t i = 1; i < chains.size(); ++i)
        if (chains[i].best_m < chains[pick].best_m) pick = i;

    SearchReport rep;
    rep.n = n;
    rep.best_m = chains[pick].best_m;
    rep.witness = std::move(chains[pick].best);
    rep.exhaustive = false;
    for (const auto& c : chains) rep.nodes_visited += c.nodes;
    rep.mode = SearchMode::anneal;
    rep.seed = opts.seed;
    return rep;
}

SearchReport bnb_min(int n, std::uint64_t budget, std::optional<std::uint64_t> initial_upper) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    if (n > 7) throw capability_error("branch and bound supported up to n = 7");

    SearchReport rep;
    rep.n = n;
    rep.mode = SearchMode::bnb;

    if (n == 2) {
        rep.best_m = 2;
        rep.witness = Colouring(2);
        rep.exhaustive = true;
        rep.nodes_visited = 1;
        return rep;
    }

    const int T = static_cast<int>(choose3(n));
    const int P = static_cast<int>(choose2(n));

    struct RankInfo {
        int pid[3];
        int third[3];
    };
    std::vector<RankInfo> info(T);
    std::vector<std::vector<int>> completes_at(T);
    auto pair_id = [](int u, int v) { return static_cast<int>(choose2(v)) + u; };  // u < v
    for (int r = 0; r < T; ++r) {
        auto [i, j, k] = triple_unrank(r);
        info[r] = {{pair_id(i, j), pair_id(i, k), pair_id(j, k)}, {k, j, i}};
    }
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            int top = n - 1;  // largest third point of the pair
            while (top == u || top == v) --top;
            int a = std::min({u, v, top}), c = std::max({u, v, top});
            int b = u + v + top - a - c;
            completes_at[triple_rank(a, b, c)].push_back(pair_id(u, v));
        }

    std::vector<std::uint64_t> red_m(P), blue_m(P);
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < v; ++u) red_m[pair_id(u, v)] = blue_m[pair_id(u, v)] = (1ull << u) | (1ull << v);
    std::array<std::uint16_t, 128> cnt_r{}, cnt_b{};
    int dr = 0, db = 0;

    std::uint64_t inc = initial_upper ? *initial_upper : choose2(n) + 1;
    std::optional<std::uint64_t> best_word;
    if (!initial_upper) best_word = 0;  // the all-blue colouring attains C(n,2)+1
    const std::uint64_t global_lb = sum_lower_bound(n);

    std::uint64_t word = 0, nodes = 0;
    bool aborted = false;

    std::function<void(int)> dfs = [&](int r) {
        if (aborted) return;
        if (budget && nodes >= budget) {
            aborted = true;
            return;
        }
        ++nodes;
        if (r == T) {
            std::uint64_t m = static_cast<std::uint64_t>(dr) + db;
            if (m < inc) {
                inc = m;
                best_word = word;
            }
            return;
        }
        for (int red = 0; red <= 1; ++red) {
            if (r == 0 && red) continue;  // complement symmetry: fix the first triple blue
            const RankInfo& ri = info[r];
            if (red) word |= 1ull << r;
            auto& masks = red ? red_m : blue_m;
            for (int t = 0; t < 3; ++t) masks[ri.pid[t]] |= 1ull << ri.third[t];
            for (int pid : completes_at[r]) {
                if (cnt_r[red_m[pid]]++ == 0) ++dr;
                if (cnt_b[blue_m[pid]]++ == 0) ++db;
            }
            if (std::max<std::uint64_t>(static_cast<std::uint64_t>(dr) + db, global_lb) < inc)
                dfs(r + 1);
            for (int pid : completes_at[r]) {
                if (--cnt_r[red_m[pid]] == 0) --dr;
                if (--cnt_b[blue_m[pid]] == 0) --db;
            }
            for (int t = 0; t < 3; ++t) masks[ri.pid[t]] &= ~(1ull << ri.third[t]);
            if (red) word &= ~(1ull << r);
        }
    };
    dfs(0);

    rep.best_m = inc;
    if (best_word) rep.witness = colouring_from_word(n, *best_word);
    rep.exhaustive = !aborted;
    rep.nodes_visited = nodes;
    return rep;
}

}  // namespace hyperlines
