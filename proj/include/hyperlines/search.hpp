#pragma once

#include <cstdint>
#include <optional>

#include "hyperlines/colouring.hpp"

namespace hyperlines {

enum class SearchMode { exhaustive, anneal, bnb };

const char* search_mode_name(SearchMode m);

struct SearchReport {
    int n = 0;
    std::uint64_t best_m = 0;
    /// Colouring attaining best_m. Absent in exactly one case: bnb_min was
    /// handed an initial upper bound and exhausted the tree without finding
    /// anything strictly better (pure confirmation).
    std::optional<Colouring> witness;
    bool exhaustive = false;
    std::uint64_t nodes_visited = 0;
    SearchMode mode = SearchMode::exhaustive;
    std::uint64_t seed = 0;
};

/// Scans colourings on n points (2 <= n <= 6) and returns the exact
/// minimum of m. With symmetry on, only orbit representatives under
/// point relabelling and colour complementation are evaluated (those equal
/// to their canonical form); both settings return the same best_m.
SearchReport exhaustive_min(int n, bool symmetry = false, int threads = 1);

struct AnnealOptions {
    std::uint64_t seed = 1;
    std::uint64_t steps = 60000;
    double t0 = 1.5;        // initial temperature
    double cooling = 0.9997;  // geometric factor applied every step
};

/// Simulated annealing over single-triple flips; returns an upper bound on
/// m(n) for 3 <= n <= 64. Deterministic given (seed, steps, schedule) in
/// single-threaded mode; with t threads, t independent chains run on seeds
/// seed..seed+t-1 and the best result wins (ties to the lowest seed).
SearchReport anneal_min(int n, const AnnealOptions& opts = {},
                        const std::optional<Colouring>& start = std::nullopt, int threads = 1);

/// Depth-first branch and bound over triple colours in colex order
/// (n <= 7). Prunes on the number of distinct lines already forced by
/// fully-assigned pairs, plus the global sum bound. budget = 0 means
/// unlimited; a nonzero budget caps visited nodes and may return
/// exhaustive = false. initial_upper, when given, must be a value attained
/// by some known colouring; the search then merely looks for anything
/// strictly better.
SearchReport bnb_min(int n, std::uint64_t budget = 0,
                     std::optional<std::uint64_t> initial_upper = std::nullopt);

}  // namespace hyperlines
