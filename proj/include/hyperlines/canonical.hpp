#pragma once

#include "hyperlines/colouring.hpp"

namespace hyperlines {

/// Lexicographically minimal bit array over all n! relabellings, and over
/// colour complementation as well when include_colour_swap is set. Two
/// systems have equal canonical forms iff they are isomorphic under the
/// chosen group. Full factorial scan, so n <= 8.
Colouring canonical(const Colouring& s, bool include_colour_swap = false);

}  // namespace hyperlines
