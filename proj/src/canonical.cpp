#include "hyperlines/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace hyperlines {

Colouring canonical(const Colouring& s, bool include_colour_swap) {
    int n = s.n();
    if (n > 8) throw capability_error("canonical: factorial scan supported only for n <= 8");

    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);

    Colouring best = s;
    if (include_colour_swap) {
        Colouring comp = s.complemented();
        if (comp.lex_less(best)) best = comp;
    }
    while (std::next_permutation(sigma.begin(), sigma.end())) {
        Colouring img = s.permuted(sigma);
        if (img.lex_less(best)) best = img;
        if (include_colour_swap) {
            Colouring imgc = img.complemented();
            if (imgc.lex_less(best)) best = imgc;
        }
    }
    return best;
}

}  // namespace hyperlines
