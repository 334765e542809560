#include "naive.hpp"

#include <algorithm>
#include <random>

namespace naive {

bool System::is_red(int a, int b, int c) const {
    std::array<int, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    return red.count(t) != 0;
}

std::vector<int> line(const System& s, int u, int v, bool want_red) {
    std::vector<int> pts{u, v};
    for (int p = 0; p < s.n; ++p) {
        if (p == u || p == v) continue;
        if (s.is_red(u, v, p) == want_red) pts.push_back(p);
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

Summary summarize(const System& s) {
    Summary out;
    for (int v = 1; v < s.n; ++v) {
        for (int u = 0; u < v; ++u) {
            out.red_lines.insert(line(s, u, v, true));
            out.blue_lines.insert(line(s, u, v, false));
        }
    }
    out.m_red = out.red_lines.size();
    out.m_blue = out.blue_lines.size();
    out.m = out.m_red + out.m_blue;
    out.m_star = static_cast<std::uint64_t>(out.m_red) * out.m_blue;
    return out;
}

System random_system(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    System s;
    s.n = n;
    for (int k = 2; k < n; ++k)
        for (int j = 1; j < k; ++j)
            for (int i = 0; i < j; ++i)
                if (rng() & 1) s.red.insert({i, j, k});
    return s;
}

hyperlines::Colouring to_colouring(const System& s) {
    hyperlines::Colouring c(s.n);
    for (const auto& t : s.red) c.set_colour(t[0], t[1], t[2], hyperlines::Colour::red);
    return c;
}

System from_colouring(const hyperlines::Colouring& c) {
    System s;
    s.n = c.n();
    for (int k = 2; k < c.n(); ++k)
        for (int j = 1; j < k; ++j)
            for (int i = 0; i < j; ++i)
                if (c.red(i, j, k)) s.red.insert({i, j, k});
    return s;
}

}  // namespace naive
