#include "hyperlines/summary.hpp"

#include <algorithm>
#include <map>

namespace hyperlines {

namespace {

// Red and blue line masks over all pairs, in (u,v) lexicographic order.
void collect_masks(const Colouring& s, std::vector<std::uint64_t>& red,
                   std::vector<std::uint64_t>& blue) {
    int n = s.n();
    red.clear();
    blue.clear();
    red.reserve(choose2(static_cast<std::uint64_t>(n)));
    blue.reserve(choose2(static_cast<std::uint64_t>(n)));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            std::uint64_t r = 0, b = 0;
            s.line_masks(u, v, r, b);
            red.push_back(r);
            blue.push_back(b);
        }
}

std::vector<PointSet> dedupe(std::vector<std::uint64_t>& masks, int n) {
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<PointSet> out;
    out.reserve(masks.size());
    for (std::uint64_t m : masks) out.emplace_back(m, n);
    return out;
}

}  // namespace

LineSummary summarize(const Colouring& s) {
    std::vector<std::uint64_t> red, blue;
    collect_masks(s, red, blue);
    LineSummary out;
    out.red_lines = dedupe(red, s.n());
    out.blue_lines = dedupe(blue, s.n());
    out.m_red = out.red_lines.size();
    out.m_blue = out.blue_lines.size();
    out.m = out.m_red + out.m_blue;
    out.m_star = static_cast<std::uint64_t>(out.m_red) * out.m_blue;
    return out;
}

std::size_t count_m(const Colouring& s) {
    std::vector<std::uint64_t> red, blue;
    collect_masks(s, red, blue);
    for (auto* v : {&red, &blue}) {
        std::sort(v->begin(), v->end());
        v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    return red.size() + blue.size();
}

const GeneratingPairMap::Entry* GeneratingPairMap::find(Colour c, std::uint64_t line_mask) const {
    const auto& v = side(c);
    auto it = std::lower_bound(v.begin(), v.end(), line_mask,
                               [](const Entry& e, std::uint64_t m) { return e.line.mask < m; });
    if (it == v.end() || it->line.mask != line_mask) return nullptr;
    return &*it;
}

GeneratingPairMap generating_pairs(const Colouring& s) {
    int n = s.n();
    std::map<std::uint64_t, std::vector<std::pair<int, int>>> red, blue;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            std::uint64_t r = 0, b = 0;
            s.line_masks(u, v, r, b);
            red[r].emplace_back(u, v);
            blue[b].emplace_back(u, v);
        }
    GeneratingPairMap out;
    for (auto& [mask, pairs] : red) out.red.push_back({PointSet(mask, n), std::move(pairs)});
    for (auto& [mask, pairs] : blue) out.blue.push_back({PointSet(mask, n), std::move(pairs)});
    return out;
}

int max_red_intersection(const Colouring& s) {
    LineSummary sum = summarize(s);
    if (sum.m_red < 2)
        throw capability_error("max_red_intersection: needs at least two distinct red lines");
    int best = 0;
    const auto& lines = sum.red_lines;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            best = std::max(best, std::popcount(lines[i].mask & lines[j].mask));
    return best;
}

std::vector<std::size_t> line_size_distribution(const Colouring& s, Colour c) {
    LineSummary sum = summarize(s);
    std::vector<std::size_t> dist(static_cast<std::size_t>(s.n()) + 1, 0);
    for (const PointSet& line : (c == Colour::red ? sum.red_lines : sum.blue_lines))
        ++dist[static_cast<std::size_t>(line.size())];
    return dist;
}

}  // namespace hyperlines
