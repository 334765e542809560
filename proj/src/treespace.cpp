#include "hyperlines/treespace.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "hyperlines/common.hpp"
#include "hyperlines/summary.hpp"

namespace hyperlines {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

std::vector<std::vector<int>> adjacency(const Tree& t) {
    std::vector<std::vector<int>> adj(t.n);
    for (auto [u, v] : t.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

void validate_matrix(const DistanceMatrix& m) {
    if (m.n < 2 || m.n > 64) throw std::invalid_argument("matrix size outside 2..64");
    if (m.d.size() != static_cast<std::size_t>(m.n) * m.n)
        throw std::invalid_argument("matrix storage does not match n");
    for (int i = 0; i < m.n; ++i) {
        if (m.at(i, i) != 0) throw std::invalid_argument("nonzero diagonal");
        for (int j = 0; j < m.n; ++j) {
            if (m.at(i, j) != m.at(j, i)) throw std::invalid_argument("asymmetric matrix");
            if (i != j && m.at(i, j) <= 0)
                throw std::invalid_argument("non-positive off-diagonal entry");
        }
    }
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            for (int k = 0; k < m.n; ++k)
                if (m.at(i, k) > m.at(i, j) + m.at(j, k))
                    throw std::invalid_argument("triangle inequality violated");
}

}  // namespace

DistanceMatrix all_pairs_shortest(const WeightedGraph& g) {
    if (g.n < 1 || g.n > 64) throw std::invalid_argument("vertex count outside 1..64");
    std::set<std::pair<int, int>> seen;
    for (const auto& e : g.edges) {
        if (e.u < 0 || e.u >= g.n || e.v < 0 || e.v >= g.n)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loop");
        if (e.w < 1) throw std::invalid_argument("edge weight must be positive");
        if (!seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second)
            throw std::invalid_argument("duplicate edge");
    }
    DistanceMatrix m{g.n, std::vector<std::int64_t>(static_cast<std::size_t>(g.n) * g.n, kInf)};
    for (int i = 0; i < g.n; ++i) m.at(i, i) = 0;
    for (const auto& e : g.edges) {
        m.at(e.u, e.v) = std::min(m.at(e.u, e.v), e.w);
        m.at(e.v, e.u) = m.at(e.u, e.v);
    }
    for (int k = 0; k < g.n; ++k)
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j)
                m.at(i, j) = std::min(m.at(i, j), m.at(i, k) + m.at(k, j));
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            if (m.at(i, j) >= kInf) throw std::invalid_argument("graph is disconnected");
    return m;
}

Colouring derive(const DistanceMatrix& dist) {
    validate_matrix(dist);
    Colouring s(dist.n);
    auto between = [&](int x, int y, int z) { return dist.at(x, y) + dist.at(y, z) == dist.at(x, z); };
    for (auto [i, j, k] : all_triples(dist.n))
        if (between(i, j, k) || between(j, i, k) || between(i, k, j))
            s.set_colour(i, j, k, Colour::red);
    return s;
}

Tree make_tree(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 1 || n > 64) throw std::invalid_argument("vertex count outside 1..64");
    if (edges.size() != static_cast<std::size_t>(n) - 1)
        throw std::invalid_argument("a tree on n vertices has n-1 edges");
    Tree t{n, std::move(edges)};
    for (auto [u, v] : t.edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
    }
    auto adj = adjacency(t);
    std::vector<char> vis(n, 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[u])
            if (!vis[v]) {
                vis[v] = 1;
                ++count;
                stack.push_back(v);
            }
    }
    if (count != n) throw std::invalid_argument("edges do not form a connected tree");
    return t;
}

Tree path(int n) {
    if (n < 2 || n > 64) throw std::invalid_argument("path needs 2..64 vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return {n, std::move(e)};
}

Tree star(int n) {
    if (n < 2 || n > 64) throw std::invalid_argument("star needs 2..64 vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return {n, std::move(e)};
}

Tree s_tree(int p, int q) {
    if (p < 2) throw std::invalid_argument("s_tree needs p >= 2 attached leaves");
    if (q < 3) throw std::invalid_argument("s_tree needs a path on q >= 3 vertices");
    if (p + q > 64) throw std::invalid_argument("s_tree exceeds 64 vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < q; ++i) e.emplace_back(i, i + 1);
    for (int i = 0; i < p; ++i) e.emplace_back(0, q + i);
    return {p + q, std::move(e)};
}

Colouring derive_tree(const Tree& t) {
    if (t.n < 2) throw std::invalid_argument("need at least 2 vertices");
    WeightedGraph g{t.n, {}};
    for (auto [u, v] : t.edges) g.edges.push_back({u, v, 1});
    return derive(all_pairs_shortest(g));
}

std::vector<int> degrees(const Tree& t) {
    std::vector<int> deg(t.n, 0);
    for (auto [u, v] : t.edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

bool is_path(const Tree& t) {
    auto deg = degrees(t);
    return std::ranges::all_of(deg, [](int d) { return d <= 2; });
}

bool is_star(const Tree& t) {
    auto deg = degrees(t);
    return std::ranges::any_of(deg, [&](int d) { return d == t.n - 1; });
}

std::vector<int> tree_path_between(const Tree& t, int x, int y) {
    if (x < 0 || x >= t.n || y < 0 || y >= t.n) throw std::invalid_argument("vertex out of range");
    auto adj = adjacency(t);
    std::vector<int> parent(t.n, -1);
    std::vector<int> queue{x};
    parent[x] = x;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int v : adj[u])
            if (parent[v] < 0) {
                parent[v] = u;
                queue.push_back(v);
            }
    }
    std::vector<int> out;
    for (int v = y; v != x; v = parent[v]) out.push_back(v);
    out.push_back(x);
    std::ranges::reverse(out);
    return out;
}

TwinDecomposition twin_decomposition(const Tree& t) {
    auto deg = degrees(t);
    auto adj = adjacency(t);
    TwinDecomposition dec;
    for (int v = 0; v < t.n; ++v) {
        PointSet cls = PointSet::empty_set(t.n);
        for (int u : adj[v])
            if (deg[u] == 1) cls.add(u);
        if (cls.size() >= 2) {
            dec.classes.push_back(cls);
            dec.anchors.push_back(v);
            dec.a += cls.size();
        }
    }
    dec.s = static_cast<int>(dec.classes.size());
    dec.b = t.n - dec.a;
    return dec;
}

std::uint64_t tree_blue_count(const TwinDecomposition& dec) {
    return choose2(dec.b) + dec.a + static_cast<std::uint64_t>(dec.b) * dec.s + choose2(dec.s);
}

std::uint64_t tree_red_floor(const Tree& t) {
    if (is_path(t) || is_star(t))
        throw capability_error("red-line floor is undefined for paths and stars");
    auto dec = twin_decomposition(t);
    return choose2(dec.a) + dec.a + 1;
}

std::uint64_t tree_m_lower_bound(int n) {
    if (n < 3) throw std::invalid_argument("bound defined for n >= 3");
    if (n <= 6) return choose2(n) + 1;
    return static_cast<std::uint64_t>(n) * n / 4 + n + 1;
}

bool is_extremal_tree(const Tree& t) {
    const int n = t.n;
    if (n < 3) throw std::invalid_argument("extremality defined for n >= 3");
    if (n <= 6 && is_path(t)) return true;
    if (n < 6) return false;
    std::string code = ahu_encoding(t);
    std::vector<int> stars;
    if (n % 2 == 1)
        stars = {(n - 1) / 2};
    else
        stars = {n / 2 - 1, n / 2};
    for (int a : stars) {
        if (a < 2 || n - a < 3) continue;
        if (code == ahu_encoding(s_tree(a, n - a))) return true;
    }
    return false;
}

bool is_s_tree(const Tree& t) {
    if (t.n < 5) return false;
    std::string code = ahu_encoding(t);
    for (int p = 2; p + 3 <= t.n; ++p)
        if (code == ahu_encoding(s_tree(p, t.n - p))) return true;
    return false;
}

bool is_double_broom(const Tree& t) {
    auto dec = twin_decomposition(t);
    if (dec.s != 2) return false;
    // The non-twin part must be a path whose two endpoints are the anchors.
    PointSet rest = PointSet::full(t.n);
    for (const auto& cls : dec.classes)
        for (int v : cls.points()) rest.mask &= ~(1ull << v);
    std::vector<int> deg(t.n, 0);
    for (auto [u, v] : t.edges)
        if (rest.contains(u) && rest.contains(v)) {
            ++deg[u];
            ++deg[v];
        }
    for (int v : rest.points()) {
        bool anchor = std::ranges::find(dec.anchors, v) != dec.anchors.end();
        if (anchor && deg[v] > 1) return false;
        if (!anchor && deg[v] != 2) return false;
    }
    return true;
}

namespace {

std::string ahu_subtree(const std::vector<std::vector<int>>& adj, int v, int parent) {
    std::vector<std::string> child;
    for (int u : adj[v])
        if (u != parent) child.push_back(ahu_subtree(adj, u, v));
    std::ranges::sort(child);
    std::string out = "(";
    for (const auto& c : child) out += c;
    out += ")";
    return out;
}

std::vector<int> centres(const Tree& t) {
    if (t.n == 1) return {0};
    auto adj = adjacency(t);
    auto deg = degrees(t);
    std::vector<int> layer;
    for (int v = 0; v < t.n; ++v)
        if (deg[v] == 1) layer.push_back(v);
    int remaining = t.n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int v : layer) {
            deg[v] = 0;
            for (int u : adj[v])
                if (deg[u] > 0 && --deg[u] == 1) next.push_back(u);
        }
        layer = std::move(next);
    }
    std::ranges::sort(layer);
    return layer;
}

}  // namespace

std::string ahu_encoding(const Tree& t) {
    auto adj = adjacency(t);
    auto c = centres(t);
    if (c.size() == 1) return "U" + ahu_subtree(adj, c[0], -1);
    std::string s1 = ahu_subtree(adj, c[0], c[1]);
    std::string s2 = ahu_subtree(adj, c[1], c[0]);
    if (s2 < s1) std::swap(s1, s2);
    return "B" + s1 + s2;
}

Tree prufer_tree(int n, std::span<const int> seq) {
    if (n < 2 || n > 64) throw std::invalid_argument("vertex count outside 2..64");
    if (seq.size() != static_cast<std::size_t>(n) - 2)
        throw std::invalid_argument("sequence length must be n-2");
    for (int x : seq)
        if (x < 0 || x >= n) throw std::invalid_argument("sequence entry out of range");
    std::vector<int> deg(n, 1);
    for (int x : seq) ++deg[x];
    std::vector<std::pair<int, int>> edges;
    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int x : seq) {
        edges.emplace_back(leaf, x);
        if (--deg[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return {n, std::move(edges)};
}

std::vector<Tree> enumerate_trees(int n) {
    if (n < 2 || n > 8)
        throw capability_error("exhaustive tree census supported for 2 <= n <= 8");
    if (n == 2) return {path(2)};
    std::map<std::string, Tree> classes;
    std::vector<int> seq(n - 2, 0);
    for (;;) {
        Tree t = prufer_tree(n, seq);
        classes.emplace(ahu_encoding(t), t);
        int pos = n - 3;
        while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
        if (pos < 0) break;
        ++seq[pos];
    }
    std::vector<Tree> out;
    out.reserve(classes.size());
    for (auto& [code, t] : classes) out.push_back(std::move(t));
    return out;
}

Tree random_labelled_tree(int n, std::mt19937_64& rng) {
    if (n < 2 || n > 64) throw std::invalid_argument("vertex count outside 2..64");
    std::vector<int> seq(n > 2 ? n - 2 : 0);
    for (int& x : seq) x = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    return prufer_tree(n, seq);
}

TreeCheckReport check_tree(const Tree& t) {
    if (t.n < 3) throw std::invalid_argument("tree checks need n >= 3");
    TreeCheckReport r;
    Colouring s = derive_tree(t);
    LineSummary sum = summarize(s);
    auto dec = twin_decomposition(t);

    r.m_blue_measured = sum.m_blue;
    r.m_blue_formula = tree_blue_count(dec);
    r.blue_formula_ok = r.m_blue_measured == r.m_blue_formula;

    r.m_red_measured = sum.m_red;
    r.m_measured = sum.m;
    r.m_bound = tree_m_lower_bound(t.n);
    r.bound_ok = r.m_measured >= r.m_bound;
    r.bound_equality = r.m_measured == r.m_bound;
    r.extremal = is_extremal_tree(t);
    r.extremal_ok = r.bound_equality == r.extremal;

    r.has_red_floor = !is_path(t) && !is_star(t);
    if (r.has_red_floor) {
        r.red_floor = tree_red_floor(t);
        r.red_floor_family = is_s_tree(t) || is_double_broom(t);
        r.red_floor_ok = r.m_red_measured >= r.red_floor &&
                         (r.m_red_measured == r.red_floor) == r.red_floor_family;
    } else {
        r.red_floor_ok = true;
    }

    // Per-pair structure: the x-y path sits inside R(xy) and meets B(xy)
    // only at the endpoints; twin classes meet lines all-or-nothing, except
    // the class of an endpoint, which meets R(xy) exactly at that endpoint
    // (the partner must not be the class anchor, where R(xy) = V).
    std::vector<int> class_of(t.n, -1);
    for (int i = 0; i < dec.s; ++i)
        for (int v : dec.classes[i].points()) class_of[v] = i;
    r.line_structure_ok = true;
    for (int x = 0; x < t.n && r.line_structure_ok; ++x)
        for (int y = x + 1; y < t.n && r.line_structure_ok; ++y) {
            std::uint64_t red = 0, blue = 0;
            s.line_masks(x, y, red, blue);
            std::uint64_t pmask = 0;
            for (int v : tree_path_between(t, x, y)) pmask |= 1ull << v;
            std::uint64_t ends = (1ull << x) | (1ull << y);
            if ((red & pmask) != pmask || (blue & pmask) != ends) r.line_structure_ok = false;
            for (int i = 0; i < dec.s; ++i) {
                std::uint64_t cls = dec.classes[i].mask;
                bool x_in = class_of[x] == i, y_in = class_of[y] == i;
                if (x_in && y_in) continue;
                if (x_in || y_in) {
                    int inside = x_in ? x : y;
                    int other = x_in ? y : x;
                    if (other == dec.anchors[i]) continue;
                    if ((red & cls) != (1ull << inside)) r.line_structure_ok = false;
                    if ((blue & cls) != cls) r.line_structure_ok = false;
                } else {
                    std::uint64_t ri = red & cls, bi = blue & cls;
                    if (ri != 0 && ri != cls) r.line_structure_ok = false;
                    if (bi != 0 && bi != cls) r.line_structure_ok = false;
                }
            }
        }

    // Coinciding blue lines only arise from twin substitutions.
    auto twins = [&](int u, int v) { return u != v && class_of[u] >= 0 && class_of[u] == class_of[v]; };
    std::map<std::uint64_t, std::vector<std::pair<int, int>>> by_blue;
    for (int x = 0; x < t.n; ++x)
        for (int y = x + 1; y < t.n; ++y) {
            std::uint64_t red = 0, blue = 0;
            s.line_masks(x, y, red, blue);
            by_blue[blue].emplace_back(x, y);
        }
    r.twin_collision_ok = true;
    for (const auto& [mask, pairs] : by_blue)
        for (std::size_t i = 0; i < pairs.size(); ++i)
            for (std::size_t j = i + 1; j < pairs.size(); ++j) {
                auto [x, y] = pairs[i];
                auto [z, w] = pairs[j];
                bool ok;
                if (x == z)
                    ok = twins(y, w);
                else if (x == w)
                    ok = twins(y, z);
                else if (y == z)
                    ok = twins(x, w);
                else if (y == w)
                    ok = twins(x, z);
                else
                    ok = (twins(x, z) && twins(y, w)) || (twins(x, w) && twins(y, z));
                if (!ok) r.twin_collision_ok = false;
            }

    r.pass = r.blue_formula_ok && r.bound_ok && r.extremal_ok && r.red_floor_ok &&
             r.line_structure_ok && r.twin_collision_ok;
    return r;
}

}  // namespace hyperlines
