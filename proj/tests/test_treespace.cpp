#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "hyperlines/summary.hpp"
#include "hyperlines/treespace.hpp"

using namespace hyperlines;

TEST_CASE("shortest paths on a weighted triangle") {
    WeightedGraph g;
    g.n = 3;
    g.edges = {{0, 1, 1}, {1, 2, 2}, {0, 2, 4}};
    DistanceMatrix d = all_pairs_shortest(g);
    CHECK(d.at(0, 1) == 1);
    CHECK(d.at(1, 2) == 2);
    CHECK(d.at(0, 2) == 3);  // through the middle, not the direct edge
    CHECK(d.at(2, 0) == 3);
    CHECK(d.at(1, 1) == 0);
}

TEST_CASE("shortest paths reject bad graphs") {
    WeightedGraph disconnected;
    disconnected.n = 4;
    disconnected.edges = {{0, 1, 1}, {2, 3, 1}};
    CHECK_THROWS_AS(all_pairs_shortest(disconnected), std::invalid_argument);
    WeightedGraph negative;
    negative.n = 2;
    negative.edges = {{0, 1, 0}};
    CHECK_THROWS_AS(all_pairs_shortest(negative), std::invalid_argument);
    WeightedGraph loop;
    loop.n = 2;
    loop.edges = {{0, 0, 1}};
    CHECK_THROWS_AS(all_pairs_shortest(loop), std::invalid_argument);
}

TEST_CASE("metric of a path makes every triple red") {
    WeightedGraph g;
    g.n = 5;
    for (int i = 0; i + 1 < 5; ++i) g.edges.push_back({i, i + 1, 1});
    Colouring s = derive(all_pairs_shortest(g));
    CHECK(s.red_count() == choose3(5));
    LineSummary sum = summarize(s);
    CHECK(sum.m_red == 1);
    CHECK(sum.m_blue == 10);
}

TEST_CASE("tree constructors and predicates") {
    Tree p = path(5);
    Tree st = star(5);
    CHECK(is_path(p));
    CHECK_FALSE(is_star(p));
    CHECK(is_star(st));
    CHECK_FALSE(is_path(st));
    CHECK(is_path(path(2)));
    auto deg = degrees(st);
    CHECK(*std::max_element(deg.begin(), deg.end()) == 4);
    CHECK(tree_path_between(p, 0, 4) == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(tree_path_between(p, 3, 1) == std::vector<int>{3, 2, 1});
    CHECK(tree_path_between(st, 1, 2).size() == 3);  // leaf, centre, leaf
    CHECK_THROWS_AS(make_tree(4, {{0, 1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(make_tree(3, {{0, 1}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(s_tree(1, 4), std::invalid_argument);
    CHECK_THROWS_AS(s_tree(2, 2), std::invalid_argument);
}

TEST_CASE("twin decomposition") {
    TwinDecomposition none = twin_decomposition(path(6));
    CHECK(none.s == 0);
    CHECK(none.a == 0);
    CHECK(none.b == 6);

    TwinDecomposition all = twin_decomposition(star(5));
    CHECK(all.s == 1);
    CHECK(all.a == 4);
    CHECK(all.b == 1);

    TwinDecomposition st = twin_decomposition(s_tree(4, 5));
    CHECK(st.s == 1);
    CHECK(st.a == 4);  // the far path end is a lone leaf, not a twin
    CHECK(st.b == 5);

    // Double star: centres 0-1, three leaves on each.
    Tree ds = make_tree(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {1, 7}});
    TwinDecomposition d = twin_decomposition(ds);
    CHECK(d.s == 2);
    CHECK(d.a == 6);
    CHECK(d.b == 2);
    CHECK(d.classes[0].size() + d.classes[1].size() == 6);
}

TEST_CASE("blue line count matches the closed form") {
    // C(b,2) + a + b*s + C(s,2) against brute force.
    for (const Tree& t : {path(6), star(6), s_tree(2, 4), s_tree(4, 5)}) {
        TwinDecomposition dec = twin_decomposition(t);
        CHECK(tree_blue_count(dec) == summarize(derive_tree(t)).m_blue);
    }
    CHECK(tree_blue_count(twin_decomposition(star(7))) == 7);
    CHECK(tree_blue_count(twin_decomposition(s_tree(4, 5))) == 19);
    CHECK(tree_blue_count(twin_decomposition(path(7))) == choose2(7));
}

TEST_CASE("red line floor") {
    // S(2,3): floor C(2,2)+2+1 = 4 is attained.
    Tree s23 = s_tree(2, 3);
    CHECK(tree_red_floor(s23) == 4);
    CHECK(summarize(derive_tree(s23)).m_red == 4);
    CHECK(is_s_tree(s23));
    // A three-leg spider has no twins (a = 0): floor 1 is strict.
    Tree spider = make_tree(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    CHECK(tree_red_floor(spider) == 1);
    CHECK(summarize(derive_tree(spider)).m_red > 1);
    CHECK_FALSE(is_s_tree(spider));
    CHECK_FALSE(is_double_broom(spider));
    CHECK_THROWS_AS(tree_red_floor(path(5)), capability_error);
    CHECK_THROWS_AS(tree_red_floor(star(5)), capability_error);
}

TEST_CASE("double brooms attain the red floor") {
    // Path 0-1-2 with twins {3,4} at 0 and {5,6} at 2.
    Tree broom = make_tree(7, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {2, 5}, {2, 6}});
    CHECK(is_double_broom(broom));
    CHECK_FALSE(is_s_tree(broom));
    CHECK(tree_red_floor(broom) == summarize(derive_tree(broom)).m_red);
    CHECK(check_tree(broom).red_floor_family);
}

TEST_CASE("tree minimum values and extremal families") {
    CHECK(tree_m_lower_bound(3) == 4);
    CHECK(tree_m_lower_bound(4) == 7);
    CHECK(tree_m_lower_bound(5) == 11);
    CHECK(tree_m_lower_bound(6) == 16);  // both closed forms give 16 here
    CHECK(tree_m_lower_bound(7) == 20);
    CHECK(tree_m_lower_bound(9) == 30);

    CHECK(is_extremal_tree(path(4)));
    CHECK(is_extremal_tree(path(6)));
    CHECK_FALSE(is_extremal_tree(path(7)));
    CHECK_FALSE(is_extremal_tree(star(6)));
    CHECK(is_extremal_tree(s_tree(3, 4)));       // n = 7, a* = 3
    CHECK_FALSE(is_extremal_tree(s_tree(2, 5)));
    CHECK(is_extremal_tree(s_tree(3, 5)));       // n = 8, a* in {3,4}
    CHECK(is_extremal_tree(s_tree(4, 4)));
    CHECK_FALSE(is_extremal_tree(s_tree(2, 6)));

    CHECK(summarize(derive_tree(path(5))).m == 11);
    CHECK(summarize(derive_tree(s_tree(3, 4))).m == 20);
    CHECK(summarize(derive_tree(s_tree(4, 5))).m == 30);
}

TEST_CASE("tree census by isomorphism class") {
    const std::size_t expected[] = {1, 1, 2, 3, 6, 11, 23};
    for (int n = 2; n <= 8; ++n) {
        auto trees = enumerate_trees(n);
        CHECK(trees.size() == expected[n - 2]);
        std::set<std::string> codes;
        for (const Tree& t : trees) {
            CHECK(t.n == n);
            CHECK(codes.insert(ahu_encoding(t)).second);
        }
    }
    CHECK_THROWS_AS(enumerate_trees(9), capability_error);
}

TEST_CASE("canonical tree encoding is an isomorphism invariant") {
    // The same shape under different labellings encodes identically.
    Tree a = make_tree(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    Tree b = make_tree(5, {{3, 0}, {0, 4}, {4, 1}, {1, 2}});  // relabelled path
    CHECK(ahu_encoding(a) == ahu_encoding(b));
    CHECK(ahu_encoding(path(5)) != ahu_encoding(star(5)));
    CHECK(ahu_encoding(s_tree(2, 3)) != ahu_encoding(path(5)));
}

TEST_CASE("pruefer decoding") {
    // Constant sequence decodes to a star on the repeated label.
    Tree st = prufer_tree(5, std::vector<int>{0, 0, 0});
    CHECK(is_star(st));
    CHECK(degrees(st)[0] == 4);
    // All 16 sequences for n = 4 decode to valid labelled trees.
    std::set<std::string> shapes;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            Tree t = prufer_tree(4, std::vector<int>{a, b});
            CHECK(t.edges.size() == 3);
            shapes.insert(ahu_encoding(t));
        }
    CHECK(shapes.size() == 2);  // path and star are the only shapes on 4 vertices
}

TEST_CASE("random labelled trees are reproducible") {
    std::mt19937_64 a(7), b(7);
    Tree ta = random_labelled_tree(10, a);
    Tree tb = random_labelled_tree(10, b);
    CHECK(ta.edges == tb.edges);
}

TEST_CASE("full tree check passes on every class up to 8 vertices") {
    for (int n = 3; n <= 8; ++n)
        for (const Tree& t : enumerate_trees(n)) {
            TreeCheckReport r = check_tree(t);
            CAPTURE(n);
            CAPTURE(ahu_encoding(t));
            CAPTURE(r.note);
            CHECK(r.pass);
            CHECK(r.blue_formula_ok);
            CHECK(r.bound_ok);
            CHECK(r.extremal_ok);
            CHECK(r.red_floor_ok);
            CHECK(r.line_structure_ok);
            CHECK(r.twin_collision_ok);
        }
}

TEST_CASE("full tree check passes on sampled larger trees") {
    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 9 + static_cast<int>(rng() % 6);  // 9..14
        Tree t = random_labelled_tree(n, rng);
        TreeCheckReport r = check_tree(t);
        CAPTURE(n);
        CAPTURE(r.note);
        CHECK(r.pass);
    }
}

TEST_CASE("edge weights do not change the derived system of a tree") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 4 + static_cast<int>(rng() % 7);
        Tree t = random_labelled_tree(n, rng);
        WeightedGraph g;
        g.n = n;
        for (auto [u, v] : t.edges)
            g.edges.push_back({u, v, 1 + static_cast<std::int64_t>(rng() % 1000)});
        CHECK(derive(all_pairs_shortest(g)) == derive_tree(t));
    }
}
