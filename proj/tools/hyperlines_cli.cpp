#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperlines/analysis.hpp"
#include "hyperlines/canonical.hpp"
#include "hyperlines/generators.hpp"
#include "hyperlines/io.hpp"
#include "hyperlines/search.hpp"
#include "hyperlines/summary.hpp"
#include "hyperlines/treespace.hpp"

namespace hl = hyperlines;

namespace {

// Exit codes: 0 success, 1 check failure, 2 usage/parse error.
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

hl::Colouring load_hl3(const std::string& path) {
    if (path == "-") return hl::read_hl3(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    return hl::read_hl3(in);
}

void emit_hl3(const hl::Colouring& s, const std::string& path, bool bits) {
    auto enc = bits ? hl::Hl3Encoding::bits : hl::Hl3Encoding::red_list;
    if (path.empty() || path == "-") {
        hl::write_hl3(std::cout, s, enc);
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
    hl::write_hl3(out, s, enc);
}

std::vector<std::pair<std::int64_t, std::int64_t>> read_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::vector<std::pair<std::int64_t, std::int64_t>> pts;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::int64_t x, y;
        if (!(ls >> x)) continue;  // blank line
        if (!(ls >> y)) throw hl::parse_error(lineno, "expected '<x> <y>'");
        std::string extra;
        if (ls >> extra) throw hl::parse_error(lineno, "trailing tokens after '<x> <y>'");
        pts.emplace_back(x, y);
    }
    return pts;
}

hl::WeightedGraph load_graph(const std::string& path) {
    if (path == "-") return hl::read_graph(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    return hl::read_graph(in);
}

std::string points_str(const hl::PointSet& ps) {
    std::string out;
    for (int p : ps.points()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(p);
    }
    return out;
}

// ---- verify machinery ----------------------------------------------------

struct CheckSink {
    bool machine = false;
    bool all_pass = true;

    void add(const std::string& name, bool pass, std::uint64_t measured, std::uint64_t bound) {
        all_pass = all_pass && pass;
        std::cout << "  " << (pass ? "ok   " : "FAIL ") << name << "  measured=" << measured
                  << " bound=" << bound << '\n';
        if (machine)
            std::cout << "CHECK " << name << ' ' << (pass ? "pass" : "fail") << ' ' << measured
                      << ' ' << bound << '\n';
    }

    void note(const std::string& text) { std::cout << "NOTE " << text << '\n'; }
};

hl::Colouring grid(int w, int h) {
    std::vector<std::pair<std::int64_t, std::int64_t>> pts;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) pts.emplace_back(x, y);
    return hl::planar(pts);
}

std::uint64_t sweep_words(int n) { return 1ull << hl::choose3(n); }

hl::Colouring from_word(int n, std::uint64_t word) {
    hl::Colouring s(n);
    for (std::size_t r = 0; r < hl::choose3(n); ++r)
        if (word >> r & 1) s.set_rank(r, true);
    return s;
}

void suite_easy(CheckSink& sink, int exhaustive_n) {
    std::uint64_t equality = 0;
    bool all = true;
    for (std::uint64_t w = 0; w < sweep_words(exhaustive_n); ++w) {
        auto rep = hl::check_easy_bound(from_word(exhaustive_n, w));
        all = all && rep.pass;
        if (rep.product_equality) ++equality;
    }
    sink.add("easy_exhaustive_n" + std::to_string(exhaustive_n), all && equality == 2, equality, 2);

    auto named = [&](const std::string& name, const hl::Colouring& s) {
        auto rep = hl::check_easy_bound(s);
        sink.add("easy_" + name, rep.pass, rep.m_star, rep.product_bound);
    };
    named("fano", hl::steiner(7));
    named("steiner9", hl::steiner(9));
    named("pg3", hl::projective_plane(3));
    named("btree16", hl::btree_colouring(16));
    named("uniform5_blue", hl::uniform(5, hl::Colour::blue));
}

void suite_simple(CheckSink& sink, int exhaustive_n, std::uint64_t seed, int samples) {
    for (int n = 3; n <= exhaustive_n; ++n) {
        bool all = true;
        for (std::uint64_t w = 0; w < sweep_words(n); ++w)
            all = all && hl::check_lemma_simple(from_word(n, w)).pass;
        sink.add("simple_exhaustive_n" + std::to_string(n), all, sweep_words(n), sweep_words(n));
    }
    std::mt19937_64 rng(seed);
    for (int n = 6; n <= 8; ++n) {
        bool all = true;
        for (int i = 0; i < samples; ++i)
            all = all && hl::check_lemma_simple(hl::random_colouring(n, rng)).pass;
        sink.add("simple_random_n" + std::to_string(n), all, samples, samples);
    }
}

void suite_smallinter(CheckSink& sink) {
    auto named = [&](const std::string& name, const hl::Colouring& s) {
        auto rep = hl::check_small_intersection(s);
        sink.add("smallinter_" + name, rep.pass, rep.m, rep.bound);
    };
    named("steiner9", hl::steiner(9));
    named("steiner15", hl::steiner(15));
    sink.note("pg2: blue-line count is 7, not C(7,2); pairs on one projective line share "
              "the blue line missing only the third point. The C(n,2) blue count needs order >= 3.");
    named("pg2", hl::projective_plane(2));
    named("pg3", hl::projective_plane(3));
    named("grid3", grid(3, 3));
    named("grid4", grid(4, 4));
}

void suite_paircount(CheckSink& sink, std::uint64_t seed, int samples) {
    auto named = [&](const std::string& name, const hl::Colouring& s, bool expect_strong) {
        auto red = hl::check_pair_count(s, hl::Colour::red);
        auto blue = hl::check_pair_count(s, hl::Colour::blue);
        bool pass = red.pass && blue.pass && (!expect_strong || red.strengthened);
        sink.add("paircount_" + name, pass, red.gp_sum, red.total_pairs);
    };
    named("grid3", grid(3, 3), true);
    named("grid4", grid(4, 4), true);
    named("fano", hl::steiner(7), true);
    named("pg2", hl::projective_plane(2), true);
    named("pg3", hl::projective_plane(3), true);
    named("steiner9", hl::steiner(9), true);
    named("btree8", hl::btree_colouring(8), false);

    std::mt19937_64 rng(seed);
    bool all = true;
    for (int i = 0; i < samples; ++i) {
        int n = 4 + static_cast<int>(rng() % 7);  // 4..10
        hl::Colouring s = hl::random_colouring(n, rng);
        all = all && hl::check_pair_count(s, hl::Colour::red).pass &&
              hl::check_pair_count(s, hl::Colour::blue).pass;
    }
    sink.add("paircount_random", all, samples, samples);
}

void suite_compose(CheckSink& sink, std::uint64_t seed, int samples) {
    auto named = [&](const std::string& name, const hl::Colouring& a, const hl::Colouring& b) {
        auto rep = hl::check_composition(a, b);
        sink.add("compose_" + name, rep.pass, rep.m_composed, rep.budget);
    };
    named("empty3_empty3", hl::uniform(3, hl::Colour::blue), hl::uniform(3, hl::Colour::blue));
    named("empty3_empty4", hl::uniform(3, hl::Colour::blue), hl::uniform(4, hl::Colour::blue));
    named("full4_full4", hl::uniform(4, hl::Colour::red), hl::uniform(4, hl::Colour::red));

    std::mt19937_64 rng(seed);
    bool all = true;
    for (int i = 0; i < samples; ++i) {
        int n1 = 2 + static_cast<int>(rng() % 5);  // 2..6
        int n2 = 2 + static_cast<int>(rng() % 5);
        hl::Colouring a = hl::random_colouring(n1, rng);
        hl::Colouring b = hl::random_colouring(n2, rng);
        all = all && hl::check_composition(a, b).pass;
    }
    sink.add("compose_random", all, samples, samples);
}

void suite_trees(CheckSink& sink, int max_n, std::uint64_t seed, int samples) {
    static const std::map<int, std::size_t> census{{2, 1}, {3, 1}, {4, 2}, {5, 3},
                                                   {6, 6}, {7, 11}, {8, 23}};
    for (int n = 3; n <= std::min(max_n, 8); ++n) {
        auto trees = hl::enumerate_trees(n);
        bool all = trees.size() == census.at(n);
        for (const auto& t : trees) all = all && hl::check_tree(t).pass;
        sink.add("trees_census_n" + std::to_string(n), all, trees.size(), census.at(n));
    }
    std::mt19937_64 rng(seed);
    if (max_n > 8) {
        bool all = true;
        for (int i = 0; i < samples; ++i) {
            int n = 9 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 8));
            all = all && hl::check_tree(hl::random_labelled_tree(n, rng)).pass;
        }
        sink.add("trees_sampled", all, samples, samples);
    }
    // Positive edge weights never change a tree-derived system.
    bool weights_ok = true;
    for (int i = 0; i < 100; ++i) {
        int n = 4 + static_cast<int>(rng() % 9);  // 4..12
        hl::Tree t = hl::random_labelled_tree(n, rng);
        hl::WeightedGraph g{t.n, {}};
        for (auto [u, v] : t.edges)
            g.edges.push_back({u, v, static_cast<std::int64_t>(1 + rng() % 50)});
        weights_ok = weights_ok &&
                     hl::derive(hl::all_pairs_shortest(g)) == hl::derive_tree(t);
    }
    sink.add("trees_weight_invariance", weights_ok, 100, 100);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bi-coloured 3-uniform hypergraph systems: generators, line counts, "
                 "verification suites, and minimum-line search"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker threads for search modes")
        ->envname("HYPERLINES_THREADS")
        ->check(CLI::Range(1, 64));

    // gen
    auto* gen = app.add_subcommand("gen", "generate a system and write it as .hl3");
    std::string family, colour = "blue", points_path, in1, in2, out_path;
    int gen_n = 0, gen_q = 0;
    bool bits = false;
    gen->add_option("--family", family, "uniform|steiner|pg|planar|btree|compose")->required();
    gen->add_option("--n", gen_n, "point count (uniform, steiner, btree)");
    gen->add_option("--colour", colour, "uniform fill colour: red|blue");
    gen->add_option("--q", gen_q, "projective plane order (2, 3, 5, 7)");
    gen->add_option("--points", points_path, "planar: file of '<x> <y>' integer rows");
    gen->add_option("--in1", in1, "compose: first input .hl3");
    gen->add_option("--in2", in2, "compose: second input .hl3");
    gen->add_option("--out", out_path, "output path (default stdout)");
    gen->add_flag("--bits", bits, "write the compact bits encoding");

    // lines
    auto* lines = app.add_subcommand("lines", "count and list the lines of a .hl3 system");
    std::string lines_in;
    bool show_dist = false, show_pairs = false, show_lines = false;
    lines->add_option("input", lines_in, ".hl3 path ('-' for stdin)")->required();
    lines->add_flag("--dist", show_dist, "print line-size distributions");
    lines->add_flag("--pairs", show_pairs, "print generating-pair multiplicities");
    lines->add_flag("--lines", show_lines, "print the explicit line sets");

    // derive
    auto* derive = app.add_subcommand("derive", "derive the system of a graph metric");
    std::string derive_in;
    derive->add_option("input", derive_in, "graph file ('-' for stdin)")->required();
    derive->add_option("--out", out_path, "output path (default stdout)");
    derive->add_flag("--bits", bits, "write the compact bits encoding");

    // verify
    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::string suite;
    int exhaustive_n = 5, max_n = 8, samples = 500;
    std::uint64_t seed = 1;
    bool machine = false;
    verify->add_option("--suite", suite, "easy|simple|smallinter|paircount|compose|trees|all")
        ->required();
    verify->add_option("--exhaustive-n", exhaustive_n, "full-scan size for sweep suites")
        ->check(CLI::Range(3, 5));
    verify->add_option("--max-n", max_n, "largest tree size for the trees suite")
        ->check(CLI::Range(3, 16));
    verify->add_option("--seed", seed, "seed for sampled checks");
    verify->add_option("--samples", samples, "sample count for randomized checks");
    verify->add_flag("--machine", machine, "also print machine-readable CHECK lines");

    // search
    auto* search = app.add_subcommand("search", "minimize m over colourings at fixed n");
    int search_n = 0;
    std::string mode = "exhaustive", witness_out, start_path;
    hl::AnnealOptions aopts;
    std::uint64_t budget = 0;
    bool symmetry = false;
    std::optional<std::uint64_t> initial_upper;
    std::uint64_t initial_upper_val = 0;
    search->add_option("--n", search_n, "point count")->required();
    search->add_option("--mode", mode, "exhaustive|anneal|bnb");
    search->add_option("--seed", aopts.seed, "anneal seed");
    search->add_option("--steps", aopts.steps, "anneal steps");
    search->add_option("--t0", aopts.t0, "anneal initial temperature");
    search->add_option("--cooling", aopts.cooling, "anneal geometric cooling factor");
    search->add_option("--budget", budget, "bnb node budget (0 = unlimited)");
    auto* iu = search->add_option("--initial-upper", initial_upper_val,
                                  "bnb: known-attained upper bound to confirm");
    search->add_option("--start", start_path, "anneal: initial colouring (.hl3)");
    search->add_flag("--symmetry", symmetry, "exhaustive: scan orbit representatives only");
    search->add_option("--out", witness_out, "write the witness .hl3 here");

    // table
    auto* table = app.add_subcommand("table", "print the minimum line counts m(2..n)");
    int table_max = 6;
    table->add_option("--max-n", table_max, "last column (7 adds the best-known bound)")
        ->check(CLI::Range(2, 7));
    table->add_option("--seed", aopts.seed, "anneal seed for the n = 7 column");
    table->add_option("--steps", aopts.steps, "anneal steps for the n = 7 column");

    // compose (shorthand for gen --family compose)
    auto* comp = app.add_subcommand("compose", "compose two .hl3 systems");
    comp->add_option("--in1", in1, "first input .hl3")->required();
    comp->add_option("--in2", in2, "second input .hl3")->required();
    comp->add_option("--out", out_path, "output path (default stdout)");
    comp->add_flag("--bits", bits, "write the compact bits encoding");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (gen->parsed()) {
            hl::Colouring s(2);
            if (family == "uniform") {
                if (colour != "red" && colour != "blue")
                    throw std::invalid_argument("--colour must be red or blue");
                s = hl::uniform(gen_n, colour == "red" ? hl::Colour::red : hl::Colour::blue);
            } else if (family == "steiner") {
                s = hl::steiner(gen_n);
            } else if (family == "pg") {
                s = hl::projective_plane(gen_q);
            } else if (family == "planar") {
                if (points_path.empty()) throw std::invalid_argument("planar needs --points");
                s = hl::planar(read_points(points_path));
            } else if (family == "btree") {
                s = hl::btree_colouring(gen_n);
            } else if (family == "compose") {
                if (in1.empty() || in2.empty())
                    throw std::invalid_argument("compose needs --in1 and --in2");
                s = hl::compose(load_hl3(in1), load_hl3(in2));
            } else {
                throw std::invalid_argument("unknown family '" + family + "'");
            }
            emit_hl3(s, out_path, bits);
            return kOk;
        }

        if (lines->parsed()) {
            hl::Colouring s = load_hl3(lines_in);
            hl::LineSummary sum = hl::summarize(s);
            std::cout << sum.m_red << ' ' << sum.m_blue << ' ' << sum.m << ' ' << sum.m_star
                      << '\n';
            if (show_dist) {
                for (hl::Colour c : {hl::Colour::red, hl::Colour::blue}) {
                    auto dist = hl::line_size_distribution(s, c);
                    for (std::size_t t = 0; t < dist.size(); ++t)
                        if (dist[t])
                            std::cout << "dist " << hl::colour_name(c) << ' ' << t << ' '
                                      << dist[t] << '\n';
                }
            }
            if (show_pairs) {
                auto gp = hl::generating_pairs(s);
                for (hl::Colour c : {hl::Colour::red, hl::Colour::blue})
                    for (const auto& e : gp.side(c))
                        std::cout << "pairs " << hl::colour_name(c) << ' ' << e.pairs.size()
                                  << ' ' << points_str(e.line) << '\n';
            }
            if (show_lines) {
                for (hl::Colour c : {hl::Colour::red, hl::Colour::blue}) {
                    const auto& ls = c == hl::Colour::red ? sum.red_lines : sum.blue_lines;
                    for (const auto& l : ls)
                        std::cout << "line " << hl::colour_name(c) << ' ' << points_str(l)
                                  << '\n';
                }
            }
            return kOk;
        }

        if (derive->parsed()) {
            hl::Colouring s = hl::derive(hl::all_pairs_shortest(load_graph(derive_in)));
            emit_hl3(s, out_path, bits);
            return kOk;
        }

        if (verify->parsed()) {
            CheckSink sink;
            sink.machine = machine;
            bool all = suite == "all";
            if (all || suite == "easy") suite_easy(sink, exhaustive_n);
            if (all || suite == "simple") suite_simple(sink, exhaustive_n, seed, samples);
            if (all || suite == "smallinter") suite_smallinter(sink);
            if (all || suite == "paircount") suite_paircount(sink, seed, samples);
            if (all || suite == "compose") suite_compose(sink, seed, samples);
            if (all || suite == "trees") suite_trees(sink, max_n, seed, samples);
            if (!all && suite != "easy" && suite != "simple" && suite != "smallinter" &&
                suite != "paircount" && suite != "compose" && suite != "trees")
                throw std::invalid_argument("unknown suite '" + suite + "'");
            std::cout << (sink.all_pass ? "ALL CHECKS PASSED" : "CHECK FAILURES PRESENT") << '\n';
            return sink.all_pass ? kOk : kCheckFailed;
        }

        if (search->parsed()) {
            if (iu->count() > 0) initial_upper = initial_upper_val;
            hl::SearchReport rep;
            if (mode == "exhaustive") {
                rep = hl::exhaustive_min(search_n, symmetry, threads);
            } else if (mode == "anneal") {
                std::optional<hl::Colouring> start;
                if (!start_path.empty()) start = load_hl3(start_path);
                rep = hl::anneal_min(search_n, aopts, start, threads);
            } else if (mode == "bnb") {
                rep = hl::bnb_min(search_n, budget, initial_upper);
            } else {
                throw std::invalid_argument("unknown mode '" + mode + "'");
            }
            std::cout << "MIN n=" << rep.n << " m=" << rep.best_m << " exhaustive="
                      << (rep.exhaustive ? "true" : "false") << '\n';
            if (!witness_out.empty()) {
                if (rep.witness)
                    emit_hl3(*rep.witness, witness_out, bits);
                else
                    std::cerr << "no witness to write (confirmation run)\n";
            }
            return kOk;
        }

        if (table->parsed()) {
            std::string row;
            for (int n = 2; n <= std::min(table_max, 6); ++n) {
                if (!row.empty()) row += ' ';
                row += std::to_string(hl::exhaustive_min(n, false, threads).best_m);
            }
            if (table_max >= 7) {
                auto rep = hl::anneal_min(7, aopts, std::nullopt, threads);
                std::uint64_t fallback =
                    hl::count_m(hl::compose(hl::uniform(3, hl::Colour::blue),
                                            hl::uniform(4, hl::Colour::blue)));
                row += " <=" + std::to_string(std::min(rep.best_m, fallback));
            }
            std::cout << row << '\n';
            return kOk;
        }

        if (comp->parsed()) {
            emit_hl3(hl::compose(load_hl3(in1), load_hl3(in2)), out_path, bits);
            return kOk;
        }
    } catch (const hl::parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const hl::capability_error& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
