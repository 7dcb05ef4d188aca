#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "helpers.hpp"
#include "oracles.hpp"
#include "rbwalk/errors.hpp"
#include "rbwalk/graphgen.hpp"

using namespace rbwalk;

static std::string dump(const ColoredGraph& g) {
    std::ostringstream ss;
    write_graph(g, ss);
    return ss.str();
}

TEST_CASE("generated graphs have exact per-color degrees") {
    struct Case {
        GraphModel model;
        int n, r, b;
    };
    const Case cases[] = {
        {GraphModel::Regular, 50, 0, 3}, {GraphModel::Regular, 40, 0, 4},
        {GraphModel::Union, 60, 1, 2},   {GraphModel::Union, 30, 2, 3},
        {GraphModel::Hamilton, 31, 2, 2}, {GraphModel::TwoFactor, 44, 1, 2},
    };
    for (const Case& c : cases) {
        for (uint64_t seed : {0ull, 7ull, 12345ull}) {
            ColoredGraph g = build_graph({c.model, c.n, c.r, c.b, seed});
            REQUIRE(g.n() == c.n);
            REQUIRE(g.r() == c.r);
            REQUIRE(g.b() == c.b);
            REQUIRE(int(g.edges().size()) == c.n * (c.r + c.b) / 2);
            std::vector<int> red(size_t(c.n), 0), blue(size_t(c.n), 0);
            std::set<std::tuple<int, int, int>> seen;
            for (const Edge& e : g.edges()) {
                CHECK(e.u < e.v);
                CHECK(e.v < c.n);
                auto key = std::make_tuple(int(e.u), int(e.v), int(e.color));
                CHECK(!seen.count(key)); // same-color parallel edges forbidden
                seen.insert(key);
                auto& cnt = e.color == Color::Red ? red : blue;
                ++cnt[size_t(e.u)];
                ++cnt[size_t(e.v)];
            }
            for (int v = 0; v < c.n; ++v) {
                CHECK(red[size_t(v)] == c.r);
                CHECK(blue[size_t(v)] == c.b);
            }
        }
    }
}

TEST_CASE("generation is deterministic in the seed") {
    GraphSpec spec{GraphModel::Union, 80, 1, 2, 99};
    CHECK(dump(build_graph(spec)) == dump(build_graph(spec)));
    GraphSpec other = spec;
    other.seed = 100;
    CHECK(dump(build_graph(spec)) != dump(build_graph(other)));
}

TEST_CASE("unique small regular graphs come out exactly") {
    // only one simple 2-regular graph on 3 vertices and one 3-regular on 4
    ColoredGraph tri = build_graph({GraphModel::Regular, 3, 0, 2, 5});
    CHECK(tri.edges().size() == 3);
    ColoredGraph k4 = build_graph({GraphModel::Regular, 4, 0, 3, 11});
    std::set<std::pair<int, int>> es;
    for (const Edge& e : k4.edges()) es.insert({e.u, e.v});
    CHECK(es == std::set<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("parameter validation rejects impossible requests") {
    CHECK_THROWS_AS(build_graph({GraphModel::Regular, 5, 0, 3, 0}), parameter_error);
    CHECK_THROWS_AS(build_graph({GraphModel::Union, 5, 1, 2, 0}), parameter_error);
    CHECK_THROWS_AS(build_graph({GraphModel::Union, 5, 2, 3, 0}), parameter_error); // n*b odd
    CHECK_THROWS_AS(build_graph({GraphModel::Union, 3, 1, 2, 0}), parameter_error); // n <= b
    CHECK_THROWS_AS(build_graph({GraphModel::Regular, 4, 0, 0, 0}), parameter_error);
    CHECK_THROWS_AS(build_graph({GraphModel::Regular, 4, 1, 3, 0}), parameter_error); // r != 0
    CHECK_THROWS_AS(build_graph({GraphModel::Hamilton, 10, 1, 3, 0}), parameter_error); // b != 2
    CHECK_THROWS_AS(build_graph({GraphModel::TwoFactor, 10, 1, 3, 0}), parameter_error);
    CHECK_THROWS_AS(build_graph({GraphModel::Hamilton, 2, 1, 2, 0}), parameter_error); // n < 3
    try {
        build_graph({GraphModel::Union, 5, 1, 2, 0});
        CHECK(false);
    } catch (const parameter_error& e) {
        CHECK(std::string(e.what()).find("must be even") != std::string::npos);
    }
}

TEST_CASE("hamilton blue part is a single spanning cycle") {
    for (uint64_t seed : {1ull, 2ull, 3ull}) {
        ColoredGraph g = build_graph({GraphModel::Hamilton, 26, 1, 2, seed});
        auto lens = g.blue_cycle_lengths();
        REQUIRE(lens.size() == 1);
        CHECK(lens[0] == 26);
        CHECK(g.blue_component(7) == [&] {
            std::vector<int32_t> all(26);
            for (int i = 0; i < 26; ++i) all[size_t(i)] = i;
            return all;
        }());
    }
}

TEST_CASE("two-factor blue part partitions vertices into cycles of length >= 3") {
    for (uint64_t seed : {4ull, 5ull, 6ull}) {
        ColoredGraph g = build_graph({GraphModel::TwoFactor, 120, 1, 2, seed});
        auto lens = g.blue_cycle_lengths();
        int64_t sum = 0;
        for (int64_t l : lens) {
            CHECK(l >= 3);
            sum += l;
        }
        CHECK(sum == 120);
        CHECK(std::is_sorted(lens.begin(), lens.end()));
    }
}

TEST_CASE("pairing enumeration at n=6 d=3: uniform over simple graphs") {
    auto counts = oracles::enumerate_simple_pairings(6, 3);
    REQUIRE(counts.size() == 70);
    int64_t total = 0;
    int k33 = 0, prism = 0;
    for (const auto& [edges, c] : counts) {
        CHECK(c == 46656); // (3!)^6: every labeled simple graph equally likely
        total += c;
        const int t = oracles::count_triangles(edges, 6);
        if (t == 0)
            ++k33;
        else if (t == 2)
            ++prism;
        else
            CHECK(false);
    }
    CHECK(total == 3265920);
    CHECK(k33 == 10);
    CHECK(prism == 60);
}

TEST_CASE("sampler matches the enumerated distribution (n=6 d=3)") {
    // conditional on simple: P(bipartite class) = 10/70, P(prism class) = 60/70
    const int N = 100000;
    Rng rng(2024);
    int k33 = 0;
    for (int i = 0; i < N; ++i) {
        auto edges = config_regular_edges(6, 3, rng, Color::Blue);
        oracles::EdgeList el;
        for (const Edge& e : edges) el.emplace_back(e.u, e.v);
        const int t = oracles::count_triangles(el, 6);
        REQUIRE((t == 0 || t == 2));
        if (t == 0) ++k33;
    }
    const double p = 10.0 / 70.0;
    const double sd = std::sqrt(N * p * (1 - p));
    CHECK(std::abs(k33 - N * p) <= 5 * sd);
}

TEST_CASE("serialization round-trips byte for byte") {
    ColoredGraph g = build_graph({GraphModel::Union, 40, 1, 2, 3});
    std::string text = dump(g);
    std::istringstream in(text);
    ColoredGraph h = read_graph(in);
    CHECK(dump(h) == text);
    CHECK(h.n() == g.n());
    CHECK(h.edges().size() == g.edges().size());
}

TEST_CASE("graph file parser rejects malformed input") {
    auto bad = [](const std::string& s) {
        std::istringstream in(s);
        CHECK_THROWS_AS(read_graph(in), parameter_error);
    };
    bad("");
    bad("m 3 r 0 b 2\n0 1 B\n0 2 B\n1 2 B\n");
    bad("n 3 r 0 b 2\n1 0 B\n0 2 B\n1 2 B\n");   // u >= v
    bad("n 3 r 0 b 2\n0 1 X\n0 2 B\n1 2 B\n");   // bad color
    bad("n 3 r 0 b 2\n0 1 B\n0 2 B\n");          // wrong edge count
    bad("n 3 r 0 b 2\n0 1 B\n0 2 B\n1 3 B\n");   // out of range
    bad("n 3 r 0 b 2\n0 1 B\n0 1 B\n1 2 B\n");   // same-color duplicate
    bad("n 2 r 0 b 2\n0 0 B\n1 1 B\n");          // loops
}

TEST_CASE("cross-color parallel edge pair survives the round trip") {
    // blue square 0-1-2-3 plus red matching {0,1},{2,3}: both red edges
    // parallel blue ones
    std::vector<Edge> es = {{0, 1, Color::Blue}, {1, 2, Color::Blue}, {2, 3, Color::Blue},
                            {0, 3, Color::Blue}, {0, 1, Color::Red},  {2, 3, Color::Red}};
    ColoredGraph g(4, 1, 2, es);
    CHECK(g.degree() == 3);
    CHECK(g.edges().size() == 6);
    std::string text = dump(g);
    std::istringstream in(text);
    CHECK(dump(read_graph(in)) == text);
    // same-color duplicate still rejected
    std::vector<Edge> dup = es;
    dup[4] = {0, 1, Color::Blue};
    CHECK_THROWS_AS(ColoredGraph(4, 1, 2, dup), parameter_error);
}

TEST_CASE("blue component stops at red edges") {
    ColoredGraph g = helpers::make_two_triangles_red_matching();
    CHECK(g.connected());
    CHECK(g.blue_component(0) == std::vector<int32_t>{0, 1, 2});
    CHECK(g.blue_component(4) == std::vector<int32_t>{3, 4, 5});
}

TEST_CASE("structure analysis requires connectivity") {
    ColoredGraph g = helpers::make_two_disjoint_triangles();
    CHECK(!g.connected());
    CHECK_THROWS_AS(analyze_structure(g), structure_error);
}

TEST_CASE("cycle-proximity radius grows like sqrt(log n)") {
    CHECK(small_cycle_sigma(3) == 1);
    CHECK(small_cycle_sigma(10) == 1);
    CHECK(small_cycle_sigma(60) == 2);
    CHECK(small_cycle_sigma(100) == 2);
    CHECK(small_cycle_sigma(20000) == 3);
}

TEST_CASE("ten-cycle has no short cycles, so every vertex is tree-like") {
    ColoredGraph g = helpers::make_cycle(10);
    StructureReport rep = analyze_structure(g);
    CHECK(rep.sigma == 1);
    CHECK(rep.tree_like_count == 10);
    CHECK(rep.non_tree_like_count == 0);
    CHECK(rep.blue_cycle_lengths == std::vector<int64_t>{10});
}

TEST_CASE("a single cross-color 2-cycle poisons exactly its radius-sigma ball") {
    ColoredGraph g = helpers::make_sixty_one_parallel();
    REQUIRE(g.connected());
    StructureReport rep = analyze_structure(g);
    REQUIRE(rep.sigma == 2);
    // 2-cycle at {0,1}; ball of radius 2 around it:
    // dist 1: 59, 2; dist 2: 58, 30 (red nbr of 59), 3, 31 (red nbr of 2)
    auto tl = locally_tree_like(g, rep.sigma);
    std::set<int> bad;
    for (int v = 0; v < 60; ++v)
        if (!tl[size_t(v)]) bad.insert(v);
    CHECK(bad == std::set<int>{0, 1, 2, 3, 30, 31, 58, 59});
    CHECK(rep.non_tree_like_count == 8);
    CHECK(rep.tree_like_count == 52);
}

TEST_CASE("spectral gap estimate matches known chains") {
    // triangle: P eigenvalues {1, -1/2, -1/2}; squared chain -> 1/4, sqrt -> 1/2
    CHECK(lambda2_estimate(helpers::make_triangle()) == doctest::Approx(0.5).epsilon(1e-6));
    ColoredGraph k4 = build_graph({GraphModel::Regular, 4, 0, 3, 1});
    CHECK(lambda2_estimate(k4) == doctest::Approx(1.0 / 3).epsilon(1e-6));
    // C11 (odd, non-bipartite): largest non-unit eigenvalue modulus is cos(pi/11)
    CHECK(lambda2_estimate(helpers::make_cycle(11)) ==
          doctest::Approx(std::cos(M_PI / 11)).epsilon(1e-6));
    // even cycles are bipartite: |lambda_n| = 1 must surface as 1
    CHECK(lambda2_estimate(helpers::make_cycle(4)) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(lambda2_estimate(helpers::make_cycle(10)) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("random 3-regular union graphs have a real spectral gap") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        ColoredGraph g = build_graph({GraphModel::Union, 1000, 1, 2, seed});
        if (!g.connected()) continue; // rare; gap undefined
        const double l2 = lambda2_estimate(g);
        CHECK(l2 <= 0.97);
        CHECK(l2 >= 2 * std::sqrt(2.0) / 3 - 0.05); // Alon-Boppana side
    }
}

TEST_CASE("model names round-trip") {
    for (GraphModel m : {GraphModel::Regular, GraphModel::Union, GraphModel::Hamilton,
                         GraphModel::TwoFactor})
        CHECK(graph_model_from_name(graph_model_name(m)) == m);
    CHECK_THROWS_AS(graph_model_from_name("nonesuch"), parameter_error);
}
