#include <doctest.h>

#include <cmath>

#include "hyperind/generators.hpp"
#include "hyperind/structure.hpp"
#include "oracles.hpp"

using namespace hyperind;

TEST_CASE("gen_gnp extremes") {
    Rng rng({1, "gnp"});
    CHECK(gen_gnp(15, 3, 0.0, rng).num_edges() == 0);
    CHECK(gen_gnp(15, 3, 1.0, rng).num_edges() == 455);
    CHECK(gen_gnp(9, 4, 1.0, rng).num_edges() == 126);
}

TEST_CASE("gen_gnp edge count follows the binomial law") {
    const double mean = 0.1 * 1140, sd = std::sqrt(1140 * 0.1 * 0.9);
    double total = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Rng rng({seed, "gnp"});
        const double m = static_cast<double>(gen_gnp(20, 3, 0.1, rng).num_edges());
        CHECK(std::fabs(m - mean) <= 5 * sd);
        total += m;
    }
    CHECK(std::fabs(total / 200 - mean) <= 0.03 * mean);
}

TEST_CASE("gen_gnp skip sampling on large instances") {
    // C(3000, 4) is far above the enumeration limit, so this takes the skip path.
    const double p = std::pow(5.0 / 3000, 3);
    const double expect = binomial(3000, 4) * p;
    double total = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng({seed, "gnp"});
        auto h = gen_gnp(3000, 4, p, rng);
        total += static_cast<double>(h.num_edges());
        for (const auto& e : h.layer(4)) REQUIRE(e.size() == 4);
    }
    const double mean = total / 20;
    CHECK(std::fabs(mean - expect) <= 5 * std::sqrt(expect / 20));
}

TEST_CASE("gen_gnp is deterministic per stream") {
    Rng a({9, "gnp"}), b({9, "gnp"}), c({10, "gnp"});
    auto ha = gen_gnp(500, 3, 0.00005, a);
    auto hb = gen_gnp(500, 3, 0.00005, b);
    auto hc = gen_gnp(500, 3, 0.00005, c);
    CHECK(ha == hb);
    CHECK_FALSE(ha == hc);
}

TEST_CASE("gen_girth5") {
    Rng r0({1, "g5"}), r1({1, "g5"});
    auto z = gen_girth5(30, 3, 0.0, r0);
    CHECK(z.graph == gen_gnp(30, 3, 0.0, r1));
    CHECK(z.kept.size() == 30);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng({seed, "g5"});
        auto g = gen_girth5(400, 3, std::pow(4.0 / 400, 2), rng);
        CHECK(check_bouquet(g.graph).holds());
        CHECK(find_linear_three_cycles(g.graph).count == 0);
        CHECK(find_clean_four_cycles(g.graph).count == 0);
        CHECK(count_two_cycles(g.graph, 2).count == 0);
        CHECK(g.graph.n() == g.kept.size());
        CHECK(g.sampled_edges >= g.graph.num_edges());
    }
}

TEST_CASE("gen_disjoint_cliques and its independence number") {
    auto h = gen_disjoint_cliques(8, 3, 4);
    CHECK(h.num_edges() == 8);
    CHECK(disjoint_cliques_alpha(8, 3, 4) == 4);
    CHECK(oracle::alpha(h) == 4);
    CHECK(disjoint_cliques_alpha(7, 3, 7) == 2);
    CHECK(oracle::alpha(gen_disjoint_cliques(7, 3, 7)) == 2);
    for (std::size_t n = 3; n <= 13; ++n)
        for (int k = 2; k <= 4; ++k)
            for (std::size_t s = static_cast<std::size_t>(k); s <= n; ++s)
                CHECK(disjoint_cliques_alpha(n, k, s) == oracle::alpha(gen_disjoint_cliques(n, k, s)));
}

TEST_CASE("gen_layered_bouquet") {
    Rng r({1, "lb"});
    LayeredTargets none{20.0, {0, 0, 0, 0, 0}};
    CHECK(gen_layered_bouquet(100, 4, none, r).graph.num_edges() == 0);
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        Rng rng({seed, "lb"});
        const double T = 12.0;
        auto caps = layer_degree_caps(3, T);
        LayeredTargets t{T, caps};
        auto res = gen_layered_bouquet(150, 3, t, rng);
        CHECK(check_bouquet(res.graph).holds());
        for (int i = 2; i <= 3; ++i) {
            auto mm = oracle::max_min(res.graph, i, 1);
            CHECK(mm.first <= res.vertex_cap[i]);
            CHECK(mm.first == res.achieved[i]);
        }
        CHECK(oracle::max_min(res.graph, 3, 2).first <= res.codegree_cap[3]);
    }
    auto caps = layer_degree_caps(4, std::exp(3.0));
    CHECK(caps[2] == static_cast<std::size_t>(std::floor(std::exp(3.0) * std::pow(3.0, 2.0 / 3))));
    CHECK(caps[4] == static_cast<std::size_t>(std::floor(std::exp(9.0))));
    auto co = layer_codegree_caps(4, std::exp(3.0));
    CHECK(co[3] == 1);
}

TEST_CASE("generate dispatch") {
    GenSpec s;
    s.kind = GenKind::Gnp;
    s.n = 200;
    s.k = 3;
    s.t = 4.0;
    s.seed = 3;
    CHECK(gen_edge_probability(s) == doctest::Approx(std::pow(4.0 / 200, 2)));
    auto a = generate(s), b = generate(s);
    CHECK(a.graph == b.graph);
    CHECK(gen_kind_from_string("bouquet") == GenKind::LayeredBouquet);
    CHECK(std::string(to_string(GenKind::DisjointCliques)) == "cliques");
    s.kind = GenKind::DisjointCliques;
    s.s = 0;
    CHECK_THROWS_AS(generate(s), Error);
}
