#include <doctest.h>

#include <random>

#include "hyperind/structure.hpp"
#include "oracles.hpp"

using namespace hyperind;

namespace {

std::map<oracle::Triple, int> triples_of(const CycleReport& r) {
    std::map<oracle::Triple, int> out;
    for (const auto& w : r.witnesses)
        out[oracle::sorted_triple(w.edges[0].vertices(), w.edges[1].vertices(), w.edges[2].vertices())] =
            w.h2_edges;
    return out;
}

std::multiset<oracle::Quad> quads_of(const CycleReport& r) {
    std::multiset<oracle::Quad> out;
    for (const auto& w : r.witnesses) {
        oracle::Quad q{w.edges[0].vertices(), w.edges[1].vertices(), w.edges[2].vertices(),
                       w.edges[3].vertices()};
        std::sort(q.begin(), q.end());
        out.insert(q);
    }
    return out;
}

std::set<int> violated(const BouquetReport& r) {
    std::set<int> out;
    for (const auto& v : r.violations) out.insert(static_cast<int>(v.property));
    return out;
}

LayeredHypergraph clean_ring() {
    LayeredHypergraph h(12, 4);
    h.add_edge({0, 1, 2, 3});
    h.add_edge({3, 4, 5, 6});
    h.add_edge({6, 7, 8, 9});
    h.add_edge({9, 10, 11, 0});
    return h;
}

}  // namespace

TEST_CASE("two-cycles by exact intersection size") {
    LayeredHypergraph h(6, 4);
    h.add_edge({0, 1, 2, 3});
    h.add_edge({2, 3, 4, 5});
    CHECK(count_two_cycles(h, 2).count == 1);
    CHECK(count_two_cycles(h, 3).count == 0);
    auto w = count_two_cycles(h, 2).witnesses.at(0);
    CHECK(w.meeting == std::vector<VertexId>{2, 3});

    LayeredHypergraph disjoint(8, 4);
    disjoint.add_edge({0, 1, 2, 3});
    disjoint.add_edge({4, 5, 6, 7});
    for (int ell = 2; ell <= 3; ++ell) CHECK(count_two_cycles(disjoint, ell).count == 0);

    std::mt19937_64 g(1);
    for (int trial = 0; trial < 40; ++trial) {
        auto r = oracle::random_layered(g, 12, 5, 35);
        for (int ell = 2; ell <= 4; ++ell)
            CHECK(count_two_cycles(r, ell).count == oracle::two_cycles(r, static_cast<std::size_t>(ell)));
    }
}

TEST_CASE("linear three-cycles count layer-2 members") {
    LayeredHypergraph h(8, 3);
    h.add_edge({0, 1, 5});
    h.add_edge({1, 2, 6});
    h.add_edge({2, 0, 7});
    auto r = find_linear_three_cycles(h);
    REQUIRE(r.count == 1);
    CHECK(r.witnesses[0].h2_edges == 0);

    LayeredHypergraph m(8, 3);
    m.add_edge({0, 1});
    m.add_edge({1, 2});
    m.add_edge({0, 2, 7});
    auto r2 = find_linear_three_cycles(m);
    REQUIRE(r2.count == 1);
    CHECK(r2.witnesses[0].h2_edges == 2);

    std::mt19937_64 g(2);
    for (int trial = 0; trial < 40; ++trial) {
        auto rh = oracle::random_layered(g, 12, 4, 35);
        auto got = find_linear_three_cycles(rh);
        auto want = oracle::linear_three_cycles(rh);
        CHECK(got.count == want.size());
        CHECK(triples_of(got) == want);
    }
}

TEST_CASE("clean four-cycles") {
    auto ring = clean_ring();
    auto r = find_clean_four_cycles(ring);
    CHECK(r.count == 1);
    LayeredHypergraph chord(12, 4);
    chord.add_edge({0, 1, 2, 3});
    chord.add_edge({3, 4, 5, 6});
    chord.add_edge({1, 6, 8, 9});  // e3 now meets e1 in vertex 1
    chord.add_edge({9, 10, 11, 0});
    CHECK(find_clean_four_cycles(chord).count == 0);

    std::mt19937_64 g(3);
    for (int trial = 0; trial < 30; ++trial) {
        auto rh = oracle::random_layered(g, 13, 4, 25);
        auto got = find_clean_four_cycles(rh);
        auto want = oracle::clean_four_cycles(rh);
        CHECK(got.count == want.size());
        CHECK(quads_of(got) == want);
    }
}

TEST_CASE("witness limits never change counts") {
    std::mt19937_64 g(4);
    auto h = oracle::random_layered(g, 12, 4, 40);
    auto full = find_linear_three_cycles(h);
    auto capped = find_linear_three_cycles(h, 1);
    CHECK(capped.count == full.count);
    CHECK(capped.witnesses.size() <= 1);
}

TEST_CASE("check_bouquet") {
    LayeredHypergraph empty(5, 4);
    CHECK(check_bouquet(empty).holds());

    LayeredHypergraph cross(5, 4);
    cross.add_edge({0, 1, 2});
    cross.add_edge({1, 2, 3, 4});
    auto r = check_bouquet(cross);
    CHECK_FALSE(r.holds());
    CHECK(violated(r) == std::set<int>{0});

    // A 12-vertex tree-like hypergraph without cycles of length 2, 3 or 4.
    LayeredHypergraph tree(12, 4);
    tree.add_edge({0, 1, 2, 3});
    tree.add_edge({3, 4, 5});
    tree.add_edge({5, 6});
    tree.add_edge({6, 7, 8, 9});
    tree.add_edge({0, 10, 11});
    CHECK(check_bouquet(tree).holds());

    std::mt19937_64 g(5);
    for (int trial = 0; trial < 40; ++trial) {
        auto rh = oracle::random_layered(g, 12, 4, 30);
        CHECK(violated(check_bouquet(rh)) == oracle::bouquet_violations(rh));
    }
}

TEST_CASE("bouquet_violation_adding agrees with a full check") {
    std::mt19937_64 g(6);
    for (int trial = 0; trial < 60; ++trial) {
        auto h = oracle::random_layered(g, 12, 4, 12);
        if (!check_bouquet(h).holds()) continue;
        int i = 2 + static_cast<int>(g() % 3);
        std::set<VertexId> f;
        while (f.size() < static_cast<std::size_t>(i)) f.insert(static_cast<VertexId>(g() % 12));
        Edge e(std::vector<VertexId>(f.begin(), f.end()));
        if (h.contains(e)) continue;
        auto bigger = h;
        bigger.add_edge(e);
        CHECK(bouquet_violation_adding(h, e).has_value() == !check_bouquet(bigger).holds());
    }
}

TEST_CASE("strengthened triple pattern") {
    LayeredHypergraph h(5, 3);
    h.add_edge({0, 1, 2});
    h.add_edge({1, 2, 3});
    h.add_edge({2, 3, 4});
    auto w = check_property_vprime(h);
    REQUIRE(w.size() == 1);
    CHECK(w[0][1] == Edge{1, 2, 3});

    LayeredHypergraph tree(10, 4);
    tree.add_edge({0, 1, 2, 3});
    tree.add_edge({3, 4, 5, 6});
    tree.add_edge({6, 7});
    REQUIRE(check_bouquet(tree).holds());
    CHECK(check_property_vprime(tree).empty());

    std::mt19937_64 g(7);
    for (int trial = 0; trial < 40; ++trial) {
        auto rh = oracle::random_layered(g, 12, 5, 35);
        std::multiset<oracle::Triple> got;
        for (const auto& t : check_property_vprime(rh)) {
            auto lo = std::min(t[0].vertices(), t[2].vertices());
            auto hi = std::max(t[0].vertices(), t[2].vertices());
            got.insert(oracle::Triple{lo, t[1].vertices(), hi});
        }
        CHECK(got == oracle::vprime(rh));
    }
}

TEST_CASE("link components") {
    LayeredHypergraph h(7, 3);
    h.add_edge({0, 1, 2});
    h.add_edge({0, 2, 3});
    h.add_edge({0, 5, 6});
    auto comps = link_components(h, 0);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].members.size() == 2);
    CHECK(comps[0].vertices == VertexSet{1, 2, 3});
    CHECK(comps[1].members.size() == 1);
    CHECK(comps[1].layer == 3);
    CHECK(link_components(h, 4).empty());

    std::mt19937_64 g(8);
    for (int trial = 0; trial < 40; ++trial) {
        auto rh = oracle::random_layered(g, 12, 4, 30);
        for (VertexId x = 0; x < 12; ++x) {
            std::set<std::vector<oracle::LinkPiece>> got;
            for (const auto& c : link_components(rh, x)) {
                std::vector<oracle::LinkPiece> ps;
                for (const auto& m : c.members) ps.push_back({m.layer, m.vertices});
                std::sort(ps.begin(), ps.end());
                got.insert(ps);
            }
            CHECK(got == oracle::link_components(rh, x));
        }
    }
}

TEST_CASE("link components of BOUQUET hypergraphs obey the size bound") {
    LayeredHypergraph k4(4, 3);
    for (auto e : {Edge{0, 1, 2}, Edge{0, 1, 3}, Edge{0, 2, 3}, Edge{1, 2, 3}}) k4.add_edge(e);
    REQUIRE(check_bouquet(k4).holds());
    for (VertexId x = 0; x < 4; ++x) CHECK_FALSE(link_component_bound_violation(k4, x).has_value());
}

TEST_CASE("classify intersecting families") {
    auto s = classify_intersecting_family({Edge{0, 1, 2}, Edge{0, 1, 3}, Edge{0, 1, 4}});
    CHECK(s.kind == FamilyClass::Kind::Sunflower);
    CHECK(s.core == Edge{0, 1});
    auto c = classify_intersecting_family({Edge{0, 1, 2}, Edge{0, 1, 3}, Edge{0, 2, 3}, Edge{1, 2, 3}});
    CHECK(c.kind == FamilyClass::Kind::Clique);
    CHECK(c.uniformity == 3);
    auto one = classify_intersecting_family({Edge{0, 1, 2}});
    CHECK(one.kind == FamilyClass::Kind::Sunflower);
    CHECK(one.core == Edge{0, 1, 2});
    auto na = classify_intersecting_family({Edge{0, 1, 2, 3}, Edge{0, 1, 4, 5}});
    CHECK(na.kind == FamilyClass::Kind::NotApplicable);
    CHECK(na.witness.has_value());
}

TEST_CASE("common neighbour maximum") {
    LayeredHypergraph h(4, 3);
    h.add_edge({0, 1, 2});
    h.add_edge({0, 1, 3});
    CHECK(common_neighbor_max(h, 3) == 1);
    LayeredHypergraph d(6, 3);
    d.add_edge({0, 1, 2});
    d.add_edge({3, 4, 5});
    CHECK(common_neighbor_max(d, 3) == 0);

    std::mt19937_64 g(9);
    for (int trial = 0; trial < 30; ++trial) {
        auto rh = oracle::random_layered(g, 10, 4, 30);
        for (int i = 2; i <= 4; ++i) CHECK(common_neighbor_max(rh, i) == oracle::gamma(rh, i));
    }
}
