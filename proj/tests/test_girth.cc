#include "support.hh"

#include "dpchroma/errors.hh"
#include "dpchroma/fixtures.hh"
#include "dpchroma/girth.hh"

#include <doctest.h>

using namespace dpchroma;
namespace fx = dpchroma::fixtures;

namespace {

std::size_t as_number(const GirthResult & r)
{
    return r.girth.is_finite() ? r.girth.value() : 0;
}

OrientedEdgeSet random_orientation(std::mt19937_64 & rng, const Graph & g, double p)
{
    OrientedEdgeSet s(g);
    std::bernoulli_distribution pick(p), flip(0.5);
    for (EdgeIndex e = 0; e < g.edge_count(); ++e)
        if (pick(rng))
            s.add(g, e, flip(rng) ? g.edge(e).u : g.edge(e).v);
    return s;
}

} // namespace

TEST_CASE("girth values order with infinity on top")
{
    CHECK(Girth::finite(3) < Girth::finite(4));
    CHECK(Girth::finite(100) < Girth::infinite());
    CHECK(Girth::infinite() == Girth::infinite());
    CHECK(Girth::finite(4).is_even());
    CHECK_FALSE(Girth::infinite().is_even());
    CHECK_FALSE(Girth::infinite().is_odd());
    CHECK(Girth::infinite().to_string() == "infinite");
}

TEST_CASE("edge girth")
{
    auto c4 = fx::cycle(4);
    for (EdgeIndex e = 0; e < 4; ++e)
        CHECK(edge_girth(c4, e).girth == Girth::finite(4));
    auto k4 = fx::complete(4);
    for (EdgeIndex e = 0; e < 6; ++e) {
        auto r = edge_girth(k4, e);
        CHECK(r.girth == Girth::finite(3));
        REQUIRE(r.witness);
        CHECK(is_cycle_of(k4, *r.witness));
        CHECK(cycle_edges(k4, *r.witness).test(e));
        CHECK(r.witness->vertices.front() == k4.edge(e).u);
        CHECK(r.witness->vertices.back() == k4.edge(e).v);
    }
    Graph pendant(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    CHECK(edge_girth(pendant, 3).girth.is_infinite());
    CHECK_FALSE(edge_girth(pendant, 3).witness);

    std::vector<std::size_t> fig1_girths;
    auto f1 = fx::fig1();
    for (EdgeIndex e = 0; e < f1.edge_count(); ++e)
        fig1_girths.push_back(as_number(edge_girth(f1, e)));
    CHECK(std::count(fig1_girths.begin(), fig1_girths.end(), 3U) == 18);
    CHECK(fig1_girths[1] == 5);
    CHECK(fig1_girths[2] == 5);
    CHECK(fig1_girths[3] == 5);
}

TEST_CASE("edge-set girth")
{
    auto c4 = fx::cycle(4);
    CHECK(edge_set_girth(c4, EdgeSubset(4, {1})).girth == Girth::finite(4));
    CHECK(edge_set_girth(c4, EdgeSubset(4, {0, 2})).girth.is_infinite());
    CHECK(edge_set_girth(c4, EdgeSubset(4)).girth.is_infinite());
    auto k4 = fx::complete(4);
    auto r = edge_set_girth(k4, EdgeSubset(6, {0}));
    CHECK(r.girth == Girth::finite(3));
    REQUIRE(r.witness);
    CHECK(cycle_edges(k4, *r.witness).test(0));

    // a whole cut of K4 meets every triangle twice or not at all
    auto cut = EdgeSubset(6);
    for (EdgeIndex e = 0; e < 6; ++e)
        if ((k4.edge(e).u == 0) != (k4.edge(e).v == 0))
            cut.set(e);
    CHECK(edge_set_girth(k4, cut).girth.is_infinite());
}

TEST_CASE("edge-set girth agrees with cycle enumeration")
{
    std::mt19937_64 rng(43);
    for (int t = 0; t < 200; ++t) {
        std::size_t n = 3 + t % 5;
        auto g = testing::random_connected_graph(rng, n, 0.4);
        EdgeSubset e0(g.edge_count());
        std::bernoulli_distribution coin(0.3);
        for (EdgeIndex e = 0; e < g.edge_count(); ++e)
            if (coin(rng))
                e0.set(e);
        auto r = edge_set_girth(g, e0);
        CHECK(as_number(r) == testing::brute_set_girth(g, e0));
        if (r.witness) {
            CHECK(is_cycle_of(g, *r.witness));
            CHECK(r.witness->length() == r.girth.value());
            CHECK((cycle_edges(g, *r.witness) & e0).count() % 2 == 1);
        }
        for (EdgeIndex e = 0; e < g.edge_count(); ++e)
            CHECK(edge_set_girth(g, EdgeSubset(g.edge_count(), {e})).girth == edge_girth(g, e).girth);
    }
}

TEST_CASE("parity cover distance is symmetric")
{
    std::mt19937_64 rng(47);
    for (int t = 0; t < 60; ++t) {
        auto g = testing::random_connected_graph(rng, 6, 0.4);
        EdgeSubset e0(g.edge_count());
        for (EdgeIndex e = 0; e < g.edge_count(); e += 2)
            e0.set(e);
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            CHECK(parity_cover_distance(g, e0, v, 0, v, 1) == parity_cover_distance(g, e0, v, 1, v, 0));
    }
    auto c4 = fx::cycle(4);
    CHECK(parity_cover_distance(c4, EdgeSubset(4, {0}), 0, 0, 0, 1) == 4U);
    CHECK_FALSE(parity_cover_distance(c4, EdgeSubset(4), 0, 0, 0, 1));
}

TEST_CASE("balance")
{
    auto c4 = fx::cycle(4);
    Cycle whole{{0, 1, 2, 3}};
    OrientedEdgeSet fwd(c4);
    fwd.add(c4, 0, 0);
    fwd.add(c4, 2, 2);
    CHECK(forward_count(c4, fwd, whole) == 2);
    CHECK_FALSE(balanced_on(c4, fwd, whole));
    auto v = check_balance(c4, fwd, 5);
    CHECK_FALSE(v.balanced);
    REQUIRE(v.witness);
    CHECK(v.witness->length() == 4);

    OrientedEdgeSet mixed(c4);
    mixed.add(c4, 0, 0);
    mixed.add(c4, 2, 3);
    CHECK(balanced_on(c4, mixed, whole));
    CHECK(check_balance(c4, mixed, 5).balanced);

    auto k4 = fx::complete(4);
    CHECK(check_balance(k4, OrientedEdgeSet::low_to_high(k4, k4.all_edges()), 3).balanced);
    CHECK(check_balance(c4, fwd, 3).balanced);
    CHECK(check_balance(c4, fwd, 4).balanced);
    CHECK(balanced_on(c4, OrientedEdgeSet(c4), whole));

    OrientedEdgeSet odd(c4);
    odd.add(c4, 1, 1);
    CHECK_FALSE(balanced_on(c4, odd, whole));
    CHECK_THROWS_AS(check_balance(fx::complete(7), OrientedEdgeSet(fx::complete(7)), 8, 50), BudgetExceeded);
}

TEST_CASE("balance properties on random instances")
{
    std::mt19937_64 rng(53);
    for (int t = 0; t < 120; ++t) {
        auto g = testing::random_connected_graph(rng, 3 + t % 4, 0.5);
        auto s = random_orientation(rng, g, 0.4);
        auto r = s.reversed();
        for (std::size_t bound = 3; bound <= g.vertex_count() + 1; ++bound)
            CHECK(check_balance(g, s, bound).balanced == check_balance(g, r, bound).balanced);
        for (auto c : enumerate_cycles(g, g.vertex_count())) {
            auto hits = (cycle_edges(g, c) & s.edges()).count();
            if (hits % 2 == 1)
                CHECK_FALSE(balanced_on(g, s, c));
            auto flipped = c;
            std::reverse(flipped.vertices.begin(), flipped.vertices.end());
            CHECK(balanced_on(g, s, c) == balanced_on(g, s, flipped));
            CHECK(forward_count(g, s, c) + forward_count(g, s, flipped) == hits);
        }
    }
}
