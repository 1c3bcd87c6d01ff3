#include "fig1_certificate.hh"
#include "support.hh"

#include "dpchroma/chromatic.hh"
#include "dpchroma/classifier.hh"
#include "dpchroma/cover.hh"
#include "dpchroma/errors.hh"
#include "dpchroma/fixtures.hh"
#include "dpchroma/json_io.hh"

#include <doctest.h>

using namespace dpchroma;
namespace fx = dpchroma::fixtures;

namespace {

/// DP-good straight from the definition: some tree and some ordering of the
/// rest with non-decreasing odd girths, each edge closing a shortest cycle
/// inside the tree plus the edges labelled so far.
bool brute_dp_good(const Graph & g)
{
    std::vector<std::size_t> girth(g.edge_count(), 0);
    auto cycles = testing::brute_cycles(g);
    std::vector<EdgeSubset> cycle_sets;
    for (const auto & c : cycles) {
        EdgeSubset s(g.edge_count());
        for (auto e : testing::brute_cycle_edges(g, c))
            s.set(e);
        cycle_sets.push_back(s);
        for (auto e : s.members())
            if (girth[e] == 0 || c.size() < girth[e])
                girth[e] = c.size();
    }
    bool found = false;
    for_each_spanning_tree(g, 1'000'000, [&](const EdgeSubset & tree) {
        auto rest = (g.all_edges() - tree).members();
        std::sort(rest.begin(), rest.end());
        do {
            bool ok = true;
            EdgeSubset avail = tree;
            for (std::size_t i = 0; i < rest.size() && ok; ++i) {
                auto e = rest[i];
                if (girth[e] % 2 == 0 || (i > 0 && girth[e] < girth[rest[i - 1]])) {
                    ok = false;
                    break;
                }
                avail.set(e);
                bool closes = false;
                for (std::size_t c = 0; c < cycles.size() && !closes; ++c)
                    closes = cycles[c].size() == girth[e] && cycle_sets[c].test(e) && cycle_sets[c].is_subset_of(avail);
                ok = closes;
            }
            if (ok) {
                found = true;
                return false;
            }
        } while (std::next_permutation(rest.begin(), rest.end()));
        return true;
    });
    return found;
}

/// Both clauses of the orientation condition by cycle enumeration.
bool brute_balanced_orientation(const Graph & g, const OrientedEdgeSet & s)
{
    auto r0 = testing::brute_set_girth(g, s.edges());
    if (r0 == 0 || r0 % 2 == 1)
        return false;
    for (const auto & c : testing::brute_cycles(g)) {
        if (c.size() >= r0)
            continue;
        std::size_t hits = 0, forward = 0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            auto e = *g.edge_between(c[i], c[(i + 1) % c.size()]);
            if (!s.contains(e))
                continue;
            ++hits;
            forward += s.tail(e) == c[i];
        }
        if (hits > 0 && (hits % 2 == 1 || 2 * forward != hits))
            return false;
    }
    return true;
}

const DpGoodCertificate & certificate_of(const ClassifierVerdict & v)
{
    return std::get<DpGoodCertificate>(v.evidence);
}

} // namespace

TEST_CASE("fig1 certificate")
{
    auto g = fx::fig1();
    auto cert = testing::fig1_certificate();
    auto check = verify_dp_good_certificate(g, cert);
    CHECK_MESSAGE(check.ok(), check.reason);

    std::vector<std::size_t> girths;
    for (const auto & c : cert.witness_cycles)
        girths.push_back(c.length());
    CHECK(girths == std::vector<std::size_t>{3, 3, 3, 3, 3, 3, 5, 5});

    auto moved = cert;
    std::rotate(moved.labeling.begin(), moved.labeling.begin() + 6, moved.labeling.end());
    std::rotate(moved.witness_cycles.begin(), moved.witness_cycles.begin() + 6, moved.witness_cycles.end());
    CHECK(verify_dp_good_certificate(g, moved).fault == CertificateFault::order_not_monotone);

    auto v = check_dp_good(g);
    CHECK(v.status == VerdictStatus::satisfied);
    CHECK(v.implied == ImpliedClass::dp_star);
    CHECK(verify_dp_good_certificate(g, certificate_of(v)).ok());
    CHECK(v.summary.find("sufficient condition for membership in DP*") != std::string::npos);
}

TEST_CASE("certificate faults")
{
    auto g = fx::complete(4);
    // star at 0 plus the triangle edges 12, 13, 23
    DpGoodCertificate cert{EdgeSubset(6, {0, 1, 2}), {3, 4, 5}, {Cycle{{1, 2, 0}}, Cycle{{1, 3, 0}}, Cycle{{2, 3, 0}}}};
    CHECK(verify_dp_good_certificate(g, cert).ok());

    auto bad = cert;
    bad.tree = EdgeSubset(5);
    CHECK(verify_dp_good_certificate(g, bad).fault == CertificateFault::size_mismatch);
    bad = cert;
    bad.witness_cycles.pop_back();
    CHECK(verify_dp_good_certificate(g, bad).fault == CertificateFault::size_mismatch);
    bad = cert;
    bad.tree = EdgeSubset(6, {0, 1, 3});
    CHECK(verify_dp_good_certificate(g, bad).fault == CertificateFault::not_spanning_tree);
    bad = cert;
    bad.labeling = {3, 3, 5};
    CHECK(verify_dp_good_certificate(g, bad).fault == CertificateFault::labeling_mismatch);
    bad = cert;
    bad.witness_cycles[1] = Cycle{{1, 3, 2}};
    CHECK(verify_dp_good_certificate(g, bad).fault == CertificateFault::witness_uses_unavailable_edge);
    bad = cert;
    bad.witness_cycles[0] = Cycle{{0, 1, 3}};
    CHECK(verify_dp_good_certificate(g, bad).fault == CertificateFault::witness_misses_edge);
    bad = cert;
    bad.witness_cycles[0] = Cycle{{1, 2, 3, 0}};
    CHECK(verify_dp_good_certificate(g, bad).fault == CertificateFault::witness_not_shortest);
    bad = cert;
    bad.witness_cycles[0] = Cycle{{1, 2}};
    CHECK(verify_dp_good_certificate(g, bad).fault == CertificateFault::witness_not_cycle);

    auto c4 = fx::cycle(4);
    DpGoodCertificate even{EdgeSubset(4, {0, 1, 2}), {3}, {Cycle{{0, 1, 2, 3}}}};
    CHECK(verify_dp_good_certificate(c4, even).fault == CertificateFault::girth_not_odd);

    Graph diamond(4, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 3}});
    DpGoodCertificate twice{EdgeSubset(5, {0, 1, 3}), {2, 4}, {Cycle{{0, 1, 2}}, Cycle{{2, 1, 3}}}};
    CHECK(verify_dp_good_certificate(diamond, twice).ok());
    CHECK(to_string(CertificateFault::witnesses_not_distinct) == "witnesses-not-distinct");
}

TEST_CASE("DP-good search")
{
    auto tree = check_dp_good(fx::path(5));
    CHECK(tree.status == VerdictStatus::satisfied);
    CHECK(certificate_of(tree).labeling.empty());

    auto c4 = check_dp_good(fx::cycle(4));
    CHECK(c4.status == VerdictStatus::violated);
    CHECK(std::holds_alternative<Cycle>(c4.evidence));

    auto k4 = check_dp_good(fx::complete(4));
    CHECK(k4.status == VerdictStatus::satisfied);
    CHECK(verify_dp_good_certificate(fx::complete(4), certificate_of(k4)).ok());

    CHECK(check_dp_good(fx::fig1(), 2).status == VerdictStatus::inconclusive);
    CHECK_THROWS_AS(check_dp_good(Graph(4, {{0, 1}, {2, 3}})), InputError);
}

TEST_CASE("DP-good search matches the definition on small graphs")
{
    std::size_t total = 0, good = 0;
    for (std::size_t n = 3; n <= 5; ++n)
        testing::for_each_connected_graph(n, n + 2, [&](const Graph & g) {
            auto v = check_dp_good(g);
            bool expected = brute_dp_good(g);
            CHECK(v.status != VerdictStatus::inconclusive);
            CHECK((v.status == VerdictStatus::satisfied) == expected);
            if (v.status == VerdictStatus::satisfied)
                CHECK(verify_dp_good_certificate(g, certificate_of(v)).ok());
            ++total;
            good += expected;
        });
    CHECK(total > 500);
    CHECK(good > 50);

    std::mt19937_64 rng(59);
    for (int t = 0; t < 60; ++t) {
        auto g = testing::random_connected_graph(rng, 6, 0.35);
        if (g.edge_count() > 9)
            continue;
        CHECK((check_dp_good(g).status == VerdictStatus::satisfied) == brute_dp_good(g));
    }
}

TEST_CASE("DP-good graphs have matching DP and chromatic values at desk scale")
{
    std::size_t tested = 0;
    for (std::size_t n = 3; n <= 5; ++n)
        testing::for_each_connected_graph(n, n + 2, [&](const Graph & g) {
            if (check_dp_good(g).status != VerdictStatus::satisfied)
                return;
            auto p = chromatic_polynomial(g);
            for (std::size_t m : {2, 3})
                CHECK(dp_exact(g, m).value == static_cast<std::int64_t>(p.evaluate(m)));
            ++tested;
        });
    CHECK(tested > 50);
}

TEST_CASE("vertex orders")
{
    auto k4 = fx::complete(4);
    std::vector<Vertex> order{0, 1, 2, 3};
    do
        CHECK(check_vertex_order(k4, order).status == VerdictStatus::satisfied);
    while (std::next_permutation(order.begin(), order.end()));

    auto c4 = fx::cycle(4);
    order = {0, 1, 2, 3};
    do
        CHECK(check_vertex_order(c4, order).status == VerdictStatus::violated);
    while (std::next_permutation(order.begin(), order.end()));
    auto v = check_vertex_order(c4, std::vector<Vertex>{0, 1, 2, 3});
    CHECK(std::get<VertexOrderEvidence>(v.evidence).failed_position == 3U);
    CHECK(check_vertex_order(c4, std::nullopt).status == VerdictStatus::violated);

    auto k112 = check_vertex_order(fx::complete_multipartite({1, 1, 2}), std::nullopt);
    CHECK(k112.status == VerdictStatus::satisfied);
    CHECK(testing::brute_order_ok(fx::complete_multipartite({1, 1, 2}),
                                  std::get<VertexOrderEvidence>(k112.evidence).order));

    CHECK_THROWS_AS(check_vertex_order(c4, std::vector<Vertex>{0, 1, 1, 3}), InputError);
    CHECK_THROWS_AS(check_vertex_order(c4, std::vector<Vertex>{0, 1, 2}), InputError);
    CHECK(check_vertex_order(fx::complete(12), std::nullopt, 20).status == VerdictStatus::satisfied);
    CHECK(check_vertex_order(fx::complete(12), std::nullopt, 3).status == VerdictStatus::inconclusive);
}

TEST_CASE("vertex order search matches exhaustive orders")
{
    for (std::size_t n = 2; n <= 5; ++n)
        testing::for_each_connected_graph(n, 10, [&](const Graph & g) {
            auto v = check_vertex_order(g, std::nullopt);
            bool expected = testing::brute_order_exists(g);
            CHECK((v.status == VerdictStatus::satisfied) == expected);
            if (expected)
                CHECK(testing::brute_order_ok(g, std::get<VertexOrderEvidence>(v.evidence).order));
        });
}

TEST_CASE("orientation condition")
{
    auto c4 = fx::cycle(4);
    auto one = OrientedEdgeSet::low_to_high(c4, EdgeSubset(4, {0}));
    auto v = check_balanced_orientation(c4, one);
    CHECK(v.status == VerdictStatus::satisfied);
    CHECK(v.implied == ImpliedClass::dp_less);
    CHECK(std::get<OrientationEvidence>(v.evidence).r0 == Girth::finite(4));

    auto k4 = fx::complete(4);
    auto t = check_balanced_orientation(k4, OrientedEdgeSet::low_to_high(k4, EdgeSubset(6, {0})));
    CHECK(t.status == VerdictStatus::violated);
    CHECK(std::get<OrientationEvidence>(t.evidence).r0 == Girth::finite(3));

    CHECK_THROWS_AS(check_balanced_orientation(c4, OrientedEdgeSet(c4)), InputError);

    std::mt19937_64 rng(61);
    std::size_t satisfied = 0;
    for (int i = 0; i < 300; ++i) {
        auto g = testing::random_connected_graph(rng, 4 + i % 4, 0.3);
        OrientedEdgeSet s(g);
        std::bernoulli_distribution pick(0.3), flip(0.5);
        for (EdgeIndex e = 0; e < g.edge_count(); ++e)
            if (pick(rng))
                s.add(g, e, flip(rng) ? g.edge(e).u : g.edge(e).v);
        if (s.size() == 0)
            continue;
        auto got = check_balanced_orientation(g, s).status == VerdictStatus::satisfied;
        CHECK(got == brute_balanced_orientation(g, s));
        satisfied += got;
    }
    CHECK(satisfied > 10);
}

TEST_CASE("path condition between two vertex sets")
{
    auto c4 = fx::cycle(4);
    auto v = check_separated_sides(c4, {0}, {1}, EdgeSubset(4, {0}));
    CHECK(v.status == VerdictStatus::satisfied);
    CHECK(std::get<BipartitePathEvidence>(v.evidence).r0 == Girth::finite(4));

    auto g3 = fx::fig3b();
    EdgeSubset star(g3.edge_count());
    for (auto e : fx::fig3b_distinguished_edges())
        star.set(e);
    auto f = check_separated_sides(g3, fx::fig3b_side_one(), fx::fig3b_side_two(), star);
    CHECK(f.status == VerdictStatus::satisfied);
    CHECK(f.implied == ImpliedClass::dp_less);

    auto k4 = fx::complete(4);
    CHECK(check_separated_sides(k4, {0}, {1}, EdgeSubset(6, {0})).status == VerdictStatus::violated);
    CHECK_THROWS_AS(check_separated_sides(c4, {0}, {0}, EdgeSubset(4, {0})), InputError);
    CHECK_THROWS_AS(check_separated_sides(c4, {0}, {2}, EdgeSubset(4, {0})), InputError);
    CHECK_THROWS_AS(check_separated_sides(c4, {0}, {1}, EdgeSubset(4)), InputError);
}

TEST_CASE("path condition implies the orientation condition")
{
    std::mt19937_64 rng(67);
    std::size_t satisfied = 0;
    for (int i = 0; i < 400; ++i) {
        std::size_t n = 4 + i % 4;
        auto g = testing::random_connected_graph(rng, n, 0.35);
        std::vector<Vertex> one, two;
        std::uniform_int_distribution<int> side(0, 2);
        for (Vertex x = 0; x < n; ++x) {
            auto s = side(rng);
            if (s == 1)
                one.push_back(x);
            else if (s == 2)
                two.push_back(x);
        }
        EdgeSubset es(g.edge_count());
        OrientedEdgeSet oriented(g);
        std::bernoulli_distribution keep(0.6);
        for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
            auto [a, b] = g.edge(e);
            bool a1 = std::count(one.begin(), one.end(), a), b1 = std::count(one.begin(), one.end(), b);
            bool a2 = std::count(two.begin(), two.end(), a), b2 = std::count(two.begin(), two.end(), b);
            if (((a1 && b2) || (a2 && b1)) && keep(rng)) {
                es.set(e);
                oriented.add(g, e, a1 ? a : b);
            }
        }
        if (es.empty())
            continue;
        auto v = check_separated_sides(g, one, two, es);
        if (v.status == VerdictStatus::satisfied) {
            ++satisfied;
            CHECK(check_balanced_orientation(g, oriented).status == VerdictStatus::satisfied);
            CHECK(brute_balanced_orientation(g, oriented));
        }
    }
    CHECK(satisfied > 10);
}

TEST_CASE("classification")
{
    auto c6 = classify(fx::cycle(6));
    CHECK(c6[0].status == VerdictStatus::satisfied);
    CHECK(implied_class(c6) == ImpliedClass::dp_less);

    auto k4 = classify(fx::complete(4));
    CHECK(k4[1].status == VerdictStatus::satisfied);
    CHECK(implied_class(k4) == ImpliedClass::dp_star);

    auto f1 = classify(fx::fig1());
    CHECK(f1[0].status == VerdictStatus::violated);
    CHECK(f1[1].status == VerdictStatus::satisfied);
    CHECK(implied_class(f1) == ImpliedClass::dp_star);

    auto f3 = classify(fx::fig3b());
    CHECK(implied_class(f3) != ImpliedClass::dp_star);

    Budgets tight;
    tight.trees = 1;
    tight.search_nodes = 1;
    tight.candidate_sets = 1;
    auto b = classify(fx::complete_multipartite({2, 2, 2}), tight);
    for (const auto & v : b)
            CHECK((v.status != VerdictStatus::satisfied || v.condition == "DP-good"));

    CHECK_THROWS_AS(classify(Graph(2, {})), InputError);
    for (const auto & v : k4)
        if (v.status == VerdictStatus::satisfied)
            CHECK(v.summary.find("sufficient condition for membership in ") != std::string::npos);

    std::vector<ClassifierVerdict> clash{{"a", VerdictStatus::satisfied, ImpliedClass::dp_star, "", {}},
                                         {"b", VerdictStatus::satisfied, ImpliedClass::dp_less, "", {}}};
    CHECK_THROWS_AS(implied_class(clash), std::logic_error);
    CHECK(to_string(ImpliedClass::dp_approx) == "DP≈");
}

TEST_CASE("classification never claims both classes")
{
    for (std::size_t n = 3; n <= 5; ++n)
        testing::for_each_connected_graph(n, 10, [&](const Graph & g) { CHECK_NOTHROW(implied_class(classify(g))); });
}

TEST_CASE("girth-four bipartite search")
{
    auto c4 = fx::cycle(4);
    auto v = check_bipartite_girth_four(c4, {}, 1000);
    CHECK(v.status == VerdictStatus::satisfied);
    CHECK(edge_set_girth(c4, std::get<BipartitePathEvidence>(v.evidence).edges).girth == Girth::finite(4));
    // K4 is DP-good, so no candidate may reach set girth 4
    CHECK(check_bipartite_girth_four(fx::complete(4), {}, 100000).status == VerdictStatus::violated);
    CHECK(check_bipartite_girth_four(fx::complete(3), {}, 1000).status == VerdictStatus::violated);

    BipartiteCandidate given{{0}, {1}, EdgeSubset(4, {0})};
    auto x = check_bipartite_girth_four(c4, {given}, 1);
    CHECK(x.status == VerdictStatus::satisfied);
    CHECK(check_bipartite_girth_four(fx::complete(5), {}, 2).status == VerdictStatus::inconclusive);
}

TEST_CASE("certificates survive JSON")
{
    auto g = fx::fig1();
    auto cert = testing::fig1_certificate();
    auto j = io::certificate_json(cert);
    auto back = io::certificate_from_json(g, io::json::parse(j.dump()));
    CHECK(back == cert);
    CHECK(verify_dp_good_certificate(g, back).ok());
    CHECK_THROWS_AS(io::certificate_from_json(g, io::json::parse(R"({"tree": [0]})")), InputError);
}
