#pragma once

// Brute-force oracles for the test suites. Each one is written from the
// definitions directly and shares no code with the library beyond Graph.

#include "dpchroma/cover.hh"
#include "dpchroma/graph.hh"
#include "dpchroma/oriented_edge_set.hh"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace dpchroma::testing {

inline std::vector<std::pair<Vertex, Vertex>> all_pairs(std::size_t n)
{
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            out.emplace_back(u, v);
    return out;
}

inline Graph graph_from_mask(std::size_t n, std::uint64_t mask)
{
    auto pairs = all_pairs(n);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((mask >> i) & 1U)
            edges.push_back({pairs[i].first, pairs[i].second});
    return Graph(n, edges);
}

/// Every labelled connected graph on n vertices with at most max_edges edges.
inline void for_each_connected_graph(std::size_t n, std::size_t max_edges, const std::function<void(const Graph &)> & f)
{
    auto pairs = all_pairs(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        auto k = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (k + 1 < n || k > max_edges)
            continue;
        Graph g = graph_from_mask(n, mask);
        if (g.connected())
            f(g);
    }
}

/// Random connected graph: a random tree plus each remaining pair with probability p.
inline Graph random_connected_graph(std::mt19937_64 & rng, std::size_t n, double p)
{
    std::vector<Edge> edges;
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        edges.push_back({order[pick(rng)], order[i]});
    }
    std::bernoulli_distribution coin(p);
    for (auto [u, v] : all_pairs(n)) {
        bool present = std::any_of(edges.begin(), edges.end(), [&](const Edge & e) {
            return (e.u == u && e.v == v) || (e.u == v && e.v == u);
        });
        if (!present && coin(rng))
            edges.push_back({u, v});
    }
    std::shuffle(edges.begin(), edges.end(), rng);
    return Graph(n, edges);
}

inline Permutation random_permutation(std::mt19937_64 & rng, std::size_t m)
{
    Permutation p(m);
    std::iota(p.begin(), p.end(), 0U);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

inline Cover random_cover(std::mt19937_64 & rng, const Graph & g, std::size_t m)
{
    Cover c{m, {}};
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        c.perms.push_back(random_permutation(rng, m));
    return c;
}

/// Calls f on every vector in {0..m-1}^n.
inline void for_each_assignment(std::size_t n, std::size_t m, const std::function<void(const std::vector<std::uint32_t> &)> & f)
{
    if (m == 0 && n > 0)
        return;
    std::vector<std::uint32_t> s(n, 0);
    while (true) {
        f(s);
        std::size_t i = 0;
        while (i < n && ++s[i] == m)
            s[i++] = 0;
        if (i == n)
            return;
    }
}

inline std::int64_t brute_colorings(const Graph & g, std::size_t m)
{
    std::int64_t count = 0;
    for_each_assignment(g.vertex_count(), m, [&](const auto & s) {
        for (const auto & e : g.edges())
            if (s[e.u] == s[e.v])
                return;
        ++count;
    });
    return count;
}

inline std::int64_t brute_transversals(const Graph & g, const Cover & c)
{
    std::int64_t count = 0;
    for_each_assignment(g.vertex_count(), c.m, [&](const auto & s) {
        for (std::size_t e = 0; e < g.edge_count(); ++e)
            if (c.perms[e][s[g.edge(e).u]] == s[g.edge(e).v])
                return;
        ++count;
    });
    return count;
}

/// Minimum transversal count over all (m!)^|E| covers, no normalisation assumed.
inline std::int64_t brute_dp(const Graph & g, std::size_t m)
{
    std::vector<Permutation> all;
    Permutation p(m);
    std::iota(p.begin(), p.end(), 0U);
    do
        all.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    std::int64_t best = -1;
    std::vector<std::size_t> pick(g.edge_count(), 0);
    while (true) {
        Cover c{m, {}};
        for (auto i : pick)
            c.perms.push_back(all[i]);
        auto t = brute_transversals(g, c);
        if (best < 0 || t < best)
            best = t;
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == all.size())
            pick[i++] = 0;
        if (i == pick.size())
            return best;
    }
}

/// All simple cycles by extending vertex sequences that start at their
/// smallest vertex; each cycle appears as a sorted vertex-sequence key once.
inline std::vector<std::vector<Vertex>> brute_cycles(const Graph & g)
{
    std::set<std::vector<Vertex>> seen;
    std::vector<std::vector<Vertex>> out;
    std::size_t n = g.vertex_count();
    std::vector<Vertex> seq;
    std::vector<bool> used(n, false);
    std::function<void()> extend = [&]() {
        Vertex last = seq.back();
        if (seq.size() >= 3 && g.adjacent(last, seq.front())) {
            auto key = seq;
            if (key[1] > key.back())
                std::reverse(key.begin() + 1, key.end());
            if (seen.insert(key).second)
                out.push_back(key);
        }
        for (Vertex w = seq.front() + 1; w < n; ++w) {
            if (used[w] || !g.adjacent(last, w))
                continue;
            used[w] = true;
            seq.push_back(w);
            extend();
            seq.pop_back();
            used[w] = false;
        }
    };
    for (Vertex s = 0; s < n; ++s) {
        seq = {s};
        used.assign(n, false);
        used[s] = true;
        extend();
    }
    return out;
}

inline std::vector<EdgeIndex> brute_cycle_edges(const Graph & g, const std::vector<Vertex> & c)
{
    std::vector<EdgeIndex> out;
    for (std::size_t i = 0; i < c.size(); ++i)
        out.push_back(*g.edge_between(c[i], c[(i + 1) % c.size()]));
    return out;
}

/// Shortest cycle meeting e0 an odd number of times; 0 when none.
inline std::size_t brute_set_girth(const Graph & g, const EdgeSubset & e0)
{
    std::size_t best = 0;
    for (const auto & c : brute_cycles(g)) {
        std::size_t hits = 0;
        for (auto e : brute_cycle_edges(g, c))
            hits += e0.test(e);
        if (hits % 2 == 1 && (best == 0 || c.size() < best))
            best = c.size();
    }
    return best;
}

inline std::size_t brute_spanning_tree_count(const Graph & g)
{
    std::size_t n = g.vertex_count();
    std::size_t m = g.edge_count();
    std::size_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) + 1 != n)
            continue;
        std::vector<Vertex> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<Vertex(Vertex)> find = [&](Vertex x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
        bool acyclic = true;
        for (std::size_t e = 0; e < m && acyclic; ++e) {
            if (!((mask >> e) & 1U))
                continue;
            auto a = find(g.edge(e).u), b = find(g.edge(e).v);
            if (a == b)
                acyclic = false;
            else
                parent[a] = b;
        }
        count += acyclic;
    }
    return count;
}

/// Chordal iff repeatedly deleting a simplicial vertex empties the graph.
inline bool brute_chordal(const Graph & g)
{
    std::size_t n = g.vertex_count();
    std::vector<bool> alive(n, true);
    for (std::size_t round = 0; round < n; ++round) {
        bool removed = false;
        for (Vertex v = 0; v < n && !removed; ++v) {
            if (!alive[v])
                continue;
            std::vector<Vertex> nb;
            for (const auto & inc : g.incidences(v))
                if (alive[inc.neighbour])
                    nb.push_back(inc.neighbour);
            bool clique = true;
            for (std::size_t i = 0; i < nb.size() && clique; ++i)
                for (std::size_t j = i + 1; j < nb.size() && clique; ++j)
                    clique = g.adjacent(nb[i], nb[j]);
            if (clique) {
                alive[v] = false;
                removed = true;
            }
        }
        if (!removed)
            return false;
    }
    return true;
}

/// Order condition checked straight from the definition.
inline bool brute_order_ok(const Graph & g, const std::vector<Vertex> & order)
{
    std::vector<bool> before(g.vertex_count(), false);
    before[order[0]] = true;
    for (std::size_t i = 1; i < order.size(); ++i) {
        std::vector<Vertex> back;
        for (const auto & inc : g.incidences(order[i]))
            if (before[inc.neighbour])
                back.push_back(inc.neighbour);
        if (back.empty())
            return false;
        std::vector<bool> reached(g.vertex_count(), false);
        std::vector<Vertex> stack{back[0]};
        reached[back[0]] = true;
        std::size_t seen = 1;
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            for (auto y : back)
                if (!reached[y] && g.adjacent(x, y)) {
                    reached[y] = true;
                    ++seen;
                    stack.push_back(y);
                }
        }
        if (seen != back.size())
            return false;
        before[order[i]] = true;
    }
    return true;
}

inline bool brute_order_exists(const Graph & g)
{
    std::vector<Vertex> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    do
        if (brute_order_ok(g, order))
            return true;
    while (std::next_permutation(order.begin(), order.end()));
    return false;
}

/// Number of assignments on the cycle realising every one of its edges.
inline std::int64_t brute_cycle_copies(const Graph & g, const Cover & c, const std::vector<Vertex> & cyc)
{
    auto edges = brute_cycle_edges(g, cyc);
    std::int64_t count = 0;
    for_each_assignment(cyc.size(), c.m, [&](const auto & s) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            Vertex a = cyc[i];
            auto sa = s[i], sb = s[(i + 1) % cyc.size()];
            const auto & e = g.edge(edges[i]);
            bool ok = e.u == a ? c.perms[edges[i]][sa] == sb : c.perms[edges[i]][sb] == sa;
            if (!ok)
                return;
        }
        ++count;
    });
    return count;
}

} // namespace dpchroma::testing
