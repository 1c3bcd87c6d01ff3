#include "dpchroma/girth.hh"

#include <deque>

namespace dpchroma {

namespace {

    constexpr std::size_t unreached = static_cast<std::size_t>(-1);

    /// BFS over states 2*v + parity. Returns predecessor states.
    std::vector<std::size_t> parity_bfs(const Graph & g, const EdgeSubset & e0, std::size_t source,
                                        std::vector<std::size_t> & dist)
    {
        const std::size_t states = 2 * g.vertex_count();
        dist.assign(states, unreached);
        std::vector<std::size_t> pred(states, unreached);
        std::deque<std::size_t> queue{source};
        dist[source] = 0;
        while (!queue.empty()) {
            auto s = queue.front();
            queue.pop_front();
            Vertex x = s / 2;
            std::size_t p = s % 2;
            for (const auto & [y, e] : g.incidences(x)) {
                std::size_t t = 2 * y + (e0.test(e) ? 1 - p : p);
                if (dist[t] != unreached)
                    continue;
                dist[t] = dist[s] + 1;
                pred[t] = s;
                queue.push_back(t);
            }
        }
        return pred;
    }

    bool odd_intersection(const Graph & g, const EdgeSubset & e0, const Cycle & c)
    {
        return (cycle_edges(g, c) & e0).count() % 2 == 1;
    }

} // namespace

GirthResult edge_girth(const Graph & g, EdgeIndex e)
{
    auto allowed = g.all_edges();
    allowed.reset(e);
    auto p = shortest_path(g, allowed, g.edge(e).u, g.edge(e).v);
    if (!p)
        return {};
    return GirthResult{Girth::finite(p->size()), Cycle{std::move(*p)}};
}

std::optional<std::size_t> parity_cover_distance(const Graph & g, const EdgeSubset & e0,
                                                 Vertex from, int from_parity,
                                                 Vertex to, int to_parity)
{
    std::vector<std::size_t> dist;
    parity_bfs(g, e0, 2 * from + static_cast<std::size_t>(from_parity), dist);
    auto d = dist[2 * to + static_cast<std::size_t>(to_parity)];
    if (d == unreached)
        return std::nullopt;
    return d;
}

GirthResult edge_set_girth(const Graph & g, const EdgeSubset & e0)
{
    std::optional<Cycle> best;
    bool walk_failed = false;
    std::vector<std::size_t> dist;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) < 2)
            continue;
        auto pred = parity_bfs(g, e0, 2 * v, dist);
        auto target = 2 * v + 1;
        if (dist[target] == unreached || (best && dist[target] >= best->length()))
            continue;
        std::vector<Vertex> walk;
        for (auto s = pred[target]; s != 2 * v; s = pred[s])
            walk.push_back(s / 2);
        walk.push_back(v);
        Cycle c{std::vector<Vertex>(walk.rbegin(), walk.rend())};
        if (!is_cycle_of(g, c) || !odd_intersection(g, e0, c)) {
            walk_failed = true;
            break;
        }
        best = canonical_cycle(std::move(c));
    }

    if (walk_failed) {
        best.reset();
        for (auto & c : enumerate_cycles(g, g.vertex_count()))
            if (odd_intersection(g, e0, c) && (!best || c.length() < best->length()))
                best = std::move(c);
    }
    if (!best)
        return {};
    auto len = best->length();
    return GirthResult{Girth::finite(len), std::move(best)};
}

std::size_t forward_count(const Graph & g, const OrientedEdgeSet & estar, const Cycle & c)
{
    const auto & vs = c.vertices;
    auto seq = cycle_edge_sequence(g, c);
    std::size_t forward = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (estar.contains(seq[i]) && estar.tail(seq[i]) == vs[i])
            ++forward;
    return forward;
}

bool balanced_on(const Graph & g, const OrientedEdgeSet & estar, const Cycle & c)
{
    std::size_t hits = (cycle_edges(g, c) & estar.edges()).count();
    if (hits == 0)
        return true;
    if (hits % 2 == 1)
        return false;
    return 2 * forward_count(g, estar, c) == hits;
}

BalanceVerdict check_balance(const Graph & g, const OrientedEdgeSet & estar, std::size_t bound,
                             std::size_t cycle_cap)
{
    if (bound <= 3)
        return {};
    for (auto & c : enumerate_cycles(g, bound - 1, cycle_cap))
        if (!balanced_on(g, estar, c))
            return BalanceVerdict{false, std::move(c)};
    return {};
}

} // namespace dpchroma
