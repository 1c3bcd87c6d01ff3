#include "dpchroma/graph.hh"

#include "dpchroma/errors.hh"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>

namespace dpchroma {

namespace {

    class UnionFind {
    public:
        explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

        std::size_t find(std::size_t x)
        {
            while (parent_[x] != x) {
                parent_[x] = parent_[parent_[x]];
                x = parent_[x];
            }
            return x;
        }

        bool unite(std::size_t a, std::size_t b)
        {
            a = find(a);
            b = find(b);
            if (a == b)
                return false;
            parent_[std::max(a, b)] = std::min(a, b);
            return true;
        }

    private:
        std::vector<std::size_t> parent_;
    };

    std::string_view trim(std::string_view s)
    {
        auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; };
        while (!s.empty() && is_space(s.front()))
            s.remove_prefix(1);
        while (!s.empty() && is_space(s.back()))
            s.remove_suffix(1);
        return s;
    }

    std::vector<std::string_view> split_ws(std::string_view s)
    {
        std::vector<std::string_view> out;
        std::size_t i = 0;
        while (i < s.size()) {
            while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
                ++i;
            std::size_t j = i;
            while (j < s.size() && s[j] != ' ' && s[j] != '\t')
                ++j;
            if (j > i)
                out.push_back(s.substr(i, j - i));
            i = j;
        }
        return out;
    }

    std::optional<std::size_t> parse_index(std::string_view tok)
    {
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            return std::nullopt;
        return value;
    }

    [[noreturn]] void parse_fail(const std::string & what, std::size_t line)
    {
        throw InputError(what + " at line " + std::to_string(line));
    }

} // namespace

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)), adjacency_(vertex_count)
{
    std::set<std::pair<Vertex, Vertex>> seen;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto & e = edges_[i];
        if (e.u == e.v)
            throw InputError("loop on vertex " + std::to_string(e.u));
        if (e.u >= n_ || e.v >= n_)
            throw InputError("edge endpoint out of range in edge " + std::to_string(i));
        if (e.u > e.v)
            std::swap(e.u, e.v);
        if (!seen.emplace(e.u, e.v).second)
            throw InputError("repeated edge " + std::to_string(e.u) + " " + std::to_string(e.v));
        adjacency_[e.u].push_back({e.v, i});
        adjacency_[e.v].push_back({e.u, i});
    }
}

std::optional<EdgeIndex> Graph::edge_between(Vertex a, Vertex b) const
{
    if (a >= n_ || b >= n_)
        return std::nullopt;
    const auto & list = adjacency_[a].size() <= adjacency_[b].size() ? adjacency_[a] : adjacency_[b];
    Vertex target = adjacency_[a].size() <= adjacency_[b].size() ? b : a;
    for (const auto & inc : list)
        if (inc.neighbour == target)
            return inc.edge;
    return std::nullopt;
}

bool Graph::connected() const
{
    return component_count(*this, all_edges()) <= 1;
}

Cycle canonical_cycle(Cycle c)
{
    auto & vs = c.vertices;
    if (vs.empty())
        return c;
    auto min_it = std::min_element(vs.begin(), vs.end());
    std::rotate(vs.begin(), min_it, vs.end());
    if (vs.size() > 2 && vs.back() < vs[1])
        std::reverse(vs.begin() + 1, vs.end());
    return c;
}

bool is_cycle_of(const Graph & g, const Cycle & c)
{
    const auto & vs = c.vertices;
    if (vs.size() < 3)
        return false;
    std::set<Vertex> distinct(vs.begin(), vs.end());
    if (distinct.size() != vs.size())
        return false;
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (vs[i] >= g.vertex_count() || !g.adjacent(vs[i], vs[(i + 1) % vs.size()]))
            return false;
    return true;
}

std::vector<EdgeIndex> cycle_edge_sequence(const Graph & g, const Cycle & c)
{
    std::vector<EdgeIndex> out;
    const auto & vs = c.vertices;
    out.reserve(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
        out.push_back(*g.edge_between(vs[i], vs[(i + 1) % vs.size()]));
    return out;
}

EdgeSubset cycle_edges(const Graph & g, const Cycle & c)
{
    EdgeSubset s(g.edge_count());
    for (auto e : cycle_edge_sequence(g, c))
        s.set(e);
    return s;
}

Graph parse_graph(std::string_view text)
{
    std::optional<std::size_t> n;
    std::vector<Edge> edges;
    std::set<std::pair<Vertex, Vertex>> seen;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        auto line = trim(raw);
        if (line.empty() || line.front() == '#')
            continue;
        auto tokens = split_ws(line);

        if (!n) {
            if (tokens.size() != 1)
                parse_fail("malformed vertex count", line_no);
            n = parse_index(tokens[0]);
            if (!n)
                parse_fail("malformed vertex count", line_no);
            continue;
        }

        if (tokens.size() != 2)
            parse_fail("malformed edge line", line_no);
        auto a = parse_index(tokens[0]);
        auto b = parse_index(tokens[1]);
        if (!a || !b)
            parse_fail("malformed edge line", line_no);
        if (*a >= *n || *b >= *n)
            parse_fail("endpoint out of range", line_no);
        if (*a == *b)
            parse_fail("loop", line_no);
        Vertex u = std::min(*a, *b), v = std::max(*a, *b);
        if (seen.emplace(u, v).second)
            edges.push_back({u, v});
    }

    if (!n)
        throw InputError("missing vertex count");
    return Graph(*n, std::move(edges));
}

std::vector<std::size_t> component_labels(const Graph & g, const EdgeSubset & a)
{
    UnionFind uf(g.vertex_count());
    for (EdgeIndex e = 0; e < g.edge_count(); ++e)
        if (a.test(e))
            uf.unite(g.edge(e).u, g.edge(e).v);

    std::vector<std::size_t> label(g.vertex_count());
    std::vector<std::size_t> root_label(g.vertex_count(), g.vertex_count());
    std::size_t next = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto r = uf.find(v);
        if (root_label[r] == g.vertex_count())
            root_label[r] = next++;
        label[v] = root_label[r];
    }
    return label;
}

std::size_t component_count(const Graph & g, const EdgeSubset & a)
{
    UnionFind uf(g.vertex_count());
    std::size_t count = g.vertex_count();
    for (EdgeIndex e = 0; e < g.edge_count(); ++e)
        if (a.test(e) && uf.unite(g.edge(e).u, g.edge(e).v))
            --count;
    return count;
}

EdgeSubset non_bridge_edges(const Graph & g, const EdgeSubset & a)
{
    // Lowlink DFS over G<a>, iterative.
    const std::size_t n = g.vertex_count();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> disc(n, unvisited), low(n, 0);
    EdgeSubset bridges(g.edge_count());
    std::size_t timer = 0;

    struct Frame {
        Vertex v;
        EdgeIndex via;
        std::size_t next;
    };

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] != unvisited)
            continue;
        std::vector<Frame> stack{{root, unvisited, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            auto & f = stack.back();
            auto inc = g.incidences(f.v);
            if (f.next < inc.size()) {
                auto [w, e] = inc[f.next++];
                if (!a.test(e) || e == f.via)
                    continue;
                if (disc[w] == unvisited) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, e, 0});
                }
                else
                    low[f.v] = std::min(low[f.v], disc[w]);
            }
            else {
                Frame done = f;
                stack.pop_back();
                if (!stack.empty()) {
                    auto & parent = stack.back();
                    low[parent.v] = std::min(low[parent.v], low[done.v]);
                    if (low[done.v] > disc[parent.v])
                        bridges.set(done.via);
                }
            }
        }
    }
    return a - bridges;
}

std::vector<Cycle> enumerate_cycles(const Graph & g, std::size_t max_len, std::size_t cap)
{
    std::vector<Cycle> out;
    const std::size_t n = g.vertex_count();
    std::vector<char> on_path(n, 0);
    std::vector<Vertex> path;

    std::function<void(Vertex, Vertex)> extend = [&](Vertex start, Vertex x) {
        for (const auto & [y, e] : g.incidences(x)) {
            if (y == start) {
                if (path.size() >= 3 && path[1] < x) {
                    if (out.size() >= cap)
                        throw BudgetExceeded("cycle enumeration exceeded cap of " + std::to_string(cap));
                    out.push_back(Cycle{path});
                }
            }
            else if (y > start && !on_path[y] && path.size() < max_len) {
                on_path[y] = 1;
                path.push_back(y);
                extend(start, y);
                path.pop_back();
                on_path[y] = 0;
            }
        }
    };

    for (Vertex s = 0; s < n; ++s) {
        path.assign(1, s);
        on_path[s] = 1;
        extend(s, s);
        on_path[s] = 0;
    }
    return out;
}

TreeEnumeration for_each_spanning_tree(const Graph & g, std::size_t budget,
                                       const std::function<bool(const EdgeSubset &)> & consume,
                                       const std::optional<EdgeSubset> & required)
{
    if (!g.connected())
        throw InputError("spanning trees requested for a disconnected graph");

    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    TreeEnumeration stats;
    if (n == 0)
        return stats;

    EdgeSubset chosen(m), excluded(m);
    std::size_t start = 0;
    if (required) {
        UnionFind uf(n);
        for (auto e : required->members())
            if (!uf.unite(g.edge(e).u, g.edge(e).v))
                return stats; // required edges contain a cycle: no tree
        chosen = *required;
        start = required->count();
    }

    auto still_connected = [&](const EdgeSubset & removed) {
        return component_count(g, g.all_edges() - removed) == 1;
    };

    bool halt = false;
    // Include/exclude recursion in edge-index order, starting from the
    // required edges. Both branches are feasible-only, so every leaf is a
    // tree and no tree repeats.
    std::function<void(EdgeIndex, std::size_t)> recurse = [&](EdgeIndex e, std::size_t size) {
        if (halt)
            return;
        if (size + 1 == n) {
            if (stats.yielded >= budget) {
                stats.truncated = true;
                halt = true;
                return;
            }
            ++stats.yielded;
            if (!consume(chosen)) {
                stats.stopped = true;
                halt = true;
            }
            return;
        }
        if (e >= m)
            return;
        if (required && required->test(e)) {
            recurse(e + 1, size);
            return;
        }

        const auto & edge = g.edge(e);
        auto labels = component_labels(g, chosen);
        if (labels[edge.u] != labels[edge.v]) {
            chosen.set(e);
            recurse(e + 1, size + 1);
            chosen.reset(e);
        }
        if (halt)
            return;
        excluded.set(e);
        if (still_connected(excluded))
            recurse(e + 1, size);
        excluded.reset(e);
    };

    recurse(0, start);
    return stats;
}

SpanningTreeList spanning_trees(const Graph & g, std::size_t budget)
{
    SpanningTreeList list;
    auto stats = for_each_spanning_tree(g, budget, [&](const EdgeSubset & t) {
        list.trees.push_back(t);
        return true;
    });
    list.truncated = stats.truncated;
    return list;
}

EdgeSubset index_spanning_forest(const Graph & g)
{
    UnionFind uf(g.vertex_count());
    EdgeSubset forest(g.edge_count());
    for (EdgeIndex e = 0; e < g.edge_count(); ++e)
        if (uf.unite(g.edge(e).u, g.edge(e).v))
            forest.set(e);
    return forest;
}

std::optional<std::vector<Vertex>> shortest_path(const Graph & g, const EdgeSubset & allowed,
                                                 Vertex from, Vertex to)
{
    const std::size_t n = g.vertex_count();
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> parent(n, none);
    std::deque<Vertex> queue{from};
    parent[from] = from;
    while (!queue.empty() && parent[to] == none) {
        Vertex x = queue.front();
        queue.pop_front();
        for (const auto & [y, e] : g.incidences(x)) {
            if (!allowed.test(e) || parent[y] != none)
                continue;
            parent[y] = x;
            queue.push_back(y);
        }
    }
    if (parent[to] == none)
        return std::nullopt;
    std::vector<Vertex> path{to};
    while (path.back() != from)
        path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace dpchroma
