#include "dpchroma/chromatic.hh"

#include "dpchroma/errors.hh"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <utility>

namespace dpchroma {

namespace {

    using Pair = std::pair<std::uint32_t, std::uint32_t>;

    struct Shape {
        std::uint32_t n = 0;
        std::vector<Pair> edges; // u < v, sorted, unique
    };

    struct KeyHash {
        std::size_t operator()(const std::vector<std::uint32_t> & key) const noexcept
        {
            std::size_t h = 1469598103934665603ULL;
            for (auto x : key) {
                h ^= x;
                h *= 1099511628211ULL;
            }
            return h;
        }
    };

    class DeletionContraction {
    public:
        Polynomial run(Shape s);

    private:
        Polynomial connected(Shape s);
        std::unordered_map<std::vector<std::uint32_t>, Polynomial, KeyHash> memo_;
    };

    void normalise(Shape & s)
    {
        for (auto & [a, b] : s.edges)
            if (a > b)
                std::swap(a, b);
        std::sort(s.edges.begin(), s.edges.end());
        s.edges.erase(std::unique(s.edges.begin(), s.edges.end()), s.edges.end());
    }

    std::vector<std::uint32_t> degrees(const Shape & s)
    {
        std::vector<std::uint32_t> d(s.n, 0);
        for (auto [a, b] : s.edges) {
            ++d[a];
            ++d[b];
        }
        return d;
    }

    Shape remove_vertex(const Shape & s, std::uint32_t x)
    {
        Shape out;
        out.n = s.n - 1;
        for (auto [a, b] : s.edges) {
            if (a == x || b == x)
                continue;
            out.edges.emplace_back(a > x ? a - 1 : a, b > x ? b - 1 : b);
        }
        normalise(out);
        return out;
    }

    Shape contract(const Shape & s, std::uint32_t keep, std::uint32_t gone)
    {
        Shape out;
        out.n = s.n - 1;
        auto map = [&](std::uint32_t x) -> std::uint32_t {
            if (x == gone)
                x = keep;
            return x > gone ? x - 1 : x;
        };
        for (auto [a, b] : s.edges) {
            auto x = map(a), y = map(b);
            if (x != y)
                out.edges.emplace_back(x, y);
        }
        normalise(out);
        return out;
    }

    /// Relabel by a degree-refined order so that many isomorphic
    /// subproblems collide on the same key. Equality of keys is exact
    /// equality of relabelled edge lists, never a hash match alone.
    std::vector<std::uint32_t> memo_key(const Shape & s)
    {
        auto deg = degrees(s);
        std::vector<std::vector<std::uint32_t>> nbr_deg(s.n);
        for (auto [a, b] : s.edges) {
            nbr_deg[a].push_back(deg[b]);
            nbr_deg[b].push_back(deg[a]);
        }
        for (auto & v : nbr_deg)
            std::sort(v.begin(), v.end());
        std::vector<std::uint32_t> order(s.n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) {
            if (deg[x] != deg[y])
                return deg[x] > deg[y];
            return nbr_deg[x] > nbr_deg[y];
        });
        std::vector<std::uint32_t> label(s.n);
        for (std::uint32_t i = 0; i < s.n; ++i)
            label[order[i]] = i;
        std::vector<Pair> relabelled;
        for (auto [a, b] : s.edges) {
            auto x = label[a], y = label[b];
            relabelled.emplace_back(std::min(x, y), std::max(x, y));
        }
        std::sort(relabelled.begin(), relabelled.end());
        std::vector<std::uint32_t> key{s.n};
        for (auto [a, b] : relabelled) {
            key.push_back(a);
            key.push_back(b);
        }
        return key;
    }

    std::vector<Shape> split_components(const Shape & s)
    {
        std::vector<std::uint32_t> parent(s.n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::uint32_t x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        for (auto [a, b] : s.edges)
            parent[find(a)] = find(b);

        std::vector<std::int64_t> comp_of_root(s.n, -1);
        std::vector<std::uint32_t> local(s.n);
        std::vector<Shape> parts;
        for (std::uint32_t v = 0; v < s.n; ++v) {
            auto r = find(v);
            if (comp_of_root[r] < 0) {
                comp_of_root[r] = static_cast<std::int64_t>(parts.size());
                parts.emplace_back();
            }
            auto & part = parts[static_cast<std::size_t>(comp_of_root[r])];
            local[v] = part.n++;
        }
        for (auto [a, b] : s.edges)
            parts[static_cast<std::size_t>(comp_of_root[find(a)])].edges.emplace_back(local[a], local[b]);
        for (auto & p : parts)
            normalise(p);
        return parts;
    }

    Polynomial DeletionContraction::run(Shape s)
    {
        normalise(s);
        if (s.n == 0)
            return Polynomial::constant(1);
        auto parts = split_components(s);
        Polynomial product = Polynomial::constant(1);
        for (auto & p : parts)
            product = product * connected(std::move(p));
        return product;
    }

    Polynomial DeletionContraction::connected(Shape s)
    {
        const std::size_t n = s.n, e = s.edges.size();
        if (e == 0)
            return Polynomial::monomial(n); // n == 1 here
        Polynomial m_minus_1(std::vector<BigInt>{-1, 1});
        if (e + 1 == n) {
            Polynomial p = Polynomial::monomial(1);
            for (std::size_t i = 1; i < n; ++i)
                p = p * m_minus_1;
            return p;
        }
        if (e == n * (n - 1) / 2)
            return Polynomial::falling_factorial(n);

        auto deg = degrees(s);
        for (std::uint32_t v = 0; v < s.n; ++v)
            if (deg[v] == 1)
                return m_minus_1 * connected(remove_vertex(s, v));

        auto key = memo_key(s);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;

        // Split on an edge at a minimum-degree vertex towards its
        // highest-degree neighbour.
        std::uint32_t u = 0;
        for (std::uint32_t v = 1; v < s.n; ++v)
            if (deg[v] < deg[u])
                u = v;
        std::size_t pick = e;
        for (std::size_t i = 0; i < e; ++i) {
            auto [a, b] = s.edges[i];
            if (a != u && b != u)
                continue;
            auto w = a == u ? b : a;
            if (pick == e) {
                pick = i;
                continue;
            }
            auto [pa, pb] = s.edges[pick];
            auto pw = pa == u ? pb : pa;
            if (deg[w] > deg[pw])
                pick = i;
        }
        auto [a, b] = s.edges[pick];

        Shape deleted = s;
        deleted.edges.erase(deleted.edges.begin() + static_cast<std::ptrdiff_t>(pick));
        Polynomial result = run(std::move(deleted)) - run(contract(s, a, b));
        memo_.emplace(std::move(key), result);
        return result;
    }

    Shape shape_of(const Graph & g)
    {
        Shape s;
        s.n = static_cast<std::uint32_t>(g.vertex_count());
        for (const auto & e : g.edges())
            s.edges.emplace_back(static_cast<std::uint32_t>(e.u), static_cast<std::uint32_t>(e.v));
        return s;
    }

} // namespace

Polynomial chromatic_polynomial(const Graph & g)
{
    DeletionContraction dc;
    return dc.run(shape_of(g));
}

Polynomial chromatic_incl_excl(const Graph & g, std::size_t edge_cap)
{
    const std::size_t edges = g.edge_count();
    if (edges > edge_cap || edges >= 63)
        throw BudgetExceeded("inclusion-exclusion over " + std::to_string(edges) +
                             " edges exceeds cap of " + std::to_string(edge_cap));
    const std::size_t n = g.vertex_count();
    std::vector<std::int64_t> by_components(n + 1, 0);
    std::vector<std::uint32_t> parent(n);

    const std::uint64_t total = std::uint64_t{1} << edges;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::uint32_t x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        std::size_t c = n;
        for (std::size_t e = 0; e < edges; ++e) {
            if (!((mask >> e) & 1U))
                continue;
            auto x = find(static_cast<std::uint32_t>(g.edge(e).u));
            auto y = find(static_cast<std::uint32_t>(g.edge(e).v));
            if (x != y) {
                parent[x] = y;
                --c;
            }
        }
        by_components[c] += (std::popcount(mask) % 2 == 0) ? 1 : -1;
    }

    std::vector<BigInt> coeffs(n + 1);
    for (std::size_t c = 0; c <= n; ++c)
        coeffs[c] = by_components[c];
    return Polynomial(std::move(coeffs));
}

Graph delete_edge(const Graph & g, EdgeIndex e)
{
    std::vector<Edge> edges;
    for (EdgeIndex i = 0; i < g.edge_count(); ++i)
        if (i != e)
            edges.push_back(g.edge(i));
    return Graph(g.vertex_count(), std::move(edges));
}

Graph contract_edge(const Graph & g, EdgeIndex e)
{
    const Vertex keep = g.edge(e).u, gone = g.edge(e).v;
    auto map = [&](Vertex x) {
        if (x == gone)
            x = keep;
        return x > gone ? x - 1 : x;
    };
    std::vector<Edge> edges;
    std::vector<std::vector<char>> present(g.vertex_count() - 1, std::vector<char>(g.vertex_count() - 1, 0));
    for (const auto & edge : g.edges()) {
        Vertex x = map(edge.u), y = map(edge.v);
        if (x == y)
            continue;
        if (x > y)
            std::swap(x, y);
        if (present[x][y])
            continue;
        present[x][y] = 1;
        edges.push_back({x, y});
    }
    return Graph(g.vertex_count() - 1, std::move(edges));
}

} // namespace dpchroma
