#include "dpchroma/cover.hh"

#include "dpchroma/errors.hh"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <string>
#include <thread>

namespace dpchroma {

Permutation identity_permutation(std::size_t m)
{
    Permutation p(m);
    std::iota(p.begin(), p.end(), 0U);
    return p;
}

bool is_identity(const Permutation & p)
{
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != i)
            return false;
    return true;
}

bool is_permutation(const Permutation & p, std::size_t m)
{
    if (p.size() != m)
        return false;
    std::vector<char> hit(m, 0);
    for (auto x : p) {
        if (x >= m || hit[x])
            return false;
        hit[x] = 1;
    }
    return true;
}

Permutation inverse(const Permutation & p)
{
    Permutation inv(p.size());
    for (std::uint32_t i = 0; i < p.size(); ++i)
        inv[p[i]] = i;
    return inv;
}

Permutation compose(const Permutation & a, const Permutation & b)
{
    Permutation r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] = a[b[i]];
    return r;
}

Permutation cyclic_shift(std::size_t m, std::size_t k)
{
    Permutation p(m);
    for (std::size_t i = 0; i < m; ++i)
        p[i] = static_cast<std::uint32_t>((i + k) % m);
    return p;
}

std::optional<std::size_t> shift_amount(const Permutation & p)
{
    const std::size_t m = p.size();
    if (m < 2)
        return std::nullopt;
    std::size_t k = p[0];
    if (k == 0)
        return std::nullopt;
    if (p == cyclic_shift(m, k))
        return k;
    return std::nullopt;
}

Cover Cover::canonical(const Graph & g, std::size_t m)
{
    return Cover{m, std::vector<Permutation>(g.edge_count(), identity_permutation(m))};
}

void validate_cover(const Graph & g, const Cover & c)
{
    if (c.m < 1)
        throw InputError("cover fold count must be at least 1");
    if (c.m > max_fold)
        throw InputError("cover fold count above " + std::to_string(max_fold) + " is not supported");
    if (c.perms.size() != g.edge_count())
        throw InputError("cover has " + std::to_string(c.perms.size()) + " permutations for " +
                         std::to_string(g.edge_count()) + " edges");
    for (std::size_t e = 0; e < c.perms.size(); ++e)
        if (!is_permutation(c.perms[e], c.m))
            throw InputError("assignment on edge " + std::to_string(e) + " is not a bijection of 0.." +
                             std::to_string(c.m - 1));
}

SlopingReport sloping_report(const Graph & g, const Cover & c)
{
    SlopingReport r{EdgeSubset(g.edge_count()), {}};
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        const auto & p = c.perms[e];
        SlopingEdge s{e, 0, {}};
        for (std::uint32_t i = 0; i < p.size(); ++i)
            if (p[i] != i) {
                ++s.crossing_count;
                s.moved.push_back(i);
            }
        if (s.crossing_count) {
            r.sloping.set(e);
            r.edges.push_back(std::move(s));
        }
    }
    return r;
}

NormalizedCover build_cover(const Graph & g, std::size_t m, std::vector<Permutation> assignment)
{
    Cover input{m, std::move(assignment)};
    validate_cover(g, input);
    if (!g.connected())
        throw InputError("cover normalisation needs a connected graph");

    const std::size_t n = g.vertex_count();
    EdgeSubset tree = index_spanning_forest(g);
    std::vector<Permutation> relabel(n);
    std::vector<char> seen(n, 0);

    if (n > 0) {
        relabel[0] = identity_permutation(m);
        seen[0] = 1;
        std::deque<Vertex> queue{0};
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop_front();
            for (const auto & [y, e] : g.incidences(x)) {
                if (!tree.test(e) || seen[y])
                    continue;
                const auto & sigma = input.perms[e];
                // renamed matching is relabel[v] ∘ sigma ∘ relabel[u]^-1
                if (x == g.edge(e).u)
                    relabel[y] = compose(relabel[x], inverse(sigma));
                else
                    relabel[y] = compose(relabel[x], sigma);
                seen[y] = 1;
                queue.push_back(y);
            }
        }
    }

    Cover out{m, {}};
    out.perms.reserve(g.edge_count());
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        const auto & edge = g.edge(e);
        out.perms.push_back(compose(relabel[edge.v], compose(input.perms[e], inverse(relabel[edge.u]))));
    }
    auto report = sloping_report(g, out);
    return NormalizedCover{std::move(out), std::move(report), std::move(tree), std::move(relabel)};
}

Cover twisted_cover(const Graph & g, const OrientedEdgeSet & estar, std::size_t m)
{
    if (m < 1 || m > max_fold)
        throw InputError("fold count out of range");
    Cover c = Cover::canonical(g, m);
    for (auto e : estar.edges().members()) {
        // stored direction is low -> high; a high -> low twist is the inverse shift
        c.perms[e] = estar.tail(e) == g.edge(e).u ? cyclic_shift(m, 1) : cyclic_shift(m, m - 1);
    }
    return c;
}

std::string_view to_string(CountMethod m)
{
    switch (m) {
    case CountMethod::backtracking: return "backtracking";
    case CountMethod::inclusion_exclusion: return "inclusion-exclusion";
    case CountMethod::exhaustive_minimum: return "exhaustive-minimum";
    }
    return "unknown";
}

namespace {

    class TransversalCounter {
    public:
        TransversalCounter(const Graph & g, const Cover & c, std::uint64_t budget)
            : g_(g), c_(c), budget_(budget), inverse_(c.perms.size())
        {
            for (std::size_t e = 0; e < c.perms.size(); ++e)
                inverse_[e] = inverse(c.perms[e]);
        }

        std::int64_t count()
        {
            const std::size_t n = g_.vertex_count();
            position_.assign(n, n);
            std::vector<char> placed(n, 0);
            std::int64_t total = 1;

            // Each component separately: BFS from a max-degree root.
            for (Vertex start = 0; start < n; ++start) {
                if (placed[start])
                    continue;
                Vertex root = start;
                std::vector<Vertex> members;
                {
                    std::deque<Vertex> q{start};
                    std::vector<char> in(n, 0);
                    in[start] = 1;
                    while (!q.empty()) {
                        Vertex x = q.front();
                        q.pop_front();
                        members.push_back(x);
                        for (const auto & inc : g_.incidences(x))
                            if (!in[inc.neighbour]) {
                                in[inc.neighbour] = 1;
                                q.push_back(inc.neighbour);
                            }
                    }
                    for (auto v : members)
                        if (g_.degree(v) > g_.degree(root))
                            root = v;
                }
                order_.clear();
                std::deque<Vertex> q{root};
                placed[root] = 1;
                while (!q.empty()) {
                    Vertex x = q.front();
                    q.pop_front();
                    position_[x] = order_.size();
                    order_.push_back(x);
                    for (const auto & inc : g_.incidences(x))
                        if (!placed[inc.neighbour]) {
                            placed[inc.neighbour] = 1;
                            q.push_back(inc.neighbour);
                        }
                }
                total = checked_mul(total, count_component());
                if (total == 0)
                    return 0;
            }
            return total;
        }

    private:
        std::int64_t count_component()
        {
            const std::uint64_t full = c_.m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << c_.m) - 1;
            domain_.assign(g_.vertex_count(), full);
            return extend(0);
        }

        std::int64_t extend(std::size_t depth)
        {
            if (++nodes_ > budget_)
                throw BudgetExceeded("transversal search exceeded node budget of " + std::to_string(budget_));
            Vertex v = order_[depth];
            if (depth + 1 == order_.size())
                return std::popcount(domain_[v]);

            std::int64_t sum = 0;
            std::vector<std::pair<Vertex, std::uint64_t>> undo;
            for (std::uint64_t d = domain_[v]; d; d &= d - 1) {
                auto colour = static_cast<std::uint32_t>(std::countr_zero(d));
                bool dead = false;
                undo.clear();
                for (const auto & [w, e] : g_.incidences(v)) {
                    if (position_[w] <= depth)
                        continue;
                    std::uint32_t blocked = v == g_.edge(e).u ? c_.perms[e][colour] : inverse_[e][colour];
                    std::uint64_t bit = std::uint64_t{1} << blocked;
                    if (domain_[w] & bit) {
                        undo.emplace_back(w, domain_[w]);
                        domain_[w] &= ~bit;
                        if (!domain_[w]) {
                            dead = true;
                            break;
                        }
                    }
                }
                if (!dead)
                    sum = checked_add(sum, extend(depth + 1));
                for (auto it = undo.rbegin(); it != undo.rend(); ++it)
                    domain_[it->first] = it->second;
            }
            return sum;
        }

        const Graph & g_;
        const Cover & c_;
        std::uint64_t budget_;
        std::uint64_t nodes_ = 0;
        std::vector<Permutation> inverse_;
        std::vector<Vertex> order_;
        std::vector<std::size_t> position_;
        std::vector<std::uint64_t> domain_;
    };

} // namespace

CountReport count_transversals(const Graph & g, const Cover & c, std::uint64_t node_budget)
{
    validate_cover(g, c);
    TransversalCounter counter(g, c, node_budget);
    return CountReport{counter.count(), CountMethod::backtracking, std::nullopt, std::nullopt, std::nullopt};
}

std::int64_t realization_count(const Graph & g, const Cover & c, const EdgeSubset & a)
{
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<Incidence>> sub(n);
    std::vector<Permutation> inv(g.edge_count());
    for (auto e : a.members()) {
        sub[g.edge(e).u].push_back({g.edge(e).v, e});
        sub[g.edge(e).v].push_back({g.edge(e).u, e});
        inv[e] = inverse(c.perms[e]);
    }

    constexpr std::uint32_t unset = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> label(n, unset);
    std::vector<char> done(n, 0);
    std::int64_t product = 1;

    for (Vertex root = 0; root < n; ++root) {
        if (done[root] || sub[root].empty())
            continue;
        std::vector<Vertex> members{root};
        done[root] = 1;
        for (std::size_t head = 0; head < members.size(); ++head)
            for (const auto & inc : sub[members[head]])
                if (!done[inc.neighbour]) {
                    done[inc.neighbour] = 1;
                    members.push_back(inc.neighbour);
                }

        // The root index fixes every other index in the component; count
        // the root choices that leave no edge unrealised.
        std::int64_t good = 0;
        for (std::uint32_t x = 0; x < c.m; ++x) {
            for (auto v : members)
                label[v] = unset;
            label[root] = x;
            std::vector<Vertex> frontier{root};
            bool ok = true;
            while (!frontier.empty() && ok) {
                Vertex y = frontier.back();
                frontier.pop_back();
                for (const auto & [z, e] : sub[y]) {
                    std::uint32_t want = y == g.edge(e).u ? c.perms[e][label[y]] : inv[e][label[y]];
                    if (label[z] == unset) {
                        label[z] = want;
                        frontier.push_back(z);
                    }
                    else if (label[z] != want) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok)
                ++good;
        }
        product = checked_mul(product, good);
        if (product == 0)
            return 0;
    }
    return product;
}

std::int64_t cycle_realizations(const Graph & g, const Cover & c, const Cycle & cycle)
{
    if (!is_cycle_of(g, cycle))
        throw InputError("not a cycle of the graph");
    return realization_count(g, c, cycle_edges(g, cycle));
}

CountReport count_incl_excl(const Graph & g, const Cover & c, std::size_t edge_cap)
{
    validate_cover(g, c);
    const std::size_t edges = g.edge_count();
    if (edges > edge_cap || edges >= 63)
        throw BudgetExceeded("inclusion-exclusion over " + std::to_string(edges) +
                             " edges exceeds cap of " + std::to_string(edge_cap));
    const std::size_t n = g.vertex_count();

    std::int64_t total = 0;
    std::vector<char> touched(n);
    const std::uint64_t limit = std::uint64_t{1} << edges;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        auto a = EdgeSubset::from_mask(edges, mask);
        std::fill(touched.begin(), touched.end(), 0);
        for (auto e : a.members())
            touched[g.edge(e).u] = touched[g.edge(e).v] = 1;
        std::size_t untouched = static_cast<std::size_t>(std::count(touched.begin(), touched.end(), 0));

        std::int64_t term = realization_count(g, c, a);
        if (term != 0)
            term = checked_mul(term, checked_pow(static_cast<std::int64_t>(c.m), untouched));
        total = std::popcount(mask) % 2 == 0 ? checked_add(total, term) : checked_sub(total, term);
    }
    return CountReport{total, CountMethod::inclusion_exclusion, std::nullopt, std::nullopt, std::nullopt};
}

namespace {

    struct Best {
        std::int64_t value = 0;
        std::uint64_t index = 0;
        std::uint64_t ties = 0;
        bool any = false;
    };

} // namespace

CountReport dp_exact(const Graph & g, std::size_t m, std::uint64_t cover_budget, std::size_t jobs)
{
    if (m < 1 || m > max_fold)
        throw InputError("fold count out of range");
    if (!g.connected())
        throw InputError("dp_exact needs a connected graph");

    EdgeSubset tree = index_spanning_forest(g);
    std::vector<EdgeIndex> free_edges = (g.all_edges() - tree).members();

    std::vector<Permutation> all_perms;
    {
        Permutation p = identity_permutation(m);
        std::uint64_t fact = 1;
        for (std::size_t i = 2; i <= m; ++i) {
            if (fact > cover_budget)
                break;
            fact *= i;
        }
        bool tiny = free_edges.empty() || fact <= cover_budget;
        if (tiny && !free_edges.empty())
            do
                all_perms.push_back(p);
            while (std::next_permutation(p.begin(), p.end()));
    }

    // Search space (m!)^q, with saturation for the error message.
    std::uint64_t space = 1;
    bool over = false;
    for (std::size_t i = 0; i < free_edges.size(); ++i) {
        std::uint64_t base = all_perms.empty() ? cover_budget + 1 : all_perms.size();
        if (__builtin_mul_overflow(space, base, &space) || space > cover_budget) {
            over = true;
            break;
        }
    }
    if (over)
        throw BudgetExceeded("cover search space (" + std::to_string(m) + "!)^" +
                             std::to_string(free_edges.size()) + " exceeds budget of " +
                             std::to_string(cover_budget) + " covers");

    auto cover_at = [&](std::uint64_t index) {
        Cover c = Cover::canonical(g, m);
        // first free edge is the most significant digit
        for (std::size_t i = free_edges.size(); i-- > 0;) {
            c.perms[free_edges[i]] = all_perms[index % all_perms.size()];
            index /= all_perms.size();
        }
        return c;
    };

    auto scan = [&](std::uint64_t begin, std::uint64_t end, Best & best) {
        for (std::uint64_t i = begin; i < end; ++i) {
            auto value = count_transversals(g, free_edges.empty() ? Cover::canonical(g, m) : cover_at(i)).value;
            if (!best.any || value < best.value) {
                best = Best{value, i, 1, true};
            }
            else if (value == best.value)
                ++best.ties;
        }
    };

    jobs = std::max<std::size_t>(1, std::min<std::uint64_t>(jobs, space));
    std::vector<Best> partial(jobs);
    if (jobs == 1)
        scan(0, space, partial[0]);
    else {
        std::vector<std::thread> workers;
        std::vector<std::exception_ptr> failures(jobs);
        for (std::size_t w = 0; w < jobs; ++w) {
            std::uint64_t begin = space * w / jobs, end = space * (w + 1) / jobs;
            workers.emplace_back([&, w, begin, end] {
                try {
                    scan(begin, end, partial[w]);
                }
                catch (...) {
                    failures[w] = std::current_exception();
                }
            });
        }
        for (auto & t : workers)
            t.join();
        for (auto & f : failures)
            if (f)
                std::rethrow_exception(f);
    }

    // Chunks are ordered, so the first chunk holding the minimum also holds
    // the lexicographically smallest minimiser.
    Best best;
    for (const auto & b : partial) {
        if (!b.any)
            continue;
        if (!best.any || b.value < best.value)
            best = b;
        else if (b.value == best.value)
            best.ties += b.ties;
    }

    CountReport report;
    report.value = best.value;
    report.method = CountMethod::exhaustive_minimum;
    report.argmin = free_edges.empty() ? Cover::canonical(g, m) : cover_at(best.index);
    report.minimizers = best.ties;
    report.covers_examined = space;
    return report;
}

} // namespace dpchroma
