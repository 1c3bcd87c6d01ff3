#include "dpchroma/classifier.hh"

#include "dpchroma/errors.hh"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace dpchroma {

std::string_view to_string(VerdictStatus s)
{
    switch (s) {
    case VerdictStatus::satisfied: return "satisfied";
    case VerdictStatus::violated: return "violated";
    case VerdictStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

std::string_view to_string(ImpliedClass c)
{
    switch (c) {
    case ImpliedClass::dp_star: return "DP*";
    case ImpliedClass::dp_approx: return "DP≈";
    case ImpliedClass::dp_less: return "DP<";
    case ImpliedClass::unknown: return "unknown";
    }
    return "?";
}

std::string_view to_string(CertificateFault f)
{
    switch (f) {
    case CertificateFault::none: return "none";
    case CertificateFault::size_mismatch: return "size-mismatch";
    case CertificateFault::not_spanning_tree: return "not-spanning-tree";
    case CertificateFault::labeling_mismatch: return "labeling-mismatch";
    case CertificateFault::girth_not_odd: return "girth-not-odd";
    case CertificateFault::order_not_monotone: return "order-not-monotone";
    case CertificateFault::witness_not_cycle: return "witness-not-cycle";
    case CertificateFault::witness_misses_edge: return "witness-misses-edge";
    case CertificateFault::witness_not_shortest: return "witness-not-shortest";
    case CertificateFault::witness_uses_unavailable_edge: return "witness-uses-unavailable-edge";
    case CertificateFault::witnesses_not_distinct: return "witnesses-not-distinct";
    }
    return "?";
}

namespace {

    const std::string sufficient = "sufficient condition for membership in ";

    CertificateCheck fault(CertificateFault f, std::size_t pos, std::string why)
    {
        return CertificateCheck{f, pos, std::move(why)};
    }

    ClassifierVerdict verdict(std::string condition, VerdictStatus status, ImpliedClass implied,
                              std::string summary, Evidence ev = {})
    {
        return ClassifierVerdict{std::move(condition), status,
                                 status == VerdictStatus::satisfied ? implied : ImpliedClass::unknown,
                                 std::move(summary), std::move(ev)};
    }

    std::vector<Girth> all_edge_girths(const Graph & g)
    {
        std::vector<Girth> out;
        out.reserve(g.edge_count());
        for (EdgeIndex e = 0; e < g.edge_count(); ++e)
            out.push_back(edge_girth(g, e).girth);
        return out;
    }

    /// A cycle inside G<a>, if any.
    std::optional<Cycle> find_cycle_in(const Graph & g, const EdgeSubset & a)
    {
        EdgeSubset grown(g.edge_count());
        for (auto e : a.members()) {
            const auto & edge = g.edge(e);
            if (auto p = shortest_path(g, grown, edge.u, edge.v))
                return Cycle{std::move(*p)};
            grown.set(e);
        }
        return std::nullopt;
    }

    /// Greedy labelling for a fixed tree. Within one girth class an edge
    /// that can be closed stays closable as more edges become available, so
    /// taking any closable edge first never loses a labelling; the lowest
    /// index is taken for determinism.
    std::optional<DpGoodCertificate> label_tree(const Graph & g, const EdgeSubset & tree,
                                                const std::vector<Girth> & girth)
    {
        auto rest = (g.all_edges() - tree).members();
        std::map<std::size_t, std::vector<EdgeIndex>> by_girth;
        for (auto e : rest) {
            if (!girth[e].is_odd())
                return std::nullopt;
            by_girth[girth[e].value()].push_back(e);
        }

        DpGoodCertificate cert{tree, {}, {}};
        EdgeSubset available = tree;
        for (auto & [len, pending] : by_girth) {
            while (!pending.empty()) {
                bool progress = false;
                for (auto it = pending.begin(); it != pending.end(); ++it) {
                    const auto & edge = g.edge(*it);
                    auto p = shortest_path(g, available, edge.u, edge.v);
                    if (!p || p->size() != len)
                        continue;
                    cert.labeling.push_back(*it);
                    cert.witness_cycles.push_back(Cycle{std::move(*p)});
                    available.set(*it);
                    pending.erase(it);
                    progress = true;
                    break;
                }
                if (!progress)
                    return std::nullopt;
            }
        }
        return cert;
    }

    std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

    /// Back-neighbourhood of v within `prefix` is non-empty and induces a
    /// connected subgraph.
    bool admissible(const std::vector<std::uint64_t> & adj, Vertex v, std::uint64_t prefix)
    {
        std::uint64_t back = adj[v] & prefix;
        if (!back)
            return false;
        std::uint64_t reached = back & (~back + 1);
        std::uint64_t frontier = reached;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f; f &= f - 1)
                next |= adj[static_cast<Vertex>(std::countr_zero(f))] & back;
            frontier = next & ~reached;
            reached |= next;
        }
        return reached == back;
    }

    std::vector<std::uint64_t> adjacency_masks(const Graph & g)
    {
        if (g.vertex_count() > 64)
            throw InputError("vertex-order search supports at most 64 vertices");
        std::vector<std::uint64_t> adj(g.vertex_count(), 0);
        for (const auto & e : g.edges()) {
            adj[e.u] |= bit(e.v);
            adj[e.v] |= bit(e.u);
        }
        return adj;
    }

    /// Arcs of C - (E* ∩ E(C)) as vertex sequences, in traversal order.
    std::vector<std::vector<Vertex>> free_arcs(const Graph & g, const EdgeSubset & estar, const Cycle & c)
    {
        auto seq = cycle_edge_sequence(g, c);
        const auto & vs = c.vertices;
        const std::size_t k = vs.size();
        std::size_t first = k;
        for (std::size_t i = 0; i < k; ++i)
            if (estar.test(seq[i])) {
                first = i;
                break;
            }
        std::vector<std::vector<Vertex>> arcs;
        if (first == k)
            return arcs;
        // edge i joins vs[i] and vs[i+1]; start right after edge `first`
        std::vector<Vertex> arc{vs[(first + 1) % k]};
        for (std::size_t step = 1; step <= k; ++step) {
            std::size_t i = (first + step) % k;
            if (estar.test(seq[i])) {
                arcs.push_back(std::move(arc));
                arc.clear();
            }
            arc.push_back(vs[(i + 1) % k]);
        }
        return arcs;
    }

    std::string list_text(const std::vector<Vertex> & vs)
    {
        std::string s;
        for (std::size_t i = 0; i < vs.size(); ++i)
            s += (i ? "," : "") + std::to_string(vs[i]);
        return s;
    }

} // namespace

CertificateCheck verify_dp_good_certificate(const Graph & g, const DpGoodCertificate & cert)
{
    const std::size_t n = g.vertex_count();
    if (cert.tree.size() != g.edge_count())
        return fault(CertificateFault::size_mismatch, 0, "tree bitmask does not match the edge count");
    if (cert.labeling.size() != cert.witness_cycles.size())
        return fault(CertificateFault::size_mismatch, 0, "labeling and witness list differ in length");
    if (n > 0 && (cert.tree.count() + 1 != n || component_count(g, cert.tree) != 1))
        return fault(CertificateFault::not_spanning_tree, 0, "tree is not a spanning tree");

    auto rest = g.all_edges() - cert.tree;
    if (cert.labeling.size() != rest.count())
        return fault(CertificateFault::labeling_mismatch, 0, "labeling does not list every non-tree edge");
    {
        EdgeSubset seen(g.edge_count());
        for (std::size_t i = 0; i < cert.labeling.size(); ++i) {
            auto e = cert.labeling[i];
            if (e >= g.edge_count() || !rest.test(e) || seen.test(e))
                return fault(CertificateFault::labeling_mismatch, i, "labeling entry is not a fresh non-tree edge");
            seen.set(e);
        }
    }

    EdgeSubset available = cert.tree;
    std::optional<Girth> previous;
    std::set<std::vector<Vertex>> distinct;
    for (std::size_t i = 0; i < cert.labeling.size(); ++i) {
        auto e = cert.labeling[i];
        auto gi = edge_girth(g, e).girth;
        if (!gi.is_odd())
            return fault(CertificateFault::girth_not_odd, i, "edge " + std::to_string(e) + " has girth " + gi.to_string());
        if (previous && gi < *previous)
            return fault(CertificateFault::order_not_monotone, i, "girths are not non-decreasing");
        previous = gi;

        const auto & c = cert.witness_cycles[i];
        if (!is_cycle_of(g, c))
            return fault(CertificateFault::witness_not_cycle, i, "witness is not a cycle of the graph");
        auto edges = cycle_edges(g, c);
        if (!edges.test(e))
            return fault(CertificateFault::witness_misses_edge, i, "witness does not pass through its edge");
        if (c.length() != gi.value())
            return fault(CertificateFault::witness_not_shortest, i, "witness is not a shortest cycle through its edge");
        available.set(e);
        if (!edges.is_subset_of(available))
            return fault(CertificateFault::witness_uses_unavailable_edge, i, "witness uses an edge labelled later");
        if (!distinct.insert(canonical_cycle(c).vertices).second)
            return fault(CertificateFault::witnesses_not_distinct, i, "witness cycles repeat");
    }
    return {};
}

ClassifierVerdict check_even_edge_girth(const Graph & g)
{
    const std::string name = "even-girth edge";
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        auto r = edge_girth(g, e);
        if (r.girth.is_even())
            return verdict(name, VerdictStatus::satisfied, ImpliedClass::dp_less,
                           "edge " + std::to_string(e) + " has even girth " + r.girth.to_string() + ": " +
                               sufficient + "DP<",
                           EvenGirthEdge{e, r.girth, *r.witness});
    }
    return verdict(name, VerdictStatus::violated, ImpliedClass::unknown, "no edge has even girth");
}

ClassifierVerdict check_dp_good(const Graph & g, std::size_t tree_budget)
{
    const std::string name = "DP-good";
    if (!g.connected())
        throw InputError("DP-good check needs a connected graph");

    auto girth = all_edge_girths(g);
    EdgeSubset forced(g.edge_count());
    for (EdgeIndex e = 0; e < g.edge_count(); ++e)
        if (!girth[e].is_odd())
            forced.set(e);

    if (auto c = find_cycle_in(g, forced))
        return verdict(name, VerdictStatus::violated, ImpliedClass::unknown,
                       "edges of even or infinite girth contain a cycle, so they cannot all be tree edges",
                       std::move(*c));

    std::optional<DpGoodCertificate> found;
    auto stats = for_each_spanning_tree(
        g, tree_budget,
        [&](const EdgeSubset & tree) {
            found = label_tree(g, tree, girth);
            return !found;
        },
        forced);

    if (found)
        return verdict(name, VerdictStatus::satisfied, ImpliedClass::dp_star,
                       "certificate found after " + std::to_string(stats.yielded) + " spanning tree(s): " +
                           sufficient + "DP*",
                       std::move(*found));
    if (stats.truncated)
        return verdict(name, VerdictStatus::inconclusive, ImpliedClass::unknown,
                       "tree budget of " + std::to_string(tree_budget) + " exhausted",
                       SearchExhausted{stats.yielded});
    return verdict(name, VerdictStatus::violated, ImpliedClass::unknown,
                   "no labelling exists for any of the " + std::to_string(stats.yielded) +
                       " spanning trees containing the even/infinite-girth edges",
                   SearchExhausted{stats.yielded});
}

ClassifierVerdict check_vertex_order(const Graph & g, const std::optional<std::vector<Vertex>> & order,
                                     std::uint64_t node_budget)
{
    const std::string name = "connected back-neighbourhood order";
    const std::size_t n = g.vertex_count();
    auto adj = adjacency_masks(g);

    if (order) {
        if (order->size() != n)
            throw InputError("vertex order must list every vertex exactly once");
        std::vector<char> seen(n, 0);
        for (auto v : *order) {
            if (v >= n || seen[v])
                throw InputError("vertex order must list every vertex exactly once");
            seen[v] = 1;
        }
        std::uint64_t prefix = 0;
        for (std::size_t i = 0; i < n; ++i) {
            Vertex v = (*order)[i];
            if (i > 0 && !admissible(adj, v, prefix))
                return verdict(name, VerdictStatus::violated, ImpliedClass::unknown,
                               "back-neighbourhood of vertex " + std::to_string(v) + " at position " +
                                   std::to_string(i) + " is empty or disconnected",
                               VertexOrderEvidence{*order, i});
            prefix |= bit(v);
        }
        return verdict(name, VerdictStatus::satisfied, ImpliedClass::dp_star,
                       "order " + list_text(*order) + " works; implies DP-good, a " + sufficient + "DP*",
                       VertexOrderEvidence{*order, std::nullopt});
    }

    if (n == 0)
        return verdict(name, VerdictStatus::satisfied, ImpliedClass::dp_star, "empty graph",
                       VertexOrderEvidence{{}, std::nullopt});

    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
    std::unordered_set<std::uint64_t> dead;
    std::vector<Vertex> current;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;

    // Admissibility of a vertex depends only on the prefix set, so failed
    // sets are remembered regardless of the order that reached them.
    std::function<bool(std::uint64_t)> grow = [&](std::uint64_t prefix) -> bool {
        if (prefix == full)
            return true;
        if (dead.count(prefix))
            return false;
        if (++nodes > node_budget) {
            out_of_budget = true;
            return false;
        }
        for (Vertex v = 0; v < n; ++v) {
            if ((prefix & bit(v)) || !admissible(adj, v, prefix))
                continue;
            current.push_back(v);
            if (grow(prefix | bit(v)))
                return true;
            current.pop_back();
            if (out_of_budget)
                return false;
        }
        dead.insert(prefix);
        return false;
    };

    for (Vertex start = 0; start < n; ++start) {
        current.assign(1, start);
        if (grow(bit(start)))
            return verdict(name, VerdictStatus::satisfied, ImpliedClass::dp_star,
                           "order " + list_text(current) + " found; implies DP-good, a " + sufficient + "DP*",
                           VertexOrderEvidence{current, std::nullopt});
        if (out_of_budget)
            return verdict(name, VerdictStatus::inconclusive, ImpliedClass::unknown,
                           "search node budget of " + std::to_string(node_budget) + " exhausted",
                           SearchExhausted{nodes});
    }
    return verdict(name, VerdictStatus::violated, ImpliedClass::unknown, "no admissible vertex order exists",
                   SearchExhausted{nodes});
}

ClassifierVerdict check_balanced_orientation(const Graph & g, const OrientedEdgeSet & estar, std::size_t cycle_cap)
{
    const std::string name = "even set girth with balanced orientation";
    if (estar.size() == 0)
        throw InputError("distinguished edge set must be non-empty");

    auto r = edge_set_girth(g, estar.edges());
    OrientationEvidence ev{r.girth, r.witness, estar, std::nullopt};
    if (!r.girth.is_even())
        return verdict(name, VerdictStatus::violated, ImpliedClass::unknown,
                       "girth of the edge set is " + r.girth.to_string() + ", not finite and even", std::move(ev));

    BalanceVerdict b;
    try {
        b = check_balance(g, estar, r.girth.value(), cycle_cap);
    }
    catch (const BudgetExceeded & ex) {
        return verdict(name, VerdictStatus::inconclusive, ImpliedClass::unknown, ex.what(), std::move(ev));
    }
    if (!b.balanced) {
        ev.unbalanced_cycle = b.witness;
        return verdict(name, VerdictStatus::violated, ImpliedClass::unknown,
                       "orientation is unbalanced on a cycle shorter than " + r.girth.to_string(), std::move(ev));
    }
    return verdict(name, VerdictStatus::satisfied, ImpliedClass::dp_less,
                   "edge-set girth " + r.girth.to_string() + " is even and the orientation is balanced below it: " +
                       sufficient + "DP<",
                   std::move(ev));
}

ClassifierVerdict check_separated_sides(const Graph & g, const std::vector<Vertex> & side_one,
                                   const std::vector<Vertex> & side_two, const EdgeSubset & estar,
                                   std::size_t cycle_cap)
{
    const std::string name = "bipartite edge set without crossing arcs";
    const std::size_t n = g.vertex_count();
    std::vector<int> side(n, 0);
    for (auto v : side_one) {
        if (v >= n)
            throw InputError("vertex " + std::to_string(v) + " out of range");
        side[v] = 1;
    }
    for (auto v : side_two) {
        if (v >= n)
            throw InputError("vertex " + std::to_string(v) + " out of range");
        if (side[v] == 1)
            throw InputError("vertex sets are not disjoint (vertex " + std::to_string(v) + ")");
        side[v] = 2;
    }
    if (estar.size() != g.edge_count())
        throw InputError("edge set does not match the graph");
    if (estar.empty())
        throw InputError("distinguished edge set must be non-empty");

    OrientedEdgeSet oriented(g);
    for (auto e : estar.members()) {
        const auto & edge = g.edge(e);
        if (side[edge.u] * side[edge.v] != 2)
            throw InputError("edge " + std::to_string(e) + " does not run between the two vertex sets");
        oriented.add(g, e, side[edge.u] == 1 ? edge.u : edge.v);
    }

    auto r = edge_set_girth(g, estar);
    BipartitePathEvidence ev{side_one, side_two, estar, r.girth, r.witness, std::nullopt, std::nullopt, std::nullopt};
    if (!r.girth.is_even())
        return verdict(name, VerdictStatus::violated, ImpliedClass::unknown,
                       "girth of the edge set is " + r.girth.to_string() + ", not finite and even", std::move(ev));

    std::vector<Cycle> short_cycles;
    try {
        if (r.girth.value() > 3)
            short_cycles = enumerate_cycles(g, r.girth.value() - 1, cycle_cap);
    }
    catch (const BudgetExceeded & ex) {
        return verdict(name, VerdictStatus::inconclusive, ImpliedClass::unknown, ex.what(), std::move(ev));
    }

    for (const auto & c : short_cycles) {
        for (auto & arc : free_arcs(g, estar, c)) {
            int a = side[arc.front()], b = side[arc.back()];
            if (a && b && a != b) {
                ev.offending_cycle = c;
                ev.offending_path = std::move(arc);
                return verdict(name, VerdictStatus::violated, ImpliedClass::unknown,
                               "a cycle shorter than " + r.girth.to_string() +
                                   " has an arc free of the edge set joining the two vertex sets",
                               std::move(ev));
            }
        }
    }

    auto delegated = check_balanced_orientation(g, oriented, cycle_cap);
    if (delegated.status == VerdictStatus::inconclusive)
        return verdict(name, VerdictStatus::inconclusive, ImpliedClass::unknown, delegated.summary, std::move(ev));
    if (delegated.status != VerdictStatus::satisfied)
        throw std::logic_error("path condition holds but the side-one orientation is unbalanced");
    ev.delegated = std::get<OrientationEvidence>(delegated.evidence);
    return verdict(name, VerdictStatus::satisfied, ImpliedClass::dp_less,
                   "edge-set girth " + r.girth.to_string() + " is even and no short cycle has a crossing arc: " +
                       sufficient + "DP<",
                   std::move(ev));
}

ClassifierVerdict check_bipartite_girth_four(const Graph & g, const std::vector<BipartiteCandidate> & extra,
                                             std::uint64_t candidate_budget)
{
    const std::string name = "bipartite edge set of girth 4";
    const std::size_t n = g.vertex_count();
    std::uint64_t tried = 0;
    bool truncated = false;

    auto attempt = [&](const std::vector<Vertex> & one, const std::vector<Vertex> & two,
                       const EdgeSubset & edges) -> std::optional<ClassifierVerdict> {
        if (edges.empty())
            return std::nullopt;
        if (tried >= candidate_budget) {
            truncated = true;
            return std::nullopt;
        }
        ++tried;
        auto r = edge_set_girth(g, edges);
        if (r.girth != Girth::finite(4))
            return std::nullopt;
        BipartitePathEvidence ev{one, two, edges, r.girth, r.witness, std::nullopt, std::nullopt, std::nullopt};
        return verdict(name, VerdictStatus::satisfied, ImpliedClass::dp_less,
                       "edges between {" + list_text(one) + "} and {" + list_text(two) + "} have set girth 4: " +
                           sufficient + "DP<",
                       std::move(ev));
    };

    for (const auto & c : extra)
        if (auto v = attempt(c.side_one, c.side_two, c.edges))
            return *v;

    // stars: one vertex against a subset of its neighbours
    for (Vertex v = 0; v < n && !truncated; ++v) {
        auto inc = g.incidences(v);
        if (inc.size() > 12) {
            std::vector<Vertex> nb;
            EdgeSubset edges(g.edge_count());
            for (const auto & i : inc) {
                nb.push_back(i.neighbour);
                edges.set(i.edge);
            }
            std::sort(nb.begin(), nb.end());
            if (auto r = attempt({v}, nb, edges))
                return *r;
            continue;
        }
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << inc.size()) && !truncated; ++mask) {
            std::vector<Vertex> nb;
            EdgeSubset edges(g.edge_count());
            for (std::size_t i = 0; i < inc.size(); ++i)
                if ((mask >> i) & 1U) {
                    nb.push_back(inc[i].neighbour);
                    edges.set(inc[i].edge);
                }
            std::sort(nb.begin(), nb.end());
            if (auto r = attempt({v}, nb, edges))
                return *r;
        }
    }

    // full cuts over all disjoint pairs (V1, V2), side one holding the
    // smallest vertex used
    if (n <= 8 && !truncated) {
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < n; ++i)
            total *= 3;
        for (std::uint64_t code = 0; code < total && !truncated; ++code) {
            std::vector<Vertex> one, two;
            std::uint64_t x = code;
            for (Vertex v = 0; v < n; ++v, x /= 3) {
                if (x % 3 == 1)
                    one.push_back(v);
                else if (x % 3 == 2)
                    two.push_back(v);
            }
            if (one.empty() || two.empty() || two.front() < one.front())
                continue;
            EdgeSubset edges(g.edge_count());
            for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
                const auto & edge = g.edge(e);
                bool u1 = std::binary_search(one.begin(), one.end(), edge.u);
                bool v1 = std::binary_search(one.begin(), one.end(), edge.v);
                bool u2 = std::binary_search(two.begin(), two.end(), edge.u);
                bool v2 = std::binary_search(two.begin(), two.end(), edge.v);
                if ((u1 && v2) || (u2 && v1))
                    edges.set(e);
            }
            if (auto r = attempt(one, two, edges))
                return *r;
        }
    }

    if (truncated)
        return verdict(name, VerdictStatus::inconclusive, ImpliedClass::unknown,
                       "candidate budget of " + std::to_string(candidate_budget) + " exhausted",
                       SearchExhausted{tried});
    return verdict(name, VerdictStatus::violated, ImpliedClass::unknown,
                   "no candidate edge set has set girth 4 (" + std::to_string(tried) + " tried)",
                   SearchExhausted{tried});
}

std::vector<ClassifierVerdict> classify(const Graph & g, const Budgets & budgets,
                                        const std::vector<BipartiteCandidate> & extra)
{
    if (!g.connected())
        throw InputError("classification needs a connected graph");

    auto guarded = [](std::string name, auto && run) {
        try {
            return run();
        }
        catch (const BudgetExceeded & ex) {
            return ClassifierVerdict{std::move(name), VerdictStatus::inconclusive, ImpliedClass::unknown, ex.what(), {}};
        }
    };

    std::vector<ClassifierVerdict> out;
    out.push_back(guarded("even-girth edge", [&] { return check_even_edge_girth(g); }));
    out.push_back(guarded("DP-good", [&] { return check_dp_good(g, budgets.trees); }));
    out.push_back(guarded("connected back-neighbourhood order",
                          [&] { return check_vertex_order(g, std::nullopt, budgets.search_nodes); }));
    out.push_back(guarded("bipartite edge set of girth 4",
                          [&] { return check_bipartite_girth_four(g, extra, budgets.candidate_sets); }));
    return out;
}

ImpliedClass implied_class(const std::vector<ClassifierVerdict> & verdicts)
{
    bool star = false, less = false;
    for (const auto & v : verdicts) {
        if (v.status != VerdictStatus::satisfied)
            continue;
        star |= v.implied == ImpliedClass::dp_star;
        less |= v.implied == ImpliedClass::dp_less;
    }
    if (star && less)
        throw std::logic_error("verdicts claim both DP* and DP<");
    if (star)
        return ImpliedClass::dp_star;
    if (less)
        return ImpliedClass::dp_less;
    return ImpliedClass::unknown;
}

} // namespace dpchroma
