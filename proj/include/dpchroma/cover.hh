#pragma once

#include "dpchroma/graph.hh"
#include "dpchroma/oriented_edge_set.hh"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace dpchroma {

/// Image table of a bijection of {0, ..., m-1}.
using Permutation = std::vector<std::uint32_t>;

Permutation identity_permutation(std::size_t m);
bool is_identity(const Permutation & p);
bool is_permutation(const Permutation & p, std::size_t m);
Permutation inverse(const Permutation & p);
/// (a ∘ b)(i) = a[b[i]]
Permutation compose(const Permutation & a, const Permutation & b);
/// i -> i + k mod m
Permutation cyclic_shift(std::size_t m, std::size_t k);
/// Some k in 1..m-1 with p == cyclic_shift(m, k), if any.
std::optional<std::size_t> shift_amount(const Permutation & p);

/// Full m-fold cover. Each list L(v) is {(v,0), ..., (v,m-1)} and forms a
/// clique; for edge e = (u, v) with u < v, (u, i) is matched to
/// (v, perms[e][i]).
struct Cover {
    std::size_t m = 0;
    std::vector<Permutation> perms;

    static Cover canonical(const Graph & g, std::size_t m);
    friend bool operator==(const Cover &, const Cover &) = default;
};

/// InputError unless `c` has one bijection of {0..m-1} per edge of `g`.
void validate_cover(const Graph & g, const Cover & c);

struct SlopingEdge {
    EdgeIndex edge;
    std::size_t crossing_count; ///< |X_e|: non-identity matching edges
    std::vector<std::uint32_t> moved; ///< Y_e: indices i with perm(i) != i
};

struct SlopingReport {
    EdgeSubset sloping;
    std::vector<SlopingEdge> edges; ///< one entry per sloping edge, by index
};

SlopingReport sloping_report(const Graph & g, const Cover & c);

struct NormalizedCover {
    Cover cover;
    SlopingReport report;
    EdgeSubset tree;                 ///< carries identities after relabelling
    std::vector<Permutation> relabel; ///< (v, i) is renamed (v, relabel[v][i])
};

/// Relabels every list so that the edges of the index-order spanning tree
/// carry the identity. Requires a connected graph; InputError on a
/// non-bijective assignment.
NormalizedCover build_cover(const Graph & g, std::size_t m, std::vector<Permutation> assignment);

/// Identity off `estar`; on a member directed u -> v, (u, q) meets (v, q+1 mod m).
Cover twisted_cover(const Graph & g, const OrientedEdgeSet & estar, std::size_t m);

enum class CountMethod { backtracking, inclusion_exclusion, exhaustive_minimum };
std::string_view to_string(CountMethod m);

struct CountReport {
    std::int64_t value = 0;
    CountMethod method = CountMethod::backtracking;
    std::optional<Cover> argmin;               ///< dp_exact only
    std::optional<std::uint64_t> minimizers;   ///< dp_exact only
    std::optional<std::uint64_t> covers_examined;
};

inline constexpr std::uint64_t default_node_budget = 500'000'000;
inline constexpr std::uint64_t default_cover_budget = 1'000'000;
inline constexpr std::size_t max_fold = 64;

/// Independent transversals of H (one vertex from each list, no two
/// adjacent), by forward-checking backtracking. BudgetExceeded when more
/// than `node_budget` search nodes are needed.
CountReport count_transversals(const Graph & g, const Cover & c,
                               std::uint64_t node_budget = default_node_budget);

/// Number of ways to pick one index on every endpoint of `a` such that every
/// edge of `a` is realised as a matching edge of H. For a connected edge
/// set this is the number of copies of G<a> in H lying over it.
std::int64_t realization_count(const Graph & g, const Cover & c, const EdgeSubset & a);

std::int64_t cycle_realizations(const Graph & g, const Cover & c, const Cycle & cycle);

/// Inclusion-exclusion over edge subsets. BudgetExceeded when |E| > edge_cap.
CountReport count_incl_excl(const Graph & g, const Cover & c, std::size_t edge_cap = 24);

/// Minimum transversal count over every cover that is the identity on the
/// index-order spanning tree, with the lexicographically smallest
/// minimiser (non-tree edges in index order, permutations in lex order).
/// BudgetExceeded when (m!)^q > cover_budget. `jobs` workers split the
/// search; the result does not depend on it.
CountReport dp_exact(const Graph & g, std::size_t m, std::uint64_t cover_budget = default_cover_budget,
                     std::size_t jobs = 1);

} // namespace dpchroma
