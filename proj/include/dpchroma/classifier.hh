#pragma once

#include "dpchroma/girth.hh"
#include "dpchroma/graph.hh"
#include "dpchroma/oriented_edge_set.hh"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dpchroma {

enum class VerdictStatus { satisfied, violated, inconclusive };

/// DP* is kept apart from DP≈: every DP* graph is in DP≈, the converse is open.
enum class ImpliedClass { dp_star, dp_approx, dp_less, unknown };

std::string_view to_string(VerdictStatus s);
std::string_view to_string(ImpliedClass c);

/// Spanning tree T plus an ordering e_1..e_q of the remaining edges with,
/// for each e_i, a shortest cycle through it drawn from T + {e_1..e_i}.
/// witness_cycles[i] runs from the low endpoint of labeling[i] to the high
/// one along the path that the edge closes.
struct DpGoodCertificate {
    EdgeSubset tree;
    std::vector<EdgeIndex> labeling;
    std::vector<Cycle> witness_cycles;

    friend bool operator==(const DpGoodCertificate &, const DpGoodCertificate &) = default;
};

enum class CertificateFault {
    none,
    size_mismatch,
    not_spanning_tree,
    labeling_mismatch,
    girth_not_odd,
    order_not_monotone,
    witness_not_cycle,
    witness_misses_edge,
    witness_not_shortest,
    witness_uses_unavailable_edge,
    witnesses_not_distinct,
};

std::string_view to_string(CertificateFault f);

struct CertificateCheck {
    CertificateFault fault = CertificateFault::none;
    std::size_t position = 0; ///< labeling position the fault refers to, when relevant
    std::string reason;

    bool ok() const { return fault == CertificateFault::none; }
    explicit operator bool() const { return ok(); }
};

/// Recomputes every edge girth and inspects every cycle; trusts nothing in
/// the certificate beyond its shape.
CertificateCheck verify_dp_good_certificate(const Graph & g, const DpGoodCertificate & cert);

struct EvenGirthEdge {
    EdgeIndex edge;
    Girth girth;
    Cycle cycle;
};

struct VertexOrderEvidence {
    std::vector<Vertex> order;
    std::optional<std::size_t> failed_position; ///< set when a given order fails
};

/// Outcome data of the even-girth/balanced-orientation test.
struct OrientationEvidence {
    Girth r0;
    std::optional<Cycle> girth_witness;
    OrientedEdgeSet orientation;
    std::optional<Cycle> unbalanced_cycle;
};

struct BipartitePathEvidence {
    std::vector<Vertex> side_one;
    std::vector<Vertex> side_two;
    EdgeSubset edges;
    Girth r0;
    std::optional<Cycle> girth_witness;
    std::optional<Cycle> offending_cycle;           ///< cycle shorter than r0 ...
    std::optional<std::vector<Vertex>> offending_path; ///< ... whose E*-free arc joins the sides
    std::optional<OrientationEvidence> delegated;    ///< side_one -> side_two orientation
};

struct SearchExhausted {
    std::uint64_t explored = 0;
};

using Evidence = std::variant<std::monostate, DpGoodCertificate, EvenGirthEdge, VertexOrderEvidence,
                              OrientationEvidence, BipartitePathEvidence, Cycle, SearchExhausted>;

struct ClassifierVerdict {
    std::string condition;
    VerdictStatus status = VerdictStatus::inconclusive;
    ImpliedClass implied = ImpliedClass::unknown; ///< unknown unless satisfied
    std::string summary;
    Evidence evidence;
};

struct Budgets {
    std::size_t trees = default_tree_budget;
    std::size_t cycles = default_cycle_cap;
    std::uint64_t search_nodes = 1'000'000;
    std::uint64_t candidate_sets = 100'000;
};

/// Edge of finite even girth, if any; satisfied implies DP<.
ClassifierVerdict check_even_edge_girth(const Graph & g);

/// Certificate search over spanning trees containing every edge of even or
/// infinite girth. Violated when that set has a cycle or every such tree
/// fails; inconclusive when the tree budget runs out. InputError when g is
/// disconnected.
ClassifierVerdict check_dp_good(const Graph & g, std::size_t tree_budget = default_tree_budget);

/// With an order: each later vertex needs a non-empty back-neighbourhood
/// inducing a connected subgraph. Without: backtracking search over prefix
/// sets. InputError when `order` is not a permutation of V(G).
ClassifierVerdict check_vertex_order(const Graph & g, const std::optional<std::vector<Vertex>> & order,
                                     std::uint64_t node_budget = 1'000'000);

/// r0 = edge_set_girth(E*) finite and even, and E* balanced on every cycle
/// shorter than r0. InputError on an empty E*.
ClassifierVerdict check_balanced_orientation(const Graph & g, const OrientedEdgeSet & estar,
                                 std::size_t cycle_cap = default_cycle_cap);

/// r0 = edge_set_girth(E*) even and no cycle shorter than r0 meeting E* has
/// an E*-free arc joining side_one to side_two. InputError unless the sides
/// are disjoint and E* runs between them.
ClassifierVerdict check_separated_sides(const Graph & g, const std::vector<Vertex> & side_one,
                                   const std::vector<Vertex> & side_two, const EdgeSubset & estar,
                                   std::size_t cycle_cap = default_cycle_cap);

struct BipartiteCandidate {
    std::vector<Vertex> side_one;
    std::vector<Vertex> side_two;
    EdgeSubset edges;
};

/// Looks for E* between two disjoint vertex sets with edge_set_girth(E*) = 4:
/// the supplied candidates, then stars at each vertex, then (n <= 8) full
/// cuts E_G(V1, V2) over all disjoint pairs.
ClassifierVerdict check_bipartite_girth_four(const Graph & g, const std::vector<BipartiteCandidate> & extra,
                                             std::uint64_t candidate_budget);

/// Runs the even-girth scan, check_dp_good, check_vertex_order (search) and
/// check_bipartite_girth_four, recording budget overruns as inconclusive.
std::vector<ClassifierVerdict> classify(const Graph & g, const Budgets & budgets = {},
                                        const std::vector<BipartiteCandidate> & extra = {});

/// Class implied by the satisfied verdicts. std::logic_error if they
/// would place the graph in both DP* and DP<.
ImpliedClass implied_class(const std::vector<ClassifierVerdict> & verdicts);

} // namespace dpchroma
