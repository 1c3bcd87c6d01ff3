#pragma once

#include "dpchroma/graph.hh"
#include "dpchroma/polynomial.hh"

namespace dpchroma {

/// Exact P(G, m) by deletion-contraction with component splitting, pendant
/// and tree/complete shortcuts and a memo over relabelled edge lists.
Polynomial chromatic_polynomial(const Graph & g);

inline constexpr std::size_t default_incl_excl_edge_cap = 24;

/// Sum over A of (-1)^|A| m^c(A). BudgetExceeded when |E| > edge_cap.
Polynomial chromatic_incl_excl(const Graph & g, std::size_t edge_cap = default_incl_excl_edge_cap);

/// G - e, keeping the remaining edges in order.
Graph delete_edge(const Graph & g, EdgeIndex e);

/// G / e as a simple graph: the higher endpoint merges into the lower one,
/// vertices above it shift down by one, loops and parallel edges vanish.
Graph contract_edge(const Graph & g, EdgeIndex e);

} // namespace dpchroma
