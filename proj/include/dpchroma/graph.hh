#pragma once

#include "dpchroma/edge_subset.hh"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace dpchroma {

using Vertex = std::size_t;
using EdgeIndex = std::size_t;

/// Unordered vertex pair stored with u < v.
struct Edge {
    Vertex u;
    Vertex v;

    Vertex other(Vertex w) const { return w == u ? v : u; }
    friend bool operator==(const Edge &, const Edge &) = default;
};

struct Incidence {
    Vertex neighbour;
    EdgeIndex edge;
};

/// Immutable simple undirected graph on vertices 0..n-1. Edge i is the
/// i-th pair handed to the constructor, forever.
class Graph {
public:
    Graph() = default;

    /// Pairs are normalised to u < v. Throws InputError on a loop, an
    /// out-of-range endpoint or a repeated pair.
    Graph(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }

    const Edge & edge(EdgeIndex e) const { return edges_[e]; }
    std::span<const Edge> edges() const { return edges_; }

    std::span<const Incidence> incidences(Vertex v) const { return adjacency_[v]; }
    std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

    std::optional<EdgeIndex> edge_between(Vertex a, Vertex b) const;
    bool adjacent(Vertex a, Vertex b) const { return edge_between(a, b).has_value(); }

    bool connected() const;

    EdgeSubset no_edges() const { return EdgeSubset(edges_.size()); }
    EdgeSubset all_edges() const { return EdgeSubset::all(edges_.size()); }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
};

/// A cycle as a cyclic vertex sequence of length >= 3.
struct Cycle {
    std::vector<Vertex> vertices;

    std::size_t length() const { return vertices.size(); }
    friend bool operator==(const Cycle &, const Cycle &) = default;
};

/// Smallest vertex first, then the direction whose second vertex is smaller.
Cycle canonical_cycle(Cycle c);

/// True when `c` is a simple cycle of `g`.
bool is_cycle_of(const Graph & g, const Cycle & c);

/// Edge i of the result joins c[i] and c[i+1 mod k]. Precondition: is_cycle_of.
std::vector<EdgeIndex> cycle_edge_sequence(const Graph & g, const Cycle & c);
EdgeSubset cycle_edges(const Graph & g, const Cycle & c);

/// Edge-list document: first non-comment line is n, then "u v" per line.
/// Loops, bad tokens and out-of-range endpoints raise InputError naming
/// the line; repeated pairs are dropped keeping the first occurrence.
Graph parse_graph(std::string_view text);

/// Number of components of the spanning subgraph with edge set `a`.
std::size_t component_count(const Graph & g, const EdgeSubset & a);

/// Edges of `a` that are not bridges of the spanning subgraph G<a>.
EdgeSubset non_bridge_edges(const Graph & g, const EdgeSubset & a);

inline constexpr std::size_t default_cycle_cap = 1'000'000;

/// Every cycle with at most `max_len` vertices, once each, in canonical form,
/// ordered by (smallest vertex, then DFS order). BudgetExceeded past `cap`.
std::vector<Cycle> enumerate_cycles(const Graph & g, std::size_t max_len,
                                    std::size_t cap = default_cycle_cap);

inline constexpr std::size_t default_tree_budget = 1'000'000;

struct TreeEnumeration {
    std::size_t yielded = 0;
    bool truncated = false;  ///< budget reached before exhaustion
    bool stopped = false;    ///< consumer asked to stop
};

/// Streams distinct spanning trees (each containing `required`, if given) to
/// `consume`; returning false from it stops the stream. Throws InputError
/// for a disconnected graph.
TreeEnumeration for_each_spanning_tree(const Graph & g, std::size_t budget,
                                       const std::function<bool(const EdgeSubset &)> & consume,
                                       const std::optional<EdgeSubset> & required = std::nullopt);

struct SpanningTreeList {
    std::vector<EdgeSubset> trees;
    bool truncated = false;
};

SpanningTreeList spanning_trees(const Graph & g, std::size_t budget = default_tree_budget);

/// Spanning forest built greedily in edge-index order.
EdgeSubset index_spanning_forest(const Graph & g);

/// Shortest path from `from` to `to` using only edges in `allowed`, as a
/// vertex sequence including both ends. Ties break toward lower edge index.
std::optional<std::vector<Vertex>> shortest_path(const Graph & g, const EdgeSubset & allowed,
                                                 Vertex from, Vertex to);

/// Component id per vertex of G<a>, numbered in order of smallest vertex.
std::vector<std::size_t> component_labels(const Graph & g, const EdgeSubset & a);

} // namespace dpchroma
