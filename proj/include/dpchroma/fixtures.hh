#pragma once

#include "dpchroma/graph.hh"

#include <string_view>
#include <vector>

namespace dpchroma::fixtures {

/// Vertices 0..n-1 around the cycle; edge i is (i, i+1), the last is (0, n-1).
Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph complete(std::size_t n);
/// Parts occupy consecutive vertex ranges in the order given.
Graph complete_multipartite(const std::vector<std::size_t> & part_sizes);

/// 14 vertices, 21 edges: two 5-cycles sharing an edge with a pendant
/// triangle glued on six further edges.
Graph fig1();

/// 10 vertices, 22 edges; the first five edges form the distinguished
/// bipartite set between fig3b_side_one() and fig3b_side_two().
Graph fig3b();
std::vector<Vertex> fig3b_side_one();
std::vector<Vertex> fig3b_side_two();
std::vector<EdgeIndex> fig3b_distinguished_edges();

/// Resolves "cycle:n", "path:n", "complete:n", "complete_multipartite:a,b,...",
/// "fig1", "fig3b". InputError otherwise.
Graph by_name(std::string_view name);

} // namespace dpchroma::fixtures
