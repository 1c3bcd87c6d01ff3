#include "dpchroma/fixtures.hh"

#include "dpchroma/errors.hh"

#include <charconv>
#include <string>
#include <utility>

namespace dpchroma::fixtures {

namespace {

    // 1-based transcription helper.
    Graph from_one_based(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> pairs)
    {
        std::vector<Edge> edges;
        for (auto [a, b] : pairs)
            edges.push_back({a - 1, b - 1});
        return Graph(n, std::move(edges));
    }

    std::size_t parse_count(std::string_view tok, std::string_view whole)
    {
        std::size_t v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc{} || p != tok.data() + tok.size())
            throw InputError("bad fixture parameter in '" + std::string(whole) + "'");
        return v;
    }

} // namespace

Graph cycle(std::size_t n)
{
    if (n < 3)
        throw InputError("cycle fixture needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i)
        edges.push_back({i, i + 1});
    edges.push_back({0, n - 1});
    return Graph(n, std::move(edges));
}

Graph path(std::size_t n)
{
    if (n < 1)
        throw InputError("path fixture needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i)
        edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
}

Graph complete(std::size_t n)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph complete_multipartite(const std::vector<std::size_t> & part_sizes)
{
    std::vector<std::size_t> part_of;
    for (std::size_t p = 0; p < part_sizes.size(); ++p)
        part_of.insert(part_of.end(), part_sizes[p], p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < part_of.size(); ++u)
        for (Vertex v = u + 1; v < part_of.size(); ++v)
            if (part_of[u] != part_of[v])
                edges.push_back({u, v});
    return Graph(part_of.size(), std::move(edges));
}

Graph fig1()
{
    return from_one_based(14, {
        {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1},
        {3, 7}, {7, 6}, {6, 8}, {8, 4},
        {6, 9}, {9, 8},
        {6, 10}, {10, 7},
        {8, 11}, {11, 4},
        {7, 12}, {12, 3},
        {5, 13}, {13, 1},
        {1, 14}, {14, 2},
    });
}

Graph fig3b()
{
    return from_one_based(10, {
        // distinguished edges
        {3, 4}, {3, 8}, {4, 7}, {4, 1}, {2, 3},
        {4, 6}, {6, 5}, {5, 3}, {3, 1}, {4, 2},
        {1, 5}, {5, 7}, {7, 9}, {9, 5},
        {2, 6}, {6, 10}, {10, 8}, {8, 6},
        {3, 7}, {4, 8}, {9, 6}, {10, 5},
    });
}

std::vector<Vertex> fig3b_side_one() { return {0, 2, 6}; }
std::vector<Vertex> fig3b_side_two() { return {1, 3, 7}; }
std::vector<EdgeIndex> fig3b_distinguished_edges() { return {0, 1, 2, 3, 4}; }

Graph by_name(std::string_view name)
{
    if (name == "fig1")
        return fig1();
    if (name == "fig3b")
        return fig3b();

    auto colon = name.find(':');
    if (colon == std::string_view::npos)
        throw InputError("unknown fixture '" + std::string(name) + "'");
    auto kind = name.substr(0, colon);
    auto arg = name.substr(colon + 1);

    if (kind == "cycle")
        return cycle(parse_count(arg, name));
    if (kind == "path")
        return path(parse_count(arg, name));
    if (kind == "complete")
        return complete(parse_count(arg, name));
    if (kind == "complete_multipartite") {
        std::vector<std::size_t> parts;
        std::size_t start = 0;
        while (start <= arg.size()) {
            auto comma = arg.find(',', start);
            auto tok = arg.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
            parts.push_back(parse_count(tok, name));
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
        return complete_multipartite(parts);
    }
    throw InputError("unknown fixture '" + std::string(name) + "'");
}

} // namespace dpchroma::fixtures
