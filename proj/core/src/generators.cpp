#include "dmagic/generators.hpp"

#include <stdexcept>

namespace dmagic {

Graph cycle(std::size_t n)
{
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Graph(n, edges);
}

Graph path(std::size_t n)
{
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, edges);
}

Graph complete(std::size_t n)
{
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) edges.push_back({a, b});
    return Graph(n, edges);
}

Graph empty_graph(std::size_t n)
{
    return Graph(n, std::span<const Edge>{});
}

Graph complete_multipartite(std::span<const std::size_t> part_sizes)
{
    if (part_sizes.empty()) throw std::invalid_argument("complete_multipartite needs at least one part");
    std::vector<std::size_t> part_of;
    for (std::size_t i = 0; i < part_sizes.size(); ++i) {
        if (part_sizes[i] == 0) throw std::invalid_argument("part sizes must be >= 1");
        part_of.insert(part_of.end(), part_sizes[i], i);
    }
    std::vector<Edge> edges;
    for (Vertex a = 0; a < part_of.size(); ++a)
        for (Vertex b = a + 1; b < part_of.size(); ++b)
            if (part_of[a] != part_of[b]) edges.push_back({a, b});
    return Graph(part_of.size(), edges);
}

Graph complete_multipartite(std::initializer_list<std::size_t> part_sizes)
{
    return complete_multipartite(std::span<const std::size_t>(part_sizes.begin(), part_sizes.size()));
}

Graph h_np(std::size_t n, std::size_t p)
{
    return complete_multipartite(std::vector<std::size_t>(p, n));
}

Graph cycle_union(std::span<const std::size_t> lengths)
{
    std::vector<Graph> parts;
    for (auto n : lengths) parts.push_back(cycle(n));
    return disjoint_union(parts);
}

}  // namespace dmagic
