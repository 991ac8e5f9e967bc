#include "dmagic/graph.hpp"

#include <algorithm>
#include <sstream>

namespace dmagic {

Graph::Graph(std::size_t order, std::span<const Edge> edges)
    : order_(order),
      adjacency_(order * order, 0),
      neighbors_(order),
      dist_(order * order, kUnreachable),
      component_of_(order, 0)
{
    if (order == 0)
        throw std::invalid_argument("graph order must be positive");

    edges_.reserve(edges.size());
    for (auto e : edges) {
        if (e.u >= order || e.v >= order)
            throw GraphError("vertex out of range in edge " + std::to_string(e.u) + "-" +
                                 std::to_string(e.v),
                             e);
        if (e.u == e.v)
            throw GraphError("self-loop at vertex " + std::to_string(e.u), e);
        Edge norm{std::min(e.u, e.v), std::max(e.u, e.v)};
        if (adjacency_[norm.u * order + norm.v])
            throw GraphError("duplicate edge " + std::to_string(norm.u) + "-" +
                                 std::to_string(norm.v),
                             e);
        adjacency_[norm.u * order + norm.v] = 1;
        adjacency_[norm.v * order + norm.u] = 1;
        edges_.push_back(norm);
    }
    std::sort(edges_.begin(), edges_.end());
    for (auto [u, v] : edges_) {
        neighbors_[u].push_back(v);
        neighbors_[v].push_back(u);
    }
    for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());

    std::vector<Vertex> queue;
    queue.reserve(order);
    for (Vertex s = 0; s < order; ++s) {
        int* row = &dist_[s * order];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex x = queue[head];
            for (Vertex y : neighbors_[x]) {
                if (row[y] == kUnreachable) {
                    row[y] = row[x] + 1;
                    queue.push_back(y);
                }
            }
        }
    }

    std::vector<bool> seen(order, false);
    for (Vertex s = 0; s < order; ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> members;
        int diam = 0;
        for (Vertex y = 0; y < order; ++y) {
            int d = dist_[s * order + y];
            if (d != kUnreachable) {
                members.push_back(y);
                seen[y] = true;
                component_of_[y] = components_.size();
            }
        }
        for (Vertex a : members)
            for (Vertex b : members) diam = std::max(diam, dist_[a * order + b]);
        components_.push_back(std::move(members));
        component_diameters_.push_back(diam);
        diameter_ = std::max(diameter_, diam);
    }
}

long Graph::regularity() const noexcept
{
    auto r = neighbors_[0].size();
    for (const auto& nb : neighbors_)
        if (nb.size() != r) return -1;
    return static_cast<long>(r);
}

std::vector<Vertex> d_neighborhood(const Graph& g, Vertex x, const DistanceSet& set)
{
    if (x >= g.order())
        throw std::out_of_range("vertex " + std::to_string(x) + " out of range");
    std::vector<Vertex> out;
    for (Vertex y = 0; y < g.order(); ++y) {
        int d = g.distance(x, y);
        if (d != kUnreachable && set.contains(d)) out.push_back(y);
    }
    return out;
}

std::uint64_t d_neighborhood_mask(const Graph& g, Vertex x, const DistanceSet& set)
{
    if (g.order() > 64)
        throw std::invalid_argument("bitmask neighborhoods need order <= 64");
    std::uint64_t mask = 0;
    for (Vertex y : d_neighborhood(g, x, set)) mask |= std::uint64_t{1} << y;
    return mask;
}

Graph complement_graph(const Graph& g)
{
    std::vector<Edge> edges;
    for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex b = a + 1; b < g.order(); ++b)
            if (!g.adjacent(a, b)) edges.push_back({a, b});
    return Graph(g.order(), edges);
}

Graph disjoint_union(std::span<const Graph> parts)
{
    if (parts.empty())
        throw std::invalid_argument("disjoint_union of an empty list");
    std::size_t offset = 0;
    std::vector<Edge> edges;
    for (const auto& part : parts) {
        for (auto [u, v] : part.edges()) edges.push_back({u + offset, v + offset});
        offset += part.order();
    }
    return Graph(offset, edges);
}

Graph lexicographic_product(const Graph& g, const Graph& h)
{
    const std::size_t m = h.order();
    std::vector<Edge> edges;
    for (Vertex a = 0; a < g.order(); ++a) {
        for (Vertex b = a; b < g.order(); ++b) {
            for (Vertex x = 0; x < m; ++x) {
                for (Vertex y = 0; y < m; ++y) {
                    Vertex p = a * m + x;
                    Vertex q = b * m + y;
                    if (p >= q) continue;
                    bool joined = a == b ? h.adjacent(x, y) : g.adjacent(a, b);
                    if (joined) edges.push_back({p, q});
                }
            }
        }
    }
    return Graph(g.order() * m, edges);
}

Graph permute(const Graph& g, std::span<const Vertex> perm)
{
    if (perm.size() != g.order())
        throw std::invalid_argument("permutation size mismatch");
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) edges.push_back({perm[u], perm[v]});
    return Graph(g.order(), edges);
}

std::string describe(const Graph& g)
{
    std::ostringstream out;
    out << "order=" << g.order() << " edges=[";
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        if (i) out << ' ';
        out << g.edges()[i].u << '-' << g.edges()[i].v;
    }
    out << ']';
    return out.str();
}

}  // namespace dmagic
