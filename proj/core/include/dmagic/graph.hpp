#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dmagic/distance_set.hpp"

namespace dmagic {

using Vertex = std::size_t;

/// Unordered vertex pair; Graph stores edges normalized to u < v.
struct Edge {
    Vertex u;
    Vertex v;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline constexpr int kUnreachable = -1;

/// Raised by build_graph for out-of-range vertices, loops or duplicate edges.
class GraphError : public std::invalid_argument {
public:
    GraphError(const std::string& what, Edge offending)
        : std::invalid_argument(what), offending_(offending) {}
    Edge offending() const noexcept { return offending_; }

private:
    Edge offending_;
};

/// Immutable finite simple undirected graph.
///
/// Construction computes connected components and the all-pairs distance
/// table by BFS from every vertex; afterwards all queries are O(1) or
/// O(degree). Distances across components are kUnreachable.
class Graph {
public:
    /// Builds a graph on vertices {0..order-1}. Throws GraphError.
    Graph(std::size_t order, std::span<const Edge> edges);
    Graph(std::size_t order, std::initializer_list<Edge> edges)
        : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

    std::size_t order() const noexcept { return order_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    /// Sorted, each with u < v.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool adjacent(Vertex a, Vertex b) const { return adjacency_[a * order_ + b] != 0; }
    const std::vector<Vertex>& neighbors(Vertex x) const { return neighbors_[x]; }
    std::size_t degree(Vertex x) const { return neighbors_[x].size(); }
    /// Common degree when regular, else -1.
    long regularity() const noexcept;

    int distance(Vertex a, Vertex b) const { return dist_[a * order_ + b]; }
    /// Largest finite distance (d_max for disconnected graphs).
    int diameter() const noexcept { return diameter_; }

    bool connected() const noexcept { return components_.size() == 1; }
    const std::vector<std::vector<Vertex>>& components() const noexcept { return components_; }
    std::size_t component_of(Vertex x) const { return component_of_[x]; }
    /// Diameter of each component, aligned with components().
    const std::vector<int>& component_diameters() const noexcept { return component_diameters_; }
    /// Diameter of the component containing x.
    int eccentricity_bound(Vertex x) const { return component_diameters_[component_of_[x]]; }

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.order_ == b.order_ && a.edges_ == b.edges_;
    }

private:
    std::size_t order_;
    std::vector<Edge> edges_;
    std::vector<std::uint8_t> adjacency_;
    std::vector<std::vector<Vertex>> neighbors_;
    std::vector<int> dist_;
    int diameter_ = 0;
    std::vector<std::vector<Vertex>> components_;
    std::vector<std::size_t> component_of_;
    std::vector<int> component_diameters_;
};

inline Graph build_graph(std::size_t order, std::span<const Edge> edges)
{
    return Graph(order, edges);
}

/// Vertices y with distance(x, y) in D, ascending. Never crosses components.
std::vector<Vertex> d_neighborhood(const Graph& g, Vertex x, const DistanceSet& set);

/// Bitmask form of d_neighborhood; requires order <= 64.
std::uint64_t d_neighborhood_mask(const Graph& g, Vertex x, const DistanceSet& set);

Graph complement_graph(const Graph& g);

/// Components are renumbered consecutively in list order. Throws on empty list.
Graph disjoint_union(std::span<const Graph> parts);

/// G[H]: vertex (a, x) is a * |V(H)| + x.
Graph lexicographic_product(const Graph& g, const Graph& h);

/// Relabels vertex v as perm[v].
Graph permute(const Graph& g, std::span<const Vertex> perm);

std::string describe(const Graph& g);

}  // namespace dmagic
