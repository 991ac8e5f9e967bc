#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dmagic/graph.hpp"

namespace dmagic {

inline constexpr std::size_t kMaxEnumerationOrder = 7;
inline constexpr std::size_t kMaxCanonicalOrder = 11;

/// Canonical code of g: the lexicographically smallest upper-triangle
/// adjacency bit string (graph6 bit order, first bit most significant)
/// over all vertex relabelings. Two graphs are isomorphic iff their codes
/// match. Requires order <= 11.
struct CanonicalForm {
    std::uint64_t code = 0;
    /// perm[v] is the position of original vertex v in the canonical labeling.
    std::vector<Vertex> perm;
};

CanonicalForm canonical_form(const Graph& g);

/// Convenience: g relabeled into canonical vertex order.
Graph canonical_graph(const Graph& g);

using GraphPredicate = std::function<bool(const Graph&)>;

/// One representative (canonically labeled) per isomorphism class of graphs
/// on n vertices, in increasing canonical-code order. Requires 1 <= n <= 7.
/// Results are computed once per process and cached.
std::vector<Graph> enumerate_graphs(std::size_t n, const GraphPredicate& keep = {});

/// Every graph obtained by adding a vertex n (joined to any subset of the
/// existing vertices) to each input graph. No isomorphism deduplication;
/// used to reach order 8 for sweeps that deduplicate only their hits.
std::vector<Graph> extend_by_vertex(const std::vector<Graph>& graphs);

}  // namespace dmagic
