#pragma once

#include <string>
#include <vector>

#include "dmagic/graph.hpp"

namespace dmagic {

/// Decodes a Prüfer sequence over {0..n-1} (length n-2) into a labeled tree.
Graph tree_from_pruefer(std::span<const Vertex> sequence);

/// Isomorphism-invariant encoding of a tree, rooted at its center(s).
/// Throws if g is not a tree.
std::string tree_canonical_string(const Graph& g);

/// All non-isomorphic trees on n vertices (1 <= n <= 10), generated from
/// Prüfer sequences and deduplicated by tree_canonical_string, sorted by
/// that string.
std::vector<Graph> enumerate_trees(std::size_t n);

}  // namespace dmagic
