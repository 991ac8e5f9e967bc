#pragma once

#include <span>
#include <vector>

#include "dmagic/graph.hpp"

namespace dmagic {

/// C_n on 0..n-1 with edges i ~ i+1 mod n. Requires n >= 3.
Graph cycle(std::size_t n);
/// P_n on 0..n-1. Requires n >= 1.
Graph path(std::size_t n);
Graph complete(std::size_t n);
/// n isolated vertices (the complement of K_n).
Graph empty_graph(std::size_t n);
/// Parts are consecutive vertex blocks in the given order.
Graph complete_multipartite(std::span<const std::size_t> part_sizes);
Graph complete_multipartite(std::initializer_list<std::size_t> part_sizes);
/// H_{n,p}: p parts of n vertices each.
Graph h_np(std::size_t n, std::size_t p);
/// Disjoint union of cycles of the given lengths.
Graph cycle_union(std::span<const std::size_t> lengths);

}  // namespace dmagic
