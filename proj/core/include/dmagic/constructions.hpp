#pragma once

#include <span>
#include <stdexcept>

#include "dmagic/graph.hpp"
#include "dmagic/labeling.hpp"

namespace dmagic {

/// A constructor's precondition failed; what() names the reason.
class ConstructionRefused : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Every vertex must have exactly one vertex at distance d (its antipode).
/// Pairs are labeled i and v+1-i, giving a {1..d-1} certificate with
/// constant v(v+1)/2 - (v+1). Refuses (naming a vertex) otherwise, and
/// refuses d < 2 where {1..d-1} is empty.
MagicCertificate antipodal_labeling(const Graph& g);

/// Identity labeling on a connected graph, D = {0..d}, constant v(v+1)/2.
MagicCertificate trivial_labeling(const Graph& g);

/// p components of common order n, D = {0..d_max}. Requires n even, or n and
/// p both odd; each component then carries label sum n(np+1)/2. Component i
/// receives vertices i*n .. i*n+n-1 of the result graph, in input order.
MagicCertificate equal_components_labeling(std::span<const Graph> parts);

/// C_{4k} with D = {k}; vertices i and i+2k get labels summing to 4k+1.
MagicCertificate c4k_labeling(std::size_t k);

/// m disjoint copies of C_{4k} with D = {k}; constant 4mk+1.
MagicCertificate union_c4k_labeling(std::size_t copies, std::size_t k);

/// n-regular graph on 2n+2 vertices: hubs x, y with spokes x-x_i, y-y_i
/// and cross edges x_i-y_j for i != j. Vertex layout: x = 0, x_i = i,
/// y = n+1, y_i = n+1+i. Refuses if the built graph does not have diameter 3.
Graph diam3_graph(std::size_t n);

/// diam3_graph(n) with its antipodal {1,2} certificate.
MagicCertificate diam3_family(std::size_t n);

}  // namespace dmagic
