#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dmagic/distance_set.hpp"
#include "dmagic/graph.hpp"

namespace dmagic {

/// Necessary conditions for D-distance magicness. Each screen returns a
/// Refutation when its hypothesis holds, i.e. when the graph provably has
/// no D-distance magic labeling. A screen never asserts magicness.
enum class Rule {
    EmptyNeighborhood,   // some N_D(x) empty while another is not
    NestedNeighborhood,  // N_D(x) strictly inside N_D(y)
    NearTwin,            // N_D(x), N_D(y) differ by exactly one vertex each
    OddRegularEvenOrder, // even order, every |N_D(x)| = r with r odd
    FullSet,             // connected, effective D = {1..d}
    PendantPair,         // two pendants on a common neighbor, 2 in D, 0 not in D
    Distance2Twin,       // distance-2 pair with equal open neighborhoods, 2 in D, 0 not in D
};

/// Stable identifier used in reports: EMPTY_NBHD, NESTED_NBHD, ...
std::string_view rule_id(Rule rule);
std::optional<Rule> rule_from_id(std::string_view id);

struct Refutation {
    Rule rule;
    std::vector<Vertex> witnesses;
    std::string explanation;
    /// OddRegularEvenOrder only: the common neighborhood size r.
    std::optional<std::size_t> regularity;
};

std::optional<Refutation> screen_empty(const Graph& g, const DistanceSet& set);
std::optional<Refutation> screen_nested(const Graph& g, const DistanceSet& set);
std::optional<Refutation> screen_near_twin(const Graph& g, const DistanceSet& set);
std::optional<Refutation> screen_parity(const Graph& g, const DistanceSet& set);
std::optional<Refutation> screen_full_set(const Graph& g, const DistanceSet& set);
std::optional<Refutation> screen_pendant_and_dist2_twin(const Graph& g, const DistanceSet& set);

/// Every firing rule, in Rule declaration order.
std::vector<Refutation> screen_all(const Graph& g, const DistanceSet& set);

}  // namespace dmagic
