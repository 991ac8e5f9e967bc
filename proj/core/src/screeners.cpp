#include "dmagic/screeners.hpp"

#include <algorithm>
#include <array>
#include <iterator>

namespace dmagic {

namespace {

constexpr std::array<std::pair<Rule, std::string_view>, 7> kRuleIds{{
    {Rule::EmptyNeighborhood, "EMPTY_NBHD"},
    {Rule::NestedNeighborhood, "NESTED_NBHD"},
    {Rule::NearTwin, "NEAR_TWIN"},
    {Rule::OddRegularEvenOrder, "ODD_REGULAR_EVEN_ORDER"},
    {Rule::FullSet, "FULL_SET"},
    {Rule::PendantPair, "PENDANT_PAIR"},
    {Rule::Distance2Twin, "DIST2_TWIN"},
}};

using Neighborhoods = std::vector<std::vector<Vertex>>;

Neighborhoods all_neighborhoods(const Graph& g, const DistanceSet& set)
{
    Neighborhoods out(g.order());
    for (Vertex x = 0; x < g.order(); ++x) out[x] = d_neighborhood(g, x, set);
    return out;
}

std::size_t intersection_size(const std::vector<Vertex>& a, const std::vector<Vertex>& b)
{
    std::size_t count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) ++i;
        else if (*j < *i) ++j;
        else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

std::string pair_text(Vertex x, Vertex y)
{
    return "v" + std::to_string(x) + ", v" + std::to_string(y);
}

// D contains 2 but not 0 and the graph has diameter >= 2.
bool two_without_zero(const Graph& g, const DistanceSet& set)
{
    return g.diameter() >= 2 && set.contains(2) && !set.contains(0);
}

}  // namespace

std::string_view rule_id(Rule rule)
{
    for (auto [r, id] : kRuleIds)
        if (r == rule) return id;
    return "?";
}

std::optional<Rule> rule_from_id(std::string_view id)
{
    for (auto [r, name] : kRuleIds)
        if (name == id) return r;
    return std::nullopt;
}

std::optional<Refutation> screen_empty(const Graph& g, const DistanceSet& set)
{
    auto nbhd = all_neighborhoods(g, set);
    auto empty = std::find_if(nbhd.begin(), nbhd.end(), [](auto& n) { return n.empty(); });
    auto full = std::find_if(nbhd.begin(), nbhd.end(), [](auto& n) { return !n.empty(); });
    if (empty == nbhd.end() || full == nbhd.end()) return std::nullopt;
    Vertex x = static_cast<Vertex>(empty - nbhd.begin());
    Vertex y = static_cast<Vertex>(full - nbhd.begin());
    return Refutation{Rule::EmptyNeighborhood,
                      {x, y},
                      "N_D(v" + std::to_string(x) + ") is empty but N_D(v" + std::to_string(y) +
                          ") is not: weights 0 and positive",
                      std::nullopt};
}

std::optional<Refutation> screen_nested(const Graph& g, const DistanceSet& set)
{
    auto nbhd = all_neighborhoods(g, set);
    for (Vertex x = 0; x < g.order(); ++x) {
        for (Vertex y = 0; y < g.order(); ++y) {
            if (x == y || nbhd[x].size() >= nbhd[y].size()) continue;
            if (std::includes(nbhd[y].begin(), nbhd[y].end(), nbhd[x].begin(), nbhd[x].end()))
                return Refutation{Rule::NestedNeighborhood,
                                  {x, y},
                                  "N_D(v" + std::to_string(x) + ") is a proper subset of N_D(v" +
                                      std::to_string(y) + "): the difference would need label sum 0",
                                  std::nullopt};
        }
    }
    return std::nullopt;
}

std::optional<Refutation> screen_near_twin(const Graph& g, const DistanceSet& set)
{
    auto nbhd = all_neighborhoods(g, set);
    for (Vertex x = 0; x < g.order(); ++x) {
        if (nbhd[x].empty()) continue;
        for (Vertex y = x + 1; y < g.order(); ++y) {
            if (nbhd[y].size() != nbhd[x].size()) continue;
            if (intersection_size(nbhd[x], nbhd[y]) + 1 == nbhd[x].size())
                return Refutation{Rule::NearTwin,
                                  {x, y},
                                  "N_D(" + pair_text(x, y) +
                                      ") differ in exactly one vertex each: those two would need equal labels",
                                  std::nullopt};
        }
    }
    return std::nullopt;
}

std::optional<Refutation> screen_parity(const Graph& g, const DistanceSet& set)
{
    if (g.order() % 2 != 0) return std::nullopt;
    auto nbhd = all_neighborhoods(g, set);
    const std::size_t r = nbhd[0].size();
    if (r % 2 == 0) return std::nullopt;
    for (const auto& n : nbhd)
        if (n.size() != r) return std::nullopt;
    return Refutation{Rule::OddRegularEvenOrder,
                      {},
                      "even order " + std::to_string(g.order()) + " with every |N_D| = " +
                          std::to_string(r) + " (odd)",
                      r};
}

std::optional<Refutation> screen_full_set(const Graph& g, const DistanceSet& set)
{
    if (!g.connected() || g.order() < 2) return std::nullopt;
    auto effective = set.effective(g.diameter());
    if (!effective || *effective != DistanceSet::range(1, g.diameter())) return std::nullopt;
    return Refutation{Rule::FullSet,
                      {},
                      "D = {1..d} on a connected graph: the complementary set is {0}",
                      std::nullopt};
}

std::optional<Refutation> screen_pendant_and_dist2_twin(const Graph& g, const DistanceSet& set)
{
    if (!two_without_zero(g, set)) return std::nullopt;
    for (Vertex x = 0; x < g.order(); ++x) {
        if (g.degree(x) != 1) continue;
        for (Vertex y = x + 1; y < g.order(); ++y) {
            if (g.degree(y) == 1 && g.neighbors(x)[0] == g.neighbors(y)[0])
                return Refutation{Rule::PendantPair,
                                  {x, y, g.neighbors(x)[0]},
                                  "pendants " + pair_text(x, y) + " hang on v" +
                                      std::to_string(g.neighbors(x)[0]) +
                                      ": they would need equal labels",
                                  std::nullopt};
        }
    }
    for (Vertex x = 0; x < g.order(); ++x) {
        for (Vertex y = x + 1; y < g.order(); ++y) {
            if (g.distance(x, y) == 2 && g.neighbors(x) == g.neighbors(y))
                return Refutation{Rule::Distance2Twin,
                                  {x, y},
                                  pair_text(x, y) +
                                      " are at distance 2 with equal neighborhoods: they would need equal labels",
                                  std::nullopt};
        }
    }
    return std::nullopt;
}

std::vector<Refutation> screen_all(const Graph& g, const DistanceSet& set)
{
    std::vector<Refutation> out;
    for (auto screen : {screen_empty, screen_nested, screen_near_twin, screen_parity, screen_full_set,
                        screen_pendant_and_dist2_twin}) {
        if (auto r = screen(g, set)) out.push_back(std::move(*r));
    }
    return out;
}

}  // namespace dmagic
