#include "dmagic/labeling.hpp"

#include <algorithm>

namespace dmagic {

Labeling::Labeling(std::vector<Label> labels) : labels_(std::move(labels))
{
    std::vector<bool> seen(labels_.size() + 1, false);
    for (Label l : labels_) {
        if (l < 1 || static_cast<std::size_t>(l) > labels_.size() || seen[l])
            throw std::invalid_argument("labels must be a permutation of 1.." +
                                        std::to_string(labels_.size()));
        seen[l] = true;
    }
}

Labeling Labeling::identity(std::size_t order)
{
    std::vector<Label> labels(order);
    for (std::size_t i = 0; i < order; ++i) labels[i] = static_cast<Label>(i + 1);
    return Labeling(std::move(labels));
}

namespace {

void check_sizes(const Graph& g, const Labeling& f)
{
    if (g.order() != f.size())
        throw LabelingMismatch("labeling has " + std::to_string(f.size()) +
                               " labels for a graph of order " + std::to_string(g.order()));
}

}  // namespace

Weight vertex_weight(const Graph& g, const Labeling& f, Vertex x, const DistanceSet& set)
{
    check_sizes(g, f);
    Weight w = 0;
    for (Vertex y : d_neighborhood(g, x, set)) w += f[y];
    return w;
}

std::vector<Weight> vertex_weights(const Graph& g, const Labeling& f, const DistanceSet& set)
{
    check_sizes(g, f);
    std::vector<Weight> out(g.order(), 0);
    for (Vertex x = 0; x < g.order(); ++x) out[x] = vertex_weight(g, f, x, set);
    return out;
}

std::string to_string(Verdict::Kind kind)
{
    switch (kind) {
    case Verdict::Kind::Magic: return "MAGIC";
    case Verdict::Kind::NotMagic: return "NOT_MAGIC";
    case Verdict::Kind::Degenerate: return "DEGENERATE";
    }
    return "?";
}

Verdict verify_magic(const Graph& g, const Labeling& f, const DistanceSet& set)
{
    check_sizes(g, f);
    Verdict verdict;
    bool any_nonempty = false;
    for (Vertex x = 0; x < g.order(); ++x)
        if (!d_neighborhood(g, x, set).empty()) any_nonempty = true;
    if (!any_nonempty) {
        verdict.kind = Verdict::Kind::Degenerate;
        return verdict;
    }
    auto weights = vertex_weights(g, f, set);
    // Any unequal pair implies some vertex differs from vertex 0, so the
    // lexicographically first pair always starts at 0.
    for (Vertex y = 1; y < g.order(); ++y) {
        if (weights[y] != weights[0]) {
            verdict.kind = Verdict::Kind::NotMagic;
            verdict.witness = {0, y};
            verdict.first_weight = weights[0];
            verdict.second_weight = weights[y];
            return verdict;
        }
    }
    verdict.kind = Verdict::Kind::Magic;
    verdict.constant = weights[0];
    return verdict;
}

MagicCertificate MagicCertificate::issue(Graph g, Labeling f, DistanceSet set)
{
    auto verdict = verify_magic(g, f, set);
    if (!verdict.magic())
        throw Rejected("labeling is not " + set.to_string() + "-distance magic (" +
                           to_string(verdict.kind) + ")",
                       verdict);
    return MagicCertificate(std::move(g), std::move(f), std::move(set), verdict.constant);
}

std::vector<Weight> component_label_sums(const Graph& g, const Labeling& f)
{
    check_sizes(g, f);
    std::vector<Weight> sums;
    for (const auto& comp : g.components()) {
        Weight s = 0;
        for (Vertex x : comp) s += f[x];
        sums.push_back(s);
    }
    return sums;
}

std::optional<MagicCertificate> duality_transfer(const MagicCertificate& cert)
{
    const Graph& g = cert.graph();
    auto sums = component_label_sums(g, cert.labeling());
    if (std::adjacent_find(sums.begin(), sums.end(), std::not_equal_to<>()) != sums.end())
        throw DualityRefused(
            "component label sums differ; the complement-set transfer for disconnected "
            "graphs needs equal sums in every component");
    auto dual = complement_distance_set(cert.distance_set(), g.diameter());
    if (!dual) return std::nullopt;
    auto out = MagicCertificate::issue(g, cert.labeling(), *dual);
    if (out.constant() != sums.front() - cert.constant())
        throw std::logic_error("dual constant disagrees with component sum minus constant");
    return out;
}

}  // namespace dmagic
