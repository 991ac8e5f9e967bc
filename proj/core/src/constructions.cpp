#include "dmagic/constructions.hpp"

#include <algorithm>

#include "dmagic/generators.hpp"

namespace dmagic {

namespace {

std::vector<Vertex> antipodes_of(const Graph& g, Vertex x)
{
    std::vector<Vertex> out;
    for (Vertex y = 0; y < g.order(); ++y)
        if (g.distance(x, y) == g.diameter()) out.push_back(y);
    return out;
}

}  // namespace

MagicCertificate antipodal_labeling(const Graph& g)
{
    const int d = g.diameter();
    if (d < 2)
        throw ConstructionRefused("antipodal labeling needs diameter >= 2, got " + std::to_string(d));
    const std::size_t v = g.order();
    std::vector<Label> labels(v, 0);
    Label next = 1;
    for (Vertex x = 0; x < v; ++x) {
        auto far = antipodes_of(g, x);
        if (far.size() != 1)
            throw ConstructionRefused("vertex v" + std::to_string(x) + " has " +
                                      std::to_string(far.size()) + " vertices at distance " +
                                      std::to_string(d) + "; need exactly one");
        if (labels[x] != 0) continue;
        labels[x] = next;
        labels[far[0]] = static_cast<Label>(v) + 1 - next;
        ++next;
    }
    return MagicCertificate::issue(g, Labeling(std::move(labels)), DistanceSet::range(1, d - 1));
}

MagicCertificate trivial_labeling(const Graph& g)
{
    if (!g.connected())
        throw ConstructionRefused("trivial labeling needs a connected graph; use equal_components_labeling");
    return MagicCertificate::issue(g, Labeling::identity(g.order()), DistanceSet::upto(g.diameter()));
}

MagicCertificate equal_components_labeling(std::span<const Graph> parts)
{
    if (parts.empty()) throw ConstructionRefused("no components given");
    const std::size_t n = parts.front().order();
    const std::size_t p = parts.size();
    for (const auto& part : parts) {
        if (!part.connected()) throw ConstructionRefused("every part must be connected");
        if (part.order() != n) throw ConstructionRefused("all components must have the same order");
    }
    if (n % 2 == 1 && p % 2 == 0)
        throw ConstructionRefused("equal-order components admit a {0..d_max} labeling iff n is even "
                                  "or n and p are both odd; got n=" +
                                  std::to_string(n) + ", p=" + std::to_string(p));
    if (n == 1 && p > 1)
        throw ConstructionRefused("components of order 1 carry their own label as weight; "
                                  "p > 1 isolated vertices cannot be balanced");

    // label(i, j) for component i in 1..p and vertex j in 1..n
    auto label = [&](long i, long j) -> long {
        const long pp = static_cast<long>(p);
        if (n % 2 == 0) return j % 2 == 1 ? i + (j - 1) * pp : pp - i + 1 + (j - 1) * pp;
        const long m = (pp - 1) / 2;
        if (j == 1) return i <= m + 1 ? 2 * i - 1 : 2 * (i - m - 1);
        if (j == 2) return 4 * m + 3 - i;
        if (j == 3) return i <= m + 1 ? 5 * m + 4 - i : 7 * m + 5 - i;
        if (j % 2 == 0) return i + (j - 1) * (2 * m + 1);
        return 2 * m + 2 - i + (j - 1) * (2 * m + 1);
    };

    std::vector<Label> labels;
    labels.reserve(n * p);
    for (std::size_t i = 1; i <= p; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            labels.push_back(static_cast<Label>(label(static_cast<long>(i), static_cast<long>(j))));

    Graph g = disjoint_union(parts);
    auto set = DistanceSet::upto(g.diameter());
    return MagicCertificate::issue(std::move(g), Labeling(std::move(labels)), std::move(set));
}

MagicCertificate c4k_labeling(std::size_t k)
{
    return union_c4k_labeling(1, k);
}

MagicCertificate union_c4k_labeling(std::size_t copies, std::size_t k)
{
    if (copies < 1 || k < 1) throw ConstructionRefused("need copies >= 1 and k >= 1");
    const std::size_t len = 4 * k;
    const std::size_t total = copies * len;
    std::vector<std::size_t> lengths(copies, len);
    Graph g = cycle_union(lengths);
    std::vector<Label> labels(total, 0);
    Label next = 1;
    for (std::size_t c = 0; c < copies; ++c) {
        for (std::size_t i = 0; i < 2 * k; ++i) {
            labels[c * len + i] = next;
            labels[c * len + i + 2 * k] = static_cast<Label>(total) + 1 - next;
            ++next;
        }
    }
    return MagicCertificate::issue(std::move(g), Labeling(std::move(labels)),
                                   DistanceSet{static_cast<int>(k)});
}

Graph diam3_graph(std::size_t n)
{
    if (n < 1) throw ConstructionRefused("diameter-3 family needs n >= 1");
    const Vertex x = 0;
    const Vertex y = n + 1;
    std::vector<Edge> edges;
    for (Vertex i = 1; i <= n; ++i) {
        edges.push_back({x, i});
        edges.push_back({y, y + i});
        for (Vertex j = 1; j <= n; ++j)
            if (i != j) edges.push_back({i, y + j});
    }
    Graph g(2 * n + 2, edges);
    if (!g.connected() || g.diameter() != 3)
        throw ConstructionRefused("n=" + std::to_string(n) + " gives " +
                                  (g.connected() ? "diameter " + std::to_string(g.diameter())
                                                 : std::string("a disconnected graph")) +
                                  ", not diameter 3");
    if (g.regularity() != static_cast<long>(n))
        throw ConstructionRefused("built graph is not " + std::to_string(n) + "-regular");
    return g;
}

MagicCertificate diam3_family(std::size_t n)
{
    return antipodal_labeling(diam3_graph(n));
}

}  // namespace dmagic
