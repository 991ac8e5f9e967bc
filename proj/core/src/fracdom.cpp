#include "dmagic/fracdom.hpp"

#include "dmagic/simplex.hpp"

namespace dmagic {

namespace {

// membership[v][u] = 1 iff u ∈ N_D(v)
std::vector<std::vector<bool>> membership(const Graph& g, const DistanceSet& set)
{
    std::vector<std::vector<bool>> in(g.order(), std::vector<bool>(g.order(), false));
    for (Vertex v = 0; v < g.order(); ++v)
        for (Vertex u : d_neighborhood(g, v, set)) in[v][u] = true;
    return in;
}

}  // namespace

bool certify_gamma(const Graph& g, const DistanceSet& set, const GammaResult& result)
{
    const std::size_t n = g.order();
    if (result.witness.size() != n || result.dual.size() != n) return false;
    auto in = membership(g, set);
    Rational primal_sum = 0;
    Rational dual_sum = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (result.witness[v].sign() < 0 || result.dual[v].sign() < 0) return false;
        primal_sum += result.witness[v];
        dual_sum += result.dual[v];
        Rational cover = 0;
        Rational load = 0;
        for (Vertex u = 0; u < n; ++u) {
            if (in[v][u]) cover += result.witness[u];
            if (in[u][v]) load += result.dual[u];
        }
        if (cover < Rational(1)) return false;  // covering constraint at v
        if (load > Rational(1)) return false;   // packing constraint at v
    }
    if (primal_sum != result.gamma || dual_sum != result.gamma) return false;
    const auto order = static_cast<std::int64_t>(n);
    return result.predicted_constant == Rational(order * (order + 1)) / (Rational(2) * result.gamma);
}

GammaResult gamma_f(const Graph& g, const DistanceSet& set)
{
    const std::size_t n = g.order();
    auto in = membership(g, set);
    for (Vertex v = 0; v < n; ++v) {
        bool any = false;
        for (Vertex u = 0; u < n; ++u) any = any || in[v][u];
        if (!any)
            throw FracdomInfeasible("N_D(v" + std::to_string(v) + ") is empty; covering LP infeasible", v);
    }

    // Dual packing LP: max Σ y(v) s.t. Σ_{v : u ∈ N_D(v)} y(v) <= 1 for each u.
    // Its optimal tableau also yields the optimal covering g.
    RationalMatrix a(n, std::vector<Rational>(n));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) a[u][v] = in[v][u] ? 1 : 0;
    std::vector<Rational> ones(n, Rational(1));
    auto lp = maximize_from_origin(a, ones, ones);

    GammaResult out;
    out.gamma = lp.objective;
    out.witness = lp.dual;
    out.dual = lp.primal;
    const auto order = static_cast<std::int64_t>(n);
    out.predicted_constant = Rational(order * (order + 1)) / (Rational(2) * out.gamma);
    if (!certify_gamma(g, set, out))
        throw std::logic_error("fractional domination optimum failed its duality certificate");
    return out;
}

ConstantPrediction predicted_constant(const Graph& g, const DistanceSet& set)
{
    auto result = gamma_f(g, set);
    ConstantPrediction out{result.predicted_constant, std::nullopt};
    if (result.predicted_constant.is_integer())
        out.constant = result.predicted_constant.numerator().convert_to<std::int64_t>();
    return out;
}

}  // namespace dmagic
