#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dmagic/distance_set.hpp"
#include "dmagic/graph.hpp"
#include "dmagic/rational.hpp"

namespace dmagic {

/// Thrown when some N_D(v) is empty: no fractional dominating function
/// exists (see the EMPTY_NBHD screen).
class FracdomInfeasible : public std::domain_error {
public:
    FracdomInfeasible(const std::string& what, Vertex vertex)
        : std::domain_error(what), vertex_(vertex) {}
    Vertex vertex() const noexcept { return vertex_; }

private:
    Vertex vertex_;
};

/// Optimum of   min Σ g(v)  s.t.  Σ_{u ∈ N_D(v)} g(u) >= 1,  g >= 0.
struct GammaResult {
    Rational gamma;
    /// Optimal g, one value per vertex.
    std::vector<Rational> witness;
    /// Optimal solution of the dual packing LP; its objective equals gamma.
    std::vector<Rational> dual;
    /// n(n+1) / (2 gamma): the only possible magic constant.
    Rational predicted_constant;
};

/// Solves the covering LP exactly and certifies the optimum: the witness is
/// rechecked against every constraint and matched against a feasible dual
/// of equal value. Throws FracdomInfeasible.
GammaResult gamma_f(const Graph& g, const DistanceSet& set);

struct ConstantPrediction {
    Rational exact;
    /// Set when exact is an integer; otherwise the graph is not D-magic.
    std::optional<std::int64_t> constant;

    bool integral() const noexcept { return constant.has_value(); }
};

/// Propagates FracdomInfeasible.
ConstantPrediction predicted_constant(const Graph& g, const DistanceSet& set);

/// Independent check that `gamma` is certified by (witness, dual). Exposed
/// for tests and the CLI. Returns false on any violated constraint.
bool certify_gamma(const Graph& g, const DistanceSet& set, const GammaResult& result);

}  // namespace dmagic
