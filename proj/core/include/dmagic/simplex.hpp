#pragma once

#include <stdexcept>
#include <vector>

#include "dmagic/rational.hpp"

namespace dmagic {

using RationalMatrix = std::vector<std::vector<Rational>>;

class LpUnbounded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LpSolution {
    std::vector<Rational> primal;  // y
    std::vector<Rational> dual;    // x, one per constraint row
    Rational objective;
    std::size_t pivots = 0;
};

/// maximize c·y subject to A y <= b, y >= 0, for b >= 0 (the origin is
/// feasible, so no phase one is needed). Exact tableau simplex with Bland's
/// rule. The returned dual satisfies x >= 0, Aᵀx >= c, b·x = c·y.
LpSolution maximize_from_origin(const RationalMatrix& a, const std::vector<Rational>& b,
                                const std::vector<Rational>& c);

}  // namespace dmagic
