#include "dmagic/simplex.hpp"

namespace dmagic {

LpSolution maximize_from_origin(const RationalMatrix& a, const std::vector<Rational>& b,
                                const std::vector<Rational>& c)
{
    const std::size_t m = a.size();
    const std::size_t n = c.size();
    if (b.size() != m) throw std::invalid_argument("rhs size mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("constraint row size mismatch");
    for (const auto& v : b)
        if (v.sign() < 0) throw std::invalid_argument("rhs must be nonnegative");

    const std::size_t cols = n + m;
    // Row i: [A_i | e_i] with right-hand side rhs[i]; basis[i] names its basic column.
    RationalMatrix tab(m, std::vector<Rational>(cols));
    std::vector<Rational> rhs = b;
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) tab[i][j] = a[i][j];
        tab[i][n + i] = 1;
        basis[i] = n + i;
    }
    std::vector<Rational> reduced(cols);
    for (std::size_t j = 0; j < n; ++j) reduced[j] = -c[j];
    Rational value = 0;

    LpSolution out;
    while (true) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            if (reduced[j].sign() < 0) {
                enter = j;
                break;
            }
        }
        if (enter == cols) break;

        std::size_t leave = m;
        Rational best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (tab[i][enter].sign() <= 0) continue;
            Rational ratio = rhs[i] / tab[i][enter];
            if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m) throw LpUnbounded("linear program is unbounded");

        Rational pivot = tab[leave][enter];
        for (auto& v : tab[leave]) v /= pivot;
        rhs[leave] /= pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || tab[i][enter].is_zero()) continue;
            Rational factor = tab[i][enter];
            for (std::size_t j = 0; j < cols; ++j)
                if (!tab[leave][j].is_zero()) tab[i][j] -= factor * tab[leave][j];
            rhs[i] -= factor * rhs[leave];
        }
        if (!reduced[enter].is_zero()) {
            Rational factor = reduced[enter];
            for (std::size_t j = 0; j < cols; ++j)
                if (!tab[leave][j].is_zero()) reduced[j] -= factor * tab[leave][j];
            value -= factor * rhs[leave];
        }
        basis[leave] = enter;
        ++out.pivots;
    }

    out.primal.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) out.primal[basis[i]] = rhs[i];
    out.dual.assign(reduced.begin() + static_cast<std::ptrdiff_t>(n), reduced.end());
    out.objective = value;
    return out;
}

}  // namespace dmagic
