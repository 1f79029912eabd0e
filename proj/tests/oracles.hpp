#pragma once

// Test-only oracles, independent of the implementation paths they check.

#include "autoflow/autonomous.hpp"

namespace autoflow::testing {

/// Composition by plain polynomial substitution over the fraction field:
/// f(g(X)) = sum_j (a_j / j!) g(X)^j via Horner. Never touches compose().
inline HurwitzSeries substitute_compose(const HurwitzSeries &f,
                                        const HurwitzSeries &g) {
    HurwitzSeries fl = lift_series_to_fraction(f);
    HurwitzSeries gl = lift_series_to_fraction(g);
    const Ring &F = fl.ring;
    const int n = std::min(fl.order, gl.order);
    HurwitzSeries acc = hurwitz_zero(F, n);
    for (int j = fl.order; j >= 0; --j) {
        Value cj = F.mul(fl.coeff(j), *F.try_invert(F.from_int(factorial(j))));
        acc = hurwitz_mul(acc, gl);
        acc = series_add(acc, hurwitz_constant(F, cj, acc.order));
    }
    return acc;
}

/// Polynomial shift oracle: expands f(X + c) coefficient-by-coefficient
/// through binomial sums on the ordinary (non-EGF) coefficients.
inline HurwitzSeries polynomial_shift(const HurwitzSeries &f, const Value &c) {
    const Ring &F = f.ring;
    const int n = f.order;
    // ordinary coefficients p_j = a_j / j!
    std::vector<Value> p;
    for (int j = 0; j <= n; ++j)
        p.push_back(F.mul(f.coeff(j), *F.try_invert(F.from_int(factorial(j)))));
    // q_m = sum_{j>=m} C(j, m) p_j c^{j-m}
    std::vector<Value> out;
    for (int m = 0; m <= n; ++m) {
        Value acc = F.zero();
        Value cpow = F.one();
        for (int j = m; j <= n; ++j) {
            Value term = F.mul(F.from_int(binomial(j, m)), F.mul(p[static_cast<size_t>(j)], cpow));
            acc = F.add(acc, term);
            cpow = F.mul(cpow, c);
        }
        out.push_back(F.mul(acc, F.from_int(factorial(m))));
    }
    return HurwitzSeries(F, std::move(out));
}

/// Forward oracle for invert(): just the pointwise operator.
inline std::vector<Value> forward(const CoefficientSequence &x) {
    return apply_pointwise(x).terms;
}

} // namespace autoflow::testing
