#pragma once

#include <string>
#include <vector>

#include "autoflow/bell.hpp"
#include "autoflow/rings.hpp"

namespace autoflow {

/// Truncated exponential generating function over a constructed ring:
///     f(X) = sum_{n=0}^{N} a_n X^n / n!  + O(X^{N+1}),
/// with the numerators a_n stored directly, so arithmetic stays inside R.
/// Every operation records the valid order of its result; nothing is ever
/// zero-padded.
struct HurwitzSeries {
    Ring ring;
    int order; // N
    std::vector<Value> coeffs;

    HurwitzSeries(Ring r, std::vector<Value> c);
    const Value &coeff(int n) const;
};

/// Finite prefix of an element of R^N (the pointwise carrier of the
/// autonomous operator).
struct CoefficientSequence {
    Ring ring;
    std::vector<Value> terms;
};

HurwitzSeries hurwitz_zero(const Ring &ring, int order);
HurwitzSeries hurwitz_constant(const Ring &ring, const Value &c, int order);
/// The series X: coefficients (0, 1, 0, ..., 0).
HurwitzSeries hurwitz_x(const Ring &ring, int order);
/// exp(alpha X): coefficients alpha^n.
HurwitzSeries exp_series(const Ring &ring, const Value &alpha, int order);

HurwitzSeries series_add(const HurwitzSeries &f, const HurwitzSeries &g);
HurwitzSeries series_sub(const HurwitzSeries &f, const HurwitzSeries &g);
HurwitzSeries series_scale(const Value &c, const HurwitzSeries &f);
HurwitzSeries series_neg(const HurwitzSeries &f);

/// Binomial convolution (the product of Exp_R[X]); order = min of the two.
HurwitzSeries hurwitz_mul(const HurwitzSeries &f, const HurwitzSeries &g);

/// Coefficient left-shift; order drops by one. OrderExhausted at order 0.
HurwitzSeries derivative(const HurwitzSeries &f);

/// (f, df, d2f, ..., d^N f) with decreasing orders.
std::vector<HurwitzSeries> delta_sequence(const HurwitzSeries &f);

/// Composition f(g(X)) through the Bell-polynomial formula; requires
/// g(0) = 0. Order = min of the two.
HurwitzSeries compose(const HurwitzSeries &f, const HurwitzSeries &g);

/// f(aX): coefficient n becomes a^n * a_n.
HurwitzSeries scale_substitute(const HurwitzSeries &f, const Value &a);

/// f(X + c) to order N: b_n = sum_{j<=N-n} a_{n+j} c^j / j!. Requires a
/// coefficient ring in which the positive integers invert (a fraction
/// field, or a series ring over one).
HurwitzSeries taylor_shift(const HurwitzSeries &f, const Value &c);

/// Exact coefficient comparison through order `upto`.
bool series_eq(const HurwitzSeries &f, const HurwitzSeries &g, int upto);

/// Truncated evaluation sum a_n c^n / n! over the fraction field.
Value evaluate(const HurwitzSeries &f, const Value &c);

/// Restriction to a smaller order (never pads).
HurwitzSeries truncate(const HurwitzSeries &f, int order);

HurwitzSeries lift_series_to_fraction(const HurwitzSeries &f);
CoefficientSequence lift_sequence_to_fraction(const CoefficientSequence &x);

/// The Hurwitz expansion evaluated at 0: the coefficient sequence itself.
CoefficientSequence sequence_of(const HurwitzSeries &f);

/// Carrier ops running the Bell machinery over series instead of scalars.
struct HurwitzOps {
    HurwitzSeries add(const HurwitzSeries &a, const HurwitzSeries &b) const {
        return series_add(a, b);
    }
    HurwitzSeries mul(const HurwitzSeries &a, const HurwitzSeries &b) const {
        return hurwitz_mul(a, b);
    }
    HurwitzSeries scale_int(const HurwitzSeries &a, const BigInt &m) const {
        return series_scale(a.ring.from_int(m), a);
    }
};

// JSON form: {"ring": "...", "order": N, "egf_coeffs": ["...", ...]}
std::string hurwitz_to_json(const HurwitzSeries &f);
HurwitzSeries hurwitz_from_json(std::string_view text);

} // namespace autoflow
