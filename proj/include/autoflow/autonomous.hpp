#pragma once

#include "autoflow/hurwitz.hpp"

namespace autoflow {

enum class AutonomousMode { Pointwise, Series };

/// Image of the autonomous operator: terms A_1, A_2, ... In series mode each
/// term carries its own valid order (term n is valid to N - n + 1).
struct AutonomousImage {
    AutonomousMode mode;
    std::vector<Value> terms;
    std::vector<HurwitzSeries> series_terms;

    size_t size() const {
        return mode == AutonomousMode::Pointwise ? terms.size() : series_terms.size();
    }
};

/// A_1 = x_0, A_{n+1} = Y_n(A_1..A_n; x_1..x_n). Output length = input length.
AutonomousImage apply_pointwise(const CoefficientSequence &x);

/// Series mode via the chain A_{n+1} = f * d(A_n); produces `terms` terms
/// (default: the maximum N+1 the truncation supports).
AutonomousImage apply_series(const HurwitzSeries &f, int terms = -1);

/// Series mode via the Bell recursion on (f, df, d2f, ...). Independent of
/// apply_series; the two must agree term by term to the valid order.
AutonomousImage apply_series_bell(const HurwitzSeries &f, int terms = -1);

/// The literal nesting f(X) d( ... f(X) d(f(X))) with n factors of f.
HurwitzSeries nested_chain(const HurwitzSeries &f, int n);

struct InvertResult {
    CoefficientSequence x; // over Frac(R)
    bool in_ring;          // every term lies in the base ring
};

/// The unique preimage of y under the pointwise operator, solved
/// triangularly over Frac(R). ZeroLeadingTerm when y_0 = 0.
InvertResult invert(const CoefficientSequence &y);

/// A(alpha x)_n = alpha^n A(x)_n for n = 1..depth (constant scaling).
bool check_scaling(const CoefficientSequence &x, const Value &alpha, int depth);

/// A(D(exp(aX) f)) = (exp(a n X))_n A(F) with F_n = sum_k C(n,k) a^{n-k} d^k f,
/// compared as truncated series for terms 1..depth.
bool check_exp_factor(const HurwitzSeries &f, const Value &alpha, int depth);

/// A(D(exp(f))) = (exp(n f))_n A(Y) with Y_n the complete Bell values of the
/// derivatives of f (Y_0 = 1); requires f(0) = 0.
bool check_exp_composition(const HurwitzSeries &f, int depth);

} // namespace autoflow
