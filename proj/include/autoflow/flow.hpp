#pragma once

#include <complex>
#include <span>

#include "autoflow/autonomous.hpp"
#include "autoflow/homogeneity.hpp"

namespace autoflow {

/// One-dimensional autonomous vector field x' = f(x) over a ring R.
/// Parameters and series coefficients live in Frac(R); closed-form kinds
/// carry exact parameters, the Series kind carries a truncated expansion
/// around its base point.
struct VectorField {
    enum class Kind { Constant, Affine, ExpField, Series };

    Kind kind;
    Ring ring;                           // base ring R
    Value a, b;                          // parameters, in Frac(R)
    std::optional<HurwitzSeries> series; // Series kind, over Frac(R)
    Value base_point;                    // Series kind, in Frac(R)

    static VectorField constant(const Ring &ring, const Value &a);
    static VectorField affine(const Ring &ring, const Value &a, const Value &b);
    static VectorField exp_field(const Ring &ring, const Value &a);
    static VectorField from_series(const Ring &ring, HurwitzSeries f,
                                   const Value &base_point);
    /// Mini-grammar: const:a | affine:a,b | expfield:a | series:[c0,c1,...]
    /// (series fields are taken around base point 0).
    static VectorField parse(const Ring &ring, std::string_view text);

    /// The field r*f, r in Frac(R).
    VectorField scaled(const Value &r) const;

    Ring frac_ring() const { return ring.fraction_ring(); }
};

/// Truncated flow at a base point: Phi(t) = x0 + sum A_n t^n / n!, with
/// t_coeffs = (Phi_0, ..., Phi_M) over Frac(R), Phi_0 = x0.
struct FlowSeries {
    Ring coeff_ring; // Frac(R)
    Value x0;
    int order;
    std::vector<Value> t_coeffs;
};

/// (f(x0), f'(x0), ..., f^{(len-1)}(x0)) over Frac(R).
CoefficientSequence derivative_sequence_at(const VectorField &field,
                                           const Value &x0, int len);

/// The field's expansion around x0 as a Hurwitz series of the given order.
HurwitzSeries field_to_series(const VectorField &field, const Value &x0,
                              int order);

/// Flow coefficients through the autonomous operator.
FlowSeries flow_at_point(const VectorField &field, const Value &x0, int order);

/// Taylor coefficients of the closed-form solutions (Constant, Affine,
/// ExpField at 0); UnsupportedKind for Series.
FlowSeries closed_form_flow(const VectorField &field, const Value &x0, int order);

/// Coefficients c_{m,n} of Phi(t, Phi(s, x0)) for s^m t^n / (m! n!),
/// computed in the tower SeriesOver(Frac(R), ms).
struct BivariateFlow {
    int ms, mt;
    std::vector<std::vector<Value>> c; // c[m][n], m <= ms, n <= mt
};

BivariateFlow bivariate_flow(const VectorField &field, const Value &x0, int ms,
                             int mt);

/// Group law Phi(t, Phi(s, x)) = Phi(s + t, x): c_{m,n} = Phi_{m+n} exactly.
bool group_law_check(const VectorField &field, const Value &x0, int ms, int mt);

/// The two derivative identities f d_x Phi = d_t Phi = f(Phi), verified on
/// the series-mode coefficients computed by both recursion routes.
bool pde_check(const VectorField &field, const Value &x0, int depth);

/// Phi(t, x, r Df) = Phi(rt, x, Df): coefficients scale by r^n.
bool time_scale_check(const VectorField &field, const Value &x0, const Value &r,
                      int depth);

/// The four right-module axioms of the star action (time substitution) on
/// the flow of r*f, checked as coefficient identities.
bool module_axioms_check(const VectorField &field, const Value &x0,
                         const Value &r, const Value &v, const Value &w,
                         int depth);

/// a Phi(t, x, Df(ax)) = Phi(at, x, Df(x)) compose (ax) for a unit a,
/// series mode at base point 0.
bool gmodule_identity_check(const VectorField &field, const Value &unit_a,
                            int depth, int x_order);

/// One unit-twisted flow of the G-module: scalar * Phi(t, x, a Df(scalar x)).
struct TwistedFlow {
    Value a, b;                         // the homogeneity pair (a = 1 for k = 1)
    Value scalar;                       // a^{-1} b
    std::vector<HurwitzSeries> t_coeffs; // coeff 0 = scalar*X, then scalar*A_n
};

/// Enumerates the G-module of the flow for H_k (k = 1 uses the unit group,
/// bounded by |m| <= bound_m on the free part).
std::vector<TwistedFlow> gmodule_orbit(const VectorField &field, int k,
                                       int bound_m = 3, int x_order = 4,
                                       int terms = 4);

/// f(x*) = 0, cross-checked against the vanishing of all flow coefficients.
bool equilibrium_check(const VectorField &field, const Value &x_star);

struct OrbitRow {
    double t_re, t_im, phi_re, phi_im, tail;
};

/// Truncated evaluation of the flow on a grid of complex times, with the
/// crude tail estimate |Phi_M| |t|^M / M!.
std::vector<OrbitRow> orbit_samples(const FlowSeries &flow,
                                    std::span<const std::complex<double>> grid);

/// CSV with header t_re,t_im,phi_re,phi_im,tail_bound; one row per grid
/// point, fixed significant digits.
std::string orbit_csv(const std::vector<OrbitRow> &rows, int precision = 12);

} // namespace autoflow
