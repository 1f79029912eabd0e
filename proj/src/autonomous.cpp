#include "autoflow/autonomous.hpp"

namespace autoflow {

AutonomousImage apply_pointwise(const CoefficientSequence &x) {
    AutonomousImage img{AutonomousMode::Pointwise, {}, {}};
    img.terms = autonomous_terms_generic<Value>(std::span<const Value>(x.terms),
                                                ValueOps{x.ring});
    return img;
}

namespace {
int clamp_terms(const HurwitzSeries &f, int terms) {
    const int max_terms = f.order + 1;
    if (terms < 0)
        return max_terms;
    if (terms > max_terms)
        throw OrderExhausted("requested " + std::to_string(terms) +
                             " terms but order " + std::to_string(f.order) +
                             " supports only " + std::to_string(max_terms));
    if (terms == 0)
        throw EmptyInput("requested zero terms");
    return terms;
}
} // namespace

AutonomousImage apply_series(const HurwitzSeries &f, int terms) {
    if (f.order < 1)
        throw OrderExhausted("apply_series: needs order >= 1");
    const int count = clamp_terms(f, terms);
    AutonomousImage img{AutonomousMode::Series, {}, {}};
    img.series_terms.reserve(static_cast<size_t>(count));
    img.series_terms.push_back(f);
    for (int n = 1; n < count; ++n)
        img.series_terms.push_back(hurwitz_mul(f, derivative(img.series_terms.back())));
    return img;
}

AutonomousImage apply_series_bell(const HurwitzSeries &f, int terms) {
    if (f.order < 1)
        throw OrderExhausted("apply_series_bell: needs order >= 1");
    const int count = clamp_terms(f, terms);
    std::vector<HurwitzSeries> deltas = delta_sequence(f);
    if (static_cast<int>(deltas.size()) > count)
        deltas.erase(deltas.begin() + count, deltas.end());
    AutonomousImage img{AutonomousMode::Series, {}, {}};
    img.series_terms = autonomous_terms_generic<HurwitzSeries>(
        std::span<const HurwitzSeries>(deltas), HurwitzOps{});
    return img;
}

HurwitzSeries nested_chain(const HurwitzSeries &f, int n) {
    if (n < 1)
        throw BadRange("nested_chain: n >= 1");
    HurwitzSeries h = f;
    for (int i = 1; i < n; ++i)
        h = hurwitz_mul(f, derivative(h));
    return h;
}

InvertResult invert(const CoefficientSequence &y) {
    if (y.terms.empty())
        throw EmptyInput("invert: empty sequence");
    Ring base = y.ring;
    if (base.spec()->is_field()) {
        // recover the integral base when the input already lives in Frac(R)
        if (base.kind() == RingKind::Rationals)
            base = Ring(RingSpec::integers());
        else if (base.kind() == RingKind::Fraction)
            base = Ring(base.spec()->base);
    }
    Ring F = y.ring.fraction_ring();
    CoefficientSequence yf = lift_sequence_to_fraction(y);
    if (F.is_zero(yf.terms[0]))
        throw ZeroLeadingTerm("invert: the null space R^N_0 has no preimage");

    const size_t L = yf.terms.size();
    std::vector<Value> x;
    std::vector<Value> A; // A_m = y_{m-1}, the image terms seen so far
    x.reserve(L);
    A.reserve(L);
    x.push_back(yf.terms[0]);
    A.push_back(yf.terms[0]);
    Value inv_x0 = *F.try_invert(x[0]);
    ValueOps ops{F};
    for (size_t n = 1; n < L; ++n) {
        // y_n = A_{n+1} = sum_{k=1}^{n} B_{n,k}(A_1..A_n) x_k, and the only
        // occurrence of x_n is B_{n,n} x_n = x_0^n x_n
        Value known = F.zero();
        for (size_t k = 1; k < n; ++k) {
            Value bnk = partial_bell_generic<Value>(static_cast<int>(n),
                                                    static_cast<int>(k),
                                                    std::span<const Value>(A), ops);
            known = F.add(known, F.mul(bnk, x[k]));
        }
        Value rhs = F.sub(yf.terms[n], known);
        Value xn = F.mul(F.pow(inv_x0, BigInt(static_cast<long>(n))), rhs);
        x.push_back(xn);
        A.push_back(yf.terms[n]);
    }

    InvertResult result{CoefficientSequence{F, std::move(x)}, true};
    for (const auto &v : result.x.terms) {
        if (!F.try_to_base(v, base)) {
            result.in_ring = false;
            break;
        }
    }
    return result;
}

bool check_scaling(const CoefficientSequence &x, const Value &alpha, int depth) {
    const Ring &R = x.ring;
    if (depth < 1 || depth > static_cast<int>(x.terms.size()))
        throw BadRange("check_scaling: bad depth");
    CoefficientSequence scaled{R, {}};
    scaled.terms.reserve(x.terms.size());
    for (const auto &v : x.terms)
        scaled.terms.push_back(R.mul(alpha, v));
    auto lhs = apply_pointwise(scaled).terms;
    auto rhs = apply_pointwise(x).terms;
    Value apow = R.one();
    for (int n = 1; n <= depth; ++n) {
        apow = R.mul(apow, alpha);
        if (!R.eq(lhs[static_cast<size_t>(n - 1)],
                  R.mul(apow, rhs[static_cast<size_t>(n - 1)])))
            return false;
    }
    return true;
}

bool check_exp_factor(const HurwitzSeries &f, const Value &alpha, int depth) {
    const Ring &R = f.ring;
    const int N = f.order;
    if (depth < 1 || depth > N)
        throw OrderExhausted("check_exp_factor: depth exceeds the valid order");

    // left side: the operator applied to exp(alpha X) f(X)
    HurwitzSeries g = hurwitz_mul(exp_series(R, alpha, N), f);
    auto lhs = apply_series(g, depth).series_terms;

    // right side: the F-sequence, its image, and the exponential factors
    std::vector<HurwitzSeries> deltas = delta_sequence(f);
    std::vector<HurwitzSeries> F;
    F.reserve(static_cast<size_t>(depth));
    for (int n = 0; n < depth; ++n) {
        HurwitzSeries acc = hurwitz_zero(R, N - n);
        for (int k = 0; k <= n; ++k) {
            Value coef = R.mul(R.from_int(binomial(n, k)),
                               R.pow(alpha, BigInt(n - k)));
            acc = series_add(acc, series_scale(coef, deltas[static_cast<size_t>(k)]));
        }
        F.push_back(std::move(acc));
    }
    auto image = autonomous_terms_generic<HurwitzSeries>(
        std::span<const HurwitzSeries>(F), HurwitzOps{});

    for (int n = 1; n <= depth; ++n) {
        const HurwitzSeries &img = image[static_cast<size_t>(n - 1)];
        HurwitzSeries expf =
            exp_series(R, R.mul(R.from_int(n), alpha), img.order);
        HurwitzSeries rhs = hurwitz_mul(expf, img);
        const HurwitzSeries &l = lhs[static_cast<size_t>(n - 1)];
        if (!series_eq(l, rhs, std::min(l.order, rhs.order)))
            return false;
    }
    return true;
}

bool check_exp_composition(const HurwitzSeries &f, int depth) {
    const Ring &R = f.ring;
    const int N = f.order;
    if (!R.is_zero(f.coeff(0)))
        throw NonzeroConstantTerm("check_exp_composition: needs f(0) = 0");
    if (depth < 1 || depth > N)
        throw OrderExhausted("check_exp_composition: depth exceeds the valid order");

    HurwitzSeries expx = exp_series(R, R.one(), N);
    auto lhs = apply_series(compose(expx, f), depth).series_terms;

    // Y_0 = 1, Y_n = sum_k B_{n,k}(df, ..., d^n f)
    std::vector<HurwitzSeries> deltas = delta_sequence(f);
    std::vector<HurwitzSeries> Y;
    Y.reserve(static_cast<size_t>(depth));
    Y.push_back(hurwitz_constant(R, R.one(), N));
    HurwitzOps ops;
    for (int n = 1; n < depth; ++n) {
        std::vector<HurwitzSeries> b(deltas.begin() + 1, deltas.begin() + 1 + n);
        std::vector<HurwitzSeries> ones(
            static_cast<size_t>(n), hurwitz_constant(R, R.one(), N - n));
        Y.push_back(complete_bell_generic<HurwitzSeries>(
            n, std::span<const HurwitzSeries>(b),
            std::span<const HurwitzSeries>(ones), ops));
    }
    auto image = autonomous_terms_generic<HurwitzSeries>(
        std::span<const HurwitzSeries>(Y), ops);

    for (int n = 1; n <= depth; ++n) {
        const HurwitzSeries &img = image[static_cast<size_t>(n - 1)];
        HurwitzSeries expnf = compose(expx, series_scale(R.from_int(n), f));
        HurwitzSeries rhs = hurwitz_mul(expnf, img);
        const HurwitzSeries &l = lhs[static_cast<size_t>(n - 1)];
        if (!series_eq(l, rhs, std::min(l.order, rhs.order)))
            return false;
    }
    return true;
}

} // namespace autoflow
