#include "autoflow/flow.hpp"

#include <cmath>
#include <cstdio>

namespace autoflow {

namespace {

std::vector<std::string_view> split_on(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(' || c == '[')
            ++depth;
        else if (c == ')' || c == ']')
            --depth;
        else if (c == sep && depth == 0) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    out.push_back(s.substr(start));
    return out;
}

} // namespace

VectorField VectorField::constant(const Ring &ring, const Value &a) {
    Ring F = ring.fraction_ring();
    VectorField f{Kind::Constant, ring, a, F.zero(), std::nullopt, F.zero()};
    return f;
}

VectorField VectorField::affine(const Ring &ring, const Value &a, const Value &b) {
    VectorField f{Kind::Affine, ring, a, b, std::nullopt, ring.fraction_ring().zero()};
    return f;
}

VectorField VectorField::exp_field(const Ring &ring, const Value &a) {
    Ring F = ring.fraction_ring();
    VectorField f{Kind::ExpField, ring, a, F.zero(), std::nullopt, F.zero()};
    return f;
}

VectorField VectorField::from_series(const Ring &ring, HurwitzSeries s,
                                     const Value &base_point) {
    Ring F = ring.fraction_ring();
    if (!(s.ring == F))
        throw RingMismatch("series field must live over the fraction field");
    VectorField f{Kind::Series, ring, F.zero(), F.zero(), std::move(s), base_point};
    return f;
}

VectorField VectorField::parse(const Ring &ring, std::string_view text) {
    Ring F = ring.fraction_ring();
    size_t colon = text.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("field spec needs kind:params, got '" + std::string(text) + "'");
    std::string_view kind = text.substr(0, colon);
    std::string_view params = text.substr(colon + 1);
    if (kind == "const")
        return constant(ring, F.parse(params));
    if (kind == "affine") {
        auto parts = split_on(params, ',');
        if (parts.size() != 2)
            throw ParseError("affine field needs two parameters");
        return affine(ring, F.parse(parts[0]), F.parse(parts[1]));
    }
    if (kind == "expfield")
        return exp_field(ring, F.parse(params));
    if (kind == "series") {
        std::string_view t = params;
        if (t.size() < 2 || t.front() != '[' || t.back() != ']')
            throw ParseError("series field needs a bracketed coefficient list");
        auto parts = split_on(t.substr(1, t.size() - 2), ',');
        std::vector<Value> coeffs;
        coeffs.reserve(parts.size());
        for (auto p : parts)
            coeffs.push_back(F.parse(p));
        return from_series(ring, HurwitzSeries(F, std::move(coeffs)), F.zero());
    }
    throw ParseError("unknown field kind '" + std::string(kind) + "'");
}

VectorField VectorField::scaled(const Value &r) const {
    Ring F = frac_ring();
    switch (kind) {
    case Kind::Constant:
        return constant(ring, F.mul(r, a));
    case Kind::Affine:
        return affine(ring, F.mul(r, a), F.mul(r, b));
    case Kind::ExpField:
        return exp_field(ring, F.mul(r, a));
    case Kind::Series:
        return from_series(ring, series_scale(r, *series), base_point);
    }
    throw Error("unreachable");
}

CoefficientSequence derivative_sequence_at(const VectorField &field,
                                           const Value &x0, int len) {
    Ring F = field.frac_ring();
    if (len < 1)
        throw BadRange("derivative_sequence_at: len >= 1");
    CoefficientSequence seq{F, {}};
    seq.terms.reserve(static_cast<size_t>(len));
    switch (field.kind) {
    case VectorField::Kind::Constant:
        seq.terms.push_back(field.a);
        while (static_cast<int>(seq.terms.size()) < len)
            seq.terms.push_back(F.zero());
        return seq;
    case VectorField::Kind::Affine:
        seq.terms.push_back(F.add(field.a, F.mul(field.b, x0)));
        if (len > 1)
            seq.terms.push_back(field.b);
        while (static_cast<int>(seq.terms.size()) < len)
            seq.terms.push_back(F.zero());
        return seq;
    case VectorField::Kind::ExpField:
        if (!F.is_zero(x0))
            throw UnsupportedBasePoint(
                "expfield flows need base point 0 (or supply the field as a series)");
        for (int i = 0; i < len; ++i)
            seq.terms.push_back(field.a);
        return seq;
    case VectorField::Kind::Series: {
        if (!F.eq(x0, field.base_point))
            throw UnsupportedBasePoint(
                "series field is expanded around a different base point");
        if (field.series->order < len - 1)
            throw OrderExhausted("series field order " +
                                 std::to_string(field.series->order) +
                                 " cannot supply " + std::to_string(len) +
                                 " derivatives");
        for (int i = 0; i < len; ++i)
            seq.terms.push_back(field.series->coeff(i));
        return seq;
    }
    }
    throw Error("unreachable");
}

HurwitzSeries field_to_series(const VectorField &field, const Value &x0, int order) {
    CoefficientSequence seq = derivative_sequence_at(field, x0, order + 1);
    return HurwitzSeries(seq.ring, std::move(seq.terms));
}

FlowSeries flow_at_point(const VectorField &field, const Value &x0, int order) {
    Ring F = field.frac_ring();
    FlowSeries flow{F, x0, order, {}};
    flow.t_coeffs.reserve(static_cast<size_t>(order) + 1);
    flow.t_coeffs.push_back(x0);
    if (order >= 1) {
        auto img = apply_pointwise(derivative_sequence_at(field, x0, order));
        for (auto &v : img.terms)
            flow.t_coeffs.push_back(std::move(v));
    }
    return flow;
}

FlowSeries closed_form_flow(const VectorField &field, const Value &x0, int order) {
    Ring F = field.frac_ring();
    FlowSeries flow{F, x0, order, {}};
    flow.t_coeffs.reserve(static_cast<size_t>(order) + 1);
    flow.t_coeffs.push_back(x0);
    switch (field.kind) {
    case VectorField::Kind::Constant:
        for (int n = 1; n <= order; ++n)
            flow.t_coeffs.push_back(n == 1 ? field.a : F.zero());
        return flow;
    case VectorField::Kind::Affine: {
        if (F.is_zero(field.b)) {
            for (int n = 1; n <= order; ++n)
                flow.t_coeffs.push_back(n == 1 ? field.a : F.zero());
            return flow;
        }
        // x + (a/b + x)(exp(bt) - 1): coefficient n >= 1 is (a/b + x0) b^n
        Value ab = F.add(*F.try_divide(field.a, field.b), x0);
        Value bpow = F.one();
        for (int n = 1; n <= order; ++n) {
            bpow = F.mul(bpow, field.b);
            flow.t_coeffs.push_back(F.mul(ab, bpow));
        }
        return flow;
    }
    case VectorField::Kind::ExpField: {
        if (!F.is_zero(x0))
            throw UnsupportedBasePoint("closed-form expfield flow needs base point 0");
        // x - ln(1 - a t): coefficient n >= 1 is (n-1)! a^n
        Value apow = F.one();
        for (int n = 1; n <= order; ++n) {
            apow = F.mul(apow, field.a);
            flow.t_coeffs.push_back(F.mul(F.from_int(factorial(n - 1)), apow));
        }
        return flow;
    }
    case VectorField::Kind::Series:
        throw UnsupportedKind("no closed form for a generic series field");
    }
    throw Error("unreachable");
}

BivariateFlow bivariate_flow(const VectorField &field, const Value &x0, int ms,
                             int mt) {
    Ring F = field.frac_ring();
    FlowSeries phi = flow_at_point(field, x0, ms + mt);

    Ring S(RingSpec::series_over(F.spec(), ms));
    std::vector<Value> phis(phi.t_coeffs.begin(), phi.t_coeffs.begin() + ms + 1);
    Value phi_s = S.make_series(std::move(phis));
    Value shift = S.sub(phi_s, [&] {
        std::vector<Value> c(static_cast<size_t>(ms) + 1, F.zero());
        c[0] = x0;
        return S.make_series(std::move(c));
    }());

    // lift the field's expansion into the tower and shift it to Phi(s)
    HurwitzSeries f = field_to_series(field, x0, ms + mt);
    std::vector<Value> lifted;
    lifted.reserve(f.coeffs.size());
    for (const auto &c : f.coeffs) {
        std::vector<Value> cc(static_cast<size_t>(ms) + 1, F.zero());
        cc[0] = c;
        lifted.push_back(S.make_series(std::move(cc)));
    }
    HurwitzSeries f_tower(S, std::move(lifted));
    HurwitzSeries at_phi = taylor_shift(f_tower, shift);

    // d^k f(Phi(s)) for k = 0..mt-1 feed the pointwise operator in the tower
    CoefficientSequence seq{S, {}};
    seq.terms.reserve(static_cast<size_t>(mt));
    for (int k = 0; k < mt; ++k)
        seq.terms.push_back(at_phi.coeff(k));
    auto img = apply_pointwise(seq).terms;

    BivariateFlow biv{ms, mt, {}};
    biv.c.assign(static_cast<size_t>(ms) + 1,
                 std::vector<Value>(static_cast<size_t>(mt) + 1, F.zero()));
    for (int m = 0; m <= ms; ++m)
        biv.c[static_cast<size_t>(m)][0] = phi.t_coeffs[static_cast<size_t>(m)];
    for (int n = 1; n <= mt; ++n) {
        const auto &sc = img[static_cast<size_t>(n - 1)].series().coeffs;
        for (int m = 0; m <= ms; ++m)
            biv.c[static_cast<size_t>(m)][static_cast<size_t>(n)] =
                sc[static_cast<size_t>(m)];
    }
    return biv;
}

bool group_law_check(const VectorField &field, const Value &x0, int ms, int mt) {
    Ring F = field.frac_ring();
    FlowSeries phi = flow_at_point(field, x0, ms + mt);
    BivariateFlow biv = bivariate_flow(field, x0, ms, mt);
    for (int m = 0; m <= ms; ++m)
        for (int n = 0; n <= mt; ++n)
            if (!F.eq(biv.c[static_cast<size_t>(m)][static_cast<size_t>(n)],
                      phi.t_coeffs[static_cast<size_t>(m + n)]))
                return false;
    return true;
}

bool pde_check(const VectorField &field, const Value &x0, int depth) {
    if (depth < 2)
        throw BadRange("pde_check: depth >= 2");
    HurwitzSeries f = field_to_series(field, x0, depth);
    auto chain = apply_series(f, depth).series_terms;
    auto bell = apply_series_bell(f, depth).series_terms;

    // left identity: f * d_x(A_n) = A_{n+1} on the Bell-route terms
    for (int n = 1; n < depth; ++n) {
        HurwitzSeries lhs = hurwitz_mul(f, derivative(bell[static_cast<size_t>(n - 1)]));
        const HurwitzSeries &rhs = bell[static_cast<size_t>(n)];
        if (!series_eq(lhs, rhs, std::min(lhs.order, rhs.order)))
            return false;
    }
    // right identity: d_t Phi = f(Phi), i.e. A_{n+1} = Y_n(A_1..A_n; df..d^n f),
    // on the chain-route terms
    std::vector<HurwitzSeries> deltas = delta_sequence(f);
    HurwitzOps ops;
    for (int n = 1; n < depth; ++n) {
        std::vector<HurwitzSeries> b(chain.begin(), chain.begin() + n);
        std::vector<HurwitzSeries> a(deltas.begin() + 1, deltas.begin() + 1 + n);
        HurwitzSeries lhs = complete_bell_generic<HurwitzSeries>(
            n, std::span<const HurwitzSeries>(b), std::span<const HurwitzSeries>(a),
            ops);
        const HurwitzSeries &rhs = chain[static_cast<size_t>(n)];
        if (!series_eq(lhs, rhs, std::min(lhs.order, rhs.order)))
            return false;
    }
    // and the two routes agree
    for (int n = 0; n < depth; ++n) {
        const HurwitzSeries &l = chain[static_cast<size_t>(n)];
        const HurwitzSeries &r = bell[static_cast<size_t>(n)];
        if (!series_eq(l, r, std::min(l.order, r.order)))
            return false;
    }
    return true;
}

bool time_scale_check(const VectorField &field, const Value &x0, const Value &r,
                      int depth) {
    Ring F = field.frac_ring();
    FlowSeries base = flow_at_point(field, x0, depth);
    FlowSeries scaled = flow_at_point(field.scaled(r), x0, depth);
    Value rpow = F.one();
    for (int n = 1; n <= depth; ++n) {
        rpow = F.mul(rpow, r);
        if (!F.eq(scaled.t_coeffs[static_cast<size_t>(n)],
                  F.mul(rpow, base.t_coeffs[static_cast<size_t>(n)])))
            return false;
    }
    return true;
}

bool module_axioms_check(const VectorField &field, const Value &x0,
                         const Value &r, const Value &v, const Value &w,
                         int depth) {
    Ring F = field.frac_ring();
    VectorField g = field.scaled(r);
    FlowSeries psi = flow_at_point(g, x0, depth);
    BivariateFlow c = bivariate_flow(g, x0, depth, depth);

    // axiom 1: (Phi_t o Phi_s) * v = Phi_tv o Phi_sv, i.e. the bivariate
    // coefficients of the v-scaled flow are v^{m+n} c_{m,n}
    BivariateFlow cv = bivariate_flow(g.scaled(v), x0, depth, depth);
    for (int m = 0; m <= depth; ++m)
        for (int n = 0; n <= depth; ++n) {
            Value scale = F.pow(v, BigInt(m + n));
            if (!F.eq(cv.c[static_cast<size_t>(m)][static_cast<size_t>(n)],
                      F.mul(scale, c.c[static_cast<size_t>(m)][static_cast<size_t>(n)])))
                return false;
        }

    // axiom 2: Phi_{t(v+w)} = Phi_{tv} o Phi_{tw}: collapse the bivariate
    // series on s = tw, t = tv and compare with (v+w)^n Psi_n
    for (int n = 0; n <= depth; ++n) {
        Value rhs = F.zero();
        for (int m = 0; m <= n; ++m) {
            Value term = F.mul(F.from_int(binomial(n, m)),
                               F.mul(F.pow(w, BigInt(m)), F.pow(v, BigInt(n - m))));
            rhs = F.add(rhs, F.mul(term, c.c[static_cast<size_t>(m)][static_cast<size_t>(n - m)]));
        }
        Value lhs = F.mul(F.pow(F.add(v, w), BigInt(n)),
                          psi.t_coeffs[static_cast<size_t>(n)]);
        if (!F.eq(lhs, rhs))
            return false;
    }

    // axiom 3: * (vw) = (* v) * w — substitution associativity
    for (int n = 0; n <= depth; ++n) {
        Value lhs = F.mul(F.pow(F.mul(v, w), BigInt(n)),
                          psi.t_coeffs[static_cast<size_t>(n)]);
        Value rhs = F.mul(F.pow(w, BigInt(n)),
                          F.mul(F.pow(v, BigInt(n)), psi.t_coeffs[static_cast<size_t>(n)]));
        if (!F.eq(lhs, rhs))
            return false;
    }

    // axiom 4: * 1 is the identity
    for (int n = 0; n <= depth; ++n) {
        Value lhs = F.mul(F.pow(F.one(), BigInt(n)), psi.t_coeffs[static_cast<size_t>(n)]);
        if (!F.eq(lhs, psi.t_coeffs[static_cast<size_t>(n)]))
            return false;
    }
    return true;
}

bool gmodule_identity_check(const VectorField &field, const Value &unit_a,
                            int depth, int x_order) {
    Ring F = field.frac_ring();
    Value au = unit_a;
    if (au.spec() && *au.spec() == *field.ring.spec())
        au = field.ring.lift_to_fraction(au);
    HurwitzSeries f = field_to_series(field, F.zero(), x_order);
    HurwitzSeries g = scale_substitute(f, au);
    auto flow_g = apply_series(g, depth).series_terms;
    auto flow_f = apply_series(f, depth).series_terms;
    Value apow = F.one();
    for (int n = 1; n <= depth; ++n) {
        apow = F.mul(apow, au);
        HurwitzSeries lhs = series_scale(au, flow_g[static_cast<size_t>(n - 1)]);
        HurwitzSeries rhs = series_scale(
            apow, scale_substitute(flow_f[static_cast<size_t>(n - 1)], au));
        if (!series_eq(lhs, rhs, std::min(lhs.order, rhs.order)))
            return false;
    }
    return true;
}

std::vector<TwistedFlow> gmodule_orbit(const VectorField &field, int k,
                                       int bound_m, int x_order, int terms) {
    Ring F = field.frac_ring();
    HurwitzSeries f = field_to_series(field, F.zero(), x_order);

    std::vector<std::pair<Value, Value>> pairs; // (a, b) in R
    if (k == 1) {
        H1Description h1 = h1_describe(field.ring, bound_m);
        for (const auto &u : h1.units)
            pairs.emplace_back(field.ring.one(), u);
    } else {
        for (const auto &p : solve_hk(field.ring, k))
            pairs.emplace_back(p.a, p.b);
    }

    std::vector<TwistedFlow> out;
    out.reserve(pairs.size());
    for (const auto &[pa, pb] : pairs) {
        Value fa = field.ring.lift_to_fraction(pa);
        Value fb = field.ring.lift_to_fraction(pb);
        Value scalar = F.mul(*F.try_invert(fa), fb);
        HurwitzSeries twisted = series_scale(fa, scale_substitute(f, scalar));
        auto terms_g = apply_series(twisted, terms).series_terms;
        TwistedFlow tf{pa, pb, scalar, {}};
        tf.t_coeffs.push_back(series_scale(scalar, hurwitz_x(F, x_order)));
        for (const auto &an : terms_g)
            tf.t_coeffs.push_back(series_scale(scalar, an));
        out.push_back(std::move(tf));
    }
    return out;
}

bool equilibrium_check(const VectorField &field, const Value &x_star) {
    Ring F = field.frac_ring();
    Value fval = F.zero();
    switch (field.kind) {
    case VectorField::Kind::Constant:
        fval = field.a;
        break;
    case VectorField::Kind::Affine:
        fval = F.add(field.a, F.mul(field.b, x_star));
        break;
    case VectorField::Kind::ExpField:
        if (!F.is_zero(x_star))
            throw UnsupportedBasePoint("expfield equilibria are only decidable at 0");
        fval = field.a;
        break;
    case VectorField::Kind::Series:
        fval = evaluate(*field.series, F.sub(x_star, field.base_point));
        break;
    }
    bool f_zero = F.is_zero(fval);

    bool flow_zero = true;
    if (field.kind != VectorField::Kind::Series ||
        F.eq(x_star, field.base_point)) {
        int order = 4;
        if (field.kind == VectorField::Kind::Series)
            order = std::min(order, field.series->order);
        FlowSeries phi = flow_at_point(field, x_star, order);
        for (int n = 1; n <= phi.order; ++n)
            if (!F.is_zero(phi.t_coeffs[static_cast<size_t>(n)])) {
                flow_zero = false;
                break;
            }
        if (f_zero != flow_zero)
            throw Error("equilibrium_check: f(x*) and the flow disagree");
    }
    return f_zero;
}

std::vector<OrbitRow> orbit_samples(const FlowSeries &flow,
                                    std::span<const std::complex<double>> grid) {
    const Ring &F = flow.coeff_ring;
    std::vector<std::complex<double>> coeffs;
    coeffs.reserve(flow.t_coeffs.size());
    for (const auto &c : flow.t_coeffs)
        coeffs.push_back(F.embed(c));
    std::vector<OrbitRow> rows;
    rows.reserve(grid.size());
    for (const auto &t : grid) {
        std::complex<double> acc{0.0, 0.0};
        std::complex<double> tp{1.0, 0.0};
        double fact = 1.0;
        for (size_t n = 0; n < coeffs.size(); ++n) {
            if (n > 0) {
                tp *= t;
                fact *= static_cast<double>(n);
            }
            acc += coeffs[n] * tp / fact;
        }
        double tail = std::abs(coeffs.back()) * std::abs(tp) / fact;
        rows.push_back(OrbitRow{t.real(), t.imag(), acc.real(), acc.imag(), tail});
    }
    return rows;
}

std::string orbit_csv(const std::vector<OrbitRow> &rows, int precision) {
    std::string out = "t_re,t_im,phi_re,phi_im,tail_bound\n";
    char buf[256];
    for (const auto &r : rows) {
        std::snprintf(buf, sizeof buf, "%.*g,%.*g,%.*g,%.*g,%.*g\n", precision,
                      r.t_re, precision, r.t_im, precision, r.phi_re, precision,
                      r.phi_im, precision, r.tail);
        out += buf;
    }
    return out;
}

} // namespace autoflow
