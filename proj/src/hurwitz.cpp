#include "autoflow/hurwitz.hpp"

#include <json.hpp>

namespace autoflow {

namespace {
void check_same_ring(const HurwitzSeries &f, const HurwitzSeries &g) {
    if (!(f.ring == g.ring))
        throw RingMismatch("series over " + f.ring.spec()->to_string() + " and " +
                           g.ring.spec()->to_string());
}
} // namespace

HurwitzSeries::HurwitzSeries(Ring r, std::vector<Value> c)
    : ring(std::move(r)), order(static_cast<int>(c.size()) - 1), coeffs(std::move(c)) {
    if (coeffs.empty())
        throw OrderExhausted("a Hurwitz series needs at least the constant term");
    for (const auto &v : coeffs)
        if (!v.spec() || *v.spec() != *ring.spec())
            throw RingMismatch("series coefficient from the wrong ring");
}

const Value &HurwitzSeries::coeff(int n) const {
    if (n < 0 || n > order)
        throw OrderExhausted("coefficient " + std::to_string(n) +
                             " beyond valid order " + std::to_string(order));
    return coeffs[static_cast<size_t>(n)];
}

HurwitzSeries hurwitz_zero(const Ring &ring, int order) {
    return HurwitzSeries(ring,
                         std::vector<Value>(static_cast<size_t>(order) + 1, ring.zero()));
}

HurwitzSeries hurwitz_constant(const Ring &ring, const Value &c, int order) {
    std::vector<Value> v(static_cast<size_t>(order) + 1, ring.zero());
    v[0] = c;
    return HurwitzSeries(ring, std::move(v));
}

HurwitzSeries hurwitz_x(const Ring &ring, int order) {
    if (order < 1)
        throw OrderExhausted("hurwitz_x: needs order >= 1");
    std::vector<Value> v(static_cast<size_t>(order) + 1, ring.zero());
    v[1] = ring.one();
    return HurwitzSeries(ring, std::move(v));
}

HurwitzSeries exp_series(const Ring &ring, const Value &alpha, int order) {
    std::vector<Value> v;
    v.reserve(static_cast<size_t>(order) + 1);
    Value p = ring.one();
    for (int n = 0; n <= order; ++n) {
        v.push_back(p);
        p = ring.mul(p, alpha);
    }
    return HurwitzSeries(ring, std::move(v));
}

HurwitzSeries series_add(const HurwitzSeries &f, const HurwitzSeries &g) {
    check_same_ring(f, g);
    int n = std::min(f.order, g.order);
    std::vector<Value> c;
    c.reserve(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        c.push_back(f.ring.add(f.coeff(i), g.coeff(i)));
    return HurwitzSeries(f.ring, std::move(c));
}

HurwitzSeries series_sub(const HurwitzSeries &f, const HurwitzSeries &g) {
    return series_add(f, series_neg(g));
}

HurwitzSeries series_neg(const HurwitzSeries &f) {
    std::vector<Value> c;
    c.reserve(f.coeffs.size());
    for (const auto &v : f.coeffs)
        c.push_back(f.ring.neg(v));
    return HurwitzSeries(f.ring, std::move(c));
}

HurwitzSeries series_scale(const Value &c, const HurwitzSeries &f) {
    std::vector<Value> out;
    out.reserve(f.coeffs.size());
    for (const auto &v : f.coeffs)
        out.push_back(f.ring.mul(c, v));
    return HurwitzSeries(f.ring, std::move(out));
}

HurwitzSeries hurwitz_mul(const HurwitzSeries &f, const HurwitzSeries &g) {
    check_same_ring(f, g);
    const Ring &R = f.ring;
    int n = std::min(f.order, g.order);
    std::vector<Value> c(static_cast<size_t>(n) + 1, R.zero());
    for (int i = 0; i <= n; ++i) {
        for (int k = 0; k <= i; ++k) {
            Value term = R.mul(f.coeff(k), g.coeff(i - k));
            term = R.mul(term, R.from_int(binomial(i, k)));
            c[static_cast<size_t>(i)] = R.add(c[static_cast<size_t>(i)], term);
        }
    }
    return HurwitzSeries(R, std::move(c));
}

HurwitzSeries derivative(const HurwitzSeries &f) {
    if (f.order < 1)
        throw OrderExhausted("derivative: order 0 series has no valid derivative");
    std::vector<Value> c(f.coeffs.begin() + 1, f.coeffs.end());
    return HurwitzSeries(f.ring, std::move(c));
}

std::vector<HurwitzSeries> delta_sequence(const HurwitzSeries &f) {
    std::vector<HurwitzSeries> out;
    out.reserve(static_cast<size_t>(f.order) + 1);
    out.push_back(f);
    for (int k = 1; k <= f.order; ++k)
        out.push_back(derivative(out.back()));
    return out;
}

HurwitzSeries compose(const HurwitzSeries &f, const HurwitzSeries &g) {
    check_same_ring(f, g);
    const Ring &R = f.ring;
    if (!R.is_zero(g.coeff(0)))
        throw NonzeroConstantTerm("compose: inner series must vanish at 0");
    int n = std::min(f.order, g.order);
    std::vector<Value> c;
    c.reserve(static_cast<size_t>(n) + 1);
    c.push_back(f.coeff(0));
    std::vector<Value> b(g.coeffs.begin() + 1, g.coeffs.end());
    std::vector<Value> a(f.coeffs.begin() + 1, f.coeffs.end());
    for (int m = 1; m <= n; ++m)
        c.push_back(complete_bell(R, m, b, a));
    return HurwitzSeries(R, std::move(c));
}

HurwitzSeries scale_substitute(const HurwitzSeries &f, const Value &a) {
    if (!a.spec() || *a.spec() != *f.ring.spec())
        throw RingMismatch("scale_substitute: scalar from the wrong ring");
    std::vector<Value> c;
    c.reserve(f.coeffs.size());
    Value p = f.ring.one();
    for (int n = 0; n <= f.order; ++n) {
        c.push_back(f.ring.mul(p, f.coeff(n)));
        p = f.ring.mul(p, a);
    }
    return HurwitzSeries(f.ring, std::move(c));
}

HurwitzSeries taylor_shift(const HurwitzSeries &f, const Value &c) {
    const Ring &R = f.ring;
    if (!c.spec() || *c.spec() != *R.spec())
        throw RingMismatch("taylor_shift: shift from the wrong ring");
    std::vector<Value> out;
    out.reserve(f.coeffs.size());
    for (int n = 0; n <= f.order; ++n) {
        Value acc = R.zero();
        Value cpow = R.one();
        for (int j = 0; n + j <= f.order; ++j) {
            auto invfac = R.try_invert(R.from_int(factorial(j)));
            if (!invfac)
                throw Unsupported("taylor_shift: 1/" + std::to_string(j) +
                                  "! does not exist in " + R.spec()->to_string());
            Value term = R.mul(f.coeff(n + j), cpow);
            acc = R.add(acc, R.mul(term, *invfac));
            cpow = R.mul(cpow, c);
        }
        out.push_back(acc);
    }
    return HurwitzSeries(R, std::move(out));
}

bool series_eq(const HurwitzSeries &f, const HurwitzSeries &g, int upto) {
    check_same_ring(f, g);
    if (upto > f.order || upto > g.order)
        throw OrderExhausted("series_eq: order " + std::to_string(upto) +
                             " exceeds the valid orders");
    for (int i = 0; i <= upto; ++i)
        if (!f.ring.eq(f.coeff(i), g.coeff(i)))
            return false;
    return true;
}

Value evaluate(const HurwitzSeries &f, const Value &c) {
    Ring F = f.ring.fraction_ring();
    HurwitzSeries g = lift_series_to_fraction(f);
    Value point = c;
    if (c.spec() && *c.spec() == *f.ring.spec())
        point = f.ring.lift_to_fraction(c);
    if (!point.spec() || *point.spec() != *F.spec())
        throw RingMismatch("evaluate: point must lie in the fraction field");
    Value acc = F.zero();
    Value cpow = F.one();
    for (int n = 0; n <= g.order; ++n) {
        Value invfac = *F.try_invert(F.from_int(factorial(n)));
        acc = F.add(acc, F.mul(F.mul(g.coeff(n), cpow), invfac));
        cpow = F.mul(cpow, point);
    }
    return acc;
}

HurwitzSeries truncate(const HurwitzSeries &f, int order) {
    if (order < 0 || order > f.order)
        throw OrderExhausted("truncate: order " + std::to_string(order) +
                             " not available (valid order " +
                             std::to_string(f.order) + ")");
    std::vector<Value> c(f.coeffs.begin(), f.coeffs.begin() + order + 1);
    return HurwitzSeries(f.ring, std::move(c));
}

HurwitzSeries lift_series_to_fraction(const HurwitzSeries &f) {
    Ring F = f.ring.fraction_ring();
    if (F == f.ring)
        return f;
    std::vector<Value> c;
    c.reserve(f.coeffs.size());
    for (const auto &v : f.coeffs)
        c.push_back(f.ring.lift_to_fraction(v));
    return HurwitzSeries(F, std::move(c));
}

CoefficientSequence lift_sequence_to_fraction(const CoefficientSequence &x) {
    Ring F = x.ring.fraction_ring();
    if (F == x.ring)
        return x;
    CoefficientSequence out{F, {}};
    out.terms.reserve(x.terms.size());
    for (const auto &v : x.terms)
        out.terms.push_back(x.ring.lift_to_fraction(v));
    return out;
}

CoefficientSequence sequence_of(const HurwitzSeries &f) {
    return CoefficientSequence{f.ring, f.coeffs};
}

std::string hurwitz_to_json(const HurwitzSeries &f) {
    nlohmann::json j;
    j["ring"] = f.ring.spec()->to_string();
    j["order"] = f.order;
    auto &arr = j["egf_coeffs"] = nlohmann::json::array();
    for (const auto &v : f.coeffs)
        arr.push_back(f.ring.render(v));
    return j.dump();
}

HurwitzSeries hurwitz_from_json(std::string_view text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.contains("ring") || !j.contains("egf_coeffs"))
        throw ParseError("bad Hurwitz series JSON");
    Ring ring = Ring::make(j["ring"].get<std::string>());
    std::vector<Value> c;
    for (const auto &e : j["egf_coeffs"])
        c.push_back(ring.parse(e.get<std::string>()));
    HurwitzSeries f(ring, std::move(c));
    if (j.contains("order") && j["order"].get<int>() != f.order)
        throw ParseError("Hurwitz series JSON order disagrees with coefficients");
    return f;
}

} // namespace autoflow
