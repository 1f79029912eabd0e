#include "autoflow/rings.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace autoflow {

namespace {

const double kPi = 3.14159265358979323846;

BigRat rat(long n) { return BigRat(n); }

BigInt rat_num(const BigRat &q) { return boost::multiprecision::numerator(q); }
BigInt rat_den(const BigRat &q) { return boost::multiprecision::denominator(q); }

bool rat_integral(const BigRat &q) { return rat_den(q) == 1; }

/// q mod 1, result in [0, 1).
BigRat mod1(const BigRat &q) {
    BigInt n = rat_num(q), d = rat_den(q);
    BigInt r = n % d;
    if (r < 0)
        r += d;
    return BigRat(r, d);
}

double to_double(const BigRat &q) { return q.convert_to<double>(); }

} // namespace

// ---------------------------------------------------------------------------
// Integer helpers
// ---------------------------------------------------------------------------

BigInt factorial(long n) {
    BigInt r = 1;
    for (long i = 2; i <= n; ++i)
        r *= i;
    return r;
}

BigInt binomial(long n, long k) {
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

bool is_square_free(long d) {
    if (d < 1)
        return false;
    for (long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0)
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// RingSpec
// ---------------------------------------------------------------------------

namespace {
RingSpecPtr make_spec(RingKind kind) {
    struct Access : RingSpec {};
    auto s = std::make_shared<Access>();
    s->kind = kind;
    return s;
}
} // namespace

RingSpecPtr RingSpec::integers() {
    static RingSpecPtr s = make_spec(RingKind::Integers);
    return s;
}

RingSpecPtr RingSpec::rationals() {
    static RingSpecPtr s = make_spec(RingKind::Rationals);
    return s;
}

RingSpecPtr RingSpec::gaussian() {
    static RingSpecPtr s = make_spec(RingKind::Gaussian);
    return s;
}

RingSpecPtr RingSpec::eisenstein() {
    static RingSpecPtr s = make_spec(RingKind::Eisenstein);
    return s;
}

RingSpecPtr RingSpec::quad_real(long d) {
    if (d <= 1 || !is_square_free(d))
        throw InvalidSpec("quad_real: d must be a square-free integer > 1, got " +
                          std::to_string(d));
    struct Access : RingSpec {};
    auto s = std::make_shared<Access>();
    s->kind = RingKind::QuadReal;
    s->quad_d = d;
    return s;
}

RingSpecPtr RingSpec::roots_of_unity(long m) {
    if (m <= 0)
        throw InvalidSpec("roots_of_unity: order must be positive, got " +
                          std::to_string(m));
    struct Access : RingSpec {};
    auto s = std::make_shared<Access>();
    s->kind = RingKind::RootsOfUnity;
    s->roots_order = m;
    return s;
}

RingSpecPtr RingSpec::all_roots_of_unity() {
    static RingSpecPtr s = [] {
        struct Access : RingSpec {};
        auto t = std::make_shared<Access>();
        t->kind = RingKind::RootsOfUnity;
        t->roots_order = 0;
        return RingSpecPtr(t);
    }();
    return s;
}

RingSpecPtr RingSpec::fraction_of(const RingSpecPtr &base) {
    if (!base)
        throw InvalidSpec("fraction_of: null base");
    if (base->is_field())
        return base;
    switch (base->kind) {
    case RingKind::Integers:
        return rationals();
    case RingKind::Gaussian:
    case RingKind::Eisenstein:
    case RingKind::QuadReal: {
        struct Access : RingSpec {};
        auto s = std::make_shared<Access>();
        s->kind = RingKind::Fraction;
        s->base = base;
        return s;
    }
    case RingKind::Series:
        throw InvalidSpec("fraction_of: fraction fields of series rings are not "
                          "supported; build the series over the fraction field "
                          "instead");
    default:
        throw InvalidSpec("fraction_of: unsupported base ring " + base->to_string());
    }
}

RingSpecPtr RingSpec::series_over(const RingSpecPtr &base, int order) {
    if (!base)
        throw InvalidSpec("series_over: null base");
    if (order < 0)
        throw InvalidSpec("series_over: order must be >= 0");
    struct Access : RingSpec {};
    auto s = std::make_shared<Access>();
    s->kind = RingKind::Series;
    s->base = base;
    s->series_order = order;
    return s;
}

bool RingSpec::is_field() const {
    switch (kind) {
    case RingKind::Rationals:
    case RingKind::Fraction:
    case RingKind::RootsOfUnity: // every nonzero element is a unit
        return true;
    default:
        return false;
    }
}

bool RingSpec::is_quadratic() const {
    if (kind == RingKind::Gaussian || kind == RingKind::Eisenstein ||
        kind == RingKind::QuadReal)
        return true;
    return kind == RingKind::Fraction && base->is_quadratic();
}

void RingSpec::quad_rule(BigInt &s, BigInt &t) const {
    const RingSpec *q = (kind == RingKind::Fraction) ? base.get() : this;
    switch (q->kind) {
    case RingKind::Gaussian:
        s = -1;
        t = 0;
        return;
    case RingKind::Eisenstein:
        s = -1;
        t = -1;
        return;
    case RingKind::QuadReal:
        if (q->quad_d % 4 == 1) {
            // basis {1, w}, w = (1+sqrt(d))/2, w^2 = (d-1)/4 + w
            s = (q->quad_d - 1) / 4;
            t = 1;
        } else {
            s = q->quad_d;
            t = 0;
        }
        return;
    default:
        throw Unsupported("quad_rule: not a quadratic ring");
    }
}

bool RingSpec::operator==(const RingSpec &o) const {
    if (kind != o.kind)
        return false;
    switch (kind) {
    case RingKind::QuadReal:
        return quad_d == o.quad_d;
    case RingKind::RootsOfUnity:
        return roots_order == o.roots_order;
    case RingKind::Fraction:
        return *base == *o.base;
    case RingKind::Series:
        return series_order == o.series_order && *base == *o.base;
    default:
        return true;
    }
}

std::string RingSpec::to_string() const {
    switch (kind) {
    case RingKind::Integers:
        return "z";
    case RingKind::Rationals:
        return "q";
    case RingKind::Gaussian:
        return "gauss";
    case RingKind::Eisenstein:
        return "eisen";
    case RingKind::QuadReal:
        return "quad" + std::to_string(quad_d);
    case RingKind::RootsOfUnity:
        return roots_order == 0 ? "zetaall" : "zeta" + std::to_string(roots_order);
    case RingKind::Fraction:
        return "frac(" + base->to_string() + ")";
    case RingKind::Series:
        return "series(" + base->to_string() + "," + std::to_string(series_order) +
               ")";
    }
    return "?";
}

RingSpecPtr RingSpec::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (s == "z" || s == "int")
        return integers();
    if (s == "q" || s == "rat")
        return rationals();
    if (s == "gauss" || s == "gaussian")
        return gaussian();
    if (s == "eisen" || s == "eisenstein")
        return eisenstein();
    if (s == "zetaall" || s == "zeta*")
        return all_roots_of_unity();
    auto tail_number = [&](size_t prefix) -> long {
        const std::string digits = s.substr(prefix);
        if (digits.empty() ||
            !std::all_of(digits.begin(), digits.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError("bad ring spec: " + std::string(text));
        return std::stol(digits);
    };
    if (s.rfind("quad", 0) == 0)
        return quad_real(tail_number(4));
    if (s.rfind("zeta", 0) == 0)
        return roots_of_unity(tail_number(4));
    if (s.rfind("frac(", 0) == 0 && s.back() == ')')
        return fraction_of(parse(s.substr(5, s.size() - 6)));
    if (s.rfind("series(", 0) == 0 && s.back() == ')') {
        const std::string inner = s.substr(7, s.size() - 8);
        // split on the last top-level comma
        int depth = 0;
        size_t split = std::string::npos;
        for (size_t i = 0; i < inner.size(); ++i) {
            if (inner[i] == '(')
                ++depth;
            else if (inner[i] == ')')
                --depth;
            else if (inner[i] == ',' && depth == 0)
                split = i;
        }
        if (split == std::string::npos)
            throw ParseError("bad series ring spec: " + std::string(text));
        const std::string order_text = inner.substr(split + 1);
        if (order_text.empty() ||
            !std::all_of(order_text.begin(), order_text.end(), [](char c) {
                return std::isdigit(static_cast<unsigned char>(c));
            }))
            throw ParseError("bad series order in ring spec: " + std::string(text));
        return series_over(parse(inner.substr(0, split)), std::stoi(order_text));
    }
    throw ParseError("unknown ring spec: " + std::string(text));
}

// ---------------------------------------------------------------------------
// Value
// ---------------------------------------------------------------------------

bool SeriesCoords::operator==(const SeriesCoords &o) const {
    return coeffs == o.coeffs;
}

bool Value::operator==(const Value &o) const {
    if (!spec_ || !o.spec_)
        return spec_ == o.spec_;
    return *spec_ == *o.spec_ && payload_ == o.payload_;
}

// ---------------------------------------------------------------------------
// Ring
// ---------------------------------------------------------------------------

Ring::Ring(RingSpecPtr spec) : spec_(std::move(spec)) {
    if (!spec_)
        throw InvalidSpec("Ring: null spec");
}

Ring Ring::make(std::string_view spec_text) {
    return Ring(RingSpec::parse(spec_text));
}

void Ring::check_mine(const Value &x) const {
    if (!x.spec() || *x.spec() != *spec_)
        throw RingMismatch("value belongs to " +
                           (x.spec() ? x.spec()->to_string() : std::string("<none>")) +
                           ", expected " + spec_->to_string());
}

Value Ring::make_scalar(BigRat v) const { return Value(spec_, Payload(std::move(v))); }

Value Ring::make_quad(BigRat a, BigRat b) const {
    return Value(spec_, Payload(QuadCoords{std::move(a), std::move(b)}));
}

Value Ring::zero() const {
    switch (kind()) {
    case RingKind::Integers:
    case RingKind::Rationals:
        return make_scalar(rat(0));
    case RingKind::Gaussian:
    case RingKind::Eisenstein:
    case RingKind::QuadReal:
    case RingKind::Fraction:
        return make_quad(rat(0), rat(0));
    case RingKind::RootsOfUnity:
        return Value(spec_, Payload(RootCoords{true, rat(0)}));
    case RingKind::Series: {
        Ring b = series_base();
        std::vector<Value> c(static_cast<size_t>(series_order()) + 1, b.zero());
        return Value(spec_, Payload(SeriesCoords{std::move(c)}));
    }
    }
    throw Error("unreachable");
}

Value Ring::one() const { return from_int(1); }

Value Ring::from_int(const BigInt &n) const {
    switch (kind()) {
    case RingKind::Integers:
    case RingKind::Rationals:
        return make_scalar(BigRat(n));
    case RingKind::Gaussian:
    case RingKind::Eisenstein:
    case RingKind::QuadReal:
    case RingKind::Fraction:
        return make_quad(BigRat(n), rat(0));
    case RingKind::RootsOfUnity:
        if (n == 0)
            return zero();
        if (n == 1)
            return Value(spec_, Payload(RootCoords{false, rat(0)}));
        if (n == -1)
            return Value(spec_, Payload(RootCoords{false, BigRat(1, 2)}));
        throw Unsupported("roots-of-unity ring holds only 0 and roots of unity");
    case RingKind::Series: {
        Ring b = series_base();
        std::vector<Value> c(static_cast<size_t>(series_order()) + 1, b.zero());
        c[0] = b.from_int(n);
        return Value(spec_, Payload(SeriesCoords{std::move(c)}));
    }
    }
    throw Error("unreachable");
}

Value Ring::from_rat(const BigRat &q) const {
    if (rat_integral(q))
        return from_int(rat_num(q));
    switch (kind()) {
    case RingKind::Rationals:
        return make_scalar(q);
    case RingKind::Fraction:
        return make_quad(q, rat(0));
    case RingKind::Series: {
        Ring b = series_base();
        std::vector<Value> c(static_cast<size_t>(series_order()) + 1, b.zero());
        c[0] = b.from_rat(q);
        return Value(spec_, Payload(SeriesCoords{std::move(c)}));
    }
    default:
        throw Unsupported("from_rat: " + spec_->to_string() +
                          " does not contain the rationals");
    }
}

Value Ring::add(const Value &x, const Value &y) const {
    check_mine(x);
    check_mine(y);
    switch (kind()) {
    case RingKind::Integers:
    case RingKind::Rationals:
        return make_scalar(x.scalar() + y.scalar());
    case RingKind::Gaussian:
    case RingKind::Eisenstein:
    case RingKind::QuadReal:
    case RingKind::Fraction:
        return make_quad(x.quad().a + y.quad().a, x.quad().b + y.quad().b);
    case RingKind::RootsOfUnity: {
        const RootCoords &a = x.root(), &b = y.root();
        if (a.zero)
            return y;
        if (b.zero)
            return x;
        if (mod1(a.q + BigRat(1, 2)) == b.q)
            return zero(); // x + (-x)
        throw Unsupported("sum of roots of unity leaves the ring");
    }
    case RingKind::Series: {
        Ring b = series_base();
        std::vector<Value> c(x.series().coeffs.size());
        for (size_t i = 0; i < c.size(); ++i)
            c[i] = b.add(x.series().coeffs[i], y.series().coeffs[i]);
        return Value(spec_, Payload(SeriesCoords{std::move(c)}));
    }
    }
    throw Error("unreachable");
}

Value Ring::neg(const Value &x) const {
    check_mine(x);
    switch (kind()) {
    case RingKind::Integers:
    case RingKind::Rationals:
        return make_scalar(-x.scalar());
    case RingKind::Gaussian:
    case RingKind::Eisenstein:
    case RingKind::QuadReal:
    case RingKind::Fraction:
        return make_quad(-x.quad().a, -x.quad().b);
    case RingKind::RootsOfUnity: {
        if (x.root().zero)
            return x;
        return Value(spec_, Payload(RootCoords{false, mod1(x.root().q + BigRat(1, 2))}));
    }
    case RingKind::Series: {
        Ring b = series_base();
        std::vector<Value> c(x.series().coeffs.size());
        for (size_t i = 0; i < c.size(); ++i)
            c[i] = b.neg(x.series().coeffs[i]);
        return Value(spec_, Payload(SeriesCoords{std::move(c)}));
    }
    }
    throw Error("unreachable");
}

Value Ring::sub(const Value &x, const Value &y) const { return add(x, neg(y)); }

Value Ring::mul(const Value &x, const Value &y) const {
    check_mine(x);
    check_mine(y);
    switch (kind()) {
    case RingKind::Integers:
    case RingKind::Rationals:
        return make_scalar(x.scalar() * y.scalar());
    case RingKind::Gaussian:
    case RingKind::Eisenstein:
    case RingKind::QuadReal:
    case RingKind::Fraction: {
        BigInt si, ti;
        spec_->quad_rule(si, ti);
        const BigRat s(si), t(ti);
        const QuadCoords &u = x.quad(), &v = y.quad();
        // (a1 + b1 th)(a2 + b2 th), th^2 = s + t th
        BigRat a = u.a * v.a + u.b * v.b * s;
        BigRat b = u.a * v.b + u.b * v.a + u.b * v.b * t;
        return make_quad(std::move(a), std::move(b));
    }
    case RingKind::RootsOfUnity: {
        const RootCoords &a = x.root(), &b = y.root();
        if (a.zero || b.zero)
            return zero();
        return Value(spec_, Payload(RootCoords{false, mod1(a.q + b.q)}));
    }
    case RingKind::Series: {
        Ring base = series_base();
        const auto &xc = x.series().coeffs;
        const auto &yc = y.series().coeffs;
        const int n = series_order();
        std::vector<Value> c(static_cast<size_t>(n) + 1, base.zero());
        for (int i = 0; i <= n; ++i) {
            for (int k = 0; k <= i; ++k) {
                Value term = base.mul(xc[static_cast<size_t>(k)],
                                      yc[static_cast<size_t>(i - k)]);
                term = base.mul(term, base.from_int(binomial(i, k)));
                c[static_cast<size_t>(i)] = base.add(c[static_cast<size_t>(i)], term);
            }
        }
        return Value(spec_, Payload(SeriesCoords{std::move(c)}));
    }
    }
    throw Error("unreachable");
}

Value Ring::pow(const Value &x, const BigInt &e) const {
    check_mine(x);
    if (e < 0) {
        auto inv = try_invert(x);
        if (!inv)
            throw Unsupported("pow: negative exponent of a non-unit");
        return pow(*inv, -e);
    }
    Value result = one();
    Value base = x;
    BigInt k = e;
    while (k > 0) {
        if ((k & 1) != 0)
            result = mul(result, base);
        base = mul(base, base);
        k >>= 1;
    }
    return result;
}

bool Ring::eq(const Value &x, const Value &y) const {
    check_mine(x);
    check_mine(y);
    return x == y;
}

bool Ring::is_zero(const Value &x) const { return eq(x, zero()); }

bool Ring::is_one(const Value &x) const { return eq(x, one()); }

namespace {
/// Field norm of a + b*theta under theta^2 = s + t*theta:
/// N = a^2 + t a b - s b^2. Zero iff the element is zero.
BigRat quad_norm(const RingSpec &spec, const QuadCoords &v) {
    BigInt si, ti;
    spec.quad_rule(si, ti);
    return v.a * v.a + BigRat(ti) * v.a * v.b - BigRat(si) * v.b * v.b;
}
} // namespace

bool Ring::is_unit(const Value &x) const {
    check_mine(x);
    switch (kind()) {
    case RingKind::Integers:
        return x.scalar() == 1 || x.scalar() == -1;
    case RingKind::Rationals:
        return x.scalar() != 0;
    case RingKind::Gaussian:
    case RingKind::Eisenstein:
    case RingKind::QuadReal: {
        BigRat n = quad_norm(*spec_, x.quad());
        return n == 1 || n == -1;
    }
    case RingKind::Fraction:
        return !is_zero(x);
    case RingKind::RootsOfUnity:
        return !x.root().zero;
    case RingKind::Series:
        return series_base().is_unit(x.series().coeffs[0]);
    }
    throw Error("unreachable");
}

std::optional<Value> Ring::try_invert(const Value &x) const {
    check_mine(x);
    if (is_zero(x))
        throw DivisionByZero("try_invert: zero has no inverse");
    switch (kind()) {
    case RingKind::Integers:
        if (x.scalar() == 1 || x.scalar() == -1)
            return x;
        return std::nullopt;
    case RingKind::Rationals:
        return make_scalar(BigRat(1) / x.scalar());
    case RingKind::Gaussian:
    case RingKind::Eisenstein:
    case RingKind::QuadReal:
    case RingKind::Fraction: {
        BigRat n = quad_norm(*spec_, x.quad());
        if (kind() != RingKind::Fraction && n != 1 && n != -1)
            return std::nullopt;
        BigInt si, ti;
        spec_->quad_rule(si, ti);
        // conj(a + b th) = (a + t b) - b th; x * conj(x) = N(x)
        BigRat ca = (x.quad().a + BigRat(ti) * x.quad().b) / n;
        BigRat cb = -x.quad().b / n;
        return make_quad(std::move(ca), std::move(cb));
    }
    case RingKind::RootsOfUnity:
        return Value(spec_, Payload(RootCoords{false, mod1(-x.root().q)}));
    case RingKind::Series: {
        Ring base = series_base();
        const auto &yc = x.series().coeffs;
        auto inv0 = base.try_invert(yc[0]);
        if (!inv0)
            return std::nullopt;
        const int n = series_order();
        std::vector<Value> z(static_cast<size_t>(n) + 1, base.zero());
        z[0] = *inv0;
        // (y * z)_i = sum_k C(i,k) y_k z_{i-k} = [i == 0]
        for (int i = 1; i <= n; ++i) {
            Value acc = base.zero();
            for (int k = 1; k <= i; ++k) {
                Value term = base.mul(yc[static_cast<size_t>(k)],
                                      z[static_cast<size_t>(i - k)]);
                term = base.mul(term, base.from_int(binomial(i, k)));
                acc = base.add(acc, term);
            }
            z[static_cast<size_t>(i)] = base.neg(base.mul(*inv0, acc));
        }
        return Value(spec_, Payload(SeriesCoords{std::move(z)}));
    }
    }
    throw Error("unreachable");
}

std::optional<Value> Ring::try_divide(const Value &x, const Value &y) const {
    check_mine(x);
    check_mine(y);
    if (is_zero(y))
        throw DivisionByZero("try_divide: division by zero");
    if (is_zero(x))
        return zero();
    switch (kind()) {
    case RingKind::Integers: {
        BigInt a = rat_num(x.scalar()), b = rat_num(y.scalar());
        if (a % b != 0)
            return std::nullopt;
        return make_scalar(BigRat(a / b));
    }
    case RingKind::Rationals:
    case RingKind::Fraction:
    case RingKind::RootsOfUnity:
        return mul(x, *try_invert(y));
    case RingKind::Gaussian:
    case RingKind::Eisenstein:
    case RingKind::QuadReal: {
        BigRat n = quad_norm(*spec_, y.quad());
        BigInt si, ti;
        spec_->quad_rule(si, ti);
        // x * conj(y) / N(y), then check integrality of the coordinates
        BigRat cya = y.quad().a + BigRat(ti) * y.quad().b;
        BigRat cyb = -y.quad().b;
        BigRat qa = (x.quad().a * cya + x.quad().b * cyb * BigRat(si)) / n;
        BigRat qb = (x.quad().a * cyb + x.quad().b * cya + x.quad().b * cyb * BigRat(ti)) / n;
        if (!rat_integral(qa) || !rat_integral(qb))
            return std::nullopt;
        return make_quad(std::move(qa), std::move(qb));
    }
    case RingKind::Series: {
        Ring base = series_base();
        const auto &xc = x.series().coeffs;
        const auto &yc = y.series().coeffs;
        const int n = series_order();
        // triangular solve of (y * z) = x; needs exact division by y_0
        std::vector<Value> z(static_cast<size_t>(n) + 1, base.zero());
        for (int i = 0; i <= n; ++i) {
            Value acc = xc[static_cast<size_t>(i)];
            for (int k = 1; k <= i; ++k) {
                Value term = base.mul(yc[static_cast<size_t>(k)],
                                      z[static_cast<size_t>(i - k)]);
                term = base.mul(term, base.from_int(binomial(i, k)));
                acc = base.sub(acc, term);
            }
            auto q = base.try_divide(acc, yc[0]);
            if (!q)
                return std::nullopt;
            z[static_cast<size_t>(i)] = *q;
        }
        return Value(spec_, Payload(SeriesCoords{std::move(z)}));
    }
    }
    throw Error("unreachable");
}

// ---------------------------------------------------------------------------
// Parsing and rendering of elements
// ---------------------------------------------------------------------------

namespace {

struct Cursor {
    std::string_view s;
    size_t pos = 0;
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
};

BigRat parse_rat_at(Cursor &c, bool allow_fraction) {
    c.skip_ws();
    size_t start = c.pos;
    if (c.pos < c.s.size() && (c.s[c.pos] == '+' || c.s[c.pos] == '-'))
        ++c.pos;
    size_t digits_start = c.pos;
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos])))
        ++c.pos;
    if (c.pos == digits_start)
        throw ParseError("expected a number in '" + std::string(c.s) + "'");
    BigInt num(std::string(c.s.substr(start, c.pos - start)));
    if (c.pos < c.s.size() && c.s[c.pos] == '/') {
        if (!allow_fraction)
            throw ParseError("fractions are not elements of this ring: '" +
                             std::string(c.s) + "'");
        ++c.pos;
        size_t den_start = c.pos;
        while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos])))
            ++c.pos;
        if (c.pos == den_start)
            throw ParseError("expected a denominator in '" + std::string(c.s) + "'");
        BigInt den(std::string(c.s.substr(den_start, c.pos - den_start)));
        if (den == 0)
            throw ParseError("zero denominator in '" + std::string(c.s) + "'");
        return BigRat(num, den);
    }
    return BigRat(num);
}

std::string render_rat(const BigRat &q) {
    if (rat_integral(q))
        return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

char quad_suffix(const RingSpec &spec) {
    const RingSpec *q = (spec.kind == RingKind::Fraction) ? spec.base.get() : &spec;
    switch (q->kind) {
    case RingKind::Gaussian:
        return 'i';
    case RingKind::Eisenstein:
        return 'w';
    case RingKind::QuadReal:
        return 'r';
    default:
        throw Unsupported("quad_suffix: not quadratic");
    }
}

/// Splits "a,b,c" on top-level commas (ignoring commas nested in () or []).
std::vector<std::string_view> split_top_level(std::string_view s) {
    std::vector<std::string_view> out;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(' || c == '[')
            ++depth;
        else if (c == ')' || c == ']')
            --depth;
        else if (c == ',' && depth == 0) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    out.push_back(s.substr(start));
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

Value Ring::parse(std::string_view text) const {
    switch (kind()) {
    case RingKind::Integers:
    case RingKind::Rationals: {
        Cursor c{text};
        BigRat v = parse_rat_at(c, kind() == RingKind::Rationals);
        if (!c.done())
            throw ParseError("trailing characters in '" + std::string(text) + "'");
        return make_scalar(std::move(v));
    }
    case RingKind::Gaussian:
    case RingKind::Eisenstein:
    case RingKind::QuadReal:
    case RingKind::Fraction: {
        const bool rational_coords = (kind() == RingKind::Fraction);
        const char suffix = quad_suffix(*spec_);
        Cursor c{text};
        BigRat first = parse_rat_at(c, rational_coords);
        BigRat a(0), b(0);
        if (c.peek() == suffix) {
            ++c.pos;
            b = first;
        } else {
            a = first;
            if (!c.done()) {
                char sign = c.peek();
                if (sign != '+' && sign != '-')
                    throw ParseError("expected '+' or '-' in '" + std::string(text) + "'");
                b = parse_rat_at(c, rational_coords);
                if (c.peek() != suffix)
                    throw ParseError(std::string("expected '") + suffix + "' in '" +
                                     std::string(text) + "'");
                ++c.pos;
            }
        }
        if (!c.done())
            throw ParseError("trailing characters in '" + std::string(text) + "'");
        return make_quad(std::move(a), std::move(b));
    }
    case RingKind::RootsOfUnity: {
        std::string_view t = trim(text);
        if (t == "0")
            return zero();
        if (t.rfind("zeta(", 0) == 0 && t.back() == ')') {
            Cursor c{t.substr(5, t.size() - 6)};
            BigRat q = parse_rat_at(c, true);
            if (!c.done())
                throw ParseError("trailing characters in '" + std::string(text) + "'");
            q = mod1(q);
            if (spec_->roots_order > 0) {
                // must be an m-th root: q = j/m
                if (rat_den(q) != 0 && (BigInt(spec_->roots_order) % rat_den(q)) != 0)
                    throw ParseError("'" + std::string(text) + "' is not a root of order " +
                                     std::to_string(spec_->roots_order));
            }
            return Value(spec_, Payload(RootCoords{false, std::move(q)}));
        }
        throw ParseError("bad root-of-unity literal: '" + std::string(text) + "'");
    }
    case RingKind::Series: {
        std::string_view t = trim(text);
        if (t.size() < 2 || t.front() != '[' || t.back() != ']')
            throw ParseError("series element must be bracketed: '" + std::string(text) + "'");
        Ring base = series_base();
        auto parts = split_top_level(t.substr(1, t.size() - 2));
        if (static_cast<int>(parts.size()) != series_order() + 1)
            throw ParseError("series element needs exactly " +
                             std::to_string(series_order() + 1) + " coefficients");
        std::vector<Value> c;
        c.reserve(parts.size());
        for (auto p : parts)
            c.push_back(base.parse(trim(p)));
        return Value(spec_, Payload(SeriesCoords{std::move(c)}));
    }
    }
    throw Error("unreachable");
}

std::string Ring::render(const Value &x) const {
    check_mine(x);
    switch (kind()) {
    case RingKind::Integers:
    case RingKind::Rationals:
        return render_rat(x.scalar());
    case RingKind::Gaussian:
    case RingKind::Eisenstein:
    case RingKind::QuadReal:
    case RingKind::Fraction: {
        const char suffix = quad_suffix(*spec_);
        const QuadCoords &v = x.quad();
        if (v.b == 0)
            return render_rat(v.a);
        std::string bs = render_rat(v.b) + suffix;
        if (v.a == 0)
            return bs;
        return render_rat(v.a) + (v.b > 0 ? "+" : "") + bs;
    }
    case RingKind::RootsOfUnity:
        if (x.root().zero)
            return "0";
        return "zeta(" + render_rat(x.root().q) + ")";
    case RingKind::Series: {
        Ring base = series_base();
        std::string out = "[";
        const auto &c = x.series().coeffs;
        for (size_t i = 0; i < c.size(); ++i) {
            if (i)
                out += ",";
            out += base.render(c[i]);
        }
        out += "]";
        return out;
    }
    }
    throw Error("unreachable");
}

std::complex<double> Ring::embed(const Value &x) const {
    check_mine(x);
    switch (kind()) {
    case RingKind::Integers:
    case RingKind::Rationals:
        return {to_double(x.scalar()), 0.0};
    case RingKind::Gaussian:
    case RingKind::Eisenstein:
    case RingKind::QuadReal:
    case RingKind::Fraction: {
        const RingSpec *q =
            (kind() == RingKind::Fraction) ? spec_->base.get() : spec_.get();
        std::complex<double> theta;
        switch (q->kind) {
        case RingKind::Gaussian:
            theta = {0.0, 1.0};
            break;
        case RingKind::Eisenstein:
            theta = {-0.5, std::sqrt(3.0) / 2.0};
            break;
        case RingKind::QuadReal:
            theta = q->quad_d % 4 == 1
                        ? std::complex<double>((1.0 + std::sqrt(double(q->quad_d))) / 2.0, 0.0)
                        : std::complex<double>(std::sqrt(double(q->quad_d)), 0.0);
            break;
        default:
            throw Error("unreachable");
        }
        return std::complex<double>(to_double(x.quad().a), 0.0) +
               std::complex<double>(to_double(x.quad().b), 0.0) * theta;
    }
    case RingKind::RootsOfUnity: {
        if (x.root().zero)
            return {0.0, 0.0};
        double angle = 2.0 * kPi * to_double(x.root().q);
        return {std::cos(angle), std::sin(angle)};
    }
    case RingKind::Series:
        throw NotEmbeddable("series-ring elements have no complex embedding");
    }
    throw Error("unreachable");
}

Ring Ring::fraction_ring() const { return Ring(RingSpec::fraction_of(spec_)); }

Value Ring::lift_to_fraction(const Value &x) const {
    check_mine(x);
    RingSpecPtr frac = RingSpec::fraction_of(spec_);
    if (*frac == *spec_)
        return x;
    switch (kind()) {
    case RingKind::Integers:
        return Value(frac, Payload(x.scalar()));
    case RingKind::Gaussian:
    case RingKind::Eisenstein:
    case RingKind::QuadReal:
        return Value(frac, Payload(x.quad()));
    default:
        throw Unsupported("lift_to_fraction: " + spec_->to_string());
    }
}

std::optional<Value> Ring::try_to_base(const Value &x, const Ring &target) const {
    check_mine(x);
    if (*spec_ == *target.spec())
        return x;
    if (*RingSpec::fraction_of(target.spec()) != *spec_)
        throw RingMismatch("try_to_base: " + target.spec()->to_string() +
                           " is not the base ring of " + spec_->to_string());
    switch (target.kind()) {
    case RingKind::Integers:
        if (!rat_integral(x.scalar()))
            return std::nullopt;
        return Value(target.spec(), Payload(x.scalar()));
    case RingKind::Gaussian:
    case RingKind::Eisenstein:
    case RingKind::QuadReal:
        if (!rat_integral(x.quad().a) || !rat_integral(x.quad().b))
            return std::nullopt;
        return Value(target.spec(), Payload(x.quad()));
    default:
        throw Unsupported("try_to_base: " + target.spec()->to_string());
    }
}

int Ring::series_order() const {
    if (kind() != RingKind::Series)
        throw Unsupported("series_order: not a series ring");
    return spec_->series_order;
}

Ring Ring::series_base() const {
    if (kind() != RingKind::Series)
        throw Unsupported("series_base: not a series ring");
    return Ring(spec_->base);
}

Value Ring::make_series(std::vector<Value> coeffs) const {
    if (kind() != RingKind::Series)
        throw Unsupported("make_series: not a series ring");
    if (static_cast<int>(coeffs.size()) != series_order() + 1)
        throw OrderExhausted("make_series: expected " +
                             std::to_string(series_order() + 1) + " coefficients");
    Ring base = series_base();
    for (const auto &c : coeffs)
        if (!c.spec() || *c.spec() != *base.spec())
            throw RingMismatch("make_series: coefficient from the wrong ring");
    return Value(spec_, Payload(SeriesCoords{std::move(coeffs)}));
}

// ---------------------------------------------------------------------------
// Unit groups
// ---------------------------------------------------------------------------

UnitGroupModel unit_group_model(const Ring &ring) {
    UnitGroupModel m;
    switch (ring.kind()) {
    case RingKind::Integers:
        m.torsion_order = 2;
        m.torsion_generator = ring.from_int(-1);
        return m;
    case RingKind::Gaussian:
        m.torsion_order = 4;
        m.torsion_generator = ring.parse("1i");
        return m;
    case RingKind::Eisenstein:
        m.torsion_order = 6;
        m.torsion_generator = ring.parse("-1w"); // -omega has order 6
        return m;
    case RingKind::QuadReal:
        m.torsion_order = 2;
        m.torsion_generator = ring.from_int(-1);
        m.free_rank = 1;
        switch (ring.spec()->quad_d) {
        case 2:
            m.fundamental_unit = ring.parse("1+1r"); // 1 + sqrt(2)
            return m;
        case 3:
            m.fundamental_unit = ring.parse("2+1r"); // 2 + sqrt(3)
            return m;
        case 5:
            m.fundamental_unit = ring.parse("1r"); // golden ratio
            return m;
        default:
            throw Unsupported("no built-in fundamental unit for quad" +
                              std::to_string(ring.spec()->quad_d));
        }
    case RingKind::RootsOfUnity:
        m.torsion_order = ring.spec()->roots_order; // 0 encodes "all"
        m.torsion_generator =
            ring.spec()->roots_order == 0
                ? ring.one()
                : Value(ring.spec(),
                        Payload(RootCoords{false, BigRat(1, ring.spec()->roots_order)}));
        return m;
    default:
        throw Unsupported("no built-in unit group model for " +
                          ring.spec()->to_string());
    }
}

std::vector<Value> torsion_units(const Ring &ring) {
    UnitGroupModel m = unit_group_model(ring);
    if (m.torsion_order <= 0)
        throw Unsupported("torsion subgroup is infinite");
    std::vector<Value> units;
    units.reserve(static_cast<size_t>(m.torsion_order));
    Value u = ring.one();
    for (long j = 0; j < m.torsion_order; ++j) {
        units.push_back(u);
        u = ring.mul(u, m.torsion_generator);
    }
    return units;
}

} // namespace autoflow
