#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "autoflow/errors.hpp"

namespace autoflow {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

enum class RingKind {
    Integers,     // Z
    Rationals,    // Q
    Gaussian,     // Z[i]
    Eisenstein,   // Z[w], w^2 = -1 - w
    QuadReal,     // Z[r] with r = sqrt(d), or r = (1+sqrt(d))/2 when d = 1 mod 4
    RootsOfUnity, // mu_m (or all of mu_infinity) together with 0
    Fraction,     // fraction field of a base ring
    Series        // truncated EGF ring over a base ring, fixed order
};

class RingSpec;
using RingSpecPtr = std::shared_ptr<const RingSpec>;

/// Immutable description of a supported ring. Built through the factory
/// functions, which validate parameters and normalize trivial nestings
/// (e.g. the fraction field of a field is the field itself).
class RingSpec {
  public:
    RingKind kind;
    long quad_d = 0;      // QuadReal: square-free d > 1
    long roots_order = 0; // RootsOfUnity: m >= 1, or 0 meaning "all"
    RingSpecPtr base;     // Fraction, Series
    int series_order = 0; // Series: truncation order N >= 0

    static RingSpecPtr integers();
    static RingSpecPtr rationals();
    static RingSpecPtr gaussian();
    static RingSpecPtr eisenstein();
    static RingSpecPtr quad_real(long d);
    static RingSpecPtr roots_of_unity(long m); // m >= 1
    static RingSpecPtr all_roots_of_unity();
    static RingSpecPtr fraction_of(const RingSpecPtr &base);
    static RingSpecPtr series_over(const RingSpecPtr &base, int order);

    /// Every nonzero element invertible?
    bool is_field() const;
    /// Quadratic-type kind (Gaussian/Eisenstein/QuadReal or a fraction of one)?
    bool is_quadratic() const;
    /// Reduction rule theta^2 = s + t*theta for quadratic kinds.
    void quad_rule(BigInt &s, BigInt &t) const;

    bool operator==(const RingSpec &other) const;
    bool operator!=(const RingSpec &other) const { return !(*this == other); }

    std::string to_string() const;
    static RingSpecPtr parse(std::string_view text);

  protected:
    RingSpec() = default;
};

class Value;

/// Payload of a quadratic-ring element a + b*theta. Coordinates are stored
/// as rationals; integral rings keep the invariant den == 1.
struct QuadCoords {
    BigRat a, b;
    bool operator==(const QuadCoords &o) const { return a == o.a && b == o.b; }
};

/// Payload of the roots-of-unity ring: zero, or e^{2 pi i q} with q in [0,1).
struct RootCoords {
    bool zero = false;
    BigRat q{0};
    bool operator==(const RootCoords &o) const {
        return zero == o.zero && (zero || q == o.q);
    }
};

/// Payload of a truncated-series ring element: order+1 coefficients.
struct SeriesCoords {
    std::vector<Value> coeffs;
    bool operator==(const SeriesCoords &o) const;
};

using Payload = std::variant<BigRat, QuadCoords, RootCoords, SeriesCoords>;

/// Exact element of one of the supported rings. Immutable value type with
/// canonical payloads, so equality is plain structural comparison.
class Value {
  public:
    Value() = default;
    Value(RingSpecPtr spec, Payload payload)
        : spec_(std::move(spec)), payload_(std::move(payload)) {}

    const RingSpecPtr &spec() const { return spec_; }
    const Payload &payload() const { return payload_; }

    const BigRat &scalar() const { return std::get<BigRat>(payload_); }
    const QuadCoords &quad() const { return std::get<QuadCoords>(payload_); }
    const RootCoords &root() const { return std::get<RootCoords>(payload_); }
    const SeriesCoords &series() const { return std::get<SeriesCoords>(payload_); }

    bool operator==(const Value &o) const;
    bool operator!=(const Value &o) const { return !(*this == o); }

  private:
    RingSpecPtr spec_;
    Payload payload_;
};

/// Handle providing the arithmetic of one ring. Cheap to copy; all
/// operations are pure and validate that operands belong to this ring.
class Ring {
  public:
    explicit Ring(RingSpecPtr spec);
    static Ring make(const RingSpecPtr &spec) { return Ring(spec); }
    static Ring make(std::string_view spec_text);

    const RingSpecPtr &spec() const { return spec_; }
    RingKind kind() const { return spec_->kind; }
    bool operator==(const Ring &o) const { return *spec_ == *o.spec_; }

    Value zero() const;
    Value one() const;
    /// The canonical Z -> R action. Roots-of-unity rings accept only -1, 0, 1.
    Value from_int(const BigInt &n) const;
    Value from_int(long n) const { return from_int(BigInt(n)); }
    /// Only for rings containing Q (fields / fraction rings / series over them).
    Value from_rat(const BigRat &q) const;

    Value add(const Value &x, const Value &y) const;
    Value sub(const Value &x, const Value &y) const;
    Value neg(const Value &x) const;
    Value mul(const Value &x, const Value &y) const;
    Value pow(const Value &x, const BigInt &e) const; // e < 0 requires a unit

    bool eq(const Value &x, const Value &y) const;
    bool is_zero(const Value &x) const;
    bool is_one(const Value &x) const;
    bool is_unit(const Value &x) const;

    /// Inverse when x is a unit of this ring; nullopt otherwise.
    /// Throws DivisionByZero for x = 0.
    std::optional<Value> try_invert(const Value &x) const;
    /// Exact quotient x/y in this ring when it exists; nullopt otherwise.
    std::optional<Value> try_divide(const Value &x, const Value &y) const;

    Value parse(std::string_view text) const;
    std::string render(const Value &x) const;

    /// Floating approximation; NotEmbeddable for series rings.
    std::complex<double> embed(const Value &x) const;

    Ring fraction_ring() const;
    /// True when this ring was produced by fraction_ring()/fraction_of.
    Value lift_to_fraction(const Value &x) const;
    /// Membership test of a fraction-ring value in the base ring `target`;
    /// returns the demoted value when it lies there.
    std::optional<Value> try_to_base(const Value &x, const Ring &target) const;

    // Series-ring accessors (kind() == Series only).
    int series_order() const;
    Ring series_base() const;
    Value make_series(std::vector<Value> coeffs) const;

  private:
    RingSpecPtr spec_;
    void check_mine(const Value &x) const;
    Value make_scalar(BigRat v) const;
    Value make_quad(BigRat a, BigRat b) const;
};

/// Model of the unit group R^x = <zeta> x <eps>: torsion part of order w
/// generated by zeta, free part of rank 0 or 1 generated by eps.
struct UnitGroupModel {
    long torsion_order = 1; // w; 0 encodes "all roots of unity" (C-mode)
    Value torsion_generator;
    int free_rank = 0;
    std::optional<Value> fundamental_unit;
};

/// Unit groups of the rings with a built-in model; throws Unsupported
/// for rings without one (Q, fraction fields, series rings).
UnitGroupModel unit_group_model(const Ring &ring);

/// The finite torsion subgroup {zeta^j}; Unsupported when infinite (C-mode).
std::vector<Value> torsion_units(const Ring &ring);

// Small exact-arithmetic helpers shared across modules.
BigInt factorial(long n);
BigInt binomial(long n, long k);
bool is_square_free(long d);

} // namespace autoflow
