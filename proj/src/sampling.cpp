#include "autoflow/sampling.hpp"

namespace autoflow {

Value random_element(const Ring &ring, Rng &rng, long bound) {
    switch (ring.kind()) {
    case RingKind::Integers:
        return ring.from_int(rng.range(-bound, bound));
    case RingKind::Rationals:
        return ring.from_rat(BigRat(rng.range(-bound, bound), rng.range(1, bound)));
    case RingKind::Gaussian:
    case RingKind::Eisenstein:
    case RingKind::QuadReal: {
        Value re = ring.from_int(rng.range(-bound, bound));
        Value im_coord = ring.from_int(rng.range(-bound, bound));
        // a + b*theta with theta the ring generator: build as a + b*(0,1)
        Value theta = ring.parse("1" + std::string(1, ring.kind() == RingKind::Gaussian
                                                          ? 'i'
                                                          : ring.kind() == RingKind::Eisenstein
                                                                ? 'w'
                                                                : 'r'));
        return ring.add(re, ring.mul(im_coord, theta));
    }
    case RingKind::Fraction: {
        Ring base(ring.spec()->base);
        Value x = random_element(base, rng, bound);
        Value y = random_element(base, rng, bound);
        Value lifted = base.lift_to_fraction(x);
        Value denom = base.lift_to_fraction(y);
        if (ring.is_zero(denom))
            return lifted;
        return *ring.try_divide(lifted, denom);
    }
    case RingKind::RootsOfUnity: {
        if (rng.range(0, 7) == 0)
            return ring.zero();
        long m = ring.spec()->roots_order > 0 ? ring.spec()->roots_order
                                              : rng.range(1, 12);
        long j = rng.range(0, m - 1);
        return ring.parse("zeta(" + std::to_string(j) + "/" + std::to_string(m) + ")");
    }
    case RingKind::Series: {
        Ring base = ring.series_base();
        std::vector<Value> c;
        c.reserve(static_cast<size_t>(ring.series_order()) + 1);
        for (int i = 0; i <= ring.series_order(); ++i)
            c.push_back(random_element(base, rng, bound));
        return ring.make_series(std::move(c));
    }
    }
    throw Error("unreachable");
}

Value random_nonzero(const Ring &ring, Rng &rng, long bound) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Value v = random_element(ring, rng, bound);
        if (!ring.is_zero(v))
            return v;
    }
    return ring.one();
}

Value random_unit(const Ring &ring, Rng &rng) {
    if (ring.spec()->is_field())
        return random_nonzero(ring, rng);
    UnitGroupModel m = unit_group_model(ring);
    Value u = ring.pow(m.torsion_generator, BigInt(rng.range(0, m.torsion_order - 1)));
    if (m.free_rank == 1)
        u = ring.mul(u, ring.pow(*m.fundamental_unit, BigInt(rng.range(-2, 2))));
    return u;
}

CoefficientSequence random_sequence(const Ring &ring, Rng &rng, int len,
                                    bool unit_head) {
    CoefficientSequence seq{ring, {}};
    seq.terms.reserve(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i)
        seq.terms.push_back(random_element(ring, rng));
    if (unit_head && len > 0)
        seq.terms[0] = random_unit(ring, rng);
    return seq;
}

HurwitzSeries random_series(const Ring &ring, Rng &rng, int order,
                            bool zero_constant, bool nonzero_lead) {
    std::vector<Value> c;
    c.reserve(static_cast<size_t>(order) + 1);
    for (int i = 0; i <= order; ++i)
        c.push_back(random_element(ring, rng, 5));
    if (zero_constant)
        c[0] = ring.zero();
    else if (nonzero_lead && ring.is_zero(c[0]))
        c[0] = ring.one();
    return HurwitzSeries(ring, std::move(c));
}

} // namespace autoflow
