#include "autoflow/homogeneity.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace autoflow {

namespace {

BigRat mod1(const BigRat &q) {
    BigInt n = boost::multiprecision::numerator(q);
    BigInt d = boost::multiprecision::denominator(q);
    BigInt r = n % d;
    if (r < 0)
        r += d;
    return BigRat(r, d);
}

} // namespace

std::string structure_name(const AbelianGroupStructure &s) {
    if (s.invariant_factors.empty())
        return "trivial";
    std::string out;
    for (size_t i = 0; i < s.invariant_factors.size(); ++i) {
        if (i)
            out += "x";
        out += "Z" + s.invariant_factors[i].str();
    }
    return out;
}

BigRat unit_angle(const Ring &ring, const Value &u) {
    switch (ring.kind()) {
    case RingKind::Integers:
    case RingKind::QuadReal: {
        if (ring.eq(u, ring.one()))
            return BigRat(0);
        if (ring.eq(u, ring.from_int(-1)))
            return BigRat(1, 2);
        throw Unsupported("unit_angle: not a torsion unit");
    }
    case RingKind::Gaussian: {
        const QuadCoords &c = u.quad();
        if (c.a == 1 && c.b == 0)
            return BigRat(0);
        if (c.a == 0 && c.b == 1)
            return BigRat(1, 4);
        if (c.a == -1 && c.b == 0)
            return BigRat(1, 2);
        if (c.a == 0 && c.b == -1)
            return BigRat(3, 4);
        throw Unsupported("unit_angle: not a torsion unit");
    }
    case RingKind::Eisenstein: {
        const QuadCoords &c = u.quad();
        if (c.a == 1 && c.b == 0)
            return BigRat(0);
        if (c.a == 1 && c.b == 1) // -w^2
            return BigRat(1, 6);
        if (c.a == 0 && c.b == 1) // w
            return BigRat(1, 3);
        if (c.a == -1 && c.b == 0)
            return BigRat(1, 2);
        if (c.a == -1 && c.b == -1) // w^2
            return BigRat(2, 3);
        if (c.a == 0 && c.b == -1) // -w
            return BigRat(5, 6);
        throw Unsupported("unit_angle: not a torsion unit");
    }
    case RingKind::RootsOfUnity:
        if (u.root().zero)
            throw Unsupported("unit_angle: zero is not a unit");
        return u.root().q;
    default:
        throw Unsupported("unit_angle: no torsion model for " +
                          ring.spec()->to_string());
    }
}

Value pair_sequence_term(const Ring &ring, const HomogeneityPair &p, long n) {
    Value apow = ring.pow(p.a, BigInt(1 - n));
    Value bpow = ring.pow(p.b, BigInt(n));
    return ring.mul(apow, bpow);
}

std::vector<HomogeneityPair> solve_hk(const Ring &ring, int k) {
    if (k < 2)
        throw BadRange("solve_hk: k >= 2 (use h1_describe for k = 1)");
    std::vector<HomogeneityPair> out;
    if (ring.kind() == RingKind::RootsOfUnity && ring.spec()->roots_order == 0) {
        // C-mode: b ranges over mu_{(k-1)^2}, a = b^{k-1}
        const long m = static_cast<long>(k - 1) * (k - 1);
        for (long p = 0; p < m; ++p) {
            Value b(ring.spec(), Payload(RootCoords{false, mod1(BigRat(p, m))}));
            Value a = ring.pow(b, BigInt(k - 1));
            out.push_back(HomogeneityPair{k, a, b});
        }
    } else {
        // only torsion units can solve b^{(k-1)^2} = 1
        for (const Value &a : torsion_units(ring)) {
            if (!ring.is_one(ring.pow(a, BigInt(k - 1))))
                continue;
            for (const Value &b : torsion_units(ring)) {
                if (ring.eq(ring.pow(b, BigInt(k - 1)), a))
                    out.push_back(HomogeneityPair{k, a, b});
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [&](const HomogeneityPair &x, const HomogeneityPair &y) {
                  BigRat ax = unit_angle(ring, x.a), ay = unit_angle(ring, y.a);
                  if (ax != ay)
                      return ax < ay;
                  return unit_angle(ring, x.b) < unit_angle(ring, y.b);
              });
    return out;
}

H1Description h1_describe(const Ring &ring, int bound_m) {
    UnitGroupModel m = unit_group_model(ring);
    H1Description d;
    if (m.torsion_order == 0) {
        d.finite = false;
        d.symbolic = "all nonzero complex units";
        return d;
    }
    if (m.free_rank == 0) {
        d.finite = true;
        d.units = torsion_units(ring);
        std::sort(d.units.begin(), d.units.end(), [&](const Value &x, const Value &y) {
            return unit_angle(ring, x) < unit_angle(ring, y);
        });
        d.symbolic = "{zeta^j : 0 <= j < " + std::to_string(m.torsion_order) + "}";
        return d;
    }
    d.finite = false;
    d.symbolic = "{ +/- eps^m : m in Z }, eps = " + ring.render(*m.fundamental_unit);
    Value inv_eps = *ring.try_invert(*m.fundamental_unit);
    for (int mm = -bound_m; mm <= bound_m; ++mm) {
        Value p = ring.pow(mm >= 0 ? *m.fundamental_unit : inv_eps,
                           BigInt(mm >= 0 ? mm : -mm));
        d.units.push_back(p);
        d.units.push_back(ring.neg(p));
    }
    return d;
}

namespace {

struct PairKey {
    std::string a, b;
    bool operator<(const PairKey &o) const {
        return a < o.a || (a == o.a && b < o.b);
    }
};

PairKey key_of(const Ring &ring, const HomogeneityPair &p) {
    return PairKey{ring.render(p.a), ring.render(p.b)};
}

} // namespace

AbelianGroupStructure group_structure(const Ring &ring,
                                      const std::vector<HomogeneityPair> &pairs) {
    if (pairs.empty())
        throw NotClosed("group_structure: empty set");
    std::map<PairKey, size_t> index;
    for (size_t i = 0; i < pairs.size(); ++i)
        index[key_of(ring, pairs[i])] = i;

    auto mul_pair = [&](const HomogeneityPair &x, const HomogeneityPair &y) {
        return HomogeneityPair{x.k, ring.mul(x.a, y.a), ring.mul(x.b, y.b)};
    };
    HomogeneityPair identity{pairs[0].k, ring.one(), ring.one()};
    if (!index.count(key_of(ring, identity)))
        throw NotClosed("group_structure: identity missing");
    for (const auto &x : pairs)
        for (const auto &y : pairs)
            if (!index.count(key_of(ring, mul_pair(x, y))))
                throw NotClosed("group_structure: not closed under products");

    const size_t n = pairs.size();
    auto elem_order = [&](const HomogeneityPair &x) -> long {
        HomogeneityPair p = x;
        for (long ord = 1; ord <= static_cast<long>(n); ++ord) {
            if (ring.eq(p.a, identity.a) && ring.eq(p.b, identity.b))
                return ord;
            p = mul_pair(p, x);
        }
        throw NotClosed("group_structure: element order exceeds group size");
    };
    // inverses exist iff every element's order is finite within the set
    std::vector<long> orders;
    orders.reserve(n);
    for (const auto &x : pairs)
        orders.push_back(elem_order(x));

    AbelianGroupStructure s;
    s.order = BigInt(static_cast<long>(n));
    long exponent = 1;
    for (long o : orders)
        exponent = std::lcm(exponent, o);
    s.exponent = exponent;

    // primary decomposition from order statistics: for each prime p,
    // c_j = #{x : x^{p^j} = e} = p^{s_j} with s_j = sum_i min(e_i, j)
    std::map<long, std::vector<int>> primary; // p -> exponents e_1 >= e_2 >= ...
    long rest = static_cast<long>(n);
    for (long p = 2; p <= rest; ++p) {
        if (rest % p != 0)
            continue;
        while (rest % p == 0)
            rest /= p;
        std::vector<int> s_list{0}; // s_0 = 0
        for (long pj = p;; pj *= p) {
            // x^{pj} = e iff order(x) divides pj
            long count = 0;
            for (long o : orders)
                if (pj % o == 0)
                    ++count;
            // count = p^{s_j}
            int sj = 0;
            long c = count;
            while (c > 1) {
                if (c % p != 0)
                    throw NotClosed("group_structure: impossible order statistics");
                c /= p;
                ++sj;
            }
            if (sj == s_list.back())
                break; // the p-part is exhausted
            s_list.push_back(sj);
        }
        // m_j = s_j - s_{j-1} = number of cyclic factors with e_i >= j
        std::vector<int> m_list;
        for (size_t j = 1; j < s_list.size(); ++j)
            m_list.push_back(s_list[j] - s_list[j - 1]);
        std::vector<int> exps;
        if (!m_list.empty()) {
            for (int i = 1; i <= m_list[0]; ++i) {
                int e = 0;
                for (int mj : m_list)
                    if (mj >= i)
                        ++e;
                exps.push_back(e);
            }
        }
        if (!exps.empty())
            primary[p] = exps; // descending by construction
    }

    size_t factor_count = 0;
    for (const auto &[p, exps] : primary)
        factor_count = std::max(factor_count, exps.size());
    std::vector<BigInt> descending;
    for (size_t i = 0; i < factor_count; ++i) {
        BigInt d = 1;
        for (const auto &[p, exps] : primary)
            if (i < exps.size())
                for (int c = 0; c < exps[i]; ++c)
                    d *= p;
        descending.push_back(d);
    }
    s.invariant_factors.assign(descending.rbegin(), descending.rend());
    BigInt prod = 1;
    for (const auto &d : s.invariant_factors)
        prod *= d;
    if (prod != s.order ||
        (!s.invariant_factors.empty() && s.invariant_factors.back() != s.exponent) ||
        (s.invariant_factors.empty() && s.order != 1))
        throw NotClosed("group_structure: inconsistent decomposition");
    return s;
}

bool check_action(const Ring &ring, const HomogeneityPair &p,
                  const CoefficientSequence &x, int depth) {
    if (depth < 1 || depth > static_cast<int>(x.terms.size()))
        throw BadRange("check_action: bad depth");
    CoefficientSequence hx{ring, {}};
    hx.terms.reserve(x.terms.size());
    for (size_t n = 0; n < x.terms.size(); ++n)
        hx.terms.push_back(
            ring.mul(pair_sequence_term(ring, p, static_cast<long>(n)), x.terms[n]));
    auto lhs = apply_pointwise(hx).terms;
    auto rhs = apply_pointwise(x).terms;
    for (int m = 1; m <= depth; ++m) {
        Value h = pair_sequence_term(ring, p, m - 1);
        Value hk = ring.pow(h, BigInt(p.k));
        if (!ring.eq(lhs[static_cast<size_t>(m - 1)],
                     ring.mul(hk, rhs[static_cast<size_t>(m - 1)])))
            return false;
    }
    return true;
}

bool exponent_check(const Ring &ring, const HomogeneityPair &p, int depth) {
    if (p.k < 2)
        throw BadRange("exponent_check: k >= 2");
    const BigInt e = BigInt(p.k - 1) * (p.k - 1);
    for (long n = 0; n <= depth; ++n) {
        Value h = pair_sequence_term(ring, p, n);
        if (!ring.is_one(ring.pow(h, e)))
            return false;
        // the closed-form inverse a^{n-1} b^{-n}
        Value hinv = ring.mul(ring.pow(p.a, BigInt(n - 1)), ring.pow(p.b, BigInt(-n)));
        if (!ring.is_one(ring.mul(h, hinv)))
            return false;
    }
    return true;
}

namespace {

/// k - 1 = 3^m * 2^l * rest; returns (m, l, rest).
void factor_23(long u, int &m, int &l, long &rest) {
    m = 0;
    l = 0;
    while (u % 2 == 0) {
        u /= 2;
        ++l;
    }
    while (u % 3 == 0) {
        u /= 3;
        ++m;
    }
    rest = u;
}

std::vector<std::pair<std::string, std::string>> trivial_pair() {
    return {{"1", "1"}};
}

} // namespace

std::optional<PaperClaim> paper_claim(const Ring &ring, int k) {
    PaperClaim c;
    switch (ring.kind()) {
    case RingKind::Integers: {
        c.pairs_known = true;
        if (k == 1) {
            c.pairs = {{"1", "1"}, {"1", "-1"}};
            c.structure = "Z2";
        } else {
            c.pairs = trivial_pair();
            c.structure = "trivial";
        }
        return c;
    }
    case RingKind::Gaussian: {
        if (k == 1) {
            c.pairs_known = true;
            c.pairs = {{"1", "1"}, {"1", "1i"}, {"1", "-1"}, {"1", "-1i"}};
            c.structure = "Z4";
            return c;
        }
        if (k == 3) {
            c.pairs_known = true;
            c.pairs = {{"1", "1"}, {"1", "-1"}, {"-1", "1i"}, {"-1", "-1i"}};
            c.structure = "Z2xZ2";
            return c;
        }
        int m, l;
        long rest;
        factor_23(k - 1, m, l, rest);
        c.pairs_known = true;
        if (m == 0 && rest == 1 && l >= 2) { // k = 2^l + 1
            c.pairs = {{"1", "1"}, {"1", "1i"}, {"1", "-1"}, {"1", "-1i"}};
            c.structure = "Z4";
        } else {
            c.pairs = trivial_pair();
            c.structure = "trivial";
        }
        return c;
    }
    case RingKind::Eisenstein: {
        const std::vector<std::pair<std::string, std::string>> h1 = {
            {"1", "1"},  {"1", "1+1w"},  {"1", "1w"},
            {"1", "-1"}, {"1", "-1-1w"}, {"1", "-1w"}};
        const std::vector<std::pair<std::string, std::string>> h3 = {{"1", "1"},
                                                                     {"1", "-1"}};
        const std::vector<std::pair<std::string, std::string>> h4 = {
            {"1", "1"}, {"1", "1w"}, {"1", "-1-1w"}};
        c.pairs_known = true;
        if (k == 1) {
            c.pairs = h1;
            c.structure = "Z6";
            return c;
        }
        int m, l;
        long rest;
        factor_23(k - 1, m, l, rest);
        if (rest != 1) {
            c.pairs = trivial_pair();
            c.structure = "trivial";
        } else if (m == 0 && l >= 1) { // k = 2^l + 1: 3, 5, 9, 17, ...
            c.pairs = h3;
            c.structure = "Z2";
        } else if (m == 1 && l == 0) { // k = 4
            c.pairs = h4;
            c.structure = "Z3";
        } else if (m == 1 && l >= 1) { // k = 3*2^l + 1: 7, 13, 25, ...
            c.pairs = h1;
            c.structure = "Z6";
        } else if (m >= 2) { // k = 3^m*2^l + 1: 10, 19, 28, ...
            c.pairs = h4;
            c.structure = "Z3";
        } else {
            c.pairs = trivial_pair();
            c.structure = "trivial";
        }
        return c;
    }
    case RingKind::QuadReal: {
        c.pairs_known = (k >= 2);
        if (k >= 2) {
            c.pairs = trivial_pair();
            c.structure = "trivial";
        } else {
            c.structure = "{ +/- eps^m }";
        }
        return c;
    }
    case RingKind::RootsOfUnity: {
        if (ring.spec()->roots_order != 0)
            return std::nullopt;
        if (k >= 2) {
            c.pairs_known = false; // the claim is the count and cyclic structure
            c.structure = "Z" + std::to_string(static_cast<long>(k - 1) * (k - 1));
        } else {
            c.structure = "C^x";
        }
        return c;
    }
    default:
        return std::nullopt;
    }
}

} // namespace autoflow
