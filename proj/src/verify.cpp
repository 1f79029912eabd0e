#include "autoflow/verify.hpp"

#include <functional>
#include <ostream>
#include <set>

#include "autoflow/flow.hpp"
#include "autoflow/sampling.hpp"

namespace autoflow {

namespace {

struct Suite {
    Ring user_ring;
    int order;
    Rng rng;
    std::vector<CheckResult> results;

    void check(const std::string &name, const std::function<bool()> &body) {
        CheckResult r;
        r.name = name;
        try {
            r.pass = body();
        } catch (const std::exception &e) {
            r.pass = false;
            r.detail = e.what();
        }
        results.push_back(std::move(r));
    }

    void flag(const std::string &name, const std::string &detail) {
        results.push_back(CheckResult{name, true, true, detail});
    }
};

// Horner-substitution oracle for composition: lift to the fraction field,
// evaluate f(g(X)) = sum_j (a_j / j!) g^j by nested multiplication. Kept
// independent of the Bell-formula implementation in compose().
HurwitzSeries horner_compose(const HurwitzSeries &f, const HurwitzSeries &g) {
    HurwitzSeries fl = lift_series_to_fraction(f);
    HurwitzSeries gl = lift_series_to_fraction(g);
    const Ring &F = fl.ring;
    int n = std::min(fl.order, gl.order);
    HurwitzSeries acc = hurwitz_zero(F, n);
    for (int j = fl.order; j >= 0; --j) {
        Value cj = F.mul(fl.coeff(j), *F.try_invert(F.from_int(factorial(j))));
        acc = hurwitz_mul(acc, gl);
        acc = series_add(acc, hurwitz_constant(F, cj, acc.order));
    }
    // acc holds sum of (a_j/j!) g^j as ordinary values; coefficients are
    // already EGF numerators because all arithmetic used hurwitz_mul
    return acc;
}

std::vector<std::pair<std::string, std::string>>
rendered_pairs(const Ring &ring, const std::vector<HomogeneityPair> &pairs) {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(pairs.size());
    for (const auto &p : pairs)
        out.emplace_back(ring.render(p.a), ring.render(p.b));
    return out;
}

void run_ring_checks(Suite &s) {
    const std::vector<std::string> specs = {"z",     "q",     "gauss", "eisen",
                                            "quad2", "quad3", "quad5", "frac(gauss)",
                                            "series(q,4)"};
    for (const auto &name : specs) {
        Ring R = Ring::make(name);
        s.check("rings/axioms-" + name, [&] {
            for (int i = 0; i < 20; ++i) {
                Value a = random_element(R, s.rng), b = random_element(R, s.rng),
                      c = random_element(R, s.rng);
                if (!R.eq(R.mul(R.mul(a, b), c), R.mul(a, R.mul(b, c))))
                    return false;
                if (!R.eq(R.mul(a, R.add(b, c)), R.add(R.mul(a, b), R.mul(a, c))))
                    return false;
                if (!R.eq(R.mul(a, b), R.mul(b, a)) || !R.eq(R.add(a, b), R.add(b, a)))
                    return false;
                if (!R.eq(R.add(a, R.neg(a)), R.zero()) || !R.eq(R.mul(a, R.one()), a))
                    return false;
            }
            return true;
        });
        s.check("rings/parse-render-" + name, [&] {
            for (int i = 0; i < 20; ++i) {
                Value a = random_element(R, s.rng);
                if (!R.eq(R.parse(R.render(a)), a))
                    return false;
            }
            return true;
        });
        s.check("rings/invert-product-" + name, [&] {
            for (int i = 0; i < 20; ++i) {
                Value a = random_nonzero(R, s.rng);
                auto inv = R.try_invert(a);
                if (inv && !R.eq(R.mul(a, *inv), R.one()))
                    return false;
            }
            return true;
        });
    }

    for (const auto &name : {"z", "gauss", "eisen", "quad2", "quad3", "quad5"}) {
        Ring R = Ring::make(name);
        s.check(std::string("rings/unit-model-") + name, [&] {
            UnitGroupModel m = unit_group_model(R);
            if (!R.is_one(R.pow(m.torsion_generator, BigInt(m.torsion_order))))
                return false;
            for (long p = 2; p <= m.torsion_order; ++p) {
                if (m.torsion_order % p != 0)
                    continue;
                bool prime = true;
                for (long q = 2; q * q <= p; ++q)
                    if (p % q == 0)
                        prime = false;
                if (!prime)
                    continue;
                if (R.is_one(R.pow(m.torsion_generator, BigInt(m.torsion_order / p))))
                    return false;
            }
            if (m.free_rank == 1) {
                const Value &eps = *m.fundamental_unit;
                if (!R.is_unit(eps))
                    return false;
                if (R.eq(eps, R.one()) || R.eq(eps, R.from_int(-1)))
                    return false;
            }
            return true;
        });
    }

    for (const auto &name : {"z", "gauss", "eisen", "quad2"}) {
        Ring R = Ring::make(name);
        Ring F = R.fraction_ring();
        s.check(std::string("rings/fraction-agrees-") + name, [&] {
            for (int i = 0; i < 20; ++i) {
                Value a = random_element(R, s.rng), b = random_element(R, s.rng);
                Value la = R.lift_to_fraction(a), lb = R.lift_to_fraction(b);
                if (!F.eq(F.add(la, lb), R.lift_to_fraction(R.add(a, b))))
                    return false;
                if (!F.eq(F.mul(la, lb), R.lift_to_fraction(R.mul(a, b))))
                    return false;
            }
            return true;
        });
    }

    for (const auto &name : {"z", "q", "gauss", "eisen", "quad2", "quad5", "zeta12"}) {
        Ring R = Ring::make(name);
        s.check(std::string("rings/embed-homomorphism-") + name, [&] {
            for (int i = 0; i < 20; ++i) {
                Value a = random_element(R, s.rng, 6), b = random_element(R, s.rng, 6);
                auto ea = R.embed(a), eb = R.embed(b), eab = R.embed(R.mul(a, b));
                double scale = std::max(1.0, std::abs(ea * eb));
                if (std::abs(ea * eb - eab) / scale > 1e-10)
                    return false;
                auto es = R.embed(R.add(a, b));
                double sscale = std::max(1.0, std::abs(ea + eb));
                if (std::abs(ea + eb - es) / sscale > 1e-10)
                    return false;
            }
            return true;
        });
    }

    s.check("rings/quad2-unit-identity", [&] {
        Ring R = Ring::make("quad2");
        return R.is_one(R.mul(R.parse("1+1r"), R.parse("-1+1r")));
    });
    s.check("rings/eisenstein-reduction", [&] {
        Ring R = Ring::make("eisen");
        Value w = R.parse("1w");
        return R.is_one(R.mul(w, R.mul(w, w))) && // w^3 = 1
               R.eq(R.mul(w, w), R.parse("-1-1w"));
    });
    s.check("rings/invalid-spec-rejected", [&] {
        try {
            Ring::make("quad4");
            return false;
        } catch (const InvalidSpec &) {
        }
        try {
            RingSpec::roots_of_unity(0);
            return false;
        } catch (const InvalidSpec &) {
        }
        return true;
    });
}

void run_bell_checks(Suite &s) {
    Ring Z = Ring::make("z");
    s.check("bell/y1-y2-y3-display", [&] {
        for (int i = 0; i < 20; ++i) {
            std::vector<Value> b, a;
            for (int j = 0; j < 3; ++j) {
                b.push_back(random_element(Z, s.rng));
                a.push_back(random_element(Z, s.rng));
            }
            Value y1 = complete_bell(Z, 1, b, a);
            if (!Z.eq(y1, Z.mul(a[0], b[0])))
                return false;
            Value y2 = complete_bell(Z, 2, b, a);
            Value y2ref = Z.add(Z.mul(a[0], b[1]), Z.mul(a[1], Z.mul(b[0], b[0])));
            if (!Z.eq(y2, y2ref))
                return false;
            Value y3 = complete_bell(Z, 3, b, a);
            Value t1 = Z.mul(a[0], b[2]);
            Value t2 = Z.mul(a[1], Z.mul(Z.from_int(3), Z.mul(b[0], b[1])));
            Value t3 = Z.mul(a[2], Z.mul(b[0], Z.mul(b[0], b[0])));
            if (!Z.eq(y3, Z.add(t1, Z.add(t2, t3))))
                return false;
        }
        return true;
    });

    for (const auto &name : {"z", "eisen"}) {
        Ring R = Ring::make(name);
        s.check(std::string("bell/partition-vs-recurrence-") + name, [&] {
            for (int n = 1; n <= 10; ++n) {
                std::vector<Value> b;
                for (int j = 0; j < n; ++j)
                    b.push_back(random_element(R, s.rng, 4));
                for (int k = 1; k <= n; ++k)
                    if (!R.eq(partial_bell(R, n, k, b), partial_bell_rec(R, n, k, b)))
                        return false;
            }
            return true;
        });
    }

    s.check("bell/edge-columns", [&] {
        for (int n = 1; n <= 10; ++n) {
            std::vector<Value> b;
            for (int j = 0; j < n; ++j)
                b.push_back(random_element(Z, s.rng, 4));
            if (!Z.eq(partial_bell(Z, n, 1, b), b[static_cast<size_t>(n - 1)]))
                return false;
            if (!Z.eq(partial_bell(Z, n, n, b), Z.pow(b[0], BigInt(n))))
                return false;
        }
        return true;
    });

    s.check("bell/bell-numbers", [&] {
        const long expected[] = {1, 2, 5, 15, 52, 203};
        for (int n = 1; n <= 6; ++n) {
            std::vector<Value> ones(static_cast<size_t>(n), Z.one());
            Value sum = Z.zero();
            for (int k = 1; k <= n; ++k)
                sum = Z.add(sum, partial_bell(Z, n, k, ones));
            if (!Z.eq(sum, Z.from_int(expected[n - 1])))
                return false;
        }
        return true;
    });

    s.check("bell/homogeneity-scaling", [&] {
        for (int trial = 0; trial < 5; ++trial) {
            int n = static_cast<int>(s.rng.range(1, 7));
            Value alpha = random_nonzero(Z, s.rng, 3);
            std::vector<Value> b, scaled;
            Value apow = Z.one();
            for (int j = 0; j < n; ++j) {
                b.push_back(random_element(Z, s.rng, 4));
                apow = Z.mul(apow, alpha);
                scaled.push_back(Z.mul(apow, b.back()));
            }
            for (int k = 1; k <= n; ++k) {
                Value lhs = partial_bell(Z, n, k, scaled);
                Value rhs = Z.mul(Z.pow(alpha, BigInt(n)), partial_bell(Z, n, k, b));
                if (!Z.eq(lhs, rhs))
                    return false;
            }
        }
        return true;
    });

    s.check("bell/partitions-examples", [&] {
        auto p32 = partitions(3, 2);
        if (p32.size() != 1 || p32[0].mult != std::vector<int>{1, 1, 0})
            return false;
        auto p42 = partitions(4, 2);
        if (p42.size() != 2 || p42[0].mult != std::vector<int>{1, 0, 1, 0} ||
            p42[1].mult != std::vector<int>{0, 2, 0, 0})
            return false;
        auto p33 = partitions(3, 3);
        return p33.size() == 1 && p33[0].mult == std::vector<int>{3, 0, 0};
    });
}

void run_hurwitz_checks(Suite &s) {
    Ring R = s.user_ring;
    // These checks need total addition and a fraction field.
    if (R.kind() == RingKind::RootsOfUnity || R.kind() == RingKind::Series)
        R = Ring::make("q");
    const int N = s.order;

    s.check("hurwitz/delta-algebra", [&] {
        for (int i = 0; i < 10; ++i) {
            HurwitzSeries f = random_series(R, s.rng, N);
            HurwitzSeries g = random_series(R, s.rng, N);
            Value c = random_element(R, s.rng);
            if (!series_eq(derivative(series_add(f, g)),
                           series_add(derivative(f), derivative(g)), N - 1))
                return false;
            if (!series_eq(derivative(series_scale(c, f)),
                           series_scale(c, derivative(f)), N - 1))
                return false;
        }
        return true;
    });

    s.check("hurwitz/leibniz", [&] {
        for (int i = 0; i < 10; ++i) {
            HurwitzSeries f = random_series(R, s.rng, N);
            HurwitzSeries g = random_series(R, s.rng, N);
            HurwitzSeries lhs = derivative(hurwitz_mul(f, g));
            HurwitzSeries rhs = series_add(hurwitz_mul(derivative(f), g),
                                           hurwitz_mul(f, derivative(g)));
            if (!series_eq(lhs, rhs, N - 1))
                return false;
        }
        return true;
    });

    for (const auto &name : {"q", "gauss"}) {
        Ring RR = Ring::make(name);
        s.check(std::string("hurwitz/compose-vs-horner-") + name, [&] {
            for (int i = 0; i < 8; ++i) {
                HurwitzSeries f = random_series(RR, s.rng, 8);
                HurwitzSeries g = random_series(RR, s.rng, 8, /*zero_constant=*/true);
                HurwitzSeries bell_route = lift_series_to_fraction(compose(f, g));
                HurwitzSeries oracle = horner_compose(f, g);
                if (!series_eq(bell_route, oracle, 8))
                    return false;
            }
            return true;
        });
    }

    s.check("hurwitz/scale-substitute-composes", [&] {
        for (int i = 0; i < 10; ++i) {
            HurwitzSeries f = random_series(R, s.rng, N);
            Value a = random_element(R, s.rng, 4);
            Value b = random_element(R, s.rng, 4);
            HurwitzSeries lhs = scale_substitute(scale_substitute(f, a), b);
            HurwitzSeries rhs = scale_substitute(f, R.mul(a, b));
            if (!series_eq(lhs, rhs, N))
                return false;
        }
        return true;
    });

    s.check("hurwitz/taylor-shift-roundtrip", [&] {
        Ring F = R.fraction_ring();
        for (int i = 0; i < 10; ++i) {
            HurwitzSeries f = lift_series_to_fraction(random_series(R, s.rng, N));
            Value c = random_element(F, s.rng, 4);
            HurwitzSeries back = taylor_shift(taylor_shift(f, c), F.neg(c));
            if (!series_eq(back, f, N))
                return false;
        }
        return true;
    });

    s.check("hurwitz/mul-examples", [&] {
        Ring Q = Ring::make("q");
        HurwitzSeries e = exp_series(Q, Q.one(), 6);
        HurwitzSeries e2 = hurwitz_mul(e, e);
        for (int n = 0; n <= 6; ++n)
            if (!Q.eq(e2.coeff(n), Q.pow(Q.from_int(2), BigInt(n))))
                return false;
        HurwitzSeries x = hurwitz_x(Q, 3);
        HurwitzSeries xx = hurwitz_mul(x, x);
        return Q.is_zero(xx.coeff(0)) && Q.is_zero(xx.coeff(1)) &&
               Q.eq(xx.coeff(2), Q.from_int(2)) && Q.is_zero(xx.coeff(3));
    });
}

void run_autonomous_checks(Suite &s) {
    Ring Z = Ring::make("z");
    Ring Q = Ring::make("q");

    s.check("autonomous/a1-a4-display", [&] {
        for (int i = 0; i < 20; ++i) {
            CoefficientSequence x = random_sequence(Z, s.rng, 4, false);
            auto img = apply_pointwise(x).terms;
            const Value &f = x.terms[0], &d1 = x.terms[1], &d2 = x.terms[2],
                        &d3 = x.terms[3];
            if (!Z.eq(img[0], f))
                return false;
            if (!Z.eq(img[1], Z.mul(f, d1)))
                return false;
            Value a3 = Z.add(Z.mul(f, Z.mul(d1, d1)), Z.mul(Z.mul(f, f), d2));
            if (!Z.eq(img[2], a3))
                return false;
            Value f2 = Z.mul(f, f), f3 = Z.mul(f2, f);
            Value a4 = Z.add(Z.mul(f, Z.pow(d1, BigInt(3))),
                             Z.add(Z.mul(Z.from_int(4), Z.mul(f2, Z.mul(d1, d2))),
                                   Z.mul(f3, d3)));
            if (!Z.eq(img[3], a4))
                return false;
        }
        return true;
    });

    s.check("autonomous/all-ones-factorials", [&] {
        CoefficientSequence ones{Z, std::vector<Value>(6, Z.one())};
        auto img = apply_pointwise(ones).terms;
        const long expected[] = {1, 1, 2, 6, 24, 120};
        for (int i = 0; i < 6; ++i)
            if (!Z.eq(img[static_cast<size_t>(i)], Z.from_int(expected[i])))
                return false;
        return true;
    });

    s.check("autonomous/ab-geometric", [&] {
        for (int i = 0; i < 10; ++i) {
            Value a = random_element(Z, s.rng), b = random_element(Z, s.rng);
            CoefficientSequence x{Z, {a, b, Z.zero(), Z.zero(), Z.zero(), Z.zero()}};
            auto img = apply_pointwise(x).terms;
            Value expect = a;
            for (size_t n = 0; n < img.size(); ++n) {
                if (!Z.eq(img[n], expect))
                    return false;
                expect = Z.mul(expect, b);
            }
        }
        return true;
    });

    for (const auto &name : {"q", "gauss", "eisen"}) {
        Ring R = Ring::make(name);
        s.check(std::string("autonomous/series-route-cross-check-") + name, [&] {
            for (int i = 0; i < 5; ++i) {
                HurwitzSeries f = random_series(R, s.rng, 8);
                auto chain = apply_series(f).series_terms;
                auto bell = apply_series_bell(f).series_terms;
                if (chain.size() != bell.size())
                    return false;
                for (size_t n = 0; n < chain.size(); ++n)
                    if (!series_eq(chain[n], bell[n],
                                   std::min(chain[n].order, bell[n].order)))
                        return false;
            }
            return true;
        });
    }

    s.check("autonomous/corollary-nesting", [&] {
        for (int i = 0; i < 5; ++i) {
            HurwitzSeries f = random_series(Q, s.rng, 6);
            auto img = apply_series(f, 5).series_terms;
            for (int n = 1; n <= 5; ++n) {
                HurwitzSeries nested = nested_chain(f, n);
                if (!series_eq(img[static_cast<size_t>(n - 1)], nested, nested.order))
                    return false;
            }
        }
        return true;
    });

    s.check("autonomous/evaluation-commutes", [&] {
        for (int i = 0; i < 5; ++i) {
            HurwitzSeries f = random_series(Q, s.rng, 6);
            auto series_img = apply_series(f).series_terms;
            auto point_img = apply_pointwise(sequence_of(f)).terms;
            for (size_t n = 0; n < series_img.size(); ++n)
                if (!Q.eq(series_img[n].coeff(0), point_img[n]))
                    return false;
        }
        return true;
    });

    s.check("autonomous/exp-series-prop3", [&] {
        HurwitzSeries e = exp_series(Q, Q.one(), 6);
        auto img = apply_series(e).series_terms;
        for (size_t n = 1; n <= img.size(); ++n) {
            const HurwitzSeries &an = img[n - 1];
            // A_n = (n-1)! exp(nX)
            for (int j = 0; j <= an.order; ++j) {
                Value expect = Q.mul(Q.from_int(factorial(static_cast<long>(n) - 1)),
                                     Q.pow(Q.from_int(static_cast<long>(n)), BigInt(j)));
                if (!Q.eq(an.coeff(j), expect))
                    return false;
            }
        }
        return true;
    });

    Ring RX = (s.user_ring.kind() == RingKind::RootsOfUnity ||
               s.user_ring.kind() == RingKind::Series)
                  ? Q
                  : s.user_ring;
    s.check("autonomous/null-space", [&] {
        for (int i = 0; i < 10; ++i) {
            CoefficientSequence x = random_sequence(RX, s.rng, 6, false);
            x.terms[0] = RX.zero();
            for (const auto &t : apply_pointwise(x).terms)
                if (!RX.is_zero(t))
                    return false;
        }
        return true;
    });

    for (const auto &name : {"z", "q", "gauss", "eisen", "quad2"}) {
        Ring R = Ring::make(name);
        s.check(std::string("autonomous/scaling-prop2-") + name, [&] {
            for (int i = 0; i < 50; ++i) {
                CoefficientSequence x = random_sequence(R, s.rng, 6, false);
                Value alpha = random_element(R, s.rng);
                if (!check_scaling(x, alpha, 6))
                    return false;
            }
            return true;
        });
    }

    for (const auto &name : {"z", "q", "gauss", "eisen", "quad2"}) {
        Ring R = Ring::make(name);
        s.check(std::string("autonomous/round-trip-") + name, [&] {
            Ring F = R.fraction_ring();
            for (int i = 0; i < 10; ++i) {
                CoefficientSequence x = random_sequence(R, s.rng, 8, true);
                auto y = apply_pointwise(x).terms;
                auto back = invert(CoefficientSequence{R, y});
                if (!back.in_ring)
                    return false;
                CoefficientSequence xf = lift_sequence_to_fraction(x);
                for (size_t n = 0; n < xf.terms.size(); ++n)
                    if (!F.eq(back.x.terms[n], xf.terms[n]))
                        return false;
                // and the other composition on a unit-headed image
                CoefficientSequence yseq = random_sequence(R, s.rng, 8, true);
                auto pre = invert(yseq);
                auto fwd = apply_pointwise(pre.x).terms;
                CoefficientSequence yf = lift_sequence_to_fraction(yseq);
                for (size_t n = 0; n < yf.terms.size(); ++n)
                    if (!F.eq(fwd[n], yf.terms[n]))
                        return false;
            }
            return true;
        });
    }

    s.check("autonomous/invert-examples", [&] {
        CoefficientSequence y{Z, {Z.one(), Z.one(), Z.from_int(2)}};
        auto r = invert(y);
        Ring QQ = Ring::make("q");
        if (!r.in_ring || !QQ.eq(r.x.terms[2], QQ.one()))
            return false;
        CoefficientSequence fib{Z, {Z.one(), Z.one(), Z.from_int(2), Z.from_int(3)}};
        auto rf = invert(fib);
        if (!QQ.eq(rf.x.terms[3], QQ.from_int(-2)))
            return false;
        try {
            CoefficientSequence bad{Z, {Z.zero(), Z.one(), Z.from_int(2)}};
            invert(bad);
            return false;
        } catch (const ZeroLeadingTerm &) {
        }
        return true;
    });

    s.check("autonomous/linear-part", [&] {
        for (int i = 0; i < 10; ++i) {
            Value x0 = random_element(Z, s.rng), y0 = random_element(Z, s.rng);
            Value a = random_element(Z, s.rng), b = random_element(Z, s.rng);
            CoefficientSequence mix{
                Z, {Z.add(Z.mul(a, x0), Z.mul(b, y0)), Z.zero(), Z.zero(), Z.zero()}};
            CoefficientSequence x{Z, {x0, Z.zero(), Z.zero(), Z.zero()}};
            CoefficientSequence y{Z, {y0, Z.zero(), Z.zero(), Z.zero()}};
            auto lhs = apply_pointwise(mix).terms;
            auto ax = apply_pointwise(x).terms;
            auto by = apply_pointwise(y).terms;
            for (size_t n = 0; n < lhs.size(); ++n)
                if (!Z.eq(lhs[n], Z.add(Z.mul(a, ax[n]), Z.mul(b, by[n]))))
                    return false;
        }
        return true;
    });

    for (const auto &name : {"z", "gauss"}) {
        Ring R = Ring::make(name);
        s.check(std::string("autonomous/principal-ideal-") + name, [&] {
            for (int i = 0; i < 10; ++i) {
                Value a = random_nonzero(R, s.rng, 4);
                CoefficientSequence x = random_sequence(R, s.rng, 6, false);
                for (auto &t : x.terms)
                    t = R.mul(a, t);
                for (const auto &t : apply_pointwise(x).terms)
                    if (!R.try_divide(t, a))
                        return false;
            }
            return true;
        });
    }

    s.check("autonomous/prop4-exp-factor", [&] {
        for (int i = 0; i < 10; ++i) {
            HurwitzSeries f = random_series(Q, s.rng, 6);
            Value alpha = random_element(Q, s.rng, 3);
            if (!check_exp_factor(f, alpha, 4))
                return false;
        }
        return true;
    });

    s.check("autonomous/prop5-exp-composition", [&] {
        for (int i = 0; i < 10; ++i) {
            HurwitzSeries f = random_series(Q, s.rng, 6, /*zero_constant=*/true);
            if (!check_exp_composition(f, 4))
                return false;
        }
        return true;
    });
}

void run_homogeneity_checks(Suite &s) {
    struct Expected {
        const char *ring;
        int k;
        std::vector<std::pair<std::string, std::string>> pairs;
    };
    // equation-derived solution sets (the characterization theorem's system)
    const std::vector<Expected> tables = {
        {"gauss", 3, {{"1", "1"}, {"1", "-1"}, {"-1", "1i"}, {"-1", "-1i"}}},
        {"gauss", 5, {{"1", "1"}, {"1", "1i"}, {"1", "-1"}, {"1", "-1i"}}},
        {"eisen", 3, {{"1", "1"}, {"1", "-1"}}},
        {"eisen", 4, {{"1", "1"}, {"1", "1w"}, {"1", "-1-1w"}}},
        {"eisen",
         7,
         {{"1", "1"},
          {"1", "1+1w"},
          {"1", "1w"},
          {"1", "-1"},
          {"1", "-1-1w"},
          {"1", "-1w"}}},
    };
    for (const auto &t : tables) {
        Ring R = Ring::make(t.ring);
        s.check("homogeneity/pairs-" + std::string(t.ring) + "-k" + std::to_string(t.k),
                [&] { return rendered_pairs(R, solve_hk(R, t.k)) == t.pairs; });
    }

    s.check("homogeneity/defining-equations", [&] {
        for (const auto &ring_name : {"gauss", "eisen", "z"}) {
            Ring R = Ring::make(ring_name);
            for (int k = 2; k <= 7; ++k) {
                for (const auto &p : solve_hk(R, k)) {
                    if (!R.is_one(R.pow(p.a, BigInt(k - 1))))
                        return false;
                    if (!R.eq(R.pow(p.b, BigInt(k - 1)), p.a))
                        return false;
                }
            }
        }
        return true;
    });

    s.check("homogeneity/group-closure-and-exponent", [&] {
        for (const auto &ring_name : {"gauss", "eisen"}) {
            Ring R = Ring::make(ring_name);
            for (int k = 2; k <= 7; ++k) {
                auto pairs = solve_hk(R, k);
                auto st = group_structure(R, pairs); // throws NotClosed if broken
                BigInt bound = BigInt(k - 1) * (k - 1);
                if (bound % st.exponent != 0)
                    return false;
                for (const auto &p : pairs)
                    if (!exponent_check(R, p, 6))
                        return false;
            }
        }
        return true;
    });

    s.check("homogeneity/check-action-random", [&] {
        for (const auto &t : tables) {
            Ring R = Ring::make(t.ring);
            for (const auto &p : solve_hk(R, t.k)) {
                for (int i = 0; i < 25; ++i) {
                    CoefficientSequence x = random_sequence(R, s.rng, 6, false);
                    if (R.is_zero(x.terms[0]))
                        x.terms[0] = R.one();
                    if (!check_action(R, p, x, 6))
                        return false;
                }
            }
        }
        return true;
    });

    s.check("homogeneity/cmode-count", [&] {
        Ring C = Ring::make("zetaall");
        for (int k = 2; k <= 6; ++k) {
            auto pairs = solve_hk(C, k);
            if (static_cast<long>(pairs.size()) != static_cast<long>(k - 1) * (k - 1))
                return false;
            auto st = group_structure(C, pairs);
            if (st.exponent != BigInt(k - 1) * (k - 1))
                return false; // mu_{(k-1)^2} is cyclic
        }
        return true;
    });

    s.check("homogeneity/gauss-periodicity", [&] {
        Ring R = Ring::make("gauss");
        auto h5 = rendered_pairs(R, solve_hk(R, 5));
        for (int l = 3; l <= 4; ++l) {
            int k = (1 << l) + 1;
            if (rendered_pairs(R, solve_hk(R, k)) != h5)
                return false;
        }
        for (int k : {2, 4, 6}) {
            auto pairs = solve_hk(R, k);
            if (pairs.size() != 1 || !R.is_one(pairs[0].a) || !R.is_one(pairs[0].b))
                return false;
        }
        return true;
    });

    s.check("homogeneity/eisen-case-table", [&] {
        Ring R = Ring::make("eisen");
        auto h1 = rendered_pairs(R, solve_hk(R, 7)); // the 6-element set
        auto h3 = rendered_pairs(R, solve_hk(R, 3));
        auto h4 = rendered_pairs(R, solve_hk(R, 4));
        const std::vector<std::pair<std::string, std::string>> trivial = {{"1", "1"}};
        // equation-derived expectations for k = 2..13; the paper's prose
        // table misses the odd-k pair (1,-1) at k = 11 (flagged below)
        std::vector<std::vector<std::pair<std::string, std::string>>> expected = {
            trivial, h3, h4, h3, trivial, h1, trivial, h3, h4, h3, trivial, h1};
        for (int k = 2; k <= 13; ++k)
            if (rendered_pairs(R, solve_hk(R, k)) != expected[static_cast<size_t>(k - 2)])
                return false;
        return true;
    });

    s.check("homogeneity/real-quadratic-torsion-only", [&] {
        for (const auto &name : {"quad2", "quad3", "quad5"}) {
            Ring R = Ring::make(name);
            for (int k = 2; k <= 6; ++k) {
                for (const auto &p : solve_hk(R, k)) {
                    for (const Value &u : {p.a, p.b})
                        if (!R.is_one(u) && !R.eq(u, R.from_int(-1)))
                            return false;
                }
            }
        }
        return true;
    });

    // Known discrepancies between the solved equations and the prose tables;
    // reported, never fatal.
    {
        Ring G = Ring::make("gauss");
        auto st = group_structure(G, solve_hk(G, 3));
        s.flag("homogeneity/paper-claim-gauss-k3",
               "computed structure " + structure_name(st) +
                   ", prose table claims Z2xZ2 (same four pairs)");
        Ring Z = Ring::make("z");
        auto z5 = rendered_pairs(Z, solve_hk(Z, 5));
        if (z5.size() == 2)
            s.flag("homogeneity/paper-claim-z-odd-k",
                   "odd k > 1 over z solves to {(1,1),(1,-1)}, prose table claims "
                   "only the identity");
        Ring E = Ring::make("eisen");
        auto e11 = rendered_pairs(E, solve_hk(E, 11));
        if (e11.size() == 2)
            s.flag("homogeneity/paper-claim-eisen-k11",
                   "k=11 solves to {(1,1),(1,-1)}, prose table claims only the "
                   "identity");
    }

    s.check("homogeneity/h1-descriptions", [&] {
        Ring Z = Ring::make("z");
        auto dz = h1_describe(Z);
        if (!dz.finite || dz.units.size() != 2)
            return false;
        Ring E = Ring::make("eisen");
        auto de = h1_describe(E);
        if (!de.finite || de.units.size() != 6)
            return false;
        Ring S2 = Ring::make("quad2");
        auto ds = h1_describe(S2, 2);
        return !ds.finite && ds.units.size() == 10;
    });
}

void run_flow_checks(Suite &s) {
    s.check("flow/closed-vs-series-order10", [&] {
        for (const auto &ring_name : {"q", "frac(gauss)", "frac(eisen)"}) {
            Ring R = Ring::make(ring_name);
            Ring F = R.fraction_ring();
            for (int i = 0; i < 4; ++i) {
                Value a = random_nonzero(F, s.rng, 4);
                Value b = random_nonzero(F, s.rng, 4);
                Value x0 = random_element(F, s.rng, 4);
                for (const VectorField &field :
                     {VectorField::constant(R, a), VectorField::affine(R, a, b)}) {
                    FlowSeries direct = flow_at_point(field, x0, 10);
                    FlowSeries closed = closed_form_flow(field, x0, 10);
                    for (int n = 0; n <= 10; ++n)
                        if (!F.eq(direct.t_coeffs[static_cast<size_t>(n)],
                                  closed.t_coeffs[static_cast<size_t>(n)]))
                            return false;
                }
                VectorField ef = VectorField::exp_field(R, a);
                FlowSeries direct = flow_at_point(ef, F.zero(), 10);
                FlowSeries closed = closed_form_flow(ef, F.zero(), 10);
                for (int n = 0; n <= 10; ++n)
                    if (!F.eq(direct.t_coeffs[static_cast<size_t>(n)],
                              closed.t_coeffs[static_cast<size_t>(n)]))
                        return false;
            }
        }
        return true;
    });

    s.check("flow/group-law-closed-kinds", [&] {
        Ring Q = Ring::make("q");
        Ring F = Q.fraction_ring();
        Value a = F.from_int(2), b = F.from_int(3);
        if (!group_law_check(VectorField::constant(Q, a), F.from_int(5), 4, 4))
            return false;
        if (!group_law_check(VectorField::affine(Q, a, b), F.one(), 4, 4))
            return false;
        return group_law_check(VectorField::exp_field(Q, a), F.zero(), 4, 4);
    });

    s.check("flow/group-law-random-series", [&] {
        Ring Q = Ring::make("q");
        Ring F = Q.fraction_ring();
        for (int i = 0; i < 10; ++i) {
            HurwitzSeries f = random_series(F, s.rng, 8);
            VectorField field = VectorField::from_series(Q, f, F.zero());
            if (!group_law_check(field, F.zero(), 4, 4))
                return false;
        }
        return true;
    });

    s.check("flow/pde-identities", [&] {
        Ring Q = Ring::make("q");
        Ring F = Q.fraction_ring();
        Value a = F.from_int(2), b = F.from_int(3);
        if (!pde_check(VectorField::affine(Q, a, b), F.one(), 5))
            return false;
        if (!pde_check(VectorField::exp_field(Q, a), F.zero(), 5))
            return false;
        for (int i = 0; i < 5; ++i) {
            HurwitzSeries f = random_series(F, s.rng, 6);
            if (!pde_check(VectorField::from_series(Q, f, F.zero()), F.zero(), 5))
                return false;
        }
        return true;
    });

    s.check("flow/time-scale", [&] {
        Ring Q = Ring::make("q");
        Ring F = Q.fraction_ring();
        for (int i = 0; i < 10; ++i) {
            Value r = random_element(F, s.rng, 4); // any r, units not required
            Value x0 = random_element(F, s.rng, 3);
            VectorField field =
                VectorField::affine(Q, random_element(F, s.rng, 4), random_element(F, s.rng, 4));
            if (!time_scale_check(field, x0, r, 6))
                return false;
            HurwitzSeries f = random_series(F, s.rng, 6);
            VectorField sf = VectorField::from_series(Q, f, F.zero());
            if (!time_scale_check(sf, F.zero(), r, 6))
                return false;
        }
        return true;
    });

    s.check("flow/module-axioms", [&] {
        Ring Q = Ring::make("q");
        Ring F = Q.fraction_ring();
        for (int i = 0; i < 4; ++i) {
            VectorField field = VectorField::affine(Q, random_element(F, s.rng, 3),
                                                    random_element(F, s.rng, 3));
            Value r = random_element(F, s.rng, 3);
            Value v = random_element(F, s.rng, 3);
            Value w = random_element(F, s.rng, 3);
            if (!module_axioms_check(field, random_element(F, s.rng, 2), r, v, w, 3))
                return false;
        }
        return true;
    });

    s.check("flow/gmodule-identity-units", [&] {
        for (const auto &ring_name : {"z", "gauss", "eisen"}) {
            Ring R = Ring::make(ring_name);
            Ring F = R.fraction_ring();
            VectorField affine = VectorField::affine(R, F.one(), F.one());
            VectorField expf = VectorField::exp_field(R, F.one());
            for (const Value &u : torsion_units(R)) {
                if (!gmodule_identity_check(affine, u, 4, 6))
                    return false;
                if (!gmodule_identity_check(expf, u, 4, 6))
                    return false;
            }
        }
        Ring S = Ring::make("quad2");
        Ring F = S.fraction_ring();
        VectorField affine = VectorField::affine(S, F.one(), F.one());
        Value eps = S.parse("1+1r");
        Value eps_inv = *S.try_invert(eps);
        for (const Value &u : {eps, S.neg(eps), eps_inv, S.neg(eps_inv)})
            if (!gmodule_identity_check(affine, u, 4, 6))
                return false;
        return true;
    });

    s.check("flow/gmodule-orbit-eisen-k4", [&] {
        Ring E = Ring::make("eisen");
        Ring F = E.fraction_ring();
        Value a = F.from_int(2);
        auto orbit = gmodule_orbit(VectorField::constant(E, a), 4, 3, 4, 4);
        if (orbit.size() != 3)
            return false;
        // expected flows: u*(x + a t) for u in {1, w, w^2}
        std::vector<Value> scalars = {F.one(), F.parse("1w"), F.parse("-1-1w")};
        for (const auto &u : scalars) {
            bool found = false;
            for (const auto &tf : orbit) {
                if (!F.eq(tf.scalar, u))
                    continue;
                found = true;
                // coeff 0 = u X, coeff 1 = u a, higher coefficients vanish
                HurwitzSeries ux = series_scale(u, hurwitz_x(F, 4));
                if (!series_eq(tf.t_coeffs[0], ux, 4))
                    return false;
                HurwitzSeries ua = hurwitz_constant(F, F.mul(u, a), tf.t_coeffs[1].order);
                if (!series_eq(tf.t_coeffs[1], ua, tf.t_coeffs[1].order))
                    return false;
                for (size_t n = 2; n < tf.t_coeffs.size(); ++n)
                    for (int j = 0; j <= tf.t_coeffs[n].order; ++j)
                        if (!F.is_zero(tf.t_coeffs[n].coeff(j)))
                            return false;
            }
            if (!found)
                return false;
        }
        return true;
    });

    s.check("flow/equilibrium", [&] {
        Ring Q = Ring::make("q");
        Ring F = Q.fraction_ring();
        VectorField affine = VectorField::affine(Q, F.from_int(2), F.one());
        if (!equilibrium_check(affine, F.from_int(-2)))
            return false;
        if (equilibrium_check(affine, F.from_int(1)))
            return false;
        if (equilibrium_check(VectorField::constant(Q, F.from_int(2)), F.from_int(7)))
            return false;
        if (equilibrium_check(VectorField::exp_field(Q, F.one()), F.zero()))
            return false;
        return true;
    });

    s.check("flow/equilibrium-invariance", [&] {
        for (const auto &ring_name : {"z", "gauss"}) {
            Ring R = Ring::make(ring_name);
            Ring F = R.fraction_ring();
            Value a = F.from_int(6), b = F.from_int(2);
            Value xstar = F.neg(*F.try_divide(a, b)); // root of a + b x
            for (const Value &g : torsion_units(R)) {
                Value gf = R.lift_to_fraction(g);
                // the twisted field x -> f(g x) = a + (b g) x
                VectorField twisted = VectorField::affine(R, a, F.mul(b, gf));
                Value moved = F.mul(*F.try_invert(gf), xstar);
                if (!equilibrium_check(twisted, moved))
                    return false;
            }
        }
        return true;
    });

    s.check("flow/orbit-samples-tail", [&] {
        Ring Q = Ring::make("q");
        Ring F = Q.fraction_ring();
        FlowSeries flow =
            closed_form_flow(VectorField::affine(Q, F.zero(), F.one()), F.one(), 12);
        std::vector<std::complex<double>> grid = {{0.0, 0.0}, {0.5, 0.0}, {1.0, 0.0}};
        auto rows = orbit_samples(flow, grid);
        if (rows.size() != 3)
            return false;
        // x exp(t) at x = 1
        if (std::abs(rows[0].phi_re - 1.0) > 1e-12)
            return false;
        if (std::abs(rows[2].phi_re - std::exp(1.0)) > 1e-6)
            return false;
        return rows[2].tail > 0 && rows[2].tail < 1e-6;
    });
}

} // namespace

std::vector<CheckResult> verify_all(const Ring &ring, int order,
                                    std::uint64_t seed) {
    Suite s{ring, std::max(order, 3), Rng(seed), {}};
    run_ring_checks(s);
    run_bell_checks(s);
    run_hurwitz_checks(s);
    run_autonomous_checks(s);
    run_homogeneity_checks(s);
    run_flow_checks(s);
    return s.results;
}

bool print_results(const std::vector<CheckResult> &results, std::ostream &out) {
    bool all_pass = true;
    int passed = 0, failed = 0, flags = 0;
    for (const auto &r : results) {
        if (r.informational) {
            ++flags;
            out << "FLAG " << r.name;
            if (!r.detail.empty())
                out << ": " << r.detail;
            out << "\n";
            continue;
        }
        if (r.pass) {
            ++passed;
            out << "PASS " << r.name << "\n";
        } else {
            ++failed;
            all_pass = false;
            out << "FAIL " << r.name;
            if (!r.detail.empty())
                out << ": " << r.detail;
            out << "\n";
        }
    }
    out << passed << " passed, " << failed << " failed, " << flags
        << " informational flags\n";
    return all_pass;
}

} // namespace autoflow
