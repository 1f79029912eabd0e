#include <doctest.h>

#include "autoflow/rings.hpp"
#include "autoflow/sampling.hpp"

using namespace autoflow;

TEST_CASE("ring spec validation") {
    CHECK_THROWS_AS(RingSpec::quad_real(4), InvalidSpec);
    CHECK_THROWS_AS(RingSpec::quad_real(12), InvalidSpec);
    CHECK_THROWS_AS(RingSpec::quad_real(1), InvalidSpec);
    CHECK_THROWS_AS(RingSpec::roots_of_unity(0), InvalidSpec);
    CHECK_THROWS_AS(RingSpec::roots_of_unity(-3), InvalidSpec);
    CHECK_NOTHROW(RingSpec::quad_real(2));
    CHECK_NOTHROW(RingSpec::quad_real(10));

    // fraction normalization
    CHECK(*RingSpec::fraction_of(RingSpec::integers()) == *RingSpec::rationals());
    CHECK(*RingSpec::fraction_of(RingSpec::rationals()) == *RingSpec::rationals());
    auto fg = RingSpec::fraction_of(RingSpec::gaussian());
    CHECK(*RingSpec::fraction_of(fg) == *fg);
    CHECK_THROWS_AS(
        RingSpec::fraction_of(RingSpec::series_over(RingSpec::rationals(), 3)),
        InvalidSpec);
}

TEST_CASE("ring spec text round trip") {
    for (const char *name : {"z", "q", "gauss", "eisen", "quad2", "quad5", "zeta8",
                             "zetaall", "frac(gauss)", "series(q,6)",
                             "series(frac(eisen),4)"}) {
        auto spec = RingSpec::parse(name);
        CHECK(spec->to_string() == name);
        CHECK(*RingSpec::parse(spec->to_string()) == *spec);
    }
    CHECK_THROWS_AS(RingSpec::parse("quaternions"), ParseError);
}

TEST_CASE("quadratic arithmetic identities") {
    Ring g = Ring::make("gauss");
    // i * i = -1
    CHECK(g.eq(g.mul(g.parse("1i"), g.parse("1i")), g.from_int(-1)));
    // i * (-i) = 1
    CHECK(g.is_one(g.mul(g.parse("1i"), g.parse("-1i"))));

    Ring e = Ring::make("eisen");
    Value w = e.parse("1w");
    CHECK(e.eq(e.mul(w, w), e.parse("-1-1w"))); // w^2 = -1 - w
    CHECK(e.is_one(e.mul(w, e.mul(w, w))));     // w^3 = 1
    CHECK(e.is_one(e.mul(w, e.parse("-1-1w")))); // w * w^2 = 1

    Ring s2 = Ring::make("quad2");
    CHECK(s2.is_one(s2.mul(s2.parse("1+1r"), s2.parse("-1+1r"))));

    Ring s5 = Ring::make("quad5");
    Value phi = s5.parse("1r");
    CHECK(s5.eq(s5.mul(phi, phi), s5.parse("1+1r"))); // phi^2 = 1 + phi
}

TEST_CASE("units and inverses") {
    Ring z = Ring::make("z");
    CHECK(!z.try_invert(z.from_int(2)).has_value());
    CHECK(z.eq(*z.try_invert(z.from_int(-1)), z.from_int(-1)));
    CHECK_THROWS_AS(z.try_invert(z.zero()), DivisionByZero);

    Ring g = Ring::make("gauss");
    CHECK(g.eq(*g.try_invert(g.parse("1i")), g.parse("-1i")));
    CHECK(!g.try_invert(g.parse("1+1i")).has_value()); // norm 2

    Ring s2 = Ring::make("quad2");
    CHECK(s2.eq(*s2.try_invert(s2.parse("1+1r")), s2.parse("-1+1r")));

    Ring q = Ring::make("q");
    CHECK(q.eq(*q.try_invert(q.parse("3/4")), q.parse("4/3")));
}

TEST_CASE("exact division") {
    Ring z = Ring::make("z");
    CHECK(z.eq(*z.try_divide(z.from_int(12), z.from_int(-4)), z.from_int(-3)));
    CHECK(!z.try_divide(z.from_int(7), z.from_int(2)).has_value());
    CHECK_THROWS_AS(z.try_divide(z.one(), z.zero()), DivisionByZero);

    Ring g = Ring::make("gauss");
    // (1+i)(1-i) = 2; so 2 / (1+i) = 1-i exactly
    CHECK(g.eq(*g.try_divide(g.from_int(2), g.parse("1+1i")), g.parse("1-1i")));
    CHECK(!g.try_divide(g.from_int(3), g.parse("1+1i")).has_value());
}

TEST_CASE("element text round trip") {
    Rng rng(42);
    for (const char *name :
         {"z", "q", "gauss", "eisen", "quad2", "quad5", "frac(gauss)",
          "frac(quad3)", "zeta12", "series(q,3)"}) {
        Ring R = Ring::make(name);
        for (int i = 0; i < 50; ++i) {
            Value v = random_element(R, rng);
            CAPTURE(name);
            CAPTURE(R.render(v));
            CHECK(R.eq(R.parse(R.render(v)), v));
        }
    }
    Ring g = Ring::make("gauss");
    CHECK(g.render(g.parse("2+3i")) == "2+3i");
    CHECK(g.render(g.parse("-1i")) == "-1i");
    Ring e = Ring::make("eisen");
    CHECK(e.render(e.parse("1-2w")) == "1-2w");
    Ring s = Ring::make("quad2");
    CHECK(s.render(s.parse("4+1r")) == "4+1r");
    Ring roots = Ring::make("zetaall");
    CHECK(roots.render(roots.parse("zeta(5/12)")) == "zeta(5/12)");
    CHECK(roots.render(roots.parse("zeta(17/12)")) == "zeta(5/12)"); // mod 1
}

TEST_CASE("roots of unity are multiplicative with partial addition") {
    Ring r = Ring::make("zetaall");
    Value a = r.parse("zeta(1/3)");
    Value b = r.parse("zeta(1/2)");
    CHECK(r.eq(r.mul(a, b), r.parse("zeta(5/6)")));
    CHECK(r.is_one(r.mul(a, r.parse("zeta(2/3)"))));
    CHECK(r.eq(r.add(a, r.zero()), a));
    CHECK(r.is_zero(r.add(a, r.neg(a))));
    CHECK_THROWS_AS(r.add(a, b), Unsupported);
    CHECK(r.eq(r.from_int(-1), r.parse("zeta(1/2)")));
    CHECK_THROWS_AS(r.from_int(2), Unsupported);
}

TEST_CASE("series ring tower arithmetic") {
    Ring S = Ring::make("series(q,3)");
    Ring q = S.series_base();
    // x = [0,1,0,0] behaves like the EGF of X: x*x = [0,0,2,0]
    Value x = S.parse("[0,1,0,0]");
    Value xx = S.mul(x, x);
    CHECK(S.eq(xx, S.parse("[0,0,2,0]")));
    // constant term units invert
    Value u = S.parse("[1,1,0,0]");
    Value inv = *S.try_invert(u);
    CHECK(S.is_one(S.mul(u, inv)));
    CHECK(!S.try_invert(x).has_value());
    (void)q;
}

TEST_CASE("unit group models") {
    Ring z = Ring::make("z");
    auto mz = unit_group_model(z);
    CHECK(mz.torsion_order == 2);
    CHECK(mz.free_rank == 0);

    Ring g = Ring::make("gauss");
    auto mg = unit_group_model(g);
    CHECK(mg.torsion_order == 4);
    CHECK(g.eq(mg.torsion_generator, g.parse("1i")));

    Ring e = Ring::make("eisen");
    auto me = unit_group_model(e);
    CHECK(me.torsion_order == 6);
    CHECK(torsion_units(e).size() == 6);

    Ring s2 = Ring::make("quad2");
    auto ms = unit_group_model(s2);
    CHECK(ms.free_rank == 1);
    CHECK(s2.eq(*ms.fundamental_unit, s2.parse("1+1r")));
    CHECK(s2.is_unit(*ms.fundamental_unit));

    Ring s3 = Ring::make("quad3");
    CHECK(s3.eq(*unit_group_model(s3).fundamental_unit, s3.parse("2+1r")));
    Ring s5 = Ring::make("quad5");
    CHECK(s5.eq(*unit_group_model(s5).fundamental_unit, s5.parse("1r")));

    CHECK_THROWS_AS(unit_group_model(Ring::make("q")), Unsupported);
    CHECK_THROWS_AS(unit_group_model(Ring::make("quad7")), Unsupported);
}

TEST_CASE("complex embedding") {
    Ring e = Ring::make("eisen");
    auto w = e.embed(e.parse("1w"));
    CHECK(w.real() == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(w.imag() == doctest::Approx(0.8660254037844386).epsilon(1e-12));

    Ring q = Ring::make("q");
    CHECK(q.embed(q.parse("3/2")).real() == doctest::Approx(1.5));

    Ring s2 = Ring::make("quad2");
    CHECK(s2.embed(s2.parse("1+1r")).real() == doctest::Approx(2.4142135623730951));

    CHECK_THROWS_AS(Ring::make("series(q,2)").embed(Ring::make("series(q,2)").zero()),
                    NotEmbeddable);
}

TEST_CASE("fraction lift and demotion") {
    Ring g = Ring::make("gauss");
    Ring f = g.fraction_ring();
    Value x = g.parse("3+2i");
    Value lx = g.lift_to_fraction(x);
    CHECK(f.render(lx) == "3+2i");
    auto back = f.try_to_base(lx, g);
    REQUIRE(back.has_value());
    CHECK(g.eq(*back, x));
    Value half = f.parse("1/2+2i");
    CHECK(!f.try_to_base(half, g).has_value());
}

TEST_CASE("ring mismatch is rejected") {
    Ring z = Ring::make("z");
    Ring q = Ring::make("q");
    CHECK_THROWS_AS(z.add(z.one(), q.one()), RingMismatch);
}
