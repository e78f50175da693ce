#include <doctest.h>

#include "exact_phase.hpp"
#include "u21/lattice.hpp"
#include "u21/sampling.hpp"

using namespace u21;
using testing_exact::phased_zero;

namespace {

// Finite Riemann sum for hat f(u, v) = integral of f(x, y) psi(v x - u y)
// dx dy (the transform's target pair is (u, v); its second coordinate pairs
// with the source's first).  The integrand is locally constant, so summing
// cell representatives at a depth past every support scale, frequency and
// kernel valuation is exact.
PhasedSum riemann_hat(const LatticeFn& f, const Rational& u, const Rational& v) {
    const LocalField& F = f.F;
    long M = 1, L = 1;
    auto bump = [&](std::optional<long> val, long floor_to) {
        return std::max(floor_to, val ? -*val : 0L);
    };
    for (const auto& t : f.terms) {
        M = std::max({M, bump(F.val(t.c), -t.a), -t.a, bump(F.val(t.d), -t.b), -t.b});
        L = std::max({L, t.a, t.b, bump(F.val(t.alpha), 0), bump(F.val(t.beta), 0)});
    }
    L = std::max({L, bump(F.val(u), 0), bump(F.val(v), 0)});
    long cells = 1;
    for (long i = 0; i < M + L; ++i) cells *= F.p;
    Rational cell_vol = F.pi_pow(-2 * L);  // additive volume of a p^L x p^L cell
    PhasedSum acc;
    for (long i = 0; i < cells; ++i) {
        Rational x = Rational(i) * F.pi_pow(-M);
        for (long j = 0; j < cells; ++j) {
            Rational y = Rational(j) * F.pi_pow(-M);
            PhasedSum val = f.evaluate(x, y);
            PhaseExponent kernel = psi_F(F, v * x - u * y);
            for (const auto& [r, t] : val.parts) acc.add(r * cell_vol, t + kernel);
        }
    }
    return acc;
}

bool sums_equal(const PhasedSum& a, const PhasedSum& b, long p) {
    PhasedSum d = a;
    for (const auto& [r, t] : b.parts) d.add(-r, t);
    return phased_zero(d, p);
}

}  // namespace

TEST_SUITE("lattice") {
    TEST_CASE("indicator evaluation") {
        LocalField F(3);
        LatticeFn f = LatticeFn::phi_n(F, 2);
        Rational one(1);
        CHECK(f.evaluate(Rational(0), Rational(0)).rational_value(one));
        CHECK(one == 1);
        CHECK(f.evaluate(Rational(9), Rational(1, 3)).is_zero());   // y leaves o
        CHECK(f.evaluate(Rational(3), Rational(5)).is_zero());      // x at val 1 < 2
        CHECK_FALSE(f.evaluate(Rational(18), Rational(5)).is_zero());
        LatticeFn box = LatticeFn::box(F, Rational(1, 3), 1, Rational(2), 0);
        CHECK_FALSE(box.evaluate(Rational(1, 3), Rational(5)).is_zero());
        CHECK(box.evaluate(Rational(2, 3), Rational(5)).is_zero());
        Rational got;
        LatticeFn sc = box.scaled(Rational(7, 2), PhaseExponent(Rational(1, 2)));
        CHECK(sc.evaluate(Rational(1, 3), Rational(5)).rational_value(got));
        CHECK(got == Rational(-7, 2));
    }

    TEST_CASE("transform closed form on the standard pair") {
        for (long p : {3L, 5L}) {
            LocalField F(p);
            for (long n = 0; n <= 3; ++n) {
                LatticeFn hat = fourier_hat(LatticeFn::phi_n(F, n));
                LatticeFn expected =
                    LatticeFn::box(F, Rational(0), 0, Rational(0), -n).scaled(F.pi_pow(-n));
                CHECK(equal_pointwise(hat, expected));
            }
        }
    }

    TEST_CASE("transform against the Riemann sum oracle") {
        for (long p : {3L, 5L}) {
            LocalField F(p);
            Rng rng(300 + p);
            for (int trial = 0; trial < 8; ++trial) {
                LatticeFn f = random_lattice_fn(F, rng, true);
                LatticeFn hat = fourier_hat(f);
                for (int pt = 0; pt < 6; ++pt) {
                    Rational u = rng.rational_with_val(F, -1, 1);
                    Rational v = rng.rational_with_val(F, -1, 1);
                    if (rng.coin()) u = 0;
                    if (rng.coin()) v = 0;
                    CHECK_MESSAGE(sums_equal(hat.evaluate(u, v), riemann_hat(f, u, v), p),
                                  "trial ", trial, " at point ", pt);
                }
            }
        }
    }

    TEST_CASE("transform is an involution up to nothing at all") {
        for (long p : {3L, 5L}) {
            LocalField F(p);
            Rng rng(400 + p);
            for (int trial = 0; trial < 60; ++trial) {
                LatticeFn f = random_lattice_fn(F, rng, true);
                CHECK(equal_pointwise(fourier_hat(fourier_hat(f)), f));
            }
        }
    }

    TEST_CASE("companion transform differs by reflection") {
        for (long p : {3L, 5L}) {
            LocalField F(p);
            Rng rng(500 + p);
            for (int trial = 0; trial < 60; ++trial) {
                LatticeFn f = random_lattice_fn(F, rng, true);
                LatticeFn reflected = gl2_act(Mat2Q(-1, 0, 0, 1), fourier_star(f));
                CHECK(equal_pointwise(reflected, fourier_hat(f)));
            }
        }
    }

    TEST_CASE("monomial action is right translation of the argument") {
        LocalField F(3);
        Rng rng(61);
        for (int trial = 0; trial < 40; ++trial) {
            LatticeFn f = random_lattice_fn(F, rng, true);
            Rational m1 = rng.rational_with_val(F, -1, 1);
            Rational m2 = rng.rational_with_val(F, -1, 1);
            Mat2Q g = rng.coin() ? Mat2Q(m1, 0, 0, m2) : Mat2Q(0, m1, m2, 0);
            LatticeFn fg = gl2_act(g, f);
            for (int pt = 0; pt < 8; ++pt) {
                Rational x = rng.rational_with_val(F, -2, 1);
                Rational y = rng.rational_with_val(F, -2, 1);
                Rational xs = x * g.at(0, 0) + y * g.at(1, 0);
                Rational ys = x * g.at(0, 1) + y * g.at(1, 1);
                CHECK(sums_equal(fg.evaluate(x, y), f.evaluate(xs, ys), 3));
            }
        }
        CHECK_THROWS_AS(gl2_act(Mat2Q(1, 1, 0, 1), LatticeFn::phi_n(F, 0)),
                        std::invalid_argument);
    }

    TEST_CASE("pointwise equality testing is honest") {
        LocalField F(3);
        LatticeFn a = LatticeFn::phi_n(F, 0);
        CHECK(equal_pointwise(a, a));
        CHECK_FALSE(equal_pointwise(a, LatticeFn::phi_n(F, 1)));
        CHECK_FALSE(equal_pointwise(a, a.scaled(Rational(2))));
        CHECK_FALSE(equal_pointwise(a, a.scaled(Rational(1), PhaseExponent(Rational(1, 3)))));
        // The same function written as a sum over residue translates.
        LatticeFn split(F);
        for (long j = 0; j < 3; ++j) {
            split.terms.push_back(
                {Rational(1), PhaseExponent(), 0, 0, Rational(j), 0, 1, 0});
        }
        CHECK(equal_pointwise(a, split));
        CHECK(equal_pointwise(split, a));
    }
}
