#include <doctest.h>

#include "exact_phase.hpp"
#include "u21/field.hpp"
#include "u21/quadratic.hpp"
#include "u21/sampling.hpp"

using namespace u21;
using testing_exact::phased_equals;
using testing_exact::phased_zero;

namespace {

// Independent computation of the p-primary part of x: the unique c / p^k in
// [0, 1) with x - c / p^k p-integral, found by scanning all candidates.
Rational p_primary_part(const LocalField& F, const Rational& x) {
    auto v = F.val(x);
    if (!v || *v >= 0) return Rational(0);
    long k = -*v;
    mpz_class pk = pow_mpz(F.p, k);
    for (mpz_class c = 0; c < pk; ++c) {
        Rational t(c, pk);
        t.canonicalize();
        if (F.val_ge(x - t, 0)) return t;
    }
    FAIL("no p-primary part found");
    return Rational(0);
}

// Measure-normalized character sum oracle: average psi_E over p_E^i / p_E^M
// with M = max(i + 1, 0), rescaled by q_E^(i + 1 - M).  For i >= 0 every
// term is 1; below the conductor the full sum cancels.
bool character_sum_matches(const LocalField& F, long i) {
    long M = std::max(i + 1, 0L);
    long span = M - i;  // representatives p^i (a + b sqrt(eps)), 0 <= a, b < p^span
    long reps = 1;
    for (long s = 0; s < span; ++s) reps *= F.p;
    PhasedSum sum;
    for (long a = 0; a < reps; ++a) {
        for (long b = 0; b < reps; ++b) {
            QuadExtElem x(F, Rational(a) * F.pi_pow(i), Rational(b) * F.pi_pow(i));
            sum.add(Rational(1), psi_E(x));
        }
    }
    Rational scale = Rational(1);
    long e = i + 1 - M;
    mpz_class qe = mpz_class(F.p) * F.p;
    Rational qE(qe);
    for (long s = 0; s < -e; ++s) scale /= qE;
    for (long s = 0; s < e; ++s) scale *= qE;
    // sum * scale should equal character_sum(F, i).
    return phased_equals(sum, character_sum(F, i) / scale, F.p);
}

}  // namespace

TEST_SUITE("field") {
    TEST_CASE("odd prime detection") {
        CHECK(is_odd_prime(3));
        CHECK(is_odd_prime(5));
        CHECK(is_odd_prime(7));
        CHECK(is_odd_prime(97));
        CHECK_FALSE(is_odd_prime(1));
        CHECK_FALSE(is_odd_prime(2));
        CHECK_FALSE(is_odd_prime(9));
        CHECK_FALSE(is_odd_prime(91));  // 7 * 13
        CHECK_THROWS_AS(LocalField(4), std::invalid_argument);
    }

    TEST_CASE("smallest quadratic non-residue") {
        CHECK(LocalField(3).eps == 2);
        CHECK(LocalField(5).eps == 2);
        CHECK(LocalField(7).eps == 3);
        CHECK(LocalField(11).eps == 2);
        CHECK(LocalField(13).eps == 2);
        for (long p : {3L, 5L, 7L, 11L, 13L}) {
            LocalField F(p);
            // eps is not a square mod p, and nothing smaller fails to be one.
            std::vector<bool> is_square(p, false);
            for (long a = 0; a < p; ++a) is_square[(a * a) % p] = true;
            CHECK_FALSE(is_square[F.eps % p]);
            for (long k = 1; k < F.eps; ++k) CHECK(is_square[k % p]);
        }
    }

    TEST_CASE("valuation arithmetic") {
        LocalField F(3);
        CHECK_FALSE(F.val(Rational(0)).has_value());
        CHECK(*F.val(Rational(1)) == 0);
        CHECK(*F.val(Rational(18)) == 2);           // 2 * 3^2
        CHECK(*F.val(Rational(2, 27)) == -3);
        CHECK(*F.val(F.pi_pow(-5)) == -5);
        CHECK(F.pi_pow(3) * F.pi_pow(-3) == 1);
        Rng rng(11);
        for (int i = 0; i < 200; ++i) {
            Rational x = rng.rational_with_val(F, -4, 4);
            Rational y = rng.rational_with_val(F, -4, 4);
            CHECK(*F.val(x * y) == *F.val(x) + *F.val(y));
            if (x + y != 0) {
                long v = *F.val(x + y);
                CHECK(v >= std::min(*F.val(x), *F.val(y)));
                if (*F.val(x) != *F.val(y)) CHECK(v == std::min(*F.val(x), *F.val(y)));
            }
        }
    }

    TEST_CASE("additive character against the partial-fraction oracle") {
        for (long p : {3L, 5L}) {
            LocalField F(p);
            Rng rng(100 + p);
            for (int i = 0; i < 120; ++i) {
                Rational x = rng.rational_with_val(F, -4, 2);
                CHECK(psi_F(F, x).t == p_primary_part(F, x));
            }
            // Additivity and the conductor.
            for (int i = 0; i < 120; ++i) {
                Rational x = rng.rational_with_val(F, -4, 2);
                Rational y = rng.rational_with_val(F, -4, 2);
                CHECK(psi_F(F, x + y) == psi_F(F, x) + psi_F(F, y));
                CHECK(psi_F(F, x).is_trivial() == F.val_ge(x, 0));
            }
        }
    }

    TEST_CASE("phase exponents normalize mod 1") {
        PhaseExponent a(Rational(5, 3));
        CHECK(a.t == Rational(2, 3));
        CHECK(PhaseExponent(Rational(-1, 3)).t == Rational(2, 3));
        CHECK((a + PhaseExponent(Rational(1, 3))).is_trivial());
        CHECK(PhaseExponent(Rational(1, 2)).is_half());
        CHECK(PhaseExponent(Rational(1, 2)).is_rational_value());
        CHECK_FALSE(PhaseExponent(Rational(1, 3)).is_rational_value());
    }

    TEST_CASE("normalized character sums over shells") {
        for (long p : {3L, 5L}) {
            LocalField F(p);
            CHECK(character_sum(F, 0) == Rational(p * p));
            CHECK(character_sum(F, 2) == Rational(p * p));
            CHECK(character_sum(F, -1) == 0);
            CHECK(character_sum(F, -2) == 0);
            for (long i = -2; i <= 1; ++i) CHECK_MESSAGE(character_sum_matches(F, i), "i = ", i);
        }
    }

    TEST_CASE("exact root-of-unity cancellation") {
        LocalField F(3);
        PhasedSum s;
        for (long j = 0; j < 3; ++j) s.add(Rational(2), PhaseExponent(Rational(j, 3)));
        CHECK(phased_zero(s, 3));
        s.add(Rational(1, 7), PhaseExponent(Rational(1, 9)));
        CHECK_FALSE(phased_zero(s, 3));
        // Nested relation at level 9.
        PhasedSum t;
        for (long j = 0; j < 3; ++j) t.add(Rational(1), PhaseExponent(Rational(1 + 3 * j, 9)));
        CHECK(phased_zero(t, 3));
        t.add(Rational(-1), PhaseExponent(Rational(1, 2)));
        CHECK_FALSE(phased_zero(t, 3));
    }

    TEST_CASE("residues and canonical lifts") {
        LocalField F(3);
        CHECK(residue_of(F, Rational(7), 2) == 7);
        CHECK(residue_of(F, Rational(-1), 1) == 2);
        CHECK(residue_of(F, Rational(1, 2), 1) == 2);  // inverse of 2 mod 3
        CHECK_THROWS_AS(residue_of(F, Rational(1, 3), 1), std::invalid_argument);
        Rng rng(7);
        for (int i = 0; i < 100; ++i) {
            QuadExtElem x = rng.ext_with_val(F, rng.uniform(-2, 2));
            long lo = *x.val();
            QuadExtElem lift = canonical_lift(x, lo, 2);
            CHECK((x - lift).val_ge(lo + 2));
            ResiduePair digits = residue_pair(lift * F.pi_pow(-lo), 2);
            CHECK(digits.a >= 0);
            CHECK(digits.a < 9);
            CHECK(digits.b >= 0);
            CHECK(digits.b < 9);
            Rational xf = rng.rational_with_val(F, -2, 2);
            long lof = *F.val(xf);
            CHECK(F.val_ge(xf - canonical_lift_F(F, xf, lof, 3), lof + 3));
        }
    }

    TEST_CASE("finite quotient ring arithmetic") {
        LocalField F(5);
        ResidueElem x(F, 2, 7, 3), y(F, 2, 24, 22);
        CHECK((x + y) == ResidueElem(F, 2, 6, 0));
        CHECK((x - y) == ResidueElem(F, 2, -17, -19));
        // (7 + 3r)(24 + 22r) = 168 + 66*eps + (154 + 72) r, eps = 2.
        CHECK((x * y) == ResidueElem(F, 2, 168 + 66 * 2, 226));
        CHECK(x.conj() == ResidueElem(F, 2, 7, -3));
        CHECK((x * x.conj()).b == 0);
    }

    TEST_CASE("quadratic extension arithmetic") {
        LocalField F(3);
        QuadExtElem r = QuadExtElem::sqrt_eps(F);
        CHECK(r * r == QuadExtElem(F, F.eps));
        Rng rng(5);
        for (int i = 0; i < 100; ++i) {
            QuadExtElem x = rng.ext_with_val(F, rng.uniform(-2, 2));
            QuadExtElem y = rng.ext_with_val(F, rng.uniform(-2, 2));
            CHECK((x * y).conj() == x.conj() * y.conj());
            CHECK(x * x.inverse() == QuadExtElem::one(F));
            CHECK(x.norm() == (x * x.conj()).a);
            CHECK((x * x.conj()).b == 0);
            CHECK(*(x * y).val() == *x.val() + *y.val());
            CHECK(psi_E(x) == psi_F(F, x.trace()));
        }
    }

    TEST_CASE("Hilbert 90 preimages") {
        for (long p : {3L, 5L}) {
            LocalField F(p);
            Rng rng(40 + p);
            for (int i = 0; i < 60; ++i) {
                QuadExtElem delta = rng.norm_one(F, rng.uniform(0, 2));
                QuadExtElem b = hilbert90(delta);
                CHECK(b / b.conj() == delta);
            }
            CHECK(hilbert90(-QuadExtElem::one(F)) == QuadExtElem::sqrt_eps(F));
            CHECK_THROWS_AS(hilbert90(QuadExtElem(F, 2)), std::invalid_argument);
        }
    }
}
