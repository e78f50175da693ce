#include <doctest.h>

#include "u21/newform.hpp"
#include "u21/sampling.hpp"

using namespace u21;

TEST_SUITE("newform") {
    TEST_CASE("parameter validation") {
        CHECK_THROWS_AS(validate({4, 2, 0, 0}), std::invalid_argument);
        CHECK_THROWS_AS(validate({3, 1, 0, 0}), std::invalid_argument);
        CHECK_THROWS_AS(validate({3, 2, 2, 0}), std::invalid_argument);
        CHECK_THROWS_AS(validate({3, 1, 1, 0}), std::invalid_argument);
        CHECK_NOTHROW(validate({3, 2, 0, 0}));
        CHECK_NOTHROW(validate({3, 2, 1, Rational(-9)}));
        CHECK_NOTHROW(validate({7, 5, 1, Rational(1, 2)}));
    }

    TEST_CASE("coefficient recursion") {
        NewformParams P{3, 2, 0, Rational(1)};
        auto c = coefficient_seq(P, 3);
        REQUIRE(c.size() == 4);
        CHECK(c[0] == 1);
        CHECK(c[1] == Rational(1, 81));
        CHECK(c[2] == Rational(10, 6561));
        CHECK(c[3] == Rational(100, 531441));
        CHECK(check_hecke_relation(P, 8));
        Rng rng(13);
        for (int i = 0; i < 40; ++i) {
            NewformParams Q{5, 3, 0, Rational(rng.uniform(-30, 30), rng.uniform(1, 4))};
            Q.lambda.canonicalize();
            CHECK(check_hecke_relation(Q, 10));
        }
    }

    TEST_CASE("series matches its closed form") {
        NewformParams P{3, 2, 0, Rational(1)};
        auto s = zeta_W_series(P, 2).series_expand(2);
        CHECK(s[0] == 1);
        CHECK(s[1] == Rational(1, 9));
        CHECK(s[2] == Rational(10, 81));
        for (long q : {3L, 5L, 7L}) {
            for (const Rational& lambda :
                 {Rational(0), Rational(-q * q), Rational(1), Rational(-1), Rational(q * q)}) {
                NewformParams Q{q, 2, 0, lambda};
                RationalFn closed = zeta_W_closed(Q);
                RationalFn series = zeta_W_series(Q, 12);
                CHECK(closed.series_expand(12) == series.series_expand(12));
            }
        }
        // lambda = -q^2 collapses the series to its first two terms.
        CHECK(zeta_W_closed({3, 2, 0, Rational(-9)}) == RationalFn(3, 0, {1, -1}, {1}));
    }

    TEST_CASE("accepted eigenvalues and their factors") {
        for (long q : {3L, 5L}) {
            for (long N = 2; N <= 5; ++N) {
                NewformClassification zero = classify({q, N, 0, Rational(0)});
                CHECK(zero.accepted);
                CHECK(zero.L == RationalFn::lfactor_one(q));
                CHECK(zero.Z_W == RationalFn::one(q));  // (1-X)/(1-X) collapses
                CHECK(zeta_W_Phi({q, N, 0, Rational(0)}) == zero.L);
                CHECK(zero.epsilon == RationalFn::monomial(q, q_pow(q, N), N));
                REQUIRE(zero.epsilon_monomial.has_value());
                CHECK(zero.epsilon_monomial->n == N);
                CHECK_FALSE(zero.epsilon_monomial->negative);
                CHECK_FALSE(zero.swapped_is_monomial);
                CHECK(zero.epsilon * zero.epsilon.subst_one_minus_s() == RationalFn::one(q));

                NewformClassification st = classify({q, N, 0, Rational(-q * q)});
                CHECK(st.accepted);
                CHECK(st.L == RationalFn::one(q));
                CHECK(st.Z_W == RationalFn(q, 0, {1, -1}, {1}));
                CHECK(zeta_W_Phi({q, N, 0, Rational(-q * q)}) == st.L);
                CHECK(st.epsilon == RationalFn::monomial(q, q_pow(q, N), N));
                CHECK_FALSE(st.swapped_is_monomial);
                CHECK(st.epsilon * st.epsilon.subst_one_minus_s() == RationalFn::one(q));
            }
        }
    }

    TEST_CASE("everything else trips the Laurent dichotomy") {
        Rng rng(77);
        for (long q : {3L, 5L}) {
            for (int i = 0; i < 25; ++i) {
                Rational lambda(rng.nonzero(3 * q * q), rng.uniform(1, 3));
                lambda.canonicalize();
                if (lambda == 0 || lambda == Rational(-q * q)) lambda += Rational(1, 7);
                NewformClassification cls = classify({q, 2, 0, lambda});
                CHECK_FALSE(cls.accepted);
                CHECK_FALSE(cls.Z_W.is_laurent_polynomial());
                CHECK_FALSE(cls.note.empty());
            }
        }
        // The Laurent property is exactly the two accepted points.
        CHECK(classify({3, 2, 0, Rational(0)}).Z_W.is_laurent_polynomial());
        CHECK(classify({3, 2, 0, Rational(-9)}).Z_W.is_laurent_polynomial());
        CHECK_FALSE(classify({3, 2, 0, Rational(9)}).Z_W.is_laurent_polynomial());
    }

    TEST_CASE("functional equation bookkeeping") {
        for (const Rational& lambda : {Rational(0), Rational(-9), Rational(4)}) {
            NewformParams P{3, 3, 0, lambda};
            NewformClassification cls = classify(P);
            CHECK(cls.gamma == functional_lhs(P) / zeta_W_Phi(P));
            CHECK(cls.epsilon == cls.gamma * cls.L / cls.L.subst_one_minus_s());
        }
        // Larger level only moves the monomial exponent.
        NewformClassification c5 = classify({3, 5, 0, Rational(0)});
        REQUIRE(c5.epsilon_monomial.has_value());
        CHECK(c5.epsilon_monomial->n == 5);
    }
}
