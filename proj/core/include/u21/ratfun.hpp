#pragma once

#include <optional>
#include <vector>

#include "u21/field.hpp"

namespace u21 {

// Dense polynomial over Q in the variable X; coefficient of X^i at index i,
// no trailing zero coefficients, empty vector = 0.
using Poly = std::vector<Rational>;

void poly_trim(Poly& a);
bool poly_is_zero(const Poly& a);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rational& c);
// Euclidean division a = q*b + r with deg r < deg b.
void poly_divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem);
// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);
bool poly_divides(const Poly& d, const Poly& a);

inline Rational q_pow(long q, long e) {
  if (e >= 0) return Rational(pow_mpz(q, e));
  Rational r(1, pow_mpz(q, -e));
  r.canonicalize();
  return r;
}

// Rational function of X = q^(-2s) over Q, stored in the canonical form
//
//   X^shift * num(X) / den(X)
//
// with num, den coprime polynomials, num(0) != 0 (the unit monomial is pulled
// into shift) and den(0) = 1.  The zero function has num = 0, shift = 0,
// den = 1.  These functions carry Rankin-Selberg zeta values, L-factors and
// epsilon-factors; q is the residue field size, fixed per instance and needed
// for the substitution s -> 1 - s.
struct RationalFn {
  long q = 0;
  long shift = 0;
  Poly num;
  Poly den{Rational(1)};

  RationalFn() = default;
  RationalFn(long q_, long shift_, Poly num_, Poly den_);

  static RationalFn zero(long q) { return RationalFn(q, 0, {}, {Rational(1)}); }
  static RationalFn constant(long q, const Rational& c) {
    return RationalFn(q, 0, {c}, {Rational(1)});
  }
  static RationalFn one(long q) { return constant(q, 1); }
  // c * X^k
  static RationalFn monomial(long q, const Rational& c, long k) {
    return RationalFn(q, k, {c}, {Rational(1)});
  }
  // The Tate factor L(s, 1_E) = 1 / (1 - X) for the unramified quasicharacter.
  static RationalFn lfactor_one(long q) {
    return RationalFn(q, 0, {Rational(1)}, {Rational(1), Rational(-1)});
  }

  bool is_zero() const { return num.empty(); }

  RationalFn operator+(const RationalFn& o) const;
  RationalFn operator-(const RationalFn& o) const;
  RationalFn operator-() const;
  RationalFn operator*(const RationalFn& o) const;
  RationalFn operator/(const RationalFn& o) const;
  bool operator==(const RationalFn& o) const;
  bool operator!=(const RationalFn& o) const { return !(*this == o); }

  // Image under s -> 1 - s, i.e. X -> q^(-2) X^(-1).  An involution.
  RationalFn subst_one_minus_s() const;

  bool is_laurent_polynomial() const { return den.size() == 1; }

  // Power series coefficients of X^0 .. X^K.  Rejects functions with a pole
  // at X = 0 (negative canonical shift).
  std::vector<Rational> series_expand(long K) const;

  // If this = sign * q^n X^n for an integer n, return n and the sign.
  struct Monomial {
    long n;
    bool negative;
  };
  std::optional<Monomial> as_power_monomial() const;

  std::string str() const;       // X-notation
  std::string str_qs() const;    // with X spelled as q^(-2s)

 private:
  void canonicalize();
};

// Generator of the fractional ideal of the Laurent polynomial ring Q[X, X^-1]
// generated by the inputs, normalized so that numerator and denominator are
// coprime with constant terms 1 (unit monomials are discarded).  Standard
// L-factor shapes 1/P(X) come out literally as 1/P(X).
RationalFn gcd_generator(const std::vector<RationalFn>& fns);

}  // namespace u21
