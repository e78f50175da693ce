#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace u21 {

using Rational = mpq_class;

// Internal invariant check; failures indicate a bug rather than bad user input.
inline void check(bool cond, const char* msg) {
  if (!cond) throw std::logic_error(std::string("u21 internal error: ") + msg);
}

// Precondition check on user-supplied data.
inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument("u21: " + msg);
}

inline bool is_odd_prime(long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

inline mpz_class pow_mpz(long base, long e) {
  check(e >= 0, "pow_mpz wants e >= 0");
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(e));
  return r;
}

// The base field F is Q equipped with the p-adic valuation for an odd prime p,
// with uniformizer p and residue field of size q = p.  The quadratic extension
// E = F(sqrt(eps)) is unramified, where eps is the smallest positive
// quadratic non-residue mod p; its residue field has size q_E = p^2.
struct LocalField {
  long p = 0;
  long eps = 0;

  LocalField() = default;
  explicit LocalField(long p_) : p(p_) {
    require(is_odd_prime(p_), "p must be an odd prime, got " + std::to_string(p_));
    eps = smallest_nonresidue(p_);
  }

  long q() const { return p; }
  mpz_class q_E() const { return mpz_class(p) * p; }

  bool operator==(const LocalField& o) const { return p == o.p; }
  bool operator!=(const LocalField& o) const { return p != o.p; }

  static long smallest_nonresidue(long p) {
    for (long k = 2; k < p; ++k) {
      // Euler criterion: k^((p-1)/2) = -1 mod p iff k is a non-residue.
      long r = 1, b = k % p, e = (p - 1) / 2;
      while (e > 0) {
        if (e & 1) r = (r * b) % p;
        b = (b * b) % p;
        e >>= 1;
      }
      if (r == p - 1) return k;
    }
    throw std::logic_error("no quadratic non-residue found");
  }

  // p-adic valuation of a nonzero rational; nullopt encodes val(0) = +infinity.
  std::optional<long> val(const Rational& x) const {
    if (x == 0) return std::nullopt;
    mpz_class t, pz(p);
    long vn = static_cast<long>(
        mpz_remove(t.get_mpz_t(), x.get_num().get_mpz_t(), pz.get_mpz_t()));
    long vd = static_cast<long>(
        mpz_remove(t.get_mpz_t(), x.get_den().get_mpz_t(), pz.get_mpz_t()));
    return vn - vd;
  }

  bool val_ge(const Rational& x, long m) const {
    auto v = val(x);
    return !v || *v >= m;
  }

  // p^k as a rational, k of either sign.
  Rational pi_pow(long k) const {
    if (k >= 0) return Rational(pow_mpz(p, k));
    Rational r(1, pow_mpz(p, -k));
    r.canonicalize();
    return r;
  }
};

// An element e(t) = exp(2 pi i t) of the unit circle, stored as the exact
// rational exponent t mod 1.  All phases in this library have p-power
// denominators, so sums of phases can be tested for vanishing exactly in the
// common cases (see PhasedSum in lattice.hpp).
struct PhaseExponent {
  Rational t;  // normalized to 0 <= t < 1

  PhaseExponent() : t(0) {}
  explicit PhaseExponent(const Rational& x) : t(x) { normalize(); }

  void normalize() {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
    t -= Rational(fl);
  }

  PhaseExponent operator+(const PhaseExponent& o) const { return PhaseExponent(t + o.t); }
  PhaseExponent operator-() const { return PhaseExponent(-t); }
  PhaseExponent operator-(const PhaseExponent& o) const { return PhaseExponent(t - o.t); }
  bool operator==(const PhaseExponent& o) const { return t == o.t; }
  bool operator<(const PhaseExponent& o) const { return t < o.t; }

  bool is_trivial() const { return t == 0; }
  bool is_half() const { return t == Rational(1, 2); }
  // e(0) = 1 and e(1/2) = -1 are the only rational values of e(t).
  bool is_rational_value() const { return is_trivial() || is_half(); }

  std::complex<long double> to_complex() const {
    long double x = 2.0L * 3.141592653589793238462643383279502884L * t.get_d();
    return {std::cos(x), std::sin(x)};
  }
};

// psi_F(x) = e(t) where t is the p-primary part of the partial fraction
// decomposition of x: the unique t = c/p^k in [0,1) with x - t integral at p.
// psi_F has conductor o_F = Z_(p): it is trivial exactly on val >= 0.
inline PhaseExponent psi_F(const LocalField& F, const Rational& x) {
  if (x == 0) return PhaseExponent();
  mpz_class den = x.get_den(), num = x.get_num();
  mpz_class dprime, pz(F.p);
  long k = static_cast<long>(
      mpz_remove(dprime.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()));
  if (k == 0) return PhaseExponent();
  mpz_class pk = pow_mpz(F.p, k), inv;
  int ok = mpz_invert(inv.get_mpz_t(), dprime.get_mpz_t(), pk.get_mpz_t());
  check(ok != 0, "psi_F: denominator not invertible");
  mpz_class c = (num * inv) % pk;
  if (c < 0) c += pk;
  Rational t(c, pk);
  t.canonicalize();
  return PhaseExponent(t);
}

// Normalized character sum over p_E^i / p_E^(i+1): equals q_E = q^2 when
// psi_E restricted to p_E^i is trivial (i >= 0, conductor o_E) and 0
// otherwise.  For i <= -2 this is the measure-normalized integral value; the
// naive sum over coset representatives is not well defined there.
inline Rational character_sum(const LocalField& F, long i) {
  if (i >= 0) return Rational(mpz_class(F.p) * F.p);
  return Rational(0);
}

// Element of the finite quotient ring o_E / p_E^m = (Z/p^m)[sqrt(eps)],
// stored as a + b sqrt(eps) with 0 <= a, b < p^m.
struct ResidueElem {
  long p = 0, eps = 0, m = 0;
  long pm = 1;  // p^m
  long a = 0, b = 0;

  ResidueElem() = default;
  ResidueElem(const LocalField& F, long m_, long a_, long b_)
      : p(F.p), eps(F.eps), m(m_) {
    require(m_ >= 0 && m_ <= 18, "residue precision out of range");
    pm = 1;
    for (long i = 0; i < m_; ++i) {
      check(pm <= (1L << 60) / p, "residue modulus overflow");
      pm *= p;
    }
    a = mod(a_);
    b = mod(b_);
  }

  long mod(long x) const {
    long r = x % pm;
    return r < 0 ? r + pm : r;
  }

  ResidueElem with(long a_, long b_) const {
    ResidueElem r = *this;
    r.a = r.mod(a_);
    r.b = r.mod(b_);
    return r;
  }

  ResidueElem operator+(const ResidueElem& o) const {
    check(pm == o.pm && eps == o.eps, "residue ring mismatch");
    return with(a + o.a, b + o.b);
  }
  ResidueElem operator-(const ResidueElem& o) const {
    check(pm == o.pm && eps == o.eps, "residue ring mismatch");
    return with(a - o.a, b - o.b);
  }
  ResidueElem operator*(const ResidueElem& o) const {
    check(pm == o.pm && eps == o.eps, "residue ring mismatch");
    // Work in mpz to avoid overflow for large moduli.
    mpz_class A(a), B(b), C(o.a), D(o.b), M(pm);
    mpz_class ra = (A * C + mpz_class(eps) * B * D) % M;
    mpz_class rb = (A * D + B * C) % M;
    return with(ra.get_si(), rb.get_si());
  }
  ResidueElem conj() const { return with(a, -b); }
  bool operator==(const ResidueElem& o) const {
    return pm == o.pm && eps == o.eps && a == o.a && b == o.b;
  }
};

// Image of a p-integral rational in Z/p^m.
inline long residue_of(const LocalField& F, const Rational& x, long m) {
  require(F.val_ge(x, 0), "residue_of wants a p-integral rational");
  mpz_class pm = pow_mpz(F.p, m), inv;
  int ok = mpz_invert(inv.get_mpz_t(), x.get_den().get_mpz_t(), pm.get_mpz_t());
  check(ok != 0, "residue_of: denominator not invertible");
  mpz_class c = (x.get_num() * inv) % pm;
  if (c < 0) c += pm;
  check(mpz_fits_slong_p(c.get_mpz_t()) != 0, "residue does not fit a long");
  return c.get_si();
}

}  // namespace u21
