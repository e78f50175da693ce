#pragma once

#include <sstream>

#include "u21/field.hpp"

namespace u21 {

// Element a + b sqrt(eps) of the unramified quadratic extension E = F(sqrt(eps)).
// {1, sqrt(eps)} is an integral basis, the uniformizer of E is the one of F,
// and val_E(a + b sqrt(eps)) = min(val_F(a), val_F(b)).
struct QuadExtElem {
  LocalField F;
  Rational a, b;

  QuadExtElem() = default;
  QuadExtElem(const LocalField& F_, const Rational& a_, const Rational& b_ = Rational(0))
      : F(F_), a(a_), b(b_) {}

  static QuadExtElem zero(const LocalField& F) { return {F, 0, 0}; }
  static QuadExtElem one(const LocalField& F) { return {F, 1, 0}; }
  static QuadExtElem sqrt_eps(const LocalField& F) { return {F, 0, 1}; }
  static QuadExtElem pi_pow(const LocalField& F, long k) { return {F, F.pi_pow(k), 0}; }

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_in_F() const { return b == 0; }

  QuadExtElem operator+(const QuadExtElem& o) const {
    check(F == o.F, "field mismatch");
    return {F, a + o.a, b + o.b};
  }
  QuadExtElem operator-(const QuadExtElem& o) const {
    check(F == o.F, "field mismatch");
    return {F, a - o.a, b - o.b};
  }
  QuadExtElem operator-() const { return {F, -a, -b}; }
  QuadExtElem operator*(const QuadExtElem& o) const {
    check(F == o.F, "field mismatch");
    return {F, a * o.a + Rational(F.eps) * b * o.b, a * o.b + b * o.a};
  }
  QuadExtElem operator*(const Rational& r) const { return {F, a * r, b * r}; }

  // Galois conjugate a - b sqrt(eps).
  QuadExtElem conj() const { return {F, a, -b}; }
  Rational norm() const { return a * a - Rational(F.eps) * b * b; }
  Rational trace() const { return 2 * a; }

  QuadExtElem inverse() const {
    require(!is_zero(), "division by zero in E");
    Rational n = norm();
    check(n != 0, "norm of nonzero element vanished");
    return {F, a / n, -b / n};
  }
  QuadExtElem operator/(const QuadExtElem& o) const { return *this * o.inverse(); }

  bool operator==(const QuadExtElem& o) const { return F == o.F && a == o.a && b == o.b; }
  bool operator!=(const QuadExtElem& o) const { return !(*this == o); }

  // val_E extends val_F; nullopt encodes val(0) = +infinity.
  std::optional<long> val() const {
    auto va = F.val(a), vb = F.val(b);
    if (!va) return vb;
    if (!vb) return va;
    return std::min(*va, *vb);
  }
  bool val_ge(long m) const {
    auto v = val();
    return !v || *v >= m;
  }
  bool is_unit() const {
    auto v = val();
    return v && *v == 0;
  }
  bool has_norm_one() const { return norm() == 1; }

  std::string str() const {
    std::ostringstream os;
    if (b == 0) {
      os << a;
    } else {
      os << a << (b < 0 ? " - " : " + ") << abs(b) << "*r" << F.eps;
    }
    return os.str();
  }
};

inline QuadExtElem operator*(const Rational& r, const QuadExtElem& x) { return x * r; }

// psi_E = psi_F composed with the trace; its conductor is o_E.
inline PhaseExponent psi_E(const QuadExtElem& x) { return psi_F(x.F, x.trace()); }

// Hilbert 90: given delta in E^1 (norm one), produce b with b / conj(b) = delta.
// The solution is unique up to F^x; we canonicalize by scaling the generic
// choice b = 1 + delta so that its F-part is 1, and use sqrt(eps) for
// delta = -1 (the one norm-one element with 1 + delta degenerate).
inline QuadExtElem hilbert90(const QuadExtElem& delta) {
  require(delta.has_norm_one(), "hilbert90 wants a norm-one element");
  const LocalField& F = delta.F;
  if (delta == -QuadExtElem::one(F)) return QuadExtElem::sqrt_eps(F);
  QuadExtElem b0 = QuadExtElem::one(F) + delta;
  check(b0.a != 0, "1 + delta has zero F-part only for delta = -1");
  QuadExtElem b(F, 1, b0.b / b0.a);
  check(b / b.conj() == delta, "hilbert90 postcondition failed");
  return b;
}

// Canonical coordinates of an o_E-integral element modulo p_E^m,
// as the pair (a mod p^m, b mod p^m) with entries in [0, p^m).
struct ResiduePair {
  long a = 0, b = 0;
};

inline ResiduePair residue_pair(const QuadExtElem& x, long m) {
  return {residue_of(x.F, x.a, m), residue_of(x.F, x.b, m)};
}

// Canonical lift of x mod p_E^(i+m) through the window p_E^i / p_E^(i+m):
// the unique representative p^i (a0 + b0 sqrt(eps)) with 0 <= a0, b0 < p^m.
// Requires val_E(x) >= i.
inline QuadExtElem canonical_lift(const QuadExtElem& x, long i, long m) {
  const LocalField& F = x.F;
  require(x.val_ge(i), "canonical_lift: valuation too small");
  QuadExtElem scaled = x * F.pi_pow(-i);
  ResiduePair r = residue_pair(scaled, m);
  return QuadExtElem(F, r.a, r.b) * F.pi_pow(i);
}

// Same for the base field: the representative p^i * j, 0 <= j < p^m,
// of x mod p_F^(i+m).
inline Rational canonical_lift_F(const LocalField& F, const Rational& x, long i, long m) {
  require(F.val_ge(x, i), "canonical_lift_F: valuation too small");
  return Rational(residue_of(F, x * F.pi_pow(-i), m)) * F.pi_pow(i);
}

}  // namespace u21
