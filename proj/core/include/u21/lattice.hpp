#pragma once

#include <utility>
#include <vector>

#include "u21/group.hpp"
#include "u21/ratfun.hpp"

namespace u21 {

// One term of a Schwartz function on F^2:
//
//   coeff * e(t0) * psi_F(alpha x + beta y) on (c + p^a) x (d + p^b),
//
// zero elsewhere.  The class of such finite sums is closed under pointwise
// algebra, GL_2 monomial substitutions and Fourier transform; the constant
// unimodular factor e(t0) is what the transform of a shifted support
// produces, so it is part of the term data.
struct LatticeTerm {
  Rational coeff;
  PhaseExponent t0;
  Rational alpha, beta;
  Rational c, d;
  long a = 0, b = 0;
};

// Finite sum of phased rationals Sum_j r_j e(t_j): the value of a lattice
// function at a point.  Zero testing is exact when at most one phase (or only
// the rational phases 1 and -1) survives merging; otherwise a numeric bound
// of 1e-9 on the complex modulus decides, which is far below the spacing of
// the algebraic values that occur here.
struct PhasedSum {
  std::vector<std::pair<Rational, PhaseExponent>> parts;

  void add(const Rational& r, const PhaseExponent& t) {
    if (r != 0) parts.emplace_back(r, t);
  }
  void normalize();
  bool is_zero() const;
  // Recover an exact rational value when all surviving phases are +-1.
  bool rational_value(Rational& out) const;
};

struct LatticeFn {
  LocalField F;
  std::vector<LatticeTerm> terms;

  explicit LatticeFn(const LocalField& F_) : F(F_) {}

  // Phi_n = characteristic function of p^n (+) o.
  static LatticeFn phi_n(const LocalField& F, long n) {
    LatticeFn f(F);
    f.terms.push_back({Rational(1), PhaseExponent(), 0, 0, 0, 0, n, 0});
    return f;
  }
  // Indicator of (c + p^a) x (d + p^b).
  static LatticeFn box(const LocalField& F, const Rational& c, long a,
                       const Rational& d, long b) {
    LatticeFn f(F);
    f.terms.push_back({Rational(1), PhaseExponent(), 0, 0, c, d, a, b});
    return f;
  }

  LatticeFn operator+(const LatticeFn& o) const {
    check(F == o.F, "field mismatch");
    LatticeFn r = *this;
    r.terms.insert(r.terms.end(), o.terms.begin(), o.terms.end());
    return r;
  }
  LatticeFn scaled(const Rational& r, const PhaseExponent& t = PhaseExponent()) const {
    LatticeFn out = *this;
    for (auto& term : out.terms) {
      term.coeff *= r;
      term.t0 = term.t0 + t;
    }
    return out;
  }

  PhasedSum evaluate(const Rational& x, const Rational& y) const;
};

// Fourier transform with kernel psi_F(y u - x v) and measure vol(o (+) o) = 1
// (self-dual for conductor o).  Applying it twice returns the original
// function on the nose, term by term.
LatticeFn fourier_hat(const LatticeFn& f);
// Companion transform with kernel psi_F(y u + x v); star = hat after x -> -x.
LatticeFn fourier_star(const LatticeFn& f);

// Right substitution (g Phi)(x, y) = Phi((x, y) g) for monomial g (diagonal
// or antidiagonal); other shapes are rejected.
LatticeFn gl2_act(const Mat2Q& g, const LatticeFn& f);

// Decision procedure for equality: both functions are locally constant at a
// computable depth and supported in a computable window, so equality on a
// finite representative grid is equality everywhere.
bool equal_pointwise(const LatticeFn& f, const LatticeFn& g);

// z(s, g, Phi) = integral over F^x of Phi((0, r) g) |r|_E^s d^x r as an exact
// rational function of X = q^(-2s), with multiplicative measure normalized by
// vol(o^x) = 1.  Rejects inputs whose integral is not rational over Q (a
// surviving irrational constant phase).
RationalFn z_integral(const Mat2Q& g, const LatticeFn& Phi);

// f(s, h, Phi) = |b|_E^s z(s, h1, Phi) through the factorization
// h = t(b) d(sqrt eps) h1 d(sqrt eps)^-1 of decompose_H.
RationalFn f_function(const GroupElem2& h, const LatticeFn& Phi);

// Random member of the term class (bounded scales, shifts, phases).
LatticeFn random_lattice_fn(const LocalField& F, Rng& rng, bool allow_phases);

}  // namespace u21
