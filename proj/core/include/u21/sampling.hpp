#pragma once

#include <cstdint>
#include <random>

#include "u21/quadratic.hpp"

namespace u21 {

// Deterministic random source.  Every verification routine takes an explicit
// seed so runs are reproducible; child streams for concurrent parameter
// points are derived with fork() to keep them independent of scheduling.
struct Rng {
  std::mt19937_64 eng;

  explicit Rng(std::uint64_t seed) : eng(seed) {}

  long uniform(long lo, long hi) {  // inclusive bounds
    return std::uniform_int_distribution<long>(lo, hi)(eng);
  }

  bool coin() { return uniform(0, 1) == 1; }

  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t x = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
  }

  Rng fork(std::uint64_t label) { return Rng(mix(eng(), label)); }

  // Nonzero small integer in [-bound, bound].
  long nonzero(long bound) {
    long v = uniform(1, bound);
    return coin() ? v : -v;
  }

  // Random rational with small numerator and p-valuation in [vlo, vhi].
  Rational rational_with_val(const LocalField& F, long vlo, long vhi) {
    long v = uniform(vlo, vhi);
    long n = nonzero(2 * F.p);
    while (n % F.p == 0) n = nonzero(2 * F.p);
    Rational r = Rational(n) * F.pi_pow(v);
    r.canonicalize();
    return r;
  }

  // Random element of E with val_E >= m (and usually exactly m).
  QuadExtElem ext_with_val(const LocalField& F, long m) {
    return {F, rational_with_val(F, m, m + 2), rational_with_val(F, m, m + 2)};
  }

  // Random unit of o_E.
  QuadExtElem unit(const LocalField& F) {
    QuadExtElem x(F, rational_with_val(F, 0, 2), rational_with_val(F, 0, 2));
    while (!x.is_unit())
      x = QuadExtElem(F, rational_with_val(F, 0, 2), rational_with_val(F, 0, 2));
    return x;
  }

  // Random norm-one element of E^1 intersected with 1 + p_E^m, via
  // Hilbert 90 applied to x = 1 + p^m (r0 + r1 sqrt(eps)).
  QuadExtElem norm_one(const LocalField& F, long m) {
    QuadExtElem x = QuadExtElem::one(F) +
                    QuadExtElem(F, Rational(uniform(-F.p, F.p)),
                                Rational(uniform(-F.p, F.p))) *
                        F.pi_pow(m);
    if (x.is_zero()) x = QuadExtElem::one(F);
    QuadExtElem e = x / x.conj();
    check(e.has_norm_one(), "norm_one construction failed");
    return e;
  }

  // Random element of sqrt(eps) * F with val_E in [vlo, vhi] or zero.
  QuadExtElem pure_imaginary(const LocalField& F, long vlo, long vhi) {
    if (uniform(0, 9) == 0) return QuadExtElem::zero(F);
    return {F, Rational(0), rational_with_val(F, vlo, vhi)};
  }
};

}  // namespace u21
