#pragma once

#include <array>

#include "u21/quadratic.hpp"

namespace u21 {

// Dense 3x3 matrix over E, row-major.
struct Mat3 {
  LocalField F;
  std::array<QuadExtElem, 9> e;

  explicit Mat3(const LocalField& F_) : F(F_) {
    e.fill(QuadExtElem::zero(F_));
  }

  QuadExtElem& at(int i, int j) { return e[3 * i + j]; }
  const QuadExtElem& at(int i, int j) const { return e[3 * i + j]; }

  static Mat3 identity(const LocalField& F) {
    Mat3 m(F);
    for (int i = 0; i < 3; ++i) m.at(i, i) = QuadExtElem::one(F);
    return m;
  }

  // J = antidiag(1, 1, 1), the Hermitian form defining the unitary group.
  static Mat3 J(const LocalField& F) {
    Mat3 m(F);
    for (int i = 0; i < 3; ++i) m.at(i, 2 - i) = QuadExtElem::one(F);
    return m;
  }

  Mat3 operator*(const Mat3& o) const {
    check(F == o.F, "field mismatch");
    Mat3 r(F);
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) {
        const QuadExtElem& x = at(i, k);
        if (x.is_zero()) continue;
        for (int j = 0; j < 3; ++j) r.at(i, j) = r.at(i, j) + x * o.at(k, j);
      }
    return r;
  }

  Mat3 conj_transpose() const {
    Mat3 r(F);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.at(i, j) = at(j, i).conj();
    return r;
  }

  bool operator==(const Mat3& o) const { return F == o.F && e == o.e; }
  bool operator!=(const Mat3& o) const { return !(*this == o); }
};

// Dense 2x2 matrix over E, row-major.
struct Mat2 {
  LocalField F;
  std::array<QuadExtElem, 4> e;

  explicit Mat2(const LocalField& F_) : F(F_) {
    e.fill(QuadExtElem::zero(F_));
  }
  Mat2(const QuadExtElem& a, const QuadExtElem& b, const QuadExtElem& c,
       const QuadExtElem& d)
      : F(a.F), e{a, b, c, d} {}

  QuadExtElem& at(int i, int j) { return e[2 * i + j]; }
  const QuadExtElem& at(int i, int j) const { return e[2 * i + j]; }

  static Mat2 identity(const LocalField& F) {
    Mat2 m(F);
    m.at(0, 0) = m.at(1, 1) = QuadExtElem::one(F);
    return m;
  }
  static Mat2 J(const LocalField& F) {
    Mat2 m(F);
    m.at(0, 1) = m.at(1, 0) = QuadExtElem::one(F);
    return m;
  }

  Mat2 operator*(const Mat2& o) const {
    check(F == o.F, "field mismatch");
    Mat2 r(F);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        r.at(i, j) = at(i, 0) * o.at(0, j) + at(i, 1) * o.at(1, j);
    return r;
  }

  Mat2 conj_transpose() const {
    Mat2 r(F);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r.at(i, j) = at(j, i).conj();
    return r;
  }

  QuadExtElem det() const { return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0); }

  Mat2 inverse() const {
    QuadExtElem d = det();
    require(!d.is_zero(), "singular 2x2 matrix");
    QuadExtElem di = d.inverse();
    return {at(1, 1) * di, -at(0, 1) * di, -at(1, 0) * di, at(0, 0) * di};
  }

  bool operator==(const Mat2& o) const { return F == o.F && e == o.e; }
  bool operator!=(const Mat2& o) const { return !(*this == o); }
};

// 2x2 matrix over the base field F (entries plain rationals); the zeta
// integral acts through these.
struct Mat2Q {
  std::array<Rational, 4> e{Rational(0), Rational(0), Rational(0), Rational(0)};

  Mat2Q() = default;
  Mat2Q(const Rational& a, const Rational& b, const Rational& c, const Rational& d)
      : e{a, b, c, d} {}

  Rational& at(int i, int j) { return e[2 * i + j]; }
  const Rational& at(int i, int j) const { return e[2 * i + j]; }

  static Mat2Q identity() { return {1, 0, 0, 1}; }

  Mat2Q operator*(const Mat2Q& o) const {
    Mat2Q r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        r.at(i, j) = at(i, 0) * o.at(0, j) + at(i, 1) * o.at(1, j);
    return r;
  }

  Rational det() const { return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0); }

  bool operator==(const Mat2Q& o) const { return e == o.e; }
};

}  // namespace u21
