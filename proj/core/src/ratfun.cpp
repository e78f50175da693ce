#include "u21/ratfun.hpp"

#include <algorithm>
#include <sstream>

namespace u21 {

void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

bool poly_is_zero(const Poly& a) { return a.empty(); }

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  poly_trim(r);
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  poly_trim(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly_trim(r);
  return r;
}

Poly poly_scale(const Poly& a, const Rational& c) {
  if (c == 0) return {};
  Poly r = a;
  for (auto& x : r) x *= c;
  return r;
}

void poly_divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
  check(!b.empty(), "polynomial division by zero");
  rem = a;
  quo.assign(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, Rational(0));
  while (rem.size() >= b.size()) {
    Rational c = rem.back() / b.back();
    size_t k = rem.size() - b.size();
    quo[k] = c;
    for (size_t i = 0; i < b.size(); ++i) rem[k + i] -= c * b[i];
    check(rem.back() == 0, "division step failed to cancel leading term");
    rem.pop_back();
    poly_trim(rem);
    if (rem.empty()) break;
  }
  poly_trim(quo);
}

Poly poly_gcd(Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly q, r;
    poly_divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

bool poly_divides(const Poly& d, const Poly& a) {
  if (a.empty()) return true;
  if (d.empty()) return false;
  Poly q, r;
  poly_divmod(a, d, q, r);
  return r.empty();
}

RationalFn::RationalFn(long q_, long shift_, Poly num_, Poly den_)
    : q(q_), shift(shift_), num(std::move(num_)), den(std::move(den_)) {
  require(q >= 2, "RationalFn wants q >= 2");
  poly_trim(num);
  poly_trim(den);
  require(!den.empty(), "RationalFn with zero denominator");
  canonicalize();
}

void RationalFn::canonicalize() {
  if (num.empty()) {
    shift = 0;
    den = {Rational(1)};
    return;
  }
  // Pull unit monomials X^k out of numerator and denominator into shift.
  size_t kn = 0;
  while (kn < num.size() && num[kn] == 0) ++kn;
  if (kn > 0) {
    num.erase(num.begin(), num.begin() + kn);
    shift += static_cast<long>(kn);
  }
  size_t kd = 0;
  while (kd < den.size() && den[kd] == 0) ++kd;
  if (kd > 0) {
    den.erase(den.begin(), den.begin() + kd);
    shift -= static_cast<long>(kd);
  }
  Poly g = poly_gcd(num, den);
  if (g.size() > 1) {
    Poly quo, rem;
    poly_divmod(num, g, quo, rem);
    check(rem.empty(), "gcd does not divide numerator");
    num = quo;
    poly_divmod(den, g, quo, rem);
    check(rem.empty(), "gcd does not divide denominator");
    den = quo;
  }
  check(den[0] != 0, "denominator unit extraction failed");
  if (den[0] != 1) {
    Rational c = den[0];
    for (auto& x : den) x /= c;
    for (auto& x : num) x /= c;
  }
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
  check(q == o.q, "RationalFn q mismatch");
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  long s = std::min(shift, o.shift);
  Poly a = poly_mul(num, o.den);
  a.insert(a.begin(), static_cast<size_t>(shift - s), Rational(0));
  Poly b = poly_mul(o.num, den);
  b.insert(b.begin(), static_cast<size_t>(o.shift - s), Rational(0));
  return RationalFn(q, s, poly_add(a, b), poly_mul(den, o.den));
}

RationalFn RationalFn::operator-() const { return RationalFn(q, shift, poly_scale(num, -1), den); }

RationalFn RationalFn::operator-(const RationalFn& o) const { return *this + (-o); }

RationalFn RationalFn::operator*(const RationalFn& o) const {
  check(q == o.q, "RationalFn q mismatch");
  return RationalFn(q, shift + o.shift, poly_mul(num, o.num), poly_mul(den, o.den));
}

RationalFn RationalFn::operator/(const RationalFn& o) const {
  check(q == o.q, "RationalFn q mismatch");
  require(!o.is_zero(), "division by the zero rational function");
  return RationalFn(q, shift - o.shift, poly_mul(num, o.den), poly_mul(den, o.num));
}

bool RationalFn::operator==(const RationalFn& o) const {
  return q == o.q && shift == o.shift && num == o.num && den == o.den;
}

RationalFn RationalFn::subst_one_minus_s() const {
  if (is_zero()) return *this;
  // X^k -> q^(-2k) X^(-k); a polynomial P of degree d maps to
  // X^(-d) * rev(P) with rev(P)[i] = P[d-i] q^(-2(d-i)).
  auto rev = [&](const Poly& P) {
    long d = static_cast<long>(P.size()) - 1;
    Poly R(P.size(), Rational(0));
    for (long i = 0; i <= d; ++i) R[i] = P[d - i] * q_pow(q, -2 * (d - i));
    return R;
  };
  long dn = static_cast<long>(num.size()) - 1;
  long dd = static_cast<long>(den.size()) - 1;
  Poly n2 = poly_scale(rev(num), q_pow(q, -2 * shift));
  return RationalFn(q, -shift + dd - dn, n2, rev(den));
}

std::vector<Rational> RationalFn::series_expand(long K) const {
  require(K >= 0, "series_expand wants K >= 0");
  std::vector<Rational> out(static_cast<size_t>(K) + 1, Rational(0));
  if (is_zero()) return out;
  require(shift >= 0, "series_expand: pole at X = 0");
  // den[0] = 1, so power series inversion is a plain recurrence.
  long terms = K + 1 - shift;
  if (terms <= 0) return out;
  std::vector<Rational> c(static_cast<size_t>(terms), Rational(0));
  for (long k = 0; k < terms; ++k) {
    Rational acc = k < static_cast<long>(num.size()) ? num[k] : Rational(0);
    for (long j = 1; j <= k && j < static_cast<long>(den.size()); ++j)
      acc -= den[j] * c[k - j];
    c[k] = acc;
  }
  for (long k = 0; k < terms; ++k) out[k + shift] = c[k];
  return out;
}

std::optional<RationalFn::Monomial> RationalFn::as_power_monomial() const {
  if (den.size() != 1 || num.size() != 1) return std::nullopt;
  if (num[0] == q_pow(q, shift)) return Monomial{shift, false};
  if (num[0] == -q_pow(q, shift)) return Monomial{shift, true};
  return std::nullopt;
}

namespace {

std::string poly_str(const Poly& P, const std::string& var) {
  if (P.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < P.size(); ++i) {
    if (P[i] == 0) continue;
    Rational c = P[i];
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (i == 0) {
      os << c;
    } else {
      if (c != 1) os << c << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::string render(const RationalFn& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool den_trivial = f.den.size() == 1;
  bool num_trivial = f.num.size() == 1;
  if (f.shift != 0) {
    os << var;
    if (f.shift != 1) os << "^" << (f.shift < 0 ? "(" : "") << f.shift
                         << (f.shift < 0 ? ")" : "");
    os << "*";
  }
  if (num_trivial)
    os << f.num[0];
  else
    os << "(" << poly_str(f.num, var) << ")";
  if (!den_trivial) os << "/(" << poly_str(f.den, var) << ")";
  return os.str();
}

}  // namespace

std::string RationalFn::str() const { return render(*this, "X"); }

std::string RationalFn::str_qs() const {
  return render(*this, std::to_string(q) + "^(-2s)");
}

RationalFn gcd_generator(const std::vector<RationalFn>& fns) {
  require(!fns.empty(), "gcd_generator wants at least one input");
  long q = fns.front().q;
  // Common denominator D = lcm of the denominators, then the ideal is
  // (gcd of the adjusted numerators) / D; unit monomials do not matter.
  Poly D{Rational(1)};
  bool all_zero = true;
  for (const auto& f : fns) {
    check(f.q == q, "gcd_generator: mixed q");
    if (f.is_zero()) continue;
    all_zero = false;
    Poly g = poly_gcd(D, f.den);
    Poly quo, rem;
    poly_divmod(f.den, g, quo, rem);
    check(rem.empty(), "lcm step failed");
    D = poly_mul(D, quo);
  }
  if (all_zero) return RationalFn::zero(q);
  Poly G;
  for (const auto& f : fns) {
    if (f.is_zero()) continue;
    Poly quo, rem;
    poly_divmod(D, f.den, quo, rem);
    check(rem.empty(), "denominator does not divide lcm");
    G = poly_gcd(G, poly_mul(f.num, quo));
  }
  RationalFn out(q, 0, G, D);
  out.shift = 0;
  // Normalize the remaining constant-unit freedom: numerator constant term 1.
  check(!out.num.empty() && out.num[0] != 0, "generator numerator not unit-free");
  if (out.num[0] != 1) {
    Rational c = out.num[0];
    for (auto& x : out.num) x /= c;
  }
  return out;
}

}  // namespace u21
