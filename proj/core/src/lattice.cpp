#include "u21/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace u21 {

void PhasedSum::normalize() {
  std::sort(parts.begin(), parts.end(),
            [](const auto& l, const auto& r) { return l.second < r.second; });
  std::vector<std::pair<Rational, PhaseExponent>> merged;
  for (const auto& [r, t] : parts) {
    if (!merged.empty() && merged.back().second == t)
      merged.back().first += r;
    else
      merged.emplace_back(r, t);
  }
  std::erase_if(merged, [](const auto& p) { return p.first == 0; });
  parts = std::move(merged);
}

bool PhasedSum::is_zero() const {
  PhasedSum s = *this;
  s.normalize();
  if (s.parts.empty()) return true;
  if (s.parts.size() == 1) return false;
  bool all_rational = true;
  for (const auto& [r, t] : s.parts)
    if (!t.is_rational_value()) all_rational = false;
  if (all_rational) {
    Rational acc(0);
    for (const auto& [r, t] : s.parts) acc += t.is_half() ? -r : r;
    return acc == 0;
  }
  std::complex<long double> acc(0.0L, 0.0L);
  for (const auto& [r, t] : s.parts) acc += t.to_complex() * (long double)r.get_d();
  return std::abs(acc) < 1e-9L;
}

bool PhasedSum::rational_value(Rational& out) const {
  PhasedSum s = *this;
  s.normalize();
  Rational acc(0);
  for (const auto& [r, t] : s.parts) {
    if (!t.is_rational_value()) return false;
    acc += t.is_half() ? -r : r;
  }
  out = acc;
  return true;
}

PhasedSum LatticeFn::evaluate(const Rational& x, const Rational& y) const {
  PhasedSum out;
  for (const auto& term : terms) {
    if (!F.val_ge(x - term.c, term.a)) continue;
    if (!F.val_ge(y - term.d, term.b)) continue;
    PhaseExponent t = term.t0 + psi_F(F, term.alpha * x + term.beta * y);
    out.add(term.coeff, t);
  }
  out.normalize();
  return out;
}

LatticeFn fourier_hat(const LatticeFn& f) {
  // Termwise: integrating coeff e(t0) psi(alpha u + beta v) over
  // (c + p^a) x (d + p^b) against psi(y u - x v) gives volume q^(-a-b), the
  // constant psi(alpha c + beta d), the new phase psi(y c - x d) and dual
  // support conditions y in -alpha + p^(-a), x in beta + p^(-b).
  LatticeFn out(f.F);
  for (const auto& t : f.terms) {
    LatticeTerm n;
    n.coeff = t.coeff * f.F.pi_pow(-(t.a + t.b));
    n.t0 = t.t0 + psi_F(f.F, t.alpha * t.c + t.beta * t.d);
    n.alpha = -t.d;
    n.beta = t.c;
    n.c = t.beta;
    n.d = -t.alpha;
    n.a = -t.b;
    n.b = -t.a;
    out.terms.push_back(n);
  }
  return out;
}

LatticeFn fourier_star(const LatticeFn& f) {
  LatticeFn out(f.F);
  for (const auto& t : f.terms) {
    LatticeTerm n;
    n.coeff = t.coeff * f.F.pi_pow(-(t.a + t.b));
    n.t0 = t.t0 + psi_F(f.F, t.alpha * t.c + t.beta * t.d);
    n.alpha = t.d;
    n.beta = t.c;
    n.c = -t.beta;
    n.d = -t.alpha;
    n.a = -t.b;
    n.b = -t.a;
    out.terms.push_back(n);
  }
  return out;
}

LatticeFn gl2_act(const Mat2Q& g, const LatticeFn& f) {
  const LocalField& F = f.F;
  bool diag = g.at(0, 1) == 0 && g.at(1, 0) == 0;
  bool anti = g.at(0, 0) == 0 && g.at(1, 1) == 0;
  require(diag || anti, "gl2_act supports monomial matrices only");
  require(g.det() != 0, "gl2_act wants an invertible matrix");
  LatticeFn out(F);
  if (diag) {
    Rational m1 = g.at(0, 0), m2 = g.at(1, 1);
    long v1 = *F.val(m1), v2 = *F.val(m2);
    for (const auto& t : f.terms) {
      LatticeTerm n = t;
      n.alpha = t.alpha * m1;
      n.beta = t.beta * m2;
      n.c = t.c / m1;
      n.d = t.d / m2;
      n.a = t.a - v1;
      n.b = t.b - v2;
      out.terms.push_back(n);
    }
  } else {
    Rational m1 = g.at(1, 0), m2 = g.at(0, 1);  // (x, y) g = (y m1, x m2)
    long v1 = *F.val(m1), v2 = *F.val(m2);
    for (const auto& t : f.terms) {
      LatticeTerm n = t;
      n.alpha = t.beta * m2;
      n.beta = t.alpha * m1;
      n.c = t.d / m2;
      n.d = t.c / m1;
      n.a = t.b - v2;
      n.b = t.a - v1;
      out.terms.push_back(n);
    }
  }
  return out;
}

namespace {

struct GridSpec {
  long Mx = 0, Nx = 1, My = 0, Ny = 1;

  void absorb(const LatticeFn& f) {
    const LocalField& F = f.F;
    for (const auto& t : f.terms) {
      auto lo = [&](const Rational& center, long scale) {
        auto vc = F.val(center);
        return std::min(vc ? *vc : scale, scale);
      };
      Mx = std::max(Mx, -lo(t.c, t.a));
      My = std::max(My, -lo(t.d, t.b));
      auto depth = [&](const Rational& freq, long scale) {
        auto vf = F.val(freq);
        return std::max(scale, vf ? -*vf : 0L);
      };
      Nx = std::max(Nx, depth(t.alpha, t.a) + 1);
      Ny = std::max(Ny, depth(t.beta, t.b) + 1);
    }
  }
};

}  // namespace

bool equal_pointwise(const LatticeFn& f, const LatticeFn& g) {
  check(f.F == g.F, "field mismatch");
  const LocalField& F = f.F;
  GridSpec spec;
  spec.absorb(f);
  spec.absorb(g);
  mpz_class nx = pow_mpz(F.p, spec.Mx + spec.Nx);
  mpz_class ny = pow_mpz(F.p, spec.My + spec.Ny);
  check(nx * ny <= 4000000, "pointwise-equality grid too large");
  long cx = nx.get_si(), cy = ny.get_si();
  Rational sx = F.pi_pow(-spec.Mx), sy = F.pi_pow(-spec.My);
  for (long i = 0; i < cx; ++i) {
    Rational x = Rational(i) * sx;
    for (long j = 0; j < cy; ++j) {
      Rational y = Rational(j) * sy;
      PhasedSum d = f.evaluate(x, y);
      PhasedSum e = g.evaluate(x, y);
      for (auto& [r, t] : e.parts) d.add(-r, t);
      if (!d.is_zero()) return false;
    }
  }
  return true;
}

namespace {

struct Disc {  // c0 + p^m, possibly containing 0
  Rational c0;
  long m;
};

// Intersection of two discs in F; nullopt = empty.
std::optional<Disc> intersect(const LocalField& F, const Disc& A, const Disc& B) {
  const Disc& shallow = A.m <= B.m ? A : B;
  const Disc& deep = A.m <= B.m ? B : A;
  if (!F.val_ge(deep.c0 - shallow.c0, shallow.m)) return std::nullopt;
  return deep;
}

}  // namespace

RationalFn z_integral(const Mat2Q& g, const LatticeFn& Phi) {
  const LocalField& F = Phi.F;
  require(g.det() != 0, "z_integral wants an invertible matrix");
  long q = F.p;
  const Rational& g21 = g.at(1, 0);
  const Rational& g22 = g.at(1, 1);
  // Accumulate rational functions per constant phase; only the rational
  // phases +-1 may survive in the final answer.
  std::map<Rational, RationalFn> acc;
  auto add = [&](const PhaseExponent& t, const RationalFn& r) {
    auto [it, fresh] = acc.emplace(t.t, r);
    if (!fresh) it->second = it->second + r;
  };

  for (const auto& term : Phi.terms) {
    // The line (0, r) g = (r g21, r g22) meets the support in a disc of r.
    std::optional<Disc> disc;
    bool impossible = false;
    auto constrain = [&](const Rational& coord, const Rational& center, long scale) {
      if (impossible) return;
      if (coord == 0) {
        if (!F.val_ge(center, scale)) impossible = true;
        return;
      }
      Disc d{center / coord, scale - *F.val(coord)};
      disc = disc ? intersect(F, *disc, d) : d;
      if (!disc) impossible = true;
    };
    constrain(g21, term.c, term.a);
    constrain(g22, term.d, term.b);
    if (impossible) continue;
    check(disc.has_value(), "line constraint vanished for invertible g");

    Rational kappa = term.alpha * g21 + term.beta * g22;
    auto vk = F.val(kappa);
    const Rational& c0 = disc->c0;
    long m = disc->m;
    if (F.val_ge(c0, m)) {
      // 0 in the disc: sum the shells val r = v >= m.  A shell contributes
      // X^v when psi(kappa r) is trivial on it (v >= -val kappa), the partial
      // sum -X^v/(q-1) on the boundary shell v = -val(kappa) - 1, and 0 below.
      RationalFn S = RationalFn::zero(q);
      if (!vk) {
        S = RationalFn::monomial(q, 1, m) * RationalFn::lfactor_one(q);
      } else {
        long w = -*vk;
        S = RationalFn::monomial(q, 1, std::max(m, w)) * RationalFn::lfactor_one(q);
        if (w - 1 >= m)
          S = S - RationalFn::monomial(q, Rational(1, q - 1), w - 1);
      }
      add(term.t0, S * RationalFn::constant(q, term.coeff));
    } else {
      // 0 outside the disc: all of it sits in the shell val r = val(c0), and
      // the character integrates to psi(kappa c0) vol or to zero.
      if (vk && *vk < -m) continue;
      long v0 = *F.val(c0);
      PhaseExponent t = term.t0 + psi_F(F, kappa * c0);
      Rational vol = Rational(q) / Rational(q - 1) * F.pi_pow(v0 - m);
      add(t, RationalFn::monomial(q, term.coeff * vol, v0));
    }
  }

  RationalFn out = RationalFn::zero(q);
  for (const auto& [t, r] : acc) {
    if (r.is_zero()) continue;
    if (t == 0)
      out = out + r;
    else if (t == Rational(1, 2))
      out = out - r;
    else
      require(false, "zeta integral is not rational over Q for this input");
  }
  return out;
}

RationalFn f_function(const GroupElem2& h, const LatticeFn& Phi) {
  HDecomp dec = decompose_H(h);
  auto vb = dec.b.val();
  check(vb.has_value(), "Hilbert-90 part must be nonzero");
  return RationalFn::monomial(Phi.F.p, 1, *vb) * z_integral(dec.h1, Phi);
}

LatticeFn random_lattice_fn(const LocalField& F, Rng& rng, bool allow_phases) {
  LatticeFn f(F);
  long nterms = rng.uniform(1, 3);
  for (long i = 0; i < nterms; ++i) {
    LatticeTerm t;
    t.coeff = Rational(rng.nonzero(5), rng.uniform(1, 3));
    t.coeff.canonicalize();
    if (allow_phases && rng.coin())
      t.t0 = PhaseExponent(Rational(rng.uniform(0, F.p - 1), F.p));
    // Valuation spread 1 keeps the pointwise-equality grid around p^3 points
    // per axis, well inside its size guard for every prime exercised.
    if (allow_phases && rng.coin()) t.alpha = rng.rational_with_val(F, -1, 1);
    if (allow_phases && rng.coin()) t.beta = rng.rational_with_val(F, -1, 1);
    if (rng.coin()) t.c = rng.rational_with_val(F, -1, 1);
    if (rng.coin()) t.d = rng.rational_with_val(F, -1, 1);
    t.a = rng.uniform(-1, 1);
    t.b = rng.uniform(-1, 1);
    f.terms.push_back(t);
  }
  return f;
}

}  // namespace u21
