#include "u21/group.hpp"

#include <sstream>

namespace u21 {

GroupElem make_u(const QuadExtElem& x, const QuadExtElem& y) {
  const LocalField& F = x.F;
  check(F == y.F, "field mismatch");
  require((y + y.conj() + x * x.conj()).is_zero(),
          "u(x, y) wants y + conj y + x conj x = 0");
  Mat3 m = Mat3::identity(F);
  m.at(0, 1) = x;
  m.at(0, 2) = y;
  m.at(1, 2) = -x.conj();
  return GroupElem(m);
}

GroupElem make_uhat(const QuadExtElem& x, const QuadExtElem& y) {
  const LocalField& F = x.F;
  check(F == y.F, "field mismatch");
  require((y + y.conj() + x * x.conj()).is_zero(),
          "uhat(x, y) wants y + conj y + x conj x = 0");
  Mat3 m = Mat3::identity(F);
  m.at(1, 0) = x;
  m.at(2, 0) = y;
  m.at(2, 1) = -x.conj();
  return GroupElem(m);
}

GroupElem u_param(const QuadExtElem& x, const Rational& z) {
  const LocalField& F = x.F;
  QuadExtElem y = QuadExtElem::sqrt_eps(F) * z - x * x.conj() * Rational(1, 2);
  return make_u(x, y);
}

GroupElem uhat_param(const QuadExtElem& x, const Rational& z) {
  const LocalField& F = x.F;
  QuadExtElem y = QuadExtElem::sqrt_eps(F) * z - x * x.conj() * Rational(1, 2);
  return make_uhat(x, y);
}

GroupElem make_t(const QuadExtElem& a) {
  require(!a.is_zero(), "t(a) wants a != 0");
  Mat3 m(a.F);
  m.at(0, 0) = a;
  m.at(1, 1) = QuadExtElem::one(a.F);
  m.at(2, 2) = a.conj().inverse();
  return GroupElem(m);
}

GroupElem make_torus(const QuadExtElem& a, const QuadExtElem& b) {
  require(!a.is_zero(), "torus wants a != 0");
  require(b.has_norm_one(), "torus wants b of norm one");
  Mat3 m(a.F);
  m.at(0, 0) = a;
  m.at(1, 1) = b;
  m.at(2, 2) = a.conj().inverse();
  return GroupElem(m);
}

GroupElem make_center(const QuadExtElem& e) {
  require(e.has_norm_one(), "central elements have norm one");
  Mat3 m(e.F);
  m.at(0, 0) = m.at(1, 1) = m.at(2, 2) = e;
  return GroupElem(m);
}

GroupElem make_zeta_pow(const LocalField& F, long i) {
  Mat3 m(F);
  m.at(0, 0) = QuadExtElem::pi_pow(F, i);
  m.at(1, 1) = QuadExtElem::one(F);
  m.at(2, 2) = QuadExtElem::pi_pow(F, -i);
  return GroupElem(m);
}

GroupElem make_tn(const LocalField& F, long n) {
  require(n >= 0, "t_n wants n >= 0");
  Mat3 m(F);
  m.at(0, 2) = QuadExtElem::pi_pow(F, -n);
  m.at(1, 1) = QuadExtElem::one(F);
  m.at(2, 0) = QuadExtElem::pi_pow(F, n);
  return GroupElem(m);
}

GroupElem2 make_u2(const QuadExtElem& w) {
  require((w + w.conj()).is_zero(), "u_H(w) wants w purely imaginary");
  const LocalField& F = w.F;
  Mat2 m = Mat2::identity(F);
  m.at(0, 1) = w;
  return GroupElem2(m);
}

GroupElem2 make_uhat2(const QuadExtElem& w) {
  require((w + w.conj()).is_zero(), "uhat_H(w) wants w purely imaginary");
  const LocalField& F = w.F;
  Mat2 m = Mat2::identity(F);
  m.at(1, 0) = w;
  return GroupElem2(m);
}

GroupElem2 make_t2(const QuadExtElem& a) {
  require(!a.is_zero(), "t(a) wants a != 0");
  Mat2 m(a.F);
  m.at(0, 0) = a;
  m.at(1, 1) = a.conj().inverse();
  return GroupElem2(m);
}

GroupElem2 make_tau(const LocalField& F, long n) {
  require(n >= 0, "tau_n wants n >= 0");
  Mat2 m(F);
  m.at(0, 1) = QuadExtElem::pi_pow(F, -n);
  m.at(1, 0) = QuadExtElem::pi_pow(F, n);
  return GroupElem2(m);
}

GroupElem embed_H(const GroupElem2& h) {
  const LocalField& F = h.field();
  Mat3 m(F);
  m.at(0, 0) = h.at(0, 0);
  m.at(0, 2) = h.at(0, 1);
  m.at(1, 1) = QuadExtElem::one(F);
  m.at(2, 0) = h.at(1, 0);
  m.at(2, 2) = h.at(1, 1);
  return GroupElem(m);
}

namespace {

bool is_one(const QuadExtElem& x) { return x.a == 1 && x.b == 0; }

// Entrywise valuation bounds with the (2,2) entry measured against 1.
bool val_pattern(const GroupElem& g, const long (&lb)[9], long center_lb) {
  const LocalField& F = g.field();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == 1 && j == 1) {
        if (!(g.at(1, 1) - QuadExtElem::one(F)).val_ge(center_lb)) return false;
      } else if (!g.at(i, j).val_ge(lb[3 * i + j])) {
        return false;
      }
    }
  return true;
}

}  // namespace

bool membership(const GroupElem& g, const SubgroupId& s) {
  long n = s.n;
  switch (s.kind) {
    case SubgroupId::K_n: {
      require(n >= 0, "K_n wants n >= 0");
      long lb[9] = {0, 0, -n, n, 0, 0, n, n, 0};
      return val_pattern(g, lb, n) && g.is_unitary();
    }
    case SubgroupId::K_prime: {
      require(n >= 1, "K' wants n >= 1");
      long lb[9] = {0, 0, 1 - n, n, 0, 0, n, n, 0};
      return val_pattern(g, lb, n) && g.is_unitary();
    }
    case SubgroupId::K_dprime: {
      require(n >= 2, "K'' wants n >= 2");
      long lb[9] = {0, 0, 1 - n, n - 1, 0, 0, n, n - 1, 0};
      return val_pattern(g, lb, n - 1) && g.is_unitary();
    }
    case SubgroupId::hecke_cap: {
      require(n >= 1, "the Hecke intersection wants n >= 1");
      long lb[9] = {0, 1, 2 - n, n, 0, 1, n, n, 0};
      return val_pattern(g, lb, n) && g.is_unitary();
    }
    case SubgroupId::level_cap: {
      require(n >= 2, "the level-lowering intersection wants n >= 2");
      long lb[9] = {0, 0, 1 - n, n, 0, 0, n, n, 0};
      return val_pattern(g, lb, n - 1) && g.is_unitary();
    }
    case SubgroupId::upper_u: {
      const QuadExtElem& x = g.at(0, 1);
      const QuadExtElem& y = g.at(0, 2);
      return is_one(g.at(0, 0)) && is_one(g.at(1, 1)) && is_one(g.at(2, 2)) &&
             g.at(1, 0).is_zero() && g.at(2, 0).is_zero() &&
             g.at(2, 1).is_zero() && g.at(1, 2) == -x.conj() &&
             (y + y.conj() + x * x.conj()).is_zero();
    }
    case SubgroupId::lower_u: {
      const QuadExtElem& x = g.at(1, 0);
      const QuadExtElem& y = g.at(2, 0);
      return is_one(g.at(0, 0)) && is_one(g.at(1, 1)) && is_one(g.at(2, 2)) &&
             g.at(0, 1).is_zero() && g.at(0, 2).is_zero() &&
             g.at(1, 2).is_zero() && g.at(2, 1) == -x.conj() &&
             (y + y.conj() + x * x.conj()).is_zero();
    }
    case SubgroupId::torus:
      return g.at(0, 1).is_zero() && g.at(0, 2).is_zero() &&
             g.at(1, 0).is_zero() && g.at(1, 2).is_zero() &&
             g.at(2, 0).is_zero() && g.at(2, 1).is_zero() && g.is_unitary();
    case SubgroupId::center: {
      require(n >= 0, "Z_m wants m >= 0");
      const LocalField& F = g.field();
      const QuadExtElem& e = g.at(0, 0);
      return g.at(0, 1).is_zero() && g.at(0, 2).is_zero() &&
             g.at(1, 0).is_zero() && g.at(1, 2).is_zero() &&
             g.at(2, 0).is_zero() && g.at(2, 1).is_zero() &&
             g.at(1, 1) == e && g.at(2, 2) == e &&
             (e - QuadExtElem::one(F)).val_ge(n) && g.is_unitary();
    }
    default:
      require(false, "subgroup tag is 2x2 only");
  }
  return false;
}

bool membership(const GroupElem2& g, const SubgroupId& s) {
  long n = s.n;
  switch (s.kind) {
    case SubgroupId::K_nH:
      require(n >= 0, "K_{n,H} wants n >= 0");
      return g.at(0, 0).val_ge(0) && g.at(0, 1).val_ge(-n) &&
             g.at(1, 0).val_ge(n) && g.at(1, 1).val_ge(0) && g.is_unitary();
    case SubgroupId::u_H: {
      const QuadExtElem& w = g.at(0, 1);
      return is_one(g.at(0, 0)) && is_one(g.at(1, 1)) && g.at(1, 0).is_zero() &&
             (w + w.conj()).is_zero();
    }
    case SubgroupId::uhat_H: {
      const QuadExtElem& w = g.at(1, 0);
      return is_one(g.at(0, 0)) && is_one(g.at(1, 1)) && g.at(0, 1).is_zero() &&
             (w + w.conj()).is_zero();
    }
    case SubgroupId::torus_H:
      return g.at(0, 1).is_zero() && g.at(1, 0).is_zero() && g.is_unitary();
    default:
      require(false, "subgroup tag is 3x3 only");
  }
  return false;
}

HDecomp decompose_H(const GroupElem2& h) {
  const LocalField& F = h.field();
  if (h.at(0, 1).is_zero() && h.at(1, 0).is_zero())
    return {h.at(0, 0), Mat2Q::identity()};
  QuadExtElem delta = h.det();
  check(delta.has_norm_one(), "det of a U(1,1) element must have norm one");
  QuadExtElem b = hilbert90(delta);
  QuadExtElem re = QuadExtElem::sqrt_eps(F);
  Mat2 d(F), dinv(F);
  d.at(0, 0) = re;
  d.at(1, 1) = QuadExtElem::one(F);
  dinv.at(0, 0) = re.inverse();
  dinv.at(1, 1) = QuadExtElem::one(F);
  Mat2 tbinv(F);
  tbinv.at(0, 0) = b.inverse();
  tbinv.at(1, 1) = b.conj();
  Mat2 h1 = dinv * (tbinv * h.m) * d;
  Mat2Q out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      check(h1.at(i, j).is_in_F(), "conjugated matrix is not over F");
      out.at(i, j) = h1.at(i, j).a;
    }
  check(out.det() == 1, "conjugated matrix is not in SL_2(F)");
  return {b, out};
}

namespace {

// Bottom-row step of the Iwasawa decomposition; applicable when
// val(h21) - val(h22) >= n (h22 != 0).
bool iwasawa_direct(const GroupElem2& h, long n, HIwasawa& out) {
  const QuadExtElem& C = h.at(1, 0);
  const QuadExtElem& D = h.at(1, 1);
  if (D.is_zero()) return false;
  if (!C.is_zero() && *C.val() - *D.val() < n) return false;
  QuadExtElem a = D.conj().inverse();
  QuadExtElem y = D.conj() * h.at(0, 1) * (Rational(1) / D.norm());
  check((y + y.conj()).is_zero(), "Iwasawa u-parameter is not purely imaginary");
  GroupElem2 u = make_u2(y);
  GroupElem2 t = make_t2(a);
  GroupElem2 k = (u * t).inverse() * h;
  check(membership(k, {SubgroupId::K_nH, n}), "Iwasawa residual left K_{n,H}");
  out = {u, a, k};
  return true;
}

}  // namespace

HIwasawa iwasawa_H(const GroupElem2& h, long n) {
  require(n >= 0, "iwasawa_H wants n >= 0");
  if (membership(h, {SubgroupId::K_nH, n}))
    return {GroupElem2::identity(h.field()), QuadExtElem::one(h.field()), h};
  HIwasawa out{GroupElem2::identity(h.field()), QuadExtElem::one(h.field()),
               GroupElem2::identity(h.field())};
  if (!iwasawa_direct(h, n, out)) {
    // Twist by the involution tau_n in K_{n,H}; the twisted bottom row
    // always clears the level.
    GroupElem2 tau = make_tau(h.field(), n);
    check(iwasawa_direct(h * tau, n, out), "twisted Iwasawa step failed");
    out.k = out.k * tau;
  }
  check(out.u * make_t2(out.a) * out.k == h, "Iwasawa recomposition failed");
  return out;
}

GroupElem random_Kn(const LocalField& F, long n, Rng& rng) {
  require(n >= 0, "K_n wants n >= 0");
  GroupElem g = GroupElem::identity(F);
  long len = rng.uniform(1, 12);
  for (long i = 0; i < len; ++i) {
    GroupElem f = GroupElem::identity(F);
    switch (rng.uniform(0, 5)) {
      case 0: {
        QuadExtElem x = rng.uniform(0, 9) == 0 ? QuadExtElem::zero(F)
                                               : rng.ext_with_val(F, 0);
        Rational z = rng.uniform(0, 9) == 0 ? Rational(0)
                                            : rng.rational_with_val(F, -n, -n + 3);
        f = u_param(x, z);
        break;
      }
      case 1: {
        QuadExtElem x = rng.uniform(0, 9) == 0 ? QuadExtElem::zero(F)
                                               : rng.ext_with_val(F, n);
        Rational z = rng.uniform(0, 9) == 0 ? Rational(0)
                                            : rng.rational_with_val(F, n, n + 3);
        f = uhat_param(x, z);
        break;
      }
      case 2:
        f = make_t(rng.unit(F));
        break;
      case 3:
        f = make_torus(rng.unit(F), rng.norm_one(F, n));
        break;
      case 4:
        f = make_tn(F, n);
        break;
      case 5:
        f = make_center(rng.norm_one(F, n));
        break;
    }
    g = rng.coin() ? g * f : g * f.inverse();
  }
  check(membership(g, {SubgroupId::K_n, n}), "random word left K_n");
  return g;
}

GroupElem2 random_KnH(const LocalField& F, long n, Rng& rng) {
  require(n >= 0, "K_{n,H} wants n >= 0");
  GroupElem2 g = GroupElem2::identity(F);
  long len = rng.uniform(1, 12);
  for (long i = 0; i < len; ++i) {
    GroupElem2 f = GroupElem2::identity(F);
    switch (rng.uniform(0, 3)) {
      case 0:
        f = make_u2(rng.pure_imaginary(F, -n, -n + 3));
        break;
      case 1:
        f = make_uhat2(rng.pure_imaginary(F, n, n + 3));
        break;
      case 2:
        f = make_t2(rng.unit(F));
        break;
      case 3:
        f = make_tau(F, n);
        break;
    }
    g = rng.coin() ? g * f : g * f.inverse();
  }
  check(membership(g, {SubgroupId::K_nH, n}), "random word left K_{n,H}");
  return g;
}

Mat2Q random_lattice_stabilizer(const LocalField& F, long n, Rng& rng) {
  require(n >= 0, "stabilizer level wants n >= 0");
  Mat2Q g = Mat2Q::identity();
  long len = rng.uniform(1, 10);
  for (long i = 0; i < len; ++i) {
    Mat2Q f = Mat2Q::identity();
    switch (rng.uniform(0, 3)) {
      case 0:
        f.at(0, 1) = rng.uniform(0, 4) == 0 ? Rational(0)
                                            : rng.rational_with_val(F, -n, -n + 3);
        break;
      case 1:
        f.at(1, 0) = rng.uniform(0, 4) == 0 ? Rational(0)
                                            : rng.rational_with_val(F, n, n + 3);
        break;
      case 2:
        f.at(0, 0) = rng.rational_with_val(F, 0, 0);
        f.at(1, 1) = rng.rational_with_val(F, 0, 0);
        break;
      case 3:
        f = Mat2Q();
        f.at(0, 1) = rng.rational_with_val(F, 0, 0) * F.pi_pow(-n);
        f.at(1, 0) = rng.rational_with_val(F, 0, 0) * F.pi_pow(n);
        break;
    }
    g = g * f;
  }
  Rational det = g.det();
  check(F.val_ge(g.at(0, 0), 0) && F.val_ge(g.at(0, 1), -n) &&
            F.val_ge(g.at(1, 0), n) && F.val_ge(g.at(1, 1), 0) && det != 0 &&
            F.val_ge(det, 0) && !F.val_ge(det, 1),
        "random word left the lattice stabilizer");
  return g;
}

IdentityReport verify_conjugation_identities(const LocalField& F, long n_max,
                                             long samples, std::uint64_t seed) {
  IdentityReport rep;
  Rng rng(seed);
  auto fail = [&](const std::string& what) {
    ++rep.failures;
    if (rep.witness.empty()) rep.witness = what;
  };

  for (long n = 0; n <= n_max; ++n) {
    ++rep.samples;
    if (!(make_tn(F, n) * make_tn(F, n) == GroupElem::identity(F)))
      fail("t_n^2 != 1 at n = " + std::to_string(n));
  }
  for (long n = 1; n <= n_max; ++n) {
    ++rep.samples;
    if (!(make_zeta_pow(F, 1) * make_tn(F, n) == make_tn(F, n - 1)))
      fail("zeta t_n != t_(n-1) at n = " + std::to_string(n));
  }

  for (long s = 0; s < samples; ++s) {
    // Flip: t_m u(x, y) t_m = uhat(-p^m conj x, p^2m y).
    long m = rng.uniform(0, n_max);
    QuadExtElem x = rng.ext_with_val(F, rng.uniform(-2, 2));
    Rational z = rng.rational_with_val(F, -2 * m - 2, 2);
    GroupElem u = u_param(x, z);
    QuadExtElem y = u.at(0, 2);
    GroupElem tm = make_tn(F, m);
    GroupElem rhs = make_uhat(-(x.conj() * F.pi_pow(m)), y * F.pi_pow(2 * m));
    ++rep.samples;
    if (!(tm * u * tm == rhs)) fail("t_m u t_m flip failed at m = " + std::to_string(m));

    // The same flip in the level-lowering window: integral x, z of val 1 - n
    // must land in the depth n - 1 lower-unipotent family.
    long n = std::max<long>(2, rng.uniform(2, std::max<long>(2, n_max)));
    QuadExtElem x0 = rng.ext_with_val(F, 0);
    Rational z0 = rng.rational_with_val(F, 1 - n, 2 - n);
    GroupElem g = make_tn(F, n - 1) * u_param(x0, z0) * make_tn(F, n - 1);
    ++rep.samples;
    if (!(membership(g, {SubgroupId::lower_u, 0}) && g.at(1, 0).val_ge(n - 1) &&
          g.at(2, 0).val_ge(n - 1)))
      fail("window flip left the expected family at n = " + std::to_string(n));

    // Conjugation by zeta^i rescales the (co)unipotent parameters.
    long i = rng.uniform(-3, 3);
    GroupElem zi = make_zeta_pow(F, i);
    GroupElem zmi = make_zeta_pow(F, -i);
    QuadExtElem xu = rng.ext_with_val(F, rng.uniform(-1, 1));
    Rational zu = rng.rational_with_val(F, -2, 2);
    ++rep.samples;
    if (!(zi * u_param(xu, zu) * zmi ==
          u_param(xu * F.pi_pow(i), zu * F.pi_pow(2 * i))))
      fail("zeta^i u zeta^-i rescaling failed at i = " + std::to_string(i));
    ++rep.samples;
    if (!(zi * uhat_param(xu, zu) * zmi ==
          uhat_param(xu * F.pi_pow(-i), zu * F.pi_pow(-2 * i))))
      fail("zeta^i uhat zeta^-i rescaling failed at i = " + std::to_string(i));
  }
  return rep;
}

}  // namespace u21
