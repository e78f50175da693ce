#include "u21/newform.hpp"

namespace u21 {

void validate(const NewformParams& P) {
  require(is_odd_prime(P.q), "newform: q must be an odd prime");
  require(P.n_pi == 0 || P.n_pi == 1, "newform: n_pi must be 0 or 1");
  require(P.N >= 2, "newform: level N must be at least 2");
  require(P.N > P.n_pi, "newform: level N must exceed n_pi");
}

std::vector<Rational> coefficient_seq(const NewformParams& P, long K) {
  validate(P);
  require(K >= 0, "coefficient_seq: K must be nonnegative");
  Rational q2 = q_pow(P.q, 2), q4 = q_pow(P.q, 4);
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(K) + 1);
  c.push_back(1);
  if (K >= 1) c.push_back(P.lambda / q4);
  for (long i = 1; i < K; ++i) c.push_back((P.lambda + q2) * c.back() / q4);
  return c;
}

bool check_hecke_relation(const NewformParams& P, long K) {
  std::vector<Rational> c = coefficient_seq(P, K + 1);
  Rational q2 = q_pow(P.q, 2), q4 = q_pow(P.q, 4);
  for (long i = 0; i <= K; ++i) {
    Rational cprev = i == 0 ? Rational(0) : -q2 * c[i];  // c'_(i-1) = -q^2 c_i
    if (P.lambda * c[i] != cprev + q4 * c[i + 1]) return false;
  }
  return true;
}

RationalFn zeta_W_series(const NewformParams& P, long K) {
  std::vector<Rational> c = coefficient_seq(P, K);
  Poly num(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    num[i] = c[i] * q_pow(P.q, 2 * static_cast<long>(i));
  return RationalFn(P.q, 0, num, {Rational(1)});
}

RationalFn zeta_W_closed(const NewformParams& P) {
  validate(P);
  Rational mu = (P.lambda + q_pow(P.q, 2)) / q_pow(P.q, 2);
  return RationalFn(P.q, 0, {Rational(1), Rational(-1)}, {Rational(1), -mu});
}

RationalFn zeta_W_Phi(const NewformParams& P) {
  return zeta_W_closed(P) * RationalFn::lfactor_one(P.q);
}

RationalFn functional_lhs(const NewformParams& P) {
  return RationalFn::monomial(P.q, q_pow(P.q, P.N), P.N) *
         zeta_W_Phi(P).subst_one_minus_s();
}

NewformClassification classify(const NewformParams& P) {
  validate(P);
  NewformClassification out;
  out.Z_W = zeta_W_closed(P);
  RationalFn Zphi = zeta_W_Phi(P);
  out.gamma = functional_lhs(P) / Zphi;

  bool is_zero = P.lambda == 0;
  bool is_minus_q2 = P.lambda == -q_pow(P.q, 2);
  out.accepted = is_zero || is_minus_q2;
  check(out.accepted == out.Z_W.is_laurent_polynomial(),
        "Laurent test disagrees with the eigenvalue dichotomy");

  RationalFn Lone = RationalFn::lfactor_one(P.q);   // 1 / (1 - X)
  RationalFn Ltriv = RationalFn::one(P.q);          // 1
  // Matching candidate: lambda = 0 pairs with 1/(1-X), lambda = -q^2 with 1.
  // Off the dichotomy neither candidate can rescue the functional equation;
  // keep the computation honest by running it with Lone anyway.
  RationalFn Lmain = is_minus_q2 ? Ltriv : Lone;
  RationalFn Lswap = is_minus_q2 ? Lone : Ltriv;

  out.L = Lmain;
  out.epsilon = out.gamma * Lmain / Lmain.subst_one_minus_s();
  out.epsilon_monomial = out.epsilon.as_power_monomial();
  out.epsilon_swapped = out.gamma * Lswap / Lswap.subst_one_minus_s();
  out.swapped_is_monomial = out.epsilon_swapped.as_power_monomial().has_value();

  if (!out.accepted)
    out.note = "zeta closed form is not a Laurent polynomial; no newform with this eigenvalue";
  return out;
}

}  // namespace u21
