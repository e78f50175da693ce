#pragma once

#include <optional>
#include <string>
#include <vector>

#include "u21/ratfun.hpp"

namespace u21 {

// A level-N newform candidate on the unramified unitary group in three
// variables: residue field size q (odd prime), level N >= 2 strictly above
// the exceptional range n_pi in {0, 1}, and the eigenvalue lambda of the
// level-N Hecke operator acting on the newvector.
struct NewformParams {
  long q = 3;
  long N = 2;
  long n_pi = 0;
  Rational lambda = 0;
};

// Throws std::invalid_argument on out-of-range parameters.
void validate(const NewformParams& P);

// c_0 .. c_K of the coefficient sequence attached to the newvector:
// c_0 = 1, q^4 c_1 = lambda, and q^4 c_(i+1) = (lambda + q^2) c_i for i >= 1.
std::vector<Rational> coefficient_seq(const NewformParams& P, long K);

// The one-step Hecke recurrence lambda c_i = c'_(i-1) + q^4 c_(i+1) with the
// companion sequence c'_i = -q^2 c_(i+1), c'_(-1) = 0, checked for i <= K.
bool check_hecke_relation(const NewformParams& P, long K);

// Truncation of sum_i c_i q^(2i) X^i after the X^K term.
RationalFn zeta_W_series(const NewformParams& P, long K);
// Its closed form (1 - X) / (1 - ((lambda + q^2)/q^2) X).
RationalFn zeta_W_closed(const NewformParams& P);
// The zeta integral against the level-N pair: closed form / (1 - X).
RationalFn zeta_W_Phi(const NewformParams& P);
// q^N X^N times the s -> 1-s image of zeta_W_Phi.
RationalFn functional_lhs(const NewformParams& P);

// Endgame of the functional equation at level N.  The closed form of the
// zeta function is Laurent iff lambda is 0 or -q^2; those two cases receive
// the L-factors 1/(1-X) and 1 respectively, and the resulting epsilon
// factor gamma L / subst(L) collapses to the monomial q^N X^N.  Exchanging
// the two L-candidates destroys monomiality, which pins the assignment.
struct NewformClassification {
  bool accepted = false;  // lambda in {0, -q^2}
  RationalFn Z_W;         // closed form of the series
  RationalFn L;           // assigned L-factor (the matching candidate)
  RationalFn gamma;       // functional_lhs / zeta_W_Phi
  RationalFn epsilon;     // gamma * L / subst(L)
  std::optional<RationalFn::Monomial> epsilon_monomial;
  RationalFn epsilon_swapped;  // epsilon computed with the other L-candidate
  bool swapped_is_monomial = false;
  std::string note;
};
NewformClassification classify(const NewformParams& P);

}  // namespace u21
