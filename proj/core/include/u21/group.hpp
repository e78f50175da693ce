#pragma once

#include <cstdint>
#include <string>

#include "u21/matrix.hpp"
#include "u21/sampling.hpp"

namespace u21 {

// Element of G = U(2,1)(E/F) = { g in GL_3(E) : t(conj g) J g = J } with
// J = antidiag(1, 1, 1).  Construction validates the defining relation;
// products and inverses of validated elements skip it (closure), and
// validate() re-checks on demand.
struct GroupElem {
  Mat3 m;

  explicit GroupElem(const Mat3& m_, bool checked = true) : m(m_) {
    if (checked)
      require(is_unitary(), "matrix does not satisfy t(conj g) J g = J");
  }

  static GroupElem identity(const LocalField& F) {
    return GroupElem(Mat3::identity(F), false);
  }

  const LocalField& field() const { return m.F; }
  const QuadExtElem& at(int i, int j) const { return m.at(i, j); }

  bool is_unitary() const {
    return m.conj_transpose() * Mat3::J(m.F) * m == Mat3::J(m.F);
  }
  void validate() const { check(is_unitary(), "group element left G"); }

  GroupElem operator*(const GroupElem& o) const { return GroupElem(m * o.m, false); }

  // g^-1 = J t(conj g) J, exact and division-free.
  GroupElem inverse() const {
    Mat3 J = Mat3::J(m.F);
    return GroupElem(J * m.conj_transpose() * J, false);
  }

  bool operator==(const GroupElem& o) const { return m == o.m; }
  bool operator!=(const GroupElem& o) const { return !(*this == o); }
};

// Element of H = U(1,1)(E/F) for the form antidiag(1, 1).
struct GroupElem2 {
  Mat2 m;

  explicit GroupElem2(const Mat2& m_, bool checked = true) : m(m_) {
    if (checked)
      require(is_unitary(), "matrix does not satisfy t(conj h) J h = J");
  }

  static GroupElem2 identity(const LocalField& F) {
    return GroupElem2(Mat2::identity(F), false);
  }

  const LocalField& field() const { return m.F; }
  const QuadExtElem& at(int i, int j) const { return m.at(i, j); }

  bool is_unitary() const {
    return m.conj_transpose() * Mat2::J(m.F) * m == Mat2::J(m.F);
  }

  GroupElem2 operator*(const GroupElem2& o) const { return GroupElem2(m * o.m, false); }
  GroupElem2 inverse() const {
    Mat2 J = Mat2::J(m.F);
    return GroupElem2(J * m.conj_transpose() * J, false);
  }
  // Entrywise Galois conjugate; H is stable under it.
  GroupElem2 conj() const {
    Mat2 r(m.F);
    for (int i = 0; i < 4; ++i) r.e[i] = m.e[i].conj();
    return GroupElem2(r, false);
  }
  QuadExtElem det() const { return m.det(); }

  bool operator==(const GroupElem2& o) const { return m == o.m; }
  bool operator!=(const GroupElem2& o) const { return !(*this == o); }
};

// --- generators -------------------------------------------------------------

// u(x, y) = [[1, x, y], [0, 1, -conj x], [0, 0, 1]]; requires
// y + conj y + x conj x = 0.
GroupElem make_u(const QuadExtElem& x, const QuadExtElem& y);
// Lower-triangular mirror uhat(x, y) = [[1,0,0],[x,1,0],[y,-conj x,1]],
// same constraint.
GroupElem make_uhat(const QuadExtElem& x, const QuadExtElem& y);
// u(x, z sqrt(eps) - x conj(x)/2): the constraint solved with free
// imaginary part z in F.
GroupElem u_param(const QuadExtElem& x, const Rational& z);
GroupElem uhat_param(const QuadExtElem& x, const Rational& z);
// t(a) = diag(a, 1, conj(a)^-1), a in E^x.
GroupElem make_t(const QuadExtElem& a);
// diag(a, b, conj(a)^-1) with b in E^1.
GroupElem make_torus(const QuadExtElem& a, const QuadExtElem& b);
// Central e * I, e in E^1.
GroupElem make_center(const QuadExtElem& e);
// zeta^i = diag(p^i, 1, p^-i).
GroupElem make_zeta_pow(const LocalField& F, long i);
// t_n = [[0,0,p^-n],[0,1,0],[p^n,0,0]], an involution lying in K_n.
GroupElem make_tn(const LocalField& F, long n);

// 2x2 versions for H.
GroupElem2 make_u2(const QuadExtElem& w);     // [[1,w],[0,1]], w + conj w = 0
GroupElem2 make_uhat2(const QuadExtElem& w);  // [[1,0],[w,1]]
GroupElem2 make_t2(const QuadExtElem& a);     // diag(a, conj(a)^-1)
GroupElem2 make_tau(const LocalField& F, long n);  // antidiag(p^-n, p^n)

// H -> G on the outer coordinates: [[a,0,b],[0,1,0],[c,0,d]].
GroupElem embed_H(const GroupElem2& h);

// --- congruence subgroups ----------------------------------------------------

// Tags for the subgroups whose entrywise valuation patterns the library
// knows.  n parameterizes the level where applicable.
struct SubgroupId {
  enum Kind {
    K_n,          // stabilizer of the level-n lattice chain, n >= 0
    K_prime,      // K' = K_n with (1,3) sharpened to p^(1-n), n >= 1
    K_dprime,     // K'' companion for level lowering, n >= 2
    hecke_cap,    // K_n cut with zeta K_n zeta^-1, n >= 1
    level_cap,    // K_(n-1) cut with Z_(n-1) K_n, n >= 2
    upper_u,      // the u(x, y)
    lower_u,      // the uhat(x, y)
    torus,        // diag(a, b, conj(a)^-1)
    center,       // e * I with val(e - 1) >= n
    K_nH,         // 2x2: matrices [[o, p^-n],[p^n, o]] in H
    u_H,          // 2x2 upper unipotent
    uhat_H,       // 2x2 lower unipotent
    torus_H,      // 2x2 diagonal
  };
  Kind kind;
  long n = 0;
};

bool membership(const GroupElem& g, const SubgroupId& s);
bool membership(const GroupElem2& g, const SubgroupId& s);

// --- decompositions ----------------------------------------------------------

// h = t(b) * d(sqrt eps) h1 d(sqrt eps)^-1 with h1 in SL_2(F); b is the
// canonical Hilbert-90 preimage of det h.  Diagonal h short-circuits to
// (h11, identity).
struct HDecomp {
  QuadExtElem b;
  Mat2Q h1;
};
HDecomp decompose_H(const GroupElem2& h);

// h = u * t(a) * k with u upper unipotent in H and k in K_{n,H}.
// The decomposition is found from the bottom row when val(h21) - val(h22)
// clears the level, and otherwise after a single twist by the involution
// tau_n in K_{n,H}; val_E(a) is an invariant of h.
struct HIwasawa {
  GroupElem2 u;
  QuadExtElem a;
  GroupElem2 k;
};
HIwasawa iwasawa_H(const GroupElem2& h, long n);

// --- random elements ---------------------------------------------------------

// Random words of bounded length in subgroup generators; every return value
// is membership-checked before being handed out.
GroupElem random_Kn(const LocalField& F, long n, Rng& rng);
GroupElem2 random_KnH(const LocalField& F, long n, Rng& rng);
// Random element of the GL_2(F) stabilizer of the lattice pair
// (p^n, o) (entry pattern [[o, p^-n],[p^n, o]], unit determinant).
Mat2Q random_lattice_stabilizer(const LocalField& F, long n, Rng& rng);

// --- identity suite ----------------------------------------------------------

struct IdentityReport {
  long samples = 0;
  long failures = 0;
  std::string witness;
};

// Exercises the generator bookkeeping used by the coset decompositions:
// t_n^2 = 1, zeta t_n = t_(n-1), the flip t_m u(x,y) t_m = uhat(...) with its
// valuation shift, and conjugation of (co)unipotents by powers of zeta.
IdentityReport verify_conjugation_identities(const LocalField& F, long n_max,
                                             long samples, std::uint64_t seed);

}  // namespace u21
