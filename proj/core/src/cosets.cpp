#include "u21/cosets.hpp"

#include <exception>

namespace u21 {

const char* kind_name(CosetKind k) {
  return k == CosetKind::hecke ? "hecke" : "level";
}

SubgroupId CosetRepList::cap() const {
  if (kind == CosetKind::hecke) return {SubgroupId::hecke_cap, n};
  return {SubgroupId::level_cap, n};
}

SubgroupId CosetRepList::source() const {
  if (kind == CosetKind::hecke) return {SubgroupId::K_n, n};
  return {SubgroupId::K_n, n - 1};
}

std::size_t CosetRepList::expected_count() const {
  auto q = static_cast<std::size_t>(F.p);
  return kind == CosetKind::hecke ? (q + 1) * q * q * q : (q + 1) * q * q;
}

namespace {

long hecke_index_A(long p, long a0, long b0, long j) { return (a0 * p + b0) * p + j; }
long hecke_index_B(long p, long a0, long b0, long j) {
  return p * p * p + (a0 * p + b0) * p * p + j;
}
long level_index_A(long p, long c0, long c1) { return c0 * p + c1; }
long level_index_B(long p, long c0, long c1, long j) {
  return p * p + (c0 * p + c1) * p + j;
}

}  // namespace

CosetRepList hecke_reps(const LocalField& F, long n) {
  require(n >= 1, "hecke_reps needs n >= 1");
  long p = F.p;
  CosetRepList L{CosetKind::hecke, F, n, {}};
  L.reps.reserve(L.expected_count());
  GroupElem tn = make_tn(F, n);
  for (long a0 = 0; a0 < p; ++a0)
    for (long b0 = 0; b0 < p; ++b0) {
      QuadExtElem y(F, a0, b0);
      for (long j = 0; j < p; ++j)
        L.reps.push_back(tn * u_param(y, Rational(j) * F.pi_pow(1 - n)));
    }
  for (long a0 = 0; a0 < p; ++a0)
    for (long b0 = 0; b0 < p; ++b0) {
      QuadExtElem y(F, a0, b0);
      for (long j = 0; j < p * p; ++j)
        L.reps.push_back(u_param(y, Rational(j) * F.pi_pow(-n)));
    }
  check(L.reps.size() == L.expected_count(), "hecke_reps count mismatch");
  SubgroupId src = L.source();
  for (const GroupElem& r : L.reps)
    check(membership(r, src), "hecke representative left K_n");
  return L;
}

CosetRepList level_reps(const LocalField& F, long n) {
  require(n >= 2, "level_reps needs n >= 2");
  long p = F.p;
  CosetRepList L{CosetKind::level, F, n, {}};
  L.reps.reserve(L.expected_count());
  GroupElem tn1 = make_tn(F, n - 1);
  for (long c0 = 0; c0 < p; ++c0)
    for (long c1 = 0; c1 < p; ++c1) {
      QuadExtElem y = QuadExtElem(F, c0, c1) * F.pi_pow(n - 1);
      L.reps.push_back(tn1 * uhat_param(y, Rational(0)));
    }
  for (long c0 = 0; c0 < p; ++c0)
    for (long c1 = 0; c1 < p; ++c1) {
      QuadExtElem y = QuadExtElem(F, c0, c1) * F.pi_pow(n - 1);
      for (long j = 0; j < p; ++j)
        L.reps.push_back(uhat_param(y, Rational(j) * F.pi_pow(n - 1)));
    }
  check(L.reps.size() == L.expected_count(), "level_reps count mismatch");
  SubgroupId src = L.source();
  for (const GroupElem& r : L.reps)
    check(membership(r, src), "level representative left K_(n-1)");
  return L;
}

namespace {

// Canonical digit j in [0, p) of the sqrt(eps)-part of w through the window
// p^i / p^(i+1), i.e. val(w.b - j p^i) >= i + 1.
long imag_digit(const QuadExtElem& w, long i) {
  return residue_of(w.F, w.b * w.F.pi_pow(-i), 1);
}

// Family A (corner flip) applies iff the (3,3) entry drops below the units;
// otherwise the loose sqrt(eps)-part of k13/k33 is stripped with an upper
// unipotent.  Either way the result lands in K', where the second strip
// u(y, z) is read off the (1,2) and then (1,3) columns.
std::size_t reduce_hecke_fast(const CosetRepList& L, const GroupElem& k) {
  const LocalField& F = L.F;
  long n = L.n, p = F.p;
  bool famA = k.at(2, 2).val_ge(1);
  long j2 = 0;
  std::optional<GroupElem> kp;
  if (famA) {
    kp = make_tn(F, n) * k;
  } else {
    QuadExtElem w = k.at(0, 2) * k.at(2, 2).inverse();
    j2 = imag_digit(w, -n);
    QuadExtElem y(F, Rational(0), Rational(-j2) * F.pi_pow(-n));
    kp = make_u(QuadExtElem::zero(F), y) * k;
  }
  QuadExtElem w2 = kp->at(0, 1) * kp->at(1, 1).inverse();
  ResiduePair d = residue_pair(w2, 1);
  GroupElem qm = u_param(QuadExtElem(F, d.a, d.b), Rational(0)).inverse() * *kp;
  QuadExtElem w3 = qm.at(0, 2) * qm.at(2, 2).inverse();
  long j1 = imag_digit(w3, 1 - n);
  long idx = famA ? hecke_index_A(p, d.a, d.b, j1)
                  : hecke_index_B(p, d.a, d.b, j2 + p * j1);
  return static_cast<std::size_t>(idx);
}

// Mirror image through the (1,1) corner; no z stage because the (3,1) entry
// of the stripped element is already two levels deep.
std::size_t reduce_level_fast(const CosetRepList& L, const GroupElem& k) {
  const LocalField& F = L.F;
  long n = L.n, p = F.p;
  bool famA = k.at(0, 0).val_ge(1);
  long j = 0;
  std::optional<GroupElem> kp;
  if (famA) {
    kp = make_tn(F, n - 1) * k;
  } else {
    QuadExtElem w0 = k.at(2, 0) * k.at(0, 0).inverse();
    j = imag_digit(w0, n - 1);
    QuadExtElem y(F, Rational(0), Rational(-j) * F.pi_pow(n - 1));
    kp = make_uhat(QuadExtElem::zero(F), y) * k;
  }
  QuadExtElem w = kp->at(1, 0) * kp->at(0, 0).inverse() * F.pi_pow(1 - n);
  ResiduePair d = residue_pair(w, 1);
  long idx = famA ? level_index_A(p, d.a, d.b) : level_index_B(p, d.a, d.b, j);
  return static_cast<std::size_t>(idx);
}

}  // namespace

std::optional<std::size_t> coset_reduce(const CosetRepList& L, const GroupElem& k) {
  SubgroupId cap = L.cap();
  try {
    std::size_t idx = L.kind == CosetKind::hecke ? reduce_hecke_fast(L, k)
                                                 : reduce_level_fast(L, k);
    if (idx < L.reps.size() && membership(L.reps[idx].inverse() * k, cap))
      return idx;
  } catch (const std::exception&) {
    // digit extraction rejected the input; the scan below settles it
  }
  for (std::size_t i = 0; i < L.reps.size(); ++i)
    if (membership(L.reps[i].inverse() * k, cap)) return i;
  return std::nullopt;
}

DistinctReport check_distinct(const CosetRepList& L) {
  DistinctReport rep;
  SubgroupId cap = L.cap();
  std::vector<GroupElem> inv;
  inv.reserve(L.reps.size());
  for (const GroupElem& r : L.reps) inv.push_back(r.inverse());
  for (std::size_t i = 0; i < L.reps.size(); ++i)
    for (std::size_t j = i + 1; j < L.reps.size(); ++j) {
      ++rep.pairs;
      if (membership(inv[i] * L.reps[j], cap)) {
        rep.ok = false;
        rep.witness = std::string(kind_name(L.kind)) + " reps " + std::to_string(i) +
                      " and " + std::to_string(j) + " share a coset";
        return rep;
      }
    }
  return rep;
}

CompletenessReport check_complete_randomized(const CosetRepList& L, long trials,
                                             std::uint64_t seed) {
  CompletenessReport rep;
  rep.trials = trials;
  Rng rng(seed);
  long src_n = L.source().n;
  for (long t = 0; t < trials; ++t) {
    GroupElem k = random_Kn(L.F, src_n, rng);
    if (!coset_reduce(L, k)) {
      ++rep.failures;
      if (rep.witness.empty())
        rep.witness = std::string(kind_name(L.kind)) + " trial " + std::to_string(t) +
                      ": no representative matched";
    }
  }
  rep.ok = rep.failures == 0;
  return rep;
}

}  // namespace u21
