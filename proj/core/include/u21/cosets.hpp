#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "u21/group.hpp"

namespace u21 {

enum class CosetKind { hecke, level };

const char* kind_name(CosetKind k);

// A full system of left-coset representatives for one of the two
// decompositions behind the Hecke and level-lowering operators:
//
//   hecke:  K_n  = union of  r * (K_n cap zeta K_n zeta^-1),  n >= 1,
//           with (q+1) q^3 representatives  t_n u(y, z)  and  u(y, b);
//   level:  K_(n-1)  = union of  r * (K_(n-1) cap Z_(n-1) K_n),  n >= 2,
//           with (q+1) q^2 representatives  t_(n-1) uhat(y, 0)  and
//           uhat(y, x).
//
// Representatives are enumerated in a fixed order so the reducer can address
// them arithmetically from the canonical digits it extracts.
struct CosetRepList {
  CosetKind kind;
  LocalField F;
  long n;
  std::vector<GroupElem> reps;

  SubgroupId cap() const;     // subgroup the reps are distinct modulo
  SubgroupId source() const;  // group the reps cover
  std::size_t expected_count() const;
};

CosetRepList hecke_reps(const LocalField& F, long n);  // n >= 1
CosetRepList level_reps(const LocalField& F, long n);  // n >= 2

// Index of the unique representative r with r^-1 k in cap().  The fast path
// reads canonical digits off k (two unipotent strips around an optional
// corner flip) and is confirmed by an exact membership test; an exhaustive
// scan backs it up.  nullopt means k lies in no coset, i.e. outside the
// source group.
std::optional<std::size_t> coset_reduce(const CosetRepList& L, const GroupElem& k);

struct DistinctReport {
  bool ok = true;
  std::size_t pairs = 0;
  std::string witness;
};
// Pairwise check that no two representatives fall in the same coset.
DistinctReport check_distinct(const CosetRepList& L);

struct CompletenessReport {
  bool ok = true;
  long trials = 0;
  long failures = 0;
  std::string witness;
};
// Reduces `trials` random words from the source group and checks each lands
// on a representative (uniqueness is check_distinct's half).
CompletenessReport check_complete_randomized(const CosetRepList& L, long trials,
                                             std::uint64_t seed);

}  // namespace u21
