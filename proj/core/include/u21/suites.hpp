#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "u21/cosets.hpp"
#include "u21/lattice.hpp"
#include "u21/newform.hpp"

namespace u21 {

// One named pass/fail verdict; witness describes the first counterexample.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct SuiteReport {
  std::string suite;
  std::string params;
  std::vector<CheckResult> checks;
  long elapsed_ms = 0;

  bool ok() const;
  long failed() const;
};

// Parameter points run concurrently (one task per point) with seeds forked
// deterministically from `seed`, so reports do not depend on scheduling.

struct CosetSuiteOptions {
  std::vector<long> primes{3, 5};
  long hecke_n_lo = 1, hecke_n_hi = 3;
  long level_n_lo = 2, level_n_hi = 3;
  bool distinctness = true;  // pairwise coset separation of the full rep lists
  long trials = 2000;        // random-word reductions per parameter point
  std::uint64_t seed = 1;
  bool parallel = true;
};
SuiteReport run_coset_suite(const CosetSuiteOptions& opt);

struct AnalyticSuiteOptions {
  std::vector<long> primes{3, 5};
  long n_lo = 0, n_hi = 3;    // lattice level range
  long conj_samples = 1000;   // conjugation identity samples per prime
  long fourier_samples = 100; // random transform roundtrips per prime
  long zeta_samples = 1000;   // zeta/f samples per (prime, level)
  std::uint64_t seed = 1;
  bool parallel = true;
};
SuiteReport run_analytic_suite(const AnalyticSuiteOptions& opt);

struct NewformTableOptions {
  std::vector<long> primes{3};
  long N_lo = 2, N_hi = 5;
  long n_pi = 0;
  std::vector<Rational> lambdas;  // empty: {0, -q^2} plus random probes
  long order = 12;                // series-vs-closed-form comparison depth
  long probes = 20;               // eigenvalues sampled off the dichotomy
  std::uint64_t seed = 1;
};
struct NewformRow {
  long q = 0, N = 0, n_pi = 0;
  Rational lambda;
  bool accepted = false;
  std::string Z_W, L, epsilon;
};
struct NewformTable {
  SuiteReport report;
  std::vector<NewformRow> rows;
};
NewformTable run_newform_table(const NewformTableOptions& opt);

}  // namespace u21
