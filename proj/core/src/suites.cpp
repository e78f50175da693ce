#include "u21/suites.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <sstream>

namespace u21 {

bool SuiteReport::ok() const { return failed() == 0; }

long SuiteReport::failed() const {
  long n = 0;
  for (const auto& c : checks)
    if (!c.pass) ++n;
  return n;
}

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
      .count();
}

std::string join_longs(const std::vector<long>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

using Task = std::function<std::vector<CheckResult>()>;

// A throwing task must not take the whole suite down: it becomes one failed
// check carrying the exception text.
Task guarded(std::string label, std::function<std::vector<CheckResult>()> body) {
  return [label = std::move(label), body = std::move(body)]() -> std::vector<CheckResult> {
    try {
      return body();
    } catch (const std::exception& e) {
      return {CheckResult{label, false, std::string("exception: ") + e.what()}};
    }
  };
}

// Tasks run under std::async; results are concatenated in submission order,
// making the report independent of scheduling.
std::vector<CheckResult> run_tasks(std::vector<Task> tasks, bool parallel) {
  std::vector<CheckResult> out;
  if (parallel && tasks.size() > 1) {
    std::vector<std::future<std::vector<CheckResult>>> futs;
    futs.reserve(tasks.size());
    for (auto& t : tasks) futs.push_back(std::async(std::launch::async, t));
    for (auto& f : futs) {
      std::vector<CheckResult> r = f.get();
      out.insert(out.end(), r.begin(), r.end());
    }
  } else {
    for (auto& t : tasks) {
      std::vector<CheckResult> r = t();
      out.insert(out.end(), r.begin(), r.end());
    }
  }
  return out;
}

// --- coset suite -------------------------------------------------------------

std::vector<CheckResult> coset_point(CosetKind kind, long p, long n, bool distinct,
                                     long trials, std::uint64_t seed) {
  std::vector<CheckResult> out;
  LocalField F(p);
  CosetRepList L = kind == CosetKind::hecke ? hecke_reps(F, n) : level_reps(F, n);
  std::string base = std::string(kind_name(kind)) + "-p" + std::to_string(p) + "-n" +
                     std::to_string(n);
  bool count_ok = L.reps.size() == L.expected_count();
  out.push_back({base + "-count", count_ok,
                 count_ok ? "" : "got " + std::to_string(L.reps.size())});
  if (distinct) {
    DistinctReport d = check_distinct(L);
    out.push_back({base + "-distinct", d.ok, d.witness});
  }
  if (trials > 0) {
    CompletenessReport c = check_complete_randomized(L, trials, seed);
    out.push_back({base + "-complete", c.ok, c.witness});
  }
  return out;
}

}  // namespace

SuiteReport run_coset_suite(const CosetSuiteOptions& opt) {
  auto t0 = Clock::now();
  SuiteReport rep;
  rep.suite = "cosets";
  {
    std::ostringstream os;
    os << "primes=" << join_longs(opt.primes) << " hecke_n=" << opt.hecke_n_lo << ".."
       << opt.hecke_n_hi << " level_n=" << opt.level_n_lo << ".." << opt.level_n_hi
       << " distinctness=" << (opt.distinctness ? 1 : 0) << " trials=" << opt.trials
       << " seed=" << opt.seed;
    rep.params = os.str();
  }
  std::vector<Task> tasks;
  std::uint64_t point = 0;
  for (long p : opt.primes) {
    for (long n = opt.hecke_n_lo; n <= opt.hecke_n_hi; ++n) {
      std::uint64_t sd = Rng::mix(opt.seed, ++point);
      bool dis = opt.distinctness;
      long tr = opt.trials;
      tasks.push_back(guarded("hecke-p" + std::to_string(p) + "-n" + std::to_string(n),
                              [=] { return coset_point(CosetKind::hecke, p, n, dis, tr, sd); }));
    }
    for (long n = opt.level_n_lo; n <= opt.level_n_hi; ++n) {
      std::uint64_t sd = Rng::mix(opt.seed, ++point);
      bool dis = opt.distinctness;
      long tr = opt.trials;
      tasks.push_back(guarded("level-p" + std::to_string(p) + "-n" + std::to_string(n),
                              [=] { return coset_point(CosetKind::level, p, n, dis, tr, sd); }));
    }
  }
  rep.checks = run_tasks(std::move(tasks), opt.parallel);
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

// --- analytic suite ----------------------------------------------------------

namespace {

GroupElem2 random_H(const LocalField& F, Rng& rng) {
  GroupElem2 h = GroupElem2::identity(F);
  long len = rng.uniform(1, 6);
  for (long i = 0; i < len; ++i) {
    switch (rng.uniform(0, 3)) {
      case 0: h = h * make_u2(rng.pure_imaginary(F, -2, 2)); break;
      case 1: h = h * make_uhat2(rng.pure_imaginary(F, -2, 2)); break;
      case 2: h = h * make_t2(rng.ext_with_val(F, rng.uniform(-2, 0))); break;
      default: h = h * make_tau(F, rng.uniform(0, 2)); break;
    }
  }
  return h;
}

std::vector<CheckResult> conjugation_point(long p, long samples, std::uint64_t seed) {
  LocalField F(p);
  IdentityReport r = verify_conjugation_identities(F, 3, samples, seed);
  return {CheckResult{"conjugation-p" + std::to_string(p), r.failures == 0, r.witness}};
}

std::vector<CheckResult> fourier_point(long p, long n_lo, long n_hi, long samples,
                                       std::uint64_t seed) {
  std::vector<CheckResult> out;
  LocalField F(p);
  std::string base = "fourier-p" + std::to_string(p);
  {
    bool ok = true;
    std::string w;
    for (long n = n_lo; n <= n_hi && ok; ++n) {
      LatticeFn hat = fourier_hat(LatticeFn::phi_n(F, n));
      LatticeFn expect =
          LatticeFn::box(F, 0, 0, 0, -n).scaled(F.pi_pow(-n));
      if (!equal_pointwise(hat, expect)) {
        ok = false;
        w = "phi_" + std::to_string(n);
      }
    }
    out.push_back({base + "-closed-form", ok, w});
  }
  Rng rng(seed);
  {
    bool ok = true;
    std::string w;
    for (long i = 0; i < samples && ok; ++i) {
      LatticeFn f = random_lattice_fn(F, rng, true);
      if (!equal_pointwise(fourier_hat(fourier_hat(f)), f)) {
        ok = false;
        w = "sample " + std::to_string(i);
      }
    }
    out.push_back({base + "-double-transform", ok, w});
  }
  {
    Mat2Q dneg(-1, 0, 0, 1);
    bool ok = true;
    std::string w;
    for (long i = 0; i < samples && ok; ++i) {
      LatticeFn f = random_lattice_fn(F, rng, true);
      if (!equal_pointwise(gl2_act(dneg, fourier_star(f)), fourier_hat(f))) {
        ok = false;
        w = "sample " + std::to_string(i);
      }
    }
    out.push_back({base + "-star-relation", ok, w});
  }
  {
    bool ok =
        gcd_generator({RationalFn::lfactor_one(p), RationalFn::one(p)}) ==
            RationalFn::lfactor_one(p) &&
        gcd_generator({RationalFn(p, 0, {Rational(1), Rational(-1)}, {Rational(1)}),
                       RationalFn::monomial(p, Rational(1), 1)}) == RationalFn::one(p);
    out.push_back({base + "-gcd-normalization", ok, ok ? "" : "pinned pair"});
  }
  return out;
}

std::vector<CheckResult> zeta_point(long p, long n, long samples, std::uint64_t seed) {
  std::vector<CheckResult> out;
  LocalField F(p);
  Rng rng(seed);
  std::string base = "zeta-p" + std::to_string(p) + "-n" + std::to_string(n);
  LatticeFn phi = LatticeFn::phi_n(F, n);
  LatticeFn phihat = fourier_hat(phi);
  LatticeFn phistar = fourier_star(phi);
  RationalFn lone = RationalFn::lfactor_one(p);
  RationalFn hat_expect = RationalFn::monomial(p, q_pow(p, -n), -n) * lone;
  {
    bool ok = true;
    std::string w;
    for (long i = 0; i < samples && ok; ++i) {
      Mat2Q g = random_lattice_stabilizer(F, n, rng);
      if (z_integral(g, phi) != lone) {
        ok = false;
        w = "phi sample " + std::to_string(i);
      } else if (z_integral(g, phihat) != hat_expect) {
        ok = false;
        w = "phihat sample " + std::to_string(i);
      }
    }
    out.push_back({base + "-stabilizer-invariance", ok, w});
  }
  {
    bool ok = true;
    std::string w;
    RationalFn dual_expect = RationalFn::monomial(p, q_pow(p, n), n) *
                             lone.subst_one_minus_s();
    for (long i = 0; i < samples && ok; ++i) {
      GroupElem2 k = random_KnH(F, n, rng);
      if (f_function(k, phi) != lone) {
        ok = false;
        w = "f sample " + std::to_string(i);
      } else if (f_function(k, phihat).subst_one_minus_s() != dual_expect) {
        ok = false;
        w = "dual sample " + std::to_string(i);
      }
    }
    out.push_back({base + "-newvector-values", ok, w});
  }
  {
    bool ok = true;
    std::string w;
    for (long i = 0; i < samples && ok; ++i) {
      GroupElem2 h = random_H(F, rng);
      QuadExtElem a = rng.ext_with_val(F, rng.uniform(-2, 1));
      RationalFn lhs = f_function(make_t2(a) * h, phi);
      RationalFn rhs = RationalFn::monomial(p, Rational(1), *a.val()) * f_function(h, phi);
      if (lhs != rhs) {
        ok = false;
        w = "sample " + std::to_string(i);
      }
    }
    out.push_back({base + "-torus-equivariance", ok, w});
  }
  {
    bool ok = true;
    std::string w;
    for (long i = 0; i < samples && ok; ++i) {
      GroupElem2 h = random_H(F, rng);
      if (f_function(h.conj(), phistar) != f_function(h, phihat)) {
        ok = false;
        w = "sample " + std::to_string(i);
      }
    }
    out.push_back({base + "-conjugate-star", ok, w});
  }
  return out;
}

}  // namespace

SuiteReport run_analytic_suite(const AnalyticSuiteOptions& opt) {
  auto t0 = Clock::now();
  SuiteReport rep;
  rep.suite = "analytic";
  {
    std::ostringstream os;
    os << "primes=" << join_longs(opt.primes) << " n=" << opt.n_lo << ".." << opt.n_hi
       << " conj_samples=" << opt.conj_samples
       << " fourier_samples=" << opt.fourier_samples
       << " zeta_samples=" << opt.zeta_samples << " seed=" << opt.seed;
    rep.params = os.str();
  }
  std::vector<Task> tasks;
  std::uint64_t point = 0;
  for (long p : opt.primes) {
    std::uint64_t sd1 = Rng::mix(opt.seed, ++point);
    long cs = opt.conj_samples;
    tasks.push_back(guarded("conjugation-p" + std::to_string(p),
                            [=] { return conjugation_point(p, cs, sd1); }));
    std::uint64_t sd2 = Rng::mix(opt.seed, ++point);
    long fs = opt.fourier_samples;
    long nlo = opt.n_lo, nhi = opt.n_hi;
    tasks.push_back(guarded("fourier-p" + std::to_string(p),
                            [=] { return fourier_point(p, nlo, nhi, fs, sd2); }));
    for (long n = opt.n_lo; n <= opt.n_hi; ++n) {
      std::uint64_t sd3 = Rng::mix(opt.seed, ++point);
      long zs = opt.zeta_samples;
      tasks.push_back(guarded("zeta-p" + std::to_string(p) + "-n" + std::to_string(n),
                              [=] { return zeta_point(p, n, zs, sd3); }));
    }
  }
  rep.checks = run_tasks(std::move(tasks), opt.parallel);
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

// --- newform table -----------------------------------------------------------

namespace {

std::string ratstr(const Rational& r) { return r.get_str(); }

}  // namespace

NewformTable run_newform_table(const NewformTableOptions& opt) {
  auto t0 = Clock::now();
  NewformTable T;
  T.report.suite = "newform-table";
  {
    std::ostringstream os;
    os << "primes=" << join_longs(opt.primes) << " N=" << opt.N_lo << ".." << opt.N_hi
       << " n_pi=" << opt.n_pi << " order=" << opt.order;
    if (opt.lambdas.empty())
      os << " probes=" << opt.probes;
    else {
      os << " lambdas=";
      for (std::size_t i = 0; i < opt.lambdas.size(); ++i)
        os << (i ? "," : "") << ratstr(opt.lambdas[i]);
    }
    os << " seed=" << opt.seed;
    T.report.params = os.str();
  }
  for (long q : opt.primes) {
    Rational mq2 = -q_pow(q, 2);
    std::vector<Rational> lambdas = opt.lambdas;
    if (lambdas.empty()) {
      lambdas = {Rational(0), mq2, Rational(1), Rational(-1), q_pow(q, 2)};
      Rng rng(Rng::mix(opt.seed, static_cast<std::uint64_t>(q)));
      for (long i = 0; i < opt.probes; ++i) {
        Rational l(rng.nonzero(3 * q * q), rng.uniform(1, 3));
        l.canonicalize();
        if (l == 0 || l == mq2) l += Rational(1, 7);
        lambdas.push_back(l);
      }
    }
    for (long N = opt.N_lo; N <= opt.N_hi; ++N) {
      for (const Rational& l : lambdas) {
        NewformParams P{q, N, opt.n_pi, l};
        std::string name = "newform-q" + std::to_string(q) + "-N" + std::to_string(N) +
                           "-l" + ratstr(l);
        bool pass = true;
        std::string w;
        try {
          if (!check_hecke_relation(P, opt.order)) {
            pass = false;
            w = "Hecke recurrence failed";
          }
          if (pass && zeta_W_closed(P).series_expand(opt.order) !=
                          zeta_W_series(P, opt.order).series_expand(opt.order)) {
            pass = false;
            w = "series disagrees with closed form";
          }
          NewformClassification cls = classify(P);
          if (pass) {
            bool dichotomy = l == 0 || l == mq2;
            if (cls.accepted != dichotomy) {
              pass = false;
              w = "acceptance off the eigenvalue dichotomy";
            } else if (cls.accepted) {
              RationalFn target = RationalFn::monomial(q, q_pow(q, P.N), P.N);
              if (zeta_W_Phi(P) != cls.L) {
                pass = false;
                w = "zeta integral differs from the assigned L-factor";
              } else if (cls.epsilon != target) {
                pass = false;
                w = "epsilon is not q^N X^N";
              } else if (cls.swapped_is_monomial) {
                pass = false;
                w = "swapped L-candidate also yields a monomial";
              } else if (cls.epsilon * cls.epsilon.subst_one_minus_s() !=
                         RationalFn::one(q)) {
                pass = false;
                w = "epsilon involution failed";
              }
            } else if (cls.Z_W.is_laurent_polynomial()) {
              pass = false;
              w = "rejected eigenvalue with Laurent zeta";
            }
          }
          T.rows.push_back({q, N, opt.n_pi, l, cls.accepted, cls.Z_W.str(),
                            cls.L.str(), cls.epsilon.str()});
        } catch (const std::exception& e) {
          pass = false;
          w = std::string("exception: ") + e.what();
        }
        T.report.checks.push_back({name, pass, w});
      }
    }
  }
  T.report.elapsed_ms = ms_since(t0);
  return T;
}

}  // namespace u21
