// Acceptance gate for the verification library: eight end-to-end criteria,
// one line each.  Exits nonzero if any criterion fails.  Time budgets are
// enforced in code where the criterion includes one.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "u21/cosets.hpp"
#include "u21/lattice.hpp"
#include "u21/newform.hpp"
#include "u21/sampling.hpp"

#include "gcd_oracle.hpp"

using namespace u21;

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

std::string point_name(const CosetRepList& L) {
    std::ostringstream os;
    os << kind_name(L.kind) << " p=" << L.F.p << " n=" << L.n;
    return os.str();
}

std::vector<CosetRepList> coset_points(const LocalField& F) {
    std::vector<CosetRepList> lists;
    for (long n = 1; n <= 3; ++n) lists.push_back(hecke_reps(F, n));
    for (long n = 2; n <= 3; ++n) lists.push_back(level_reps(F, n));
    return lists;
}

// 1. Every representative list has the predicted cardinality and is pairwise
//    distinct modulo its cap subgroup, within two minutes per parameter point.
bool coset_distinctness(std::string& w) {
    for (long p : {3L, 5L}) {
        LocalField F(p);
        for (const auto& L : coset_points(F)) {
            auto t0 = Clock::now();
            if (L.reps.size() != L.expected_count()) {
                w = point_name(L) + ": expected " + std::to_string(L.expected_count()) +
                    " representatives, got " + std::to_string(L.reps.size());
                return false;
            }
            DistinctReport d = check_distinct(L);
            long ms = ms_since(t0);
            if (!d.ok) {
                w = point_name(L) + ": " + d.witness;
                return false;
            }
            std::size_t m = L.reps.size();
            if (d.pairs != m * (m - 1) / 2) {
                w = point_name(L) + ": compared " + std::to_string(d.pairs) + " pairs, not " +
                    std::to_string(m * (m - 1) / 2);
                return false;
            }
            if (ms >= 120000) {
                w = point_name(L) + ": exceeded the two-minute budget (" + std::to_string(ms) +
                    " ms)";
                return false;
            }
        }
    }
    return true;
}

// 2. Ten thousand random source-group words per parameter point reduce onto a
//    representative with an exact membership certificate, in under five
//    minutes overall.
bool coset_completeness(std::string& w) {
    auto t0 = Clock::now();
    std::uint64_t seed = 2026;
    for (long p : {3L, 5L}) {
        LocalField F(p);
        for (const auto& L : coset_points(F)) {
            CompletenessReport r = check_complete_randomized(L, 10000, seed++);
            if (!r.ok || r.failures != 0 || r.trials != 10000) {
                w = point_name(L) + ": " + std::to_string(r.failures) + "/" +
                    std::to_string(r.trials) + " reductions failed; " + r.witness;
                return false;
            }
        }
    }
    long ms = ms_since(t0);
    if (ms >= 300000) {
        w = "exceeded the five-minute budget (" + std::to_string(ms) + " ms)";
        return false;
    }
    return true;
}

// 3. The generator bookkeeping (involutions, the zeta shift, unipotent
//    flips) holds on at least a thousand random samples per prime, exactly.
bool conjugation_identities(std::string& w) {
    for (long p : {3L, 5L}) {
        LocalField F(p);
        IdentityReport r = verify_conjugation_identities(F, 3, 1000, 40 + p);
        if (r.samples < 1000 || r.failures != 0) {
            std::ostringstream os;
            os << "p=" << p << ": " << r.failures << "/" << r.samples << " failures; "
               << r.witness;
            w = os.str();
            return false;
        }
    }
    return true;
}

// 4. Fourier layer: the closed form of hat(Phi_n), the double-transform
//    involution, and the reflection identity d(-1) Phi^* = Phi-hat, on the
//    standard family and a hundred random Schwartz functions per prime.
bool fourier_layer(std::string& w) {
    for (long p : {3L, 5L}) {
        LocalField F(p);
        for (long n = 0; n <= 3; ++n) {
            LatticeFn phi = LatticeFn::phi_n(F, n);
            LatticeFn expected =
                LatticeFn::box(F, Rational(0), 0, Rational(0), -n).scaled(F.pi_pow(-n));
            if (!equal_pointwise(fourier_hat(phi), expected)) {
                w = "hat(Phi_" + std::to_string(n) + ") misses its closed form at p=" +
                    std::to_string(p);
                return false;
            }
        }
        Rng rng(70 + p);
        for (int i = 0; i < 100; ++i) {
            LatticeFn f = random_lattice_fn(F, rng, true);
            if (!equal_pointwise(fourier_hat(fourier_hat(f)), f)) {
                w = "double transform failed on sample " + std::to_string(i) + " at p=" +
                    std::to_string(p);
                return false;
            }
            LatticeFn reflected = gl2_act(Mat2Q(-1, 0, 0, 1), fourier_star(f));
            if (!equal_pointwise(reflected, fourier_hat(f))) {
                w = "reflection identity failed on sample " + std::to_string(i) + " at p=" +
                    std::to_string(p);
                return false;
            }
        }
    }
    return true;
}

// 5. Newvector values: f(s, k, Phi_n) = 1/(1 - X) and the dual value
//    f(1-s, k, hat Phi_n) = q^n X^n L(1-s, 1), for a thousand random compact
//    elements per level and prime.
bool newvector_values(std::string& w) {
    for (long p : {3L, 5L}) {
        LocalField F(p);
        Rng rng(90 + p);
        RationalFn L = RationalFn::lfactor_one(p);
        for (long n = 0; n <= 3; ++n) {
            LatticeFn phi = LatticeFn::phi_n(F, n);
            LatticeFn hat = fourier_hat(phi);
            RationalFn dual = RationalFn::monomial(p, q_pow(p, n), n) * L.subst_one_minus_s();
            for (int i = 0; i < 1000; ++i) {
                GroupElem2 k = random_KnH(F, n, rng);
                if (f_function(k, phi) != L) {
                    w = "f(k, Phi_" + std::to_string(n) + ") != L(s, 1) at p=" +
                        std::to_string(p);
                    return false;
                }
                if (f_function(k, hat).subst_one_minus_s() != dual) {
                    w = "dual value failed at level " + std::to_string(n) + ", p=" +
                        std::to_string(p);
                    return false;
                }
            }
        }
    }
    return true;
}

// 6. The Hecke recurrence and the closed form of the coefficient series agree
//    with the raw series through order twelve across a grid of eigenvalues.
bool series_vs_closed(std::string& w) {
    for (long q : {3L, 5L, 7L}) {
        std::vector<Rational> lambdas{Rational(0), -q_pow(q, 2), Rational(1), Rational(-1),
                                      q_pow(q, 2)};
        for (const Rational& l : lambdas) {
            NewformParams P{q, 2, 0, l};
            if (!check_hecke_relation(P, 12)) {
                w = "Hecke recurrence failed at q=" + std::to_string(q) + ", lambda=" +
                    l.get_str();
                return false;
            }
            if (zeta_W_closed(P).series_expand(12) != zeta_W_series(P, 12).series_expand(12)) {
                w = "series/closed-form mismatch at q=" + std::to_string(q) + ", lambda=" +
                    l.get_str();
                return false;
            }
        }
    }
    return true;
}

// 7. The eigenvalue dichotomy: lambda in {0, -q^2} yields Z = L and the
//    monomial epsilon factor q^N X^N with epsilon * subst(epsilon) = 1, while
//    twenty probe eigenvalues per (q, N) are rejected with a non-Laurent zeta.
bool functional_equation(std::string& w) {
    for (long q : {3L, 5L}) {
        Rational mq2 = -q_pow(q, 2);
        Rng rng(160 + q);
        for (long N = 2; N <= 5; ++N) {
            for (const Rational& l : {Rational(0), mq2}) {
                NewformParams P{q, N, 0, l};
                NewformClassification cls = classify(P);
                std::string at = "q=" + std::to_string(q) + " N=" + std::to_string(N) +
                                 " lambda=" + l.get_str();
                if (!cls.accepted) {
                    w = at + ": distinguished eigenvalue rejected";
                    return false;
                }
                if (zeta_W_Phi(P) != cls.L) {
                    w = at + ": zeta integral differs from the assigned L-factor";
                    return false;
                }
                if (cls.epsilon != RationalFn::monomial(q, q_pow(q, N), N)) {
                    w = at + ": epsilon is not q^N X^N";
                    return false;
                }
                if (cls.epsilon * cls.epsilon.subst_one_minus_s() != RationalFn::one(q)) {
                    w = at + ": epsilon involution failed";
                    return false;
                }
                if (cls.swapped_is_monomial) {
                    w = at + ": swapped L-candidate also produced a monomial";
                    return false;
                }
            }
            for (int i = 0; i < 20; ++i) {
                Rational l(rng.nonzero(3 * q * q), rng.uniform(1, 3));
                l.canonicalize();
                if (l == 0 || l == mq2) l += Rational(1, 7);
                NewformClassification cls = classify({q, N, 0, l});
                if (cls.accepted || cls.Z_W.is_laurent_polynomial()) {
                    w = "probe lambda=" + l.get_str() + " at q=" + std::to_string(q) +
                        " N=" + std::to_string(N) + " escaped the dichotomy";
                    return false;
                }
            }
        }
    }
    return true;
}

// 8. The ideal-generator routine agrees with an independent minimal-degree
//    search (exact linear algebra, no gcd calls) on fifty random fractional
//    ideals, and the generator divides every input.
bool generator_search(std::string& w) {
    Rng rng(2601);
    const long qs[] = {3, 5, 7};
    for (int i = 0; i < 50; ++i) {
        long q = qs[i % 3];
        std::vector<RationalFn> fns = testing_gcd::random_ideal(rng, q);
        RationalFn lib = gcd_generator(fns);
        RationalFn ref = testing_gcd::bruteforce_generator(fns);
        if (lib != ref) {
            w = "ideal " + std::to_string(i) + ": library generator " + lib.str() +
                " vs search result " + ref.str();
            return false;
        }
        for (const auto& f : fns) {
            if (!f.is_zero() && !(f / lib).is_laurent_polynomial()) {
                w = "ideal " + std::to_string(i) + ": generator does not divide " + f.str();
                return false;
            }
        }
    }
    return true;
}

struct Criterion {
    const char* label;
    bool (*run)(std::string&);
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"coset representative lists: predicted counts, pairwise distinct", coset_distinctness},
        {"coset reduction: 10^4 random words per point land on a representative",
         coset_completeness},
        {"group generator identities hold on >= 10^3 samples per prime",
         conjugation_identities},
        {"Fourier transform: closed form, involution, reflection identity", fourier_layer},
        {"newvector values f(k, Phi_n) and the dual f(1-s, k, hat Phi_n)", newvector_values},
        {"Hecke recurrence and series/closed-form agreement to order 12", series_vs_closed},
        {"eigenvalue dichotomy, Z = L, and the monomial epsilon factor",
         functional_equation},
        {"ideal generator matches the independent minimal-degree search", generator_search},
    };

    int failures = 0;
    int idx = 0;
    for (const auto& c : criteria) {
        ++idx;
        auto t0 = Clock::now();
        std::string witness;
        bool ok = false;
        try {
            ok = c.run(witness);
        } catch (const std::exception& e) {
            witness = std::string("exception: ") + e.what();
        }
        long ms = ms_since(t0);
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << idx << ": " << c.label
                  << " (" << ms << " ms)";
        if (!ok && !witness.empty()) std::cout << " -- " << witness;
        std::cout << "\n" << std::flush;
        if (!ok) ++failures;
    }
    if (failures == 0) {
        std::cout << "acceptance: all 8 criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criteria failed\n";
    return 1;
}
