#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>

#include "u21/field.hpp"
#include "u21cli/support.hpp"

namespace {

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

bool all_odd_primes(const std::vector<long>& ps, std::string& bad) {
    for (long p : ps) {
        if (!u21::is_odd_prime(p)) {
            bad = std::to_string(p);
            return false;
        }
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification suites for the U(2,1) newform zeta machinery"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "1.0.0");

    std::string p_list = "3,5";
    std::string q_list = "3";
    std::string n_range = "1..3";
    std::string an_range = "0..3";
    std::string N_range = "2..5";
    std::string lambda_list;
    std::string format = "text";
    unsigned long long seed = 1;
    long trials = 2000;
    long all_trials = 10000;
    long samples = 500;
    long fourier_samples = 100;
    long n_pi = 0;
    long order = 12;
    long probes = 20;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", seed, "base RNG seed (env NEWFORM_SEED overrides)")
            ->capture_default_str();
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->capture_default_str();
    };

    CLI::App* cosets = app.add_subcommand(
        "verify-cosets", "distinctness and completeness of the coset representative lists");
    cosets->add_option("--p", p_list, "comma-separated odd primes")->capture_default_str();
    cosets->add_option("--n", n_range, "level range a..b")->capture_default_str();
    cosets->add_option("--trials", trials, "random reductions per parameter point")
        ->capture_default_str();
    add_common(cosets);

    CLI::App* analytic = app.add_subcommand(
        "verify-analytic", "conjugation, Fourier transform, and zeta integral identities");
    analytic->add_option("--p", p_list, "comma-separated odd primes")->capture_default_str();
    analytic->add_option("--n", an_range, "lattice level range a..b")->capture_default_str();
    analytic->add_option("--samples", samples, "random samples per identity")
        ->capture_default_str();
    analytic->add_option("--fourier-samples", fourier_samples, "random transform roundtrips")
        ->capture_default_str();
    add_common(analytic);

    CLI::App* table = app.add_subcommand(
        "newform-table", "Hecke eigenvalue classification and epsilon factor table");
    table->add_option("--q", q_list, "comma-separated odd residue field sizes")
        ->capture_default_str();
    table->add_option("--N", N_range, "conductor exponent range a..b")->capture_default_str();
    table->add_option("--lambda", lambda_list,
                      "comma-separated rational eigenvalues (default: the accepted pair plus "
                      "random probes)");
    table->add_option("--n-pi", n_pi, "L-parameter conductor bound (0 or 1)")
        ->capture_default_str();
    table->add_option("--order", order, "series comparison depth")->capture_default_str();
    table->add_option("--probes", probes, "random off-dichotomy eigenvalues")
        ->capture_default_str();
    add_common(table);

    CLI::App* all = app.add_subcommand("all", "every suite at p in {3,5}, levels up to 3");
    all->add_option("--trials", all_trials, "random coset reductions per parameter point")
        ->capture_default_str();
    add_common(all);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (const char* env = std::getenv("NEWFORM_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0') return usage_error("NEWFORM_SEED must be a base-10 integer");
        seed = v;
    }

    u21cli::RunOutput out;
    try {
        if (cosets->parsed()) {
            auto primes = u21cli::parse_longs(p_list);
            std::string bad;
            if (!all_odd_primes(primes, bad)) return usage_error("p must be an odd prime, got " + bad);
            if (trials < 1) return usage_error("--trials must be positive");
            auto nr = u21cli::parse_range(n_range);
            if (nr.hi < 1) return usage_error("coset levels start at n = 1");
            u21::CosetSuiteOptions o;
            o.primes = primes;
            o.hecke_n_lo = std::max(1L, nr.lo);
            o.hecke_n_hi = nr.hi;
            o.level_n_lo = std::max(2L, nr.lo);
            o.level_n_hi = nr.hi;
            o.trials = trials;
            o.seed = seed;
            out.reports.push_back(u21::run_coset_suite(o));
        } else if (analytic->parsed()) {
            auto primes = u21cli::parse_longs(p_list);
            std::string bad;
            if (!all_odd_primes(primes, bad)) return usage_error("p must be an odd prime, got " + bad);
            if (samples < 1 || fourier_samples < 1) return usage_error("sample counts must be positive");
            auto nr = u21cli::parse_range(an_range);
            if (nr.hi < 0) return usage_error("lattice levels start at n = 0");
            u21::AnalyticSuiteOptions o;
            o.primes = primes;
            o.n_lo = std::max(0L, nr.lo);
            o.n_hi = nr.hi;
            o.conj_samples = samples;
            o.zeta_samples = samples;
            o.fourier_samples = fourier_samples;
            o.seed = seed;
            out.reports.push_back(u21::run_analytic_suite(o));
        } else if (table->parsed()) {
            auto qs = u21cli::parse_longs(q_list);
            std::string bad;
            if (!all_odd_primes(qs, bad)) return usage_error("q must be an odd prime, got " + bad);
            if (n_pi != 0 && n_pi != 1) return usage_error("n_pi must be 0 or 1");
            if (order < 1) return usage_error("--order must be positive");
            if (probes < 0) return usage_error("--probes must be non-negative");
            auto Nr = u21cli::parse_range(N_range);
            if (Nr.lo < 2 || Nr.lo <= n_pi)
                return usage_error("the construction assumes N >= 2 and N > n_pi; level range " +
                                   N_range + " violates that hypothesis");
            u21::NewformTableOptions o;
            o.primes = qs;
            o.N_lo = Nr.lo;
            o.N_hi = Nr.hi;
            o.n_pi = n_pi;
            if (!lambda_list.empty()) o.lambdas = u21cli::parse_rationals(lambda_list);
            o.order = order;
            o.probes = probes;
            o.seed = seed;
            u21::NewformTable t = u21::run_newform_table(o);
            out.reports.push_back(t.report);
            out.rows = t.rows;
            out.has_table = true;
        } else if (all->parsed()) {
            if (all_trials < 1) return usage_error("--trials must be positive");
            u21::CosetSuiteOptions co;
            co.trials = all_trials;
            co.seed = seed;
            out.reports.push_back(u21::run_coset_suite(co));
            u21::AnalyticSuiteOptions ao;
            ao.seed = seed;
            out.reports.push_back(u21::run_analytic_suite(ao));
            u21::NewformTableOptions no;
            no.primes = {3, 5};
            no.seed = seed;
            u21::NewformTable t = u21::run_newform_table(no);
            out.reports.push_back(t.report);
            out.rows = t.rows;
            out.has_table = true;
        }
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }

    std::cout << u21cli::render(out, format);
    return u21cli::exit_code(out);
}
