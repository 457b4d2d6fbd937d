#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "omegasum/accum.hpp"
#include "omegasum/additive.hpp"
#include "omegasum/bounds.hpp"
#include "omegasum/circle.hpp"
#include "omegasum/convolve.hpp"
#include "omegasum/errors.hpp"
#include "omegasum/expsum.hpp"
#include "omegasum/factor_table.hpp"
#include "omegasum/report.hpp"
#include "omegasum/verify.hpp"

namespace {

using namespace omegasum;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitBadConfig = 2;
constexpr int kExitPrecision = 3;

struct OutputSink {
    std::ofstream file;
    std::ostream* os = &std::cout;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path, std::ios::binary);  // binary: byte-identical across runs
        if (!file) throw std::runtime_error("cannot open output file: " + path);
        os = &file;
    }
};

AdditiveFunction parse_function(const std::string& name, int k) {
    if (name == "omega") return make_omega_k(0);
    if (name == "Omega" || name == "bigomega") return make_omega_k(1);
    if (name == "omega_k") return make_omega_k(k);
    throw CLI::ValidationError("--f", "unknown function " + name);
}

BoundKind parse_kind(const std::string& name) {
    if (name == "main") return BoundKind::MainF0;
    if (name == "refined") return BoundKind::Refined;
    if (name == "vinogradov") return BoundKind::Vinogradov;
    if (name == "drzz") return BoundKind::Drzz;
    if (name == "semiprime") return BoundKind::Semiprime;
    if (name == "madhudas") return BoundKind::MadhuDas;
    if (name == "upsilon") return BoundKind::Upsilon;
    throw CLI::ValidationError("--kind", "unknown bound kind " + name);
}

CoeffTable load_coeffs(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open coefficient file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return CoeffTable::from_json(ss.str());
}

std::vector<std::uint64_t> log_spaced_grid(std::uint64_t lo, std::uint64_t hi, int points) {
    std::vector<std::uint64_t> grid;
    const double llo = std::log(double(lo)), lhi = std::log(double(hi));
    for (int i = 0; i < points; ++i) {
        double x = std::exp(llo + (lhi - llo) * double(i) / double(points - 1));
        std::uint64_t xi = static_cast<std::uint64_t>(std::llround(x));
        if (grid.empty() || xi > grid.back()) grid.push_back(xi);
    }
    return grid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exponential sums with additive weights and the ternary circle method"};
    app.require_subcommand(1);

    int threads = 1;
    if (const char* env = std::getenv("OMEGASUM_THREADS")) threads = std::atoi(env);
    app.add_option("--threads", threads, "internal thread count (output is thread-invariant)");

    // ---- sieve ----
    auto* sieve_cmd = app.add_subcommand("sieve", "build the factor table and print stats");
    std::uint64_t sieve_limit = 1000000;
    std::string sieve_out;
    sieve_cmd->add_option("--limit", sieve_limit, "sieve limit")->required();
    sieve_cmd->add_option("--out", sieve_out, "output path (default stdout)");

    // ---- scan ----
    auto* scan_cmd = app.add_subcommand("scan", "bound-ratio scan over an alpha grid");
    std::string scan_f = "Omega", scan_kind = "main", scan_out;
    int scan_k = 1;
    double scan_delta = 0.25, scan_upsilon = 1.0, scan_R = 2.0, scan_gamma = 0.25;
    long long scan_farey = 0;
    std::size_t scan_random = 0;
    std::uint64_t scan_seed = 0;
    bool scan_stress = false, scan_seed_set = false;
    std::vector<std::uint64_t> scan_xs;
    scan_cmd->add_option("--f", scan_f, "additive function: omega | Omega | omega_k");
    scan_cmd->add_option("--k", scan_k, "k for omega_k");
    scan_cmd->add_option("--kind", scan_kind, "bound kind (main, upsilon, refined, ...)");
    scan_cmd->add_option("--delta", scan_delta, "Delta in (0, 1/2)");
    scan_cmd->add_option("--upsilon", scan_upsilon, "Upsilon parameter");
    scan_cmd->add_option("--R", scan_R, "R parameter (madhudas)");
    scan_cmd->add_option("--gamma", scan_gamma, "gamma parameter (refined)");
    scan_cmd->add_option("--farey", scan_farey, "alpha grid: Farey fractions of this order");
    scan_cmd->add_option("--random", scan_random, "alpha grid: this many seeded uniform points");
    scan_cmd->add_option("--seed", scan_seed, "PRNG seed (mandatory with --random)")
        ->trigger_on_parse()
        ->each([&](const std::string&) { scan_seed_set = true; });
    scan_cmd->add_flag("--stress", scan_stress, "alpha grid: convergent-stress irrationals");
    scan_cmd->add_option("--x", scan_xs, "summation limits X (repeatable)")->required();
    scan_cmd->add_option("--out", scan_out, "output path (default stdout)");

    // ---- bounds ----
    auto* bounds_cmd = app.add_subcommand("bounds", "evaluate a bound formula on a grid");
    std::string bounds_kind = "main", bounds_out;
    double bounds_delta = 0.25, bounds_upsilon = 1.0, bounds_R = 2.0, bounds_ff = 1.0;
    std::vector<double> bounds_xs, bounds_qs;
    bounds_cmd->add_option("--kind", bounds_kind, "bound kind");
    bounds_cmd->add_option("--delta", bounds_delta, "Delta in (0, 1/2)");
    bounds_cmd->add_option("--upsilon", bounds_upsilon, "Upsilon parameter");
    bounds_cmd->add_option("--R", bounds_R, "R parameter (madhudas)");
    bounds_cmd->add_option("--ff", bounds_ff, "F_f(X) cap value");
    bounds_cmd->add_option("--x", bounds_xs, "X values")->required();
    bounds_cmd->add_option("--q", bounds_qs, "q values")->required();
    bounds_cmd->add_option("--out", bounds_out, "output path (default stdout)");

    // ---- rq ----
    auto* rq_cmd = app.add_subcommand("rq", "exact r_Omega(N) table");
    std::uint64_t rq_nmax = 2000;
    std::uint64_t rq_direct_limit = 10000;
    bool rq_check = false;
    std::string rq_out;
    rq_cmd->add_option("--nmax", rq_nmax, "largest N")->required();
    rq_cmd->add_flag("--check-direct", rq_check, "cross-check against the direct convolution");
    rq_cmd->add_option("--direct-limit", rq_direct_limit, "cap for the O(N^2) direct check");
    rq_cmd->add_option("--out", rq_out, "output path (default stdout)");

    // ---- arcs ----
    auto* arcs_cmd = app.add_subcommand("arcs", "major/minor arc integrals and decomposition check");
    std::uint64_t arcs_n = 2000;
    double arcs_b = 1.0;
    int arcs_m = 1;
    std::size_t arcs_nodes = 128;
    std::string arcs_coeffs, arcs_out;
    arcs_cmd->add_option("--n", arcs_n, "N")->required();
    arcs_cmd->add_option("--b", arcs_b, "arc exponent B (Q = (log N)^B)");
    arcs_cmd->add_option("--m", arcs_m, "expansion depth M");
    arcs_cmd->add_option("--nodes", arcs_nodes, "quadrature nodes per arc");
    arcs_cmd->add_option("--coeffs", arcs_coeffs, "CoeffTable JSON path")->required();
    arcs_cmd->add_option("--out", arcs_out, "output path (default stdout)");

    // ---- sseries ----
    auto* ss_cmd = app.add_subcommand("sseries", "singular series table with tail estimate");
    std::uint64_t ss_n = 1000000, ss_q = 200;
    int ss_m = 1;
    std::string ss_coeffs, ss_out;
    ss_cmd->add_option("--n", ss_n, "N")->required();
    ss_cmd->add_option("--m", ss_m, "expansion depth M");
    ss_cmd->add_option("--q", ss_q, "truncation Q");
    ss_cmd->add_option("--coeffs", ss_coeffs, "CoeffTable JSON path")->required();
    ss_cmd->add_option("--out", ss_out, "output path (default stdout)");

    // ---- fit ----
    auto* fit_cmd = app.add_subcommand("fit", "fit P_{j,g} coefficients from the exact oracle");
    std::uint64_t fit_limit = 10000000;
    long long fit_gmax = 200;
    int fit_m = 1, fit_points = 24;
    std::uint64_t fit_xmin = 10000;
    std::string fit_out;
    fit_cmd->add_option("--limit", fit_limit, "sieve limit / largest grid point");
    fit_cmd->add_option("--max-modulus", fit_gmax, "fit moduli 1..G");
    fit_cmd->add_option("--m", fit_m, "expansion depth M (1 or 2)");
    fit_cmd->add_option("--points", fit_points, "log-spaced grid points");
    fit_cmd->add_option("--xmin", fit_xmin, "smallest grid point");
    fit_cmd->add_option("--out", fit_out, "output path (default stdout)");

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "run the invariant suite");
    bool verify_quick = false;
    std::string verify_out;
    verify_cmd->add_flag("--quick", verify_quick, "trimmed ranges");
    verify_cmd->add_option("--out", verify_out, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);
    set_default_threads(threads);

    try {
        if (*sieve_cmd) {
            OutputSink sink;
            sink.open(sieve_out);
            FactorTable t(sieve_limit);
            write_provenance(*sink.os, "sieve --limit " + std::to_string(sieve_limit));
            *sink.os << "key,value\n";
            *sink.os << "limit," << sieve_limit << "\n";
            *sink.os << "prime_count," << t.primes().size() << "\n";
            if (!t.primes().empty()) *sink.os << "largest_prime," << t.primes().back() << "\n";
            std::uint64_t sum_omega = 0;
            for (std::uint64_t n = 2; n <= sieve_limit; ++n) sum_omega += t.big_omega(n);
            *sink.os << "sum_big_omega," << sum_omega << "\n";
            return kExitOk;
        }

        if (*scan_cmd) {
            if (scan_random > 0 && !scan_seed_set) {
                std::cerr << "scan: --seed is mandatory with --random\n";
                return kExitBadConfig;
            }
            if (scan_farey == 0 && scan_random == 0 && !scan_stress) {
                std::cerr << "scan: choose an alpha grid (--farey / --random / --stress)\n";
                return kExitBadConfig;
            }
            std::uint64_t xmax = *std::max_element(scan_xs.begin(), scan_xs.end());
            FactorTable t(xmax);
            auto f = parse_function(scan_f, scan_k);
            auto values = value_table(f, t, xmax);

            std::vector<double> alphas;
            if (scan_farey > 0) {
                AlphaSet s;
                s.kind = AlphaSet::Kind::Farey;
                s.farey_Q = scan_farey;
                auto v = make_alphas(s);
                alphas.insert(alphas.end(), v.begin(), v.end());
            }
            if (scan_random > 0) {
                AlphaSet s;
                s.kind = AlphaSet::Kind::Random;
                s.random_n = scan_random;
                s.seed = scan_seed;
                auto v = make_alphas(s);
                alphas.insert(alphas.end(), v.begin(), v.end());
            }
            if (scan_stress) {
                AlphaSet s;
                s.kind = AlphaSet::Kind::ConvergentStress;
                auto v = make_alphas(s);
                alphas.insert(alphas.end(), v.begin(), v.end());
            }
            std::sort(alphas.begin(), alphas.end());
            alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());

            BoundSpec spec;
            spec.kind = parse_kind(scan_kind);
            spec.delta = scan_delta;
            spec.upsilon = scan_upsilon;
            spec.R = scan_R;
            spec.gamma = scan_gamma;
            auto records = ratio_scan(values, t, scan_xs, alphas, spec, threads);

            OutputSink sink;
            sink.open(scan_out);
            std::ostringstream cfg;
            cfg << "scan --f " << scan_f << " --kind " << scan_kind << " --delta " << scan_delta;
            if (scan_farey > 0) cfg << " --farey " << scan_farey;
            if (scan_random > 0) cfg << " --random " << scan_random;
            if (scan_stress) cfg << " --stress";
            for (auto x : scan_xs) cfg << " --x " << x;
            write_provenance(*sink.os, cfg.str(), scan_random > 0 ? &scan_seed : nullptr);
            *sink.os << "alpha,a,q,X,abs_S,bound,ratio\n";
            for (const auto& r : records)
                *sink.os << format_double(r.alpha) << "," << r.a << "," << r.q << "," << r.X << ","
                         << format_double(r.abs_S) << "," << format_double(r.bound) << ","
                         << format_double(r.ratio) << "\n";
            return kExitOk;
        }

        if (*bounds_cmd) {
            OutputSink sink;
            sink.open(bounds_out);
            BoundKind kind = parse_kind(bounds_kind);
            std::ostringstream cfg;
            cfg << "bounds --kind " << bounds_kind << " --delta " << bounds_delta;
            write_provenance(*sink.os, cfg.str());
            *sink.os << "X,q,bound\n";
            for (double X : bounds_xs)
                for (double q : bounds_qs) {
                    double b;
                    switch (kind) {
                        case BoundKind::MainF0:
                            b = main_bound(X, q, bounds_delta, bounds_ff);
                            break;
                        case BoundKind::Upsilon:
                            b = upsilon_bound(X, q, bounds_delta, bounds_upsilon, bounds_ff);
                            break;
                        case BoundKind::Refined:
                            b = refined_bound(X, 1.0, bounds_delta, 0.0, 0, (long long)q);
                            break;
                        default:
                            b = reference_bound(kind, X, q, bounds_R);
                            break;
                    }
                    *sink.os << format_double(X) << "," << format_double(q) << ","
                             << format_double(b) << "\n";
                }
            return kExitOk;
        }

        if (*rq_cmd) {
            FactorTable t(rq_nmax);
            auto omega = t.omega_table(rq_nmax);
            auto r = r_omega_transform(omega, rq_nmax);
            if (rq_check) {
                std::uint64_t lim = std::min(rq_nmax, rq_direct_limit);
                for (std::uint64_t n = 3; n <= lim; ++n)
                    if (r_omega_direct(omega, n, threads) != r[n])
                        throw precision_error("rq: direct/transform mismatch at N=" +
                                              std::to_string(n));
            }
            OutputSink sink;
            sink.open(rq_out);
            write_provenance(*sink.os, "rq --nmax " + std::to_string(rq_nmax));
            *sink.os << "N,r_omega,method\n";
            for (std::uint64_t n = 3; n <= rq_nmax; ++n)
                *sink.os << n << "," << r[n] << ",transform\n";
            return kExitOk;
        }

        if (*arcs_cmd) {
            auto coeffs = load_coeffs(arcs_coeffs);
            FactorTable t(arcs_n);
            auto f = make_omega_k(1);
            auto values = value_table(f, t, arcs_n);
            ArcSystem sys(arcs_n, arcs_b);
            auto major = major_arc_integral(values, sys, arcs_m, coeffs, arcs_nodes, threads);
            auto full = power_integral(values, arcs_n, 3, default_grid_size(arcs_n, 3));
            auto minor = full - major.value;

            OutputSink sink;
            sink.open(arcs_out);
            std::ostringstream cfg;
            cfg << "arcs --n " << arcs_n << " --b " << arcs_b << " --m " << arcs_m;
            write_provenance(*sink.os, cfg.str());
            *sink.os << "key,value\n";
            *sink.os << "Q," << format_double(sys.Q()) << "\n";
            *sink.os << "full_circle_re," << format_double(full.real()) << "\n";
            *sink.os << "major_re," << format_double(major.value.real()) << "\n";
            *sink.os << "major_im," << format_double(major.value.imag()) << "\n";
            *sink.os << "major_model_re," << format_double(major.model_value.real()) << "\n";
            *sink.os << "minor_re," << format_double(minor.real()) << "\n";
            std::vector<std::int32_t> ivals(arcs_n + 1);
            for (std::uint64_t n = 0; n <= arcs_n; ++n)
                ivals[n] = static_cast<std::int32_t>(values[n]);
            std::int64_t exact = r_omega_direct(ivals, arcs_n, threads);
            *sink.os << "r_exact," << exact << "\n";
            *sink.os << "decomposition_residual,"
                     << format_double(std::abs(full - double(exact))) << "\n";
            return kExitOk;
        }

        if (*ss_cmd) {
            auto coeffs = load_coeffs(ss_coeffs);
            FactorTable t(std::max<std::uint64_t>(ss_q, 3));
            auto result = singular_series(t, ss_n, ss_m, ss_q, coeffs);
            OutputSink sink;
            sink.open(ss_out);
            std::ostringstream cfg;
            cfg << "sseries --n " << ss_n << " --m " << ss_m << " --q " << ss_q;
            write_provenance(*sink.os, cfg.str());
            *sink.os << "# tail_estimate " << format_double(result.tail_estimate) << "\n";
            *sink.os << "# partial " << format_double(result.partial) << "\n";
            *sink.os << "q,term\n";
            for (std::size_t i = 0; i < result.terms.size(); ++i)
                *sink.os << (i + 1) << "," << format_double(result.terms[i]) << "\n";
            return kExitOk;
        }

        if (*fit_cmd) {
            FactorTable t(fit_limit);
            std::vector<long long> moduli;
            for (long long g = 1; g <= fit_gmax; ++g) moduli.push_back(g);
            auto grid = log_spaced_grid(fit_xmin, fit_limit, fit_points);
            auto fit = fit_coeffs(t, moduli, fit_m, grid);
            OutputSink sink;
            sink.open(fit_out);
            *sink.os << fit.table.to_json() << "\n";
            return kExitOk;
        }

        if (*verify_cmd) {
            OutputSink sink;
            sink.open(verify_out);
            bool ok = run_verify(verify_quick, *sink.os, threads);
            return ok ? kExitOk : kExitVerifyFail;
        }
    } catch (const precision_error& e) {
        std::cerr << "precision failure: " << e.what() << "\n";
        return kExitPrecision;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return kExitBadConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadConfig;
    }
    return kExitBadConfig;
}
