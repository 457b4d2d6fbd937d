#include "omegasum/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "omegasum/accum.hpp"
#include "omegasum/additive.hpp"
#include "omegasum/expsum.hpp"

namespace omegasum {

double main_bound(double X, double q, double delta, double Ff) {
    if (X < 3.0 || q < 1.0) throw std::invalid_argument("main_bound: need X >= 3, q >= 1");
    if (!(delta > 0.0 && delta < 0.5))
        throw std::invalid_argument("main_bound: Delta must lie in (0, 1/2)");
    const double L = std::log(X);
    const double qd = std::pow(q, delta);
    return (X / qd + std::pow(X, 5.0 / 6.0) + std::pow(X, 1.0 - delta) * qd) *
           (L * L * L * L + L * Ff);
}

double refined_bound(double x, double y, double gamma, double alpha, long long a,
                     long long q) {
    // t = q + x|alpha q - a|, written via alpha - a/q so that a caller passing
    // alpha = double(a)/double(q) lands exactly on the collapsed form
    const double t = double(q) + x * double(q) * std::abs(alpha - double(a) / double(q));
    return x * std::pow(t, -gamma) + y + std::pow(x, 1.0 - gamma) * std::pow(t, gamma);
}

double reference_bound(BoundKind kind, double X, double q, double extra) {
    const double L = std::log(X);
    switch (kind) {
        case BoundKind::Vinogradov:
            return (X / std::sqrt(q) + std::pow(X, 0.8) + std::sqrt(X * q)) * L * L * L;
        case BoundKind::Semiprime:
            return X / std::pow(q, 1.0 / 6.0) * std::pow(L, 7.0 / 3.0) +
                   std::pow(X, 16.0 / 17.0) * std::pow(L, 39.0 / 17.0) +
                   std::pow(X, 7.0 / 8.0) * std::pow(q, 1.0 / 8.0) * std::pow(L, 9.0 / 4.0);
        case BoundKind::Drzz:
            return X / std::pow(q, 0.25) * std::pow(L, 2.5) +
                   std::pow(X, 6.0 / 7.0) * std::pow(L, 19.0 / 7.0) +
                   std::pow(X, 0.75) * std::pow(q, 0.25) * std::pow(L, 2.5);
        case BoundKind::MadhuDas: {
            const double R = extra;
            if (!(2.0 <= R && R <= q && q <= X / R))
                throw std::invalid_argument("reference_bound: need 2 <= R <= q <= X/R");
            const double LL = std::log(L);
            return X * LL / L + X * LL * std::pow(L, 1.5) / std::sqrt(R);
        }
        default:
            throw std::invalid_argument("reference_bound: unsupported kind");
    }
}

double upsilon_bound(double X, double q, double delta, double upsilon, double Ff) {
    if (!(upsilon > 0.0)) throw std::invalid_argument("upsilon_bound: Upsilon must be > 0");
    if (!(delta > 0.0 && delta < 0.5))
        throw std::invalid_argument("upsilon_bound: Delta must lie in (0, 1/2)");
    const double L = std::log(X);
    const double qd = std::pow(q, delta);
    const double up = std::max(1.0, std::pow(upsilon, delta));
    return (X * up / qd + std::pow(X, 5.0 / 6.0) + std::pow(X, 1.0 - delta) * qd) *
           (L * L * L * L + L * Ff);
}

std::vector<double> make_alphas(const AlphaSet& set) {
    std::vector<double> alphas;
    switch (set.kind) {
        case AlphaSet::Kind::Farey: {
            FareySequence farey(set.farey_Q);
            while (!farey.done()) alphas.push_back(farey.next().value());
            break;
        }
        case AlphaSet::Kind::Random: {
            std::mt19937_64 rng(set.seed);
            alphas.reserve(set.random_n);
            for (std::size_t i = 0; i < set.random_n; ++i)
                alphas.push_back(double(rng() >> 11) * 0x1.0p-53);
            break;
        }
        case AlphaSet::Kind::ConvergentStress: {
            // fractional parts of quadratic/transcendental irrationals plus
            // all of their convergents with denominator <= 1e6
            const double targets[] = {0.6180339887498949, 0.41421356237309515,
                                      0.14159265358979312, 0.718281828459045};
            for (double t : targets) {
                alphas.push_back(t);
                long long q = 1;
                while (q <= 1000000) {
                    auto d = dirichlet_approx(t, double(q));
                    if (d.frac.q > 0 && d.frac.a >= 0) alphas.push_back(d.frac.value());
                    long long nq = d.frac.q * 2 + 1;
                    if (nq <= q) break;
                    q = nq;
                }
            }
            std::sort(alphas.begin(), alphas.end());
            alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
            break;
        }
    }
    return alphas;
}

std::vector<RatioRecord> ratio_scan(const std::vector<double>& values,
                                    const FactorTable& t,
                                    const std::vector<std::uint64_t>& Xs,
                                    const std::vector<double>& alphas,
                                    const BoundSpec& spec, int threads) {
    for (std::uint64_t X : Xs)
        if (X + 1 > values.size()) throw std::out_of_range("ratio_scan: X beyond value table");

    std::vector<std::uint64_t> xs_sorted = Xs;
    std::sort(xs_sorted.begin(), xs_sorted.end());
    std::vector<double> as_sorted = alphas;
    std::sort(as_sorted.begin(), as_sorted.end());

    std::vector<RatioRecord> records(xs_sorted.size() * as_sorted.size());
    // Ff per X is shared across alphas; precompute.
    std::vector<double> caps(xs_sorted.size());
    for (std::size_t i = 0; i < xs_sorted.size(); ++i)
        caps[i] = cap_F_from_values(values, t, xs_sorted[i]);

    parallel_for(records.size(), [&](std::size_t idx) {
        const std::size_t xi = idx / as_sorted.size();
        const std::size_t ai = idx % as_sorted.size();
        const std::uint64_t X = xs_sorted[xi];
        const double alpha = as_sorted[ai];
        auto d = dirichlet_approx(alpha, std::sqrt(double(X)));
        const double S = std::abs(exp_sum(values, alpha, X));
        double bound;
        switch (spec.kind) {
            case BoundKind::MainF0:
                bound = main_bound(double(X), double(d.frac.q), spec.delta, caps[xi]);
                break;
            case BoundKind::Upsilon:
                bound = upsilon_bound(double(X), double(d.frac.q), spec.delta, spec.upsilon,
                                      caps[xi]);
                break;
            case BoundKind::Refined:
                bound = refined_bound(double(X), 1.0, spec.gamma, alpha, d.frac.a, d.frac.q);
                break;
            default:
                bound = reference_bound(spec.kind, double(X), double(d.frac.q), spec.R);
                break;
        }
        records[idx] = {alpha, d.frac.a, d.frac.q, X, S, bound, S / bound};
    }, threads);
    return records;
}

}  // namespace omegasum
