#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "omegasum/diophantine.hpp"
#include "omegasum/factor_table.hpp"

namespace omegasum {

enum class BoundKind { MainF0, Refined, Vinogradov, Drzz, Semiprime, MadhuDas, Upsilon };

struct BoundSpec {
    BoundKind kind = BoundKind::MainF0;
    double delta = 0.25;    // in (0, 1/2)
    double upsilon = 1.0;   // > 0, Upsilon variant only
    double R = 2.0;         // MadhuDas only, 2 <= R <= q <= X/R
    double gamma = 0.25;    // Refined only
};

// (X/q^D + X^{5/6} + X^{1-D} q^D) ((log X)^4 + (log X) Ff), implied constant 1.
double main_bound(double X, double q, double delta, double Ff);

// x (q + x|alpha q - a|)^{-g} + y + x^{1-g} (q + x|alpha q - a|)^{g}
double refined_bound(double x, double y, double gamma, double alpha, long long a,
                     long long q);

// Comparison bounds from the literature, implied constant 1.
// Vinogradov: (X/sqrt(q) + X^{4/5} + sqrt(Xq)) (log X)^3
// Semiprime:  X q^{-1/6} (log X)^{7/3} + X^{16/17}(log X)^{39/17} + X^{7/8} q^{1/8} (log X)^{9/4}
// Drzz:       X q^{-1/4} (log X)^{5/2} + X^{6/7}(log X)^{19/7} + X^{3/4} q^{1/4} (log X)^{5/2}
// MadhuDas:   X log log X / log X + X log log X (log X)^{3/2} / sqrt(R), needs 2<=R<=q<=X/R
double reference_bound(BoundKind kind, double X, double q, double extra = 0.0);

// (X max{1,U^D}/q^D + X^{5/6} + X^{1-D} q^D)((log X)^4 + (log X) Ff);
// equals main_bound when U = 1.
double upsilon_bound(double X, double q, double delta, double upsilon, double Ff);

struct RatioRecord {
    double alpha;
    long long a, q;
    std::uint64_t X;
    double abs_S;
    double bound;
    double ratio;
};

struct AlphaSet {
    enum class Kind { Farey, Random, ConvergentStress } kind = Kind::Farey;
    long long farey_Q = 50;
    std::size_t random_n = 0;
    std::uint64_t seed = 0;
};

std::vector<double> make_alphas(const AlphaSet& set);

// One record per (X, alpha); (a,q) = dirichlet_approx(alpha, sqrt(X)) so the
// hypothesis |alpha - a/q| <= q^-2 holds for every record.  Records are
// sorted by X then alpha.  Parallelizes over pairs; deterministic.
std::vector<RatioRecord> ratio_scan(const std::vector<double>& values,
                                    const FactorTable& t,
                                    const std::vector<std::uint64_t>& Xs,
                                    const std::vector<double>& alphas,
                                    const BoundSpec& spec, int threads = 0);

}  // namespace omegasum
