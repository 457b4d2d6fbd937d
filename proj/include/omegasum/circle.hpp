#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "omegasum/diophantine.hpp"
#include "omegasum/factor_table.hpp"

namespace omegasum {

// Degree-<=1 polynomial P(y) = b*y + B.
struct CoeffPoly {
    double b = 0.0;
    double B = 0.0;
    double eval(double y) const { return b * y + B; }
};

// Fitted coefficients of the P_{j,g} polynomials, keyed by (j, g).
struct CoeffTable {
    int M = 1;
    std::map<std::pair<int, long long>, CoeffPoly> entries;
    std::string provenance = "fitted";

    const CoeffPoly& at(int j, long long g) const;
    bool covers(long long g, int M_used) const;

    std::string to_json() const;
    static CoeffTable from_json(const std::string& text);
};

struct FitResult {
    CoeffTable table;
    std::map<long long, double> residual_norms;  // RMS residual per modulus
};

// Exact sum_{n<=x, n == h (mod q)} Omega(n) by direct sieve walk; 1 <= h <= q
// (h = q selects the 0 class).
std::int64_t summatory_omega_ap(const FactorTable& t, std::uint64_t x, std::uint64_t q,
                                std::uint64_t h);

// Least-squares fit of S(x; g, 1) * phi(g)/x against
// sum_{j<=M} (b_j loglog x + B_j) / (log x)^{j-1} over the x grid, one fit per
// modulus.  M must be 1 or 2; the grid must span at least two decades.
FitResult fit_coeffs(const FactorTable& t, const std::vector<long long>& moduli, int M,
                     const std::vector<std::uint64_t>& xgrid);

// Same fit driven by a precomputed Omega table (avoids re-walking the sieve
// when many moduli are fitted at once).
FitResult fit_coeffs_from_omega(const std::vector<std::int32_t>& omega,
                                const std::vector<long long>& moduli, int M,
                                const std::vector<std::uint64_t>& xgrid);

// f(q; x, M) = (x/q) ((Omega*mu)(q)
//              + sum_{g|q} g mu(g)/phi(g) sum_{j<=M} P_{j,g}(loglog xg/q)/(log xg/q)^{j-1})
double frak_f(const FactorTable& t, std::uint64_t q, double x, int M,
              const CoeffTable& coeffs);

struct SingularSeriesResult {
    std::uint64_t N;
    int M;
    std::uint64_t Q;
    double partial;                     // S(N, M; Q)
    double tail_estimate;               // (M loglog N)^3 / Q^0.9
    std::vector<double> terms;          // terms[i] for q = i+1
};

// S(N, M; Q) = sum_{q<=Q} (f(q;N,M)/N)^3 c_q(N).
SingularSeriesResult singular_series(const FactorTable& t, std::uint64_t N, int M,
                                     std::uint64_t Q, const CoeffTable& coeffs);

// Numeric integral of u(beta)^3 e(-N beta) over [-Q/N, Q/N] by composite
// Simpson quadrature with K nodes (K >= 1e4).
std::complex<double> u_cube_integral(std::uint64_t N, double Q, std::size_t K);

// Full-circle analogue: (1/K) sum_j u(j/K)^3 e(-N j/K); equals the ordered
// triple count (N-1)(N-2)/2 once K > 3N.
std::complex<double> u_cube_full_circle(std::uint64_t N, std::size_t K);

struct MajorArcIntegral {
    std::complex<double> value;        // quadrature of the true F_N^3
    std::complex<double> model_value;  // same arcs with (f/N)^3 u(beta)^3
};

// Sum over major arcs of int F_N(alpha)^3 e(-N alpha) dalpha by composite
// Simpson quadrature of the true exponential sum, nodes_per_arc >= 64 (even).
MajorArcIntegral major_arc_integral(const std::vector<double>& values,
                                    const ArcSystem& sys, int M,
                                    const CoeffTable& coeffs,
                                    std::size_t nodes_per_arc, int threads = 0);

// S(N, M; Q) * N^2 / 2
double predict_r(const FactorTable& t, std::uint64_t N, int M, std::uint64_t Q,
                 const CoeffTable& coeffs);

}  // namespace omegasum
