#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "omegasum/factor_table.hpp"

namespace omegasum {

// S_f(alpha; X) = sum_{n<=X} values[n] e(alpha n), e(t) = exp(2 pi i t).
// Phase runs on the recurrence e(alpha(n+1)) = e(alpha n) e(alpha),
// renormalized to unit modulus every 2^16 steps; accumulation is compensated.
std::complex<double> exp_sum(const std::vector<double>& values, double alpha,
                             std::uint64_t X);

// Grid F(j/K), j = 0..K-1, by a length-K DFT of the zero-padded value array.
// K must be a power of two and at least values.size()-1.
std::vector<std::complex<double>> exp_sum_grid(const std::vector<double>& values,
                                               std::size_t K);

// Smallest power of two >= k*N + 4 (exceeds the degree-k*N exactness
// threshold for trigonometric-polynomial quadrature).
std::size_t default_grid_size(std::uint64_t N, int k);

// u(beta) = sum_{n<=N} e(n beta), closed geometric form.
std::complex<double> u_sum(double beta, std::uint64_t N);

// sum over primes p <= X of e(alpha p).
std::complex<double> prime_exp_sum(const FactorTable& t, double alpha, std::uint64_t X);

// k=3: (1/K) sum_j F(j/K)^3 e(-N j/K)   (= r(N) exactly for K > 3N)
// k=2: (1/K) sum_j |F(j/K)|^2           (= sum_{n<=N} f(n)^2 for K > 2N)
// K must be a power of two with K >= k*N + 1.
std::complex<double> power_integral(const std::vector<double>& values, std::uint64_t N,
                                    int k, std::size_t K);

}  // namespace omegasum
