#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace omegasum {

struct Factorization {
    // (prime, exponent) pairs in ascending prime order; empty for n = 1.
    std::vector<std::pair<std::uint64_t, int>> pairs;

    std::uint64_t reconstruct() const;
};

// Smallest-prime-factor sieve over [1, limit].  Immutable after
// construction; concurrent reads are safe.
class FactorTable {
public:
    explicit FactorTable(std::uint64_t limit);

    std::uint64_t limit() const { return limit_; }
    const std::vector<std::uint32_t>& primes() const { return primes_; }
    std::uint32_t spf(std::uint64_t n) const { return spf_[n]; }
    bool is_prime(std::uint64_t n) const { return n >= 2 && spf_[n] == n; }

    Factorization factorize(std::uint64_t n) const;

    int mu(std::uint64_t n) const;
    std::uint64_t phi(std::uint64_t n) const;
    int big_omega(std::uint64_t n) const;    // Omega: with multiplicity
    int small_omega(std::uint64_t n) const;  // omega: distinct primes
    // Omega_k(n) = sum of alpha_i^k over the exponents of n.
    std::uint64_t omega_k(std::uint64_t n, int k) const;

    std::vector<std::uint64_t> divisors(std::uint64_t n) const;

    // Ramanujan sum c_q(n).  The mu-formula sum_{d|(q,n)} d*mu(q/d) is exact;
    // the exponential route sums e(an/q) over a coprime to q with compensated
    // accumulation and agrees to 1e-9 for q <= 1e4.
    long long ramanujan_mu(std::uint64_t q, std::uint64_t n) const;
    double ramanujan_exponential(std::uint64_t q, std::uint64_t n) const;

    // (f * g)(q) = sum_{d|q} f(d) g(q/d).
    double dirichlet_convolve_point(const std::function<double(std::uint64_t)>& f,
                                    const std::function<double(std::uint64_t)>& g,
                                    std::uint64_t q) const;

    // sum_{d|q} d^s
    double sigma_s(std::uint64_t q, double s) const;

    // rho(s; z, q) = prod_{p|q} (1 - z / p^s)
    std::complex<double> rho(double s, std::complex<double> z, std::uint64_t q) const;

    // Omega(n) for n = 1..N as a flat table (entry 0 unused).
    std::vector<std::int32_t> omega_table(std::uint64_t N) const;

private:
    void check_range(std::uint64_t n) const;

    std::uint64_t limit_;
    std::vector<std::uint32_t> spf_;  // spf_[n] for 0..limit (0,1 unused)
    std::vector<std::uint32_t> primes_;
};

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

}  // namespace omegasum
