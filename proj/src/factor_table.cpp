#include "omegasum/factor_table.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "omegasum/accum.hpp"

namespace omegasum {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::uint64_t Factorization::reconstruct() const {
    std::uint64_t n = 1;
    for (auto [p, e] : pairs)
        for (int i = 0; i < e; ++i) n *= p;
    return n;
}

FactorTable::FactorTable(std::uint64_t limit) : limit_(limit) {
    if (limit == 0) throw std::invalid_argument("FactorTable: limit must be >= 1");
    if (limit > 0xFFFFFFFFull) throw std::invalid_argument("FactorTable: limit exceeds 2^32-1");
    spf_.assign(limit + 1, 0);
    if (limit >= 2) primes_.reserve(static_cast<std::size_t>(1.3 * limit / std::log(double(limit)) + 16));
    // Linear (Euler) sieve: each composite is struck once by its smallest
    // prime factor.
    for (std::uint64_t n = 2; n <= limit; ++n) {
        if (spf_[n] == 0) {
            spf_[n] = static_cast<std::uint32_t>(n);
            primes_.push_back(static_cast<std::uint32_t>(n));
        }
        for (std::uint32_t p : primes_) {
            if (p > spf_[n] || p * n > limit) break;
            spf_[p * n] = p;
        }
    }
}

void FactorTable::check_range(std::uint64_t n) const {
    if (n < 1 || n > limit_) throw std::out_of_range("FactorTable: n out of sieve range");
}

Factorization FactorTable::factorize(std::uint64_t n) const {
    check_range(n);
    Factorization f;
    while (n > 1) {
        std::uint64_t p = spf_[n];
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.pairs.emplace_back(p, e);
    }
    return f;
}

int FactorTable::mu(std::uint64_t n) const {
    check_range(n);
    int sign = 1;
    while (n > 1) {
        std::uint64_t p = spf_[n];
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    return sign;
}

std::uint64_t FactorTable::phi(std::uint64_t n) const {
    check_range(n);
    std::uint64_t result = 1;
    while (n > 1) {
        std::uint64_t p = spf_[n];
        std::uint64_t pk = 1;
        while (n % p == 0) {
            n /= p;
            pk *= p;
        }
        result *= pk - pk / p;
    }
    return result;
}

int FactorTable::big_omega(std::uint64_t n) const {
    check_range(n);
    int c = 0;
    while (n > 1) {
        n /= spf_[n];
        ++c;
    }
    return c;
}

int FactorTable::small_omega(std::uint64_t n) const {
    check_range(n);
    int c = 0;
    while (n > 1) {
        std::uint64_t p = spf_[n];
        while (n % p == 0) n /= p;
        ++c;
    }
    return c;
}

std::uint64_t FactorTable::omega_k(std::uint64_t n, int k) const {
    if (k < 0) throw std::invalid_argument("omega_k: k must be >= 0");
    check_range(n);
    std::uint64_t total = 0;
    while (n > 1) {
        std::uint64_t p = spf_[n];
        std::uint64_t a = 0;
        while (n % p == 0) {
            n /= p;
            ++a;
        }
        std::uint64_t term = 1;
        for (int i = 0; i < k; ++i) term *= a;
        total += term;
    }
    return total;
}

std::vector<std::uint64_t> FactorTable::divisors(std::uint64_t n) const {
    auto f = factorize(n);
    std::vector<std::uint64_t> divs{1};
    for (auto [p, e] : f.pairs) {
        std::size_t sz = divs.size();
        std::uint64_t pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

long long FactorTable::ramanujan_mu(std::uint64_t q, std::uint64_t n) const {
    if (q == 0) throw std::invalid_argument("ramanujan: q must be >= 1");
    check_range(q);
    std::uint64_t g = gcd_u64(q, n == 0 ? q : n);
    long long total = 0;
    for (std::uint64_t d : divisors(g))
        total += static_cast<long long>(d) * mu(q / d);
    return total;
}

double FactorTable::ramanujan_exponential(std::uint64_t q, std::uint64_t n) const {
    if (q == 0) throw std::invalid_argument("ramanujan: q must be >= 1");
    check_range(q);
    KahanSum re;
    for (std::uint64_t a = 1; a <= q; ++a) {
        if (gcd_u64(a, q) != 1) continue;
        double theta = 2.0 * std::numbers::pi * double(a % q) * double(n % q) / double(q);
        re.add(std::cos(theta));
    }
    return re.value();
}

double FactorTable::dirichlet_convolve_point(const std::function<double(std::uint64_t)>& f,
                                             const std::function<double(std::uint64_t)>& g,
                                             std::uint64_t q) const {
    KahanSum acc;
    for (std::uint64_t d : divisors(q)) acc.add(f(d) * g(q / d));
    return acc.value();
}

double FactorTable::sigma_s(std::uint64_t q, double s) const {
    KahanSum acc;
    for (std::uint64_t d : divisors(q)) acc.add(std::pow(double(d), s));
    return acc.value();
}

std::complex<double> FactorTable::rho(double s, std::complex<double> z, std::uint64_t q) const {
    std::complex<double> prod = 1.0;
    for (auto [p, e] : factorize(q).pairs)
        prod *= 1.0 - z / std::pow(double(p), s);
    return prod;
}

std::vector<std::int32_t> FactorTable::omega_table(std::uint64_t N) const {
    check_range(std::max<std::uint64_t>(N, 1));
    std::vector<std::int32_t> t(N + 1, 0);
    for (std::uint64_t n = 2; n <= N; ++n) t[n] = t[n / spf_[n]] + 1;
    return t;
}

int g_default_threads = 1;
int default_threads() { return g_default_threads; }
void set_default_threads(int n) { g_default_threads = n < 1 ? 1 : n; }

}  // namespace omegasum
