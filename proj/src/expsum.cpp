#include "omegasum/expsum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "omegasum/accum.hpp"
#include "omegasum/fft.hpp"

namespace omegasum {

namespace {
constexpr std::uint64_t kRenormPeriod = 1u << 16;
}

std::complex<double> exp_sum(const std::vector<double>& values, double alpha,
                             std::uint64_t X) {
    if (X == 0) return 0.0;
    if (X + 1 > values.size()) throw std::out_of_range("exp_sum: X beyond value table");
    const double ang = 2.0 * std::numbers::pi * alpha;
    const std::complex<double> step = std::polar(1.0, ang);
    std::complex<double> rot = step;  // e(alpha * n), n starting at 1
    KahanComplexSum acc;
    for (std::uint64_t n = 1; n <= X; ++n) {
        if (values[n] != 0.0) acc.add(values[n] * rot);
        rot *= step;
        if ((n % kRenormPeriod) == 0) rot /= std::abs(rot);
    }
    return acc.value();
}

std::vector<std::complex<double>> exp_sum_grid(const std::vector<double>& values,
                                               std::size_t K) {
    const std::size_t N = values.empty() ? 0 : values.size() - 1;
    if (K < 1 || K < N) throw std::invalid_argument("exp_sum_grid: K below array length");
    if ((K & (K - 1)) != 0) throw std::invalid_argument("exp_sum_grid: K must be a power of two");
    std::vector<std::complex<double>> a(K, 0.0);
    for (std::size_t n = 1; n <= N; ++n) a[n % K] = values[n];
    fft_pow2(a, +1);
    return a;
}

std::size_t default_grid_size(std::uint64_t N, int k) {
    return next_pow2(static_cast<std::size_t>(k) * N + 4);
}

std::complex<double> u_sum(double beta, std::uint64_t N) {
    if (N < 1) throw std::invalid_argument("u_sum: N must be >= 1");
    const double frac = beta - std::round(beta);
    if (frac == 0.0) return double(N);
    // sum_{n=1}^{N} e(n beta) = e((N+1)beta/2) sin(pi N beta) / sin(pi beta)
    const double pb = std::numbers::pi * frac;
    const double num = std::sin(std::numbers::pi * double(N) * frac);
    return std::polar(num / std::sin(pb),
                      std::numbers::pi * (double(N) + 1.0) * frac);
}

std::complex<double> prime_exp_sum(const FactorTable& t, double alpha, std::uint64_t X) {
    if (X > t.limit()) throw std::out_of_range("prime_exp_sum: X beyond sieve range");
    KahanComplexSum acc;
    const double ang = 2.0 * std::numbers::pi * alpha;
    for (std::uint32_t p : t.primes()) {
        if (p > X) break;
        acc.add(std::polar(1.0, ang * double(p)));
    }
    return acc.value();
}

std::complex<double> power_integral(const std::vector<double>& values, std::uint64_t N,
                                    int k, std::size_t K) {
    if (k != 2 && k != 3) throw std::invalid_argument("power_integral: k must be 2 or 3");
    if (K < static_cast<std::size_t>(k) * N + 1)
        throw std::invalid_argument("power_integral: K below exactness threshold");
    if ((K & (K - 1)) != 0)
        throw std::invalid_argument("power_integral: K must be a power of two");
    if (N + 1 > values.size()) throw std::out_of_range("power_integral: N beyond value table");
    std::vector<double> trunc(values.begin(), values.begin() + N + 1);
    auto grid = exp_sum_grid(trunc, K);
    KahanComplexSum acc;
    if (k == 2) {
        for (std::size_t j = 0; j < K; ++j) acc.add(std::norm(grid[j]));
    } else {
        const double two_pi_over_K = 2.0 * std::numbers::pi / double(K);
        const std::uint64_t Nm = N % K;
        for (std::size_t j = 0; j < K; ++j) {
            std::complex<double> g = grid[j];
            // exact phase reduction: e(-Nj/K) with Nj taken mod K
            std::uint64_t r = (Nm * j) % K;
            acc.add(g * g * g * std::polar(1.0, -two_pi_over_K * double(r)));
        }
    }
    return acc.value() / double(K);
}

}  // namespace omegasum
