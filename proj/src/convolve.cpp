#include "omegasum/convolve.hpp"

#include <stdexcept>

#include "omegasum/accum.hpp"
#include "omegasum/errors.hpp"
#include "omegasum/ntt.hpp"

namespace omegasum {

std::int64_t r_omega_direct(const std::vector<std::int32_t>& values, std::uint64_t N,
                            int threads) {
    if (N < 3) return 0;
    if (values.size() < N - 1)  // values[1..N-2] are consumed
        throw std::out_of_range("r_omega_direct: N beyond value table");
    // c2[m] = sum_{i+j=m} f(i) f(j) for the m we will consume (m = 2..N-1).
    std::vector<std::int64_t> c2(N, 0);
    parallel_for(N - 2, [&](std::size_t idx) {
        const std::uint64_t m = idx + 2;
        std::int64_t acc = 0;
        for (std::uint64_t i = 1; i < m; ++i)
            acc += std::int64_t(values[i]) * values[m - i];
        c2[m] = acc;
    }, threads);
    std::int64_t total = 0;
    for (std::uint64_t k = 1; k + 2 <= N; ++k) total += std::int64_t(values[k]) * c2[N - k];
    return total;
}

std::vector<std::int64_t> r_omega_transform(const std::vector<std::int32_t>& values,
                                            std::uint64_t Nmax) {
    if (Nmax + 1 > values.size())
        throw std::out_of_range("r_omega_transform: Nmax beyond value table");
    const std::size_t L = next_pow2(3 * Nmax + 1);

    const NttPrime primes[2] = {kNttPrime1, kNttPrime2};
    std::vector<std::uint64_t> res[2];
    for (int i = 0; i < 2; ++i) {
        std::vector<std::uint64_t> a(L, 0);
        for (std::uint64_t n = 1; n <= Nmax; ++n) {
            std::int64_t v = values[n];
            a[n] = v >= 0 ? std::uint64_t(v) % primes[i].p
                          : primes[i].p - std::uint64_t(-v) % primes[i].p;
        }
        res[i] = ntt_cube(a, primes[i]);
    }

    // CRT: x = r1 + p1 * ((r2 - r1) * p1^{-1} mod p2), x in [0, p1*p2).
    const std::uint64_t p1 = kNttPrime1.p, p2 = kNttPrime2.p;
    const std::uint64_t inv_p1 = pow_mod(p1 % p2, p2 - 2, p2);
    const unsigned __int128 modulus = (unsigned __int128)p1 * p2;

    std::vector<std::int64_t> r(Nmax + 1, 0);
    unsigned __int128 mass = 0;
    for (std::size_t s = 0; s < L; ++s) {
        std::uint64_t r1 = res[0][s], r2 = res[1][s];
        std::uint64_t diff = r2 >= r1 % p2 ? r2 - r1 % p2 : r2 + p2 - r1 % p2;
        unsigned __int128 x = (unsigned __int128)p1 * (diff * inv_p1 % p2) + r1;
        // values are non-negative here (Omega-style tables), so no signed lift
        mass += x;
        if (s >= 3 && s <= Nmax) {
            if (x > (unsigned __int128)INT64_MAX)
                throw precision_error("r_omega_transform: value exceeds int64 range");
            r[s] = static_cast<std::int64_t>(x);
        }
    }

    unsigned __int128 total_f = 0;
    for (std::uint64_t n = 1; n <= Nmax; ++n) {
        if (values[n] < 0)
            throw std::invalid_argument("r_omega_transform: negative values unsupported");
        total_f += std::uint64_t(values[n]);
    }
    unsigned __int128 expected = total_f * total_f * total_f;
    // If every exact coefficient is below p1*p2 the CRT lift is exact and the
    // masses match; a wraparound shows up as a deficit of a multiple of p1*p2.
    if (mass != expected)
        throw precision_error("r_omega_transform: modular headroom exceeded, fall back to direct");
    (void)modulus;
    return r;
}

}  // namespace omegasum
