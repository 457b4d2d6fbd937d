#include "omegasum/ntt.hpp"

#include <stdexcept>

namespace omegasum {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

void ntt(std::vector<std::uint64_t>& a, const NttPrime& prime, bool inverse) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("ntt: size must be a power of two");
    const std::uint64_t p = prime.p;
    if ((p - 1) % n != 0) throw std::invalid_argument("ntt: length unsupported by prime");

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        std::uint64_t wlen = pow_mod(prime.root, (p - 1) / len, p);
        if (inverse) wlen = pow_mod(wlen, p - 2, p);
        for (std::size_t i = 0; i < n; i += len) {
            std::uint64_t w = 1;
            for (std::size_t k = 0; k < len / 2; ++k) {
                std::uint64_t u = a[i + k];
                std::uint64_t v = a[i + k + len / 2] * w % p;
                a[i + k] = u + v < p ? u + v : u + v - p;
                a[i + k + len / 2] = u >= v ? u - v : u + p - v;
                w = w * wlen % p;
            }
        }
    }
    if (inverse) {
        std::uint64_t ninv = pow_mod(n % p, p - 2, p);
        for (auto& x : a) x = x * ninv % p;
    }
}

std::vector<std::uint64_t> ntt_cube(const std::vector<std::uint64_t>& a,
                                    const NttPrime& prime) {
    std::vector<std::uint64_t> f = a;
    ntt(f, prime, false);
    const std::uint64_t p = prime.p;
    for (auto& x : f) x = x * x % p * x % p;
    ntt(f, prime, true);
    return f;
}

}  // namespace omegasum
