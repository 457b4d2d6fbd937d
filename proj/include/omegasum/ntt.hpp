#pragma once

#include <cstdint>
#include <vector>

namespace omegasum {

// Number-theoretic transform modulo a prime p = c * 2^k + 1.
// Supports power-of-two lengths up to 2^25.
struct NttPrime {
    std::uint64_t p;
    std::uint64_t root;  // primitive root of p
};

inline constexpr NttPrime kNttPrime1{167772161ull, 3ull};   // 5 * 2^25 + 1
inline constexpr NttPrime kNttPrime2{469762049ull, 3ull};   // 7 * 2^26 + 1

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m);

// In-place NTT/inverse-NTT of length-2^k vector of residues mod prime.p.
void ntt(std::vector<std::uint64_t>& a, const NttPrime& prime, bool inverse);

// Cyclic self-cube of `a` (length power of two) modulo prime.p.
std::vector<std::uint64_t> ntt_cube(const std::vector<std::uint64_t>& a,
                                    const NttPrime& prime);

}  // namespace omegasum
