#pragma once

#include <cstdint>
#include <vector>

namespace omegasum {

// r(N) = sum_{n1+n2+n3=N, ni>=1} f(n1) f(n2) f(n3), exact.
// Two-stage direct convolution, O(N^2); the ground-truth oracle.
// values is 1-based (values[0] unused).  N < 3 gives 0.
std::int64_t r_omega_direct(const std::vector<std::int32_t>& values, std::uint64_t N,
                            int threads = 0);

// All r(n) for 3 <= n <= Nmax at once via an exact integer NTT cube with
// two-prime CRT reconstruction.  Certified by checking the total mass
// sum_n r(n) = (sum f)^3 in 128-bit arithmetic; a mismatch (modular
// wraparound) raises precision_error.
// Returned vector is indexed by n (entries 0..2 are zero).
std::vector<std::int64_t> r_omega_transform(const std::vector<std::int32_t>& values,
                                            std::uint64_t Nmax);

}  // namespace omegasum
