#pragma once

#include <complex>
#include <vector>

namespace omegasum {

// In-place radix-2 FFT.  size must be a power of two.
// sign=+1: X[j] = sum_n x[n] e(+jn/K);  sign=-1: conjugate transform.
// No 1/K normalization is applied.
void fft_pow2(std::vector<std::complex<double>>& a, int sign);

}  // namespace omegasum
