#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace omegasum {

// Neumaier compensated accumulator.  All tolerance claims in this library
// assume sums are formed through this type in a fixed order.
class KahanSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class KahanComplexSum {
public:
    void add(std::complex<double> z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    std::complex<double> value() const { return {re_.value(), im_.value()}; }

private:
    KahanSum re_, im_;
};

inline std::size_t next_pow2(std::size_t n) {
    std::size_t k = 1;
    while (k < n) k <<= 1;
    return k;
}

// Global default for internal parallelism; overridable per call.
int default_threads();
void set_default_threads(int n);

// Static block partition over [0, n).  Each index is processed exactly once
// and writes only its own slot, so results do not depend on thread count.
template <typename Fn>
void parallel_for(std::size_t n, const Fn& fn, int threads = 0) {
    if (threads <= 0) threads = default_threads();
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::size_t nt = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (std::size_t t = 0; t < nt; ++t) {
        std::size_t lo = n * t / nt;
        std::size_t hi = n * (t + 1) / nt;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace omegasum
