#include "omegasum/additive.hpp"

#include <cmath>
#include <stdexcept>

namespace omegasum {

double AdditiveFunction::operator()(const FactorTable& t, std::uint64_t n) const {
    double total = 0.0;
    for (auto [p, e] : t.factorize(n).pairs) total += rule(p, e);
    return total;
}

AdditiveFunction make_omega_k(int k) {
    if (k < 0) throw std::invalid_argument("make_omega_k: k must be >= 0");
    AdditiveFunction f;
    f.rule = [k](std::uint64_t, int ell) {
        double term = 1.0;
        for (int i = 0; i < k; ++i) term *= ell;
        return term;
    };
    f.name = k == 0 ? "omega" : (k == 1 ? "Omega" : "Omega_" + std::to_string(k));
    f.totally_additive = (k == 1);
    return f;
}

bool is_in_F0(const AdditiveFunction& f, const FactorTable& t) {
    for (std::uint32_t p : t.primes())
        if (f.rule(p, 1) != 1.0) return false;
    return true;
}

double cap_F(const AdditiveFunction& f, const FactorTable& t, std::uint64_t X) {
    if (X < 2) throw std::invalid_argument("cap_F: X must be >= 2");
    if (X > t.limit()) throw std::out_of_range("cap_F: X beyond sieve range");
    double best = 0.0;
    for (std::uint32_t p : t.primes()) {
        if (p > X) break;
        std::uint64_t pk = p;
        int ell = 1;
        while (true) {
            best = std::max(best, std::abs(f.rule(p, ell)));
            if (pk > X / p) break;
            pk *= p;
            ++ell;
        }
    }
    return best;
}

double cap_F_from_values(const std::vector<double>& values, const FactorTable& t,
                         std::uint64_t X) {
    if (X < 2) throw std::invalid_argument("cap_F: X must be >= 2");
    if (X + 1 > values.size()) throw std::out_of_range("cap_F: X beyond value table");
    double best = 0.0;
    for (std::uint32_t p : t.primes()) {
        if (p > X) break;
        for (std::uint64_t pk = p; pk <= X; pk *= p) {
            best = std::max(best, std::abs(values[pk]));
            if (pk > X / p) break;
        }
    }
    return best;
}

std::vector<double> value_table(const AdditiveFunction& f, const FactorTable& t,
                                std::uint64_t N) {
    if (N > t.limit()) throw std::out_of_range("value_table: N beyond sieve range");
    std::vector<double> v(N + 1, 0.0);
    // Walk n down its spf chain: v[n] = v[n / p^a] + rule(p, a).
    for (std::uint64_t n = 2; n <= N; ++n) {
        std::uint64_t p = t.spf(n);
        std::uint64_t m = n;
        int a = 0;
        while (m % p == 0) {
            m /= p;
            ++a;
        }
        v[n] = v[m] + f.rule(p, a);
    }
    return v;
}

}  // namespace omegasum
