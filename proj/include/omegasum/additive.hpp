#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "omegasum/factor_table.hpp"

namespace omegasum {

// An additive function given by its prime-power rule
// f(p1^a1 ... pr^ar) = sum_i rule(p_i, a_i).  Immutable.
struct AdditiveFunction {
    std::function<double(std::uint64_t p, int ell)> rule;
    std::string name;
    bool totally_additive = false;

    double operator()(const FactorTable& t, std::uint64_t n) const;
};

// Omega_k: rule(p, ell) = ell^k.  k=0 gives omega, k=1 gives Omega.
AdditiveFunction make_omega_k(int k);

// Membership in F0: rule(p, 1) = 1 at every prime of the sieve range.
bool is_in_F0(const AdditiveFunction& f, const FactorTable& t);

// F_f(X) = max over prime powers p^ell <= X of |f(p^ell)|.
double cap_F(const AdditiveFunction& f, const FactorTable& t, std::uint64_t X);

// Same cap computed from a materialized value table (values[n] = f(n)).
double cap_F_from_values(const std::vector<double>& values, const FactorTable& t,
                         std::uint64_t X);

// values[n] = f(n) for n = 1..N; values[0] unused, values[1] = 0.
std::vector<double> value_table(const AdditiveFunction& f, const FactorTable& t,
                                std::uint64_t N);

}  // namespace omegasum
