#include "omegasum/diophantine.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "omegasum/factor_table.hpp"

namespace omegasum {

DirichletApprox dirichlet_approx(double alpha, double Q) {
    if (Q < 1.0) throw std::invalid_argument("dirichlet_approx: Q must be >= 1");
    const long long qmax = static_cast<long long>(std::floor(Q));
    const double a0 = std::floor(alpha);
    const double frac = alpha - a0;

    // 2^-62 fixed-point image of the fractional part; all convergent
    // arithmetic below is exact in integers.
    const unsigned long long kOne = 1ull << 62;
    unsigned long long num = static_cast<unsigned long long>(std::llround(frac * double(kOne)));
    if (num > kOne) num = kOne;

    // Continued fraction of num/kOne via Euclid; convergent recurrence
    // h_i = d_i h_{i-1} + h_{i-2}, k_i = d_i k_{i-1} + k_{i-2}.
    long long hm2 = 0, hm1 = 1, km2 = 1, km1 = 0;
    unsigned long long p = num, qq = kOne;
    while (qq != 0) {
        unsigned long long d = p / qq;
        unsigned long long rem = p % qq;
        if (km1 > 0 && d > static_cast<unsigned long long>((qmax - km2) / km1)) break;
        long long hn = static_cast<long long>(d) * hm1 + hm2;
        long long kn = static_cast<long long>(d) * km1 + km2;
        if (kn > qmax) break;
        hm2 = hm1;
        km2 = km1;
        hm1 = hn;
        km1 = kn;
        p = qq;
        qq = rem;
    }

    Rational r{hm1 + static_cast<long long>(a0) * km1, km1};
    long double gap = std::fabs(static_cast<long double>(alpha) -
                                 static_cast<long double>(r.a) / static_cast<long double>(r.q));
    return {r, static_cast<double>(gap)};
}

FareySequence::FareySequence(long long Q) : Q_(Q) {
    if (Q < 1) throw std::invalid_argument("FareySequence: Q must be >= 1");
    a_ = 0;
    b_ = 1;
    c_ = 1;
    d_ = Q;
}

Rational FareySequence::next() {
    if (done_) throw std::out_of_range("FareySequence: exhausted");
    Rational cur{a_, b_};
    if (a_ == 1 && b_ == 1) {
        done_ = true;
        return cur;
    }
    long long k = (Q_ + b_) / d_;
    long long a2 = k * c_ - a_;
    long long b2 = k * d_ - b_;
    a_ = c_;
    b_ = d_;
    c_ = a2;
    d_ = b2;
    return cur;
}

std::vector<Rational> FareySequence::to_vector() {
    std::vector<Rational> v;
    while (!done()) v.push_back(next());
    return v;
}

ArcSystem::ArcSystem(std::uint64_t N, double B) : N_(N), B_(B) {
    if (N < 3 || B <= 0.0) throw std::invalid_argument("ArcSystem: need N >= 3 and B > 0");
    Q_ = std::pow(std::log(double(N)), B);
    if (Q_ < 1.0) Q_ = 1.0;
    // sufficient condition for pairwise-disjoint major arcs
    if (!(2.0 * Q_ * Q_ * Q_ < double(N)))
        throw std::invalid_argument("ArcSystem: N too small for disjoint major arcs (need 2Q^3 < N)");
}

ArcClass ArcSystem::classify(double alpha) const {
    if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("classify: alpha must be in [0,1]");
    const double w = half_width();
    const long long qmax = static_cast<long long>(std::floor(Q_));
    for (long long q = 1; q <= qmax; ++q) {
        long long a = std::llround(alpha * double(q));
        if (a < 0) a = 0;
        if (a > q) a = q;
        if (std::gcd(a, q) != 1) continue;
        double beta = alpha - double(a) / double(q);
        if (std::abs(beta) <= w) return {ArcKind::Major, q, a, beta};
    }
    auto d = dirichlet_approx(alpha, double(N_) / Q_);
    return {ArcKind::Minor, d.frac.q, d.frac.a, d.gap};
}

std::vector<ArcSystem::Arc> ArcSystem::major_arcs() const {
    const double w = half_width();
    std::vector<Arc> arcs;
    const long long qmax = static_cast<long long>(std::floor(Q_));
    for (long long q = 1; q <= qmax; ++q) {
        for (long long a = 0; a <= q; ++a) {
            if (std::gcd(a, q) != 1) continue;
            double center = double(a) / double(q);
            arcs.push_back({q, a, std::max(0.0, center - w), std::min(1.0, center + w)});
        }
    }
    return arcs;
}

}  // namespace omegasum
