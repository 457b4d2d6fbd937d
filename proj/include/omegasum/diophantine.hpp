#pragma once

#include <cstdint>
#include <vector>

namespace omegasum {

// Reduced fraction a/q, q >= 1, gcd(a,q) = 1.
struct Rational {
    long long a = 0;
    long long q = 1;

    double value() const { return double(a) / double(q); }
    bool operator==(const Rational&) const = default;
};

struct DirichletApprox {
    Rational frac;
    double gap;  // |alpha - a/q|
};

// Best rational a/q with q <= Q and |alpha - a/q| < 1/(qQ), realized by the
// last continued-fraction convergent with denominator <= Q.  Convergents are
// computed in integer arithmetic from a 2^-62 fixed-point image of alpha.
DirichletApprox dirichlet_approx(double alpha, double Q);

// Farey fractions of order Q in [0,1], ascending, endpoints 0/1 and 1/1
// included.  Single-owner forward iteration.
class FareySequence {
public:
    explicit FareySequence(long long Q);

    bool done() const { return done_; }
    Rational next();  // returns the current member and advances

    std::vector<Rational> to_vector();

private:
    long long Q_;
    long long a_, b_, c_, d_;
    bool done_ = false;
    bool first_ = true;
};

enum class ArcKind { Major, Minor };

struct ArcClass {
    ArcKind kind;
    long long q, a;
    double offset;  // Major: beta = alpha - a/q.  Minor: the Dirichlet gap.
};

// Major/minor dissection parameters: Q = (log N)^B, major window Q/N.
// The constructor enforces the disjointness margin 2 Q^3 < N.
class ArcSystem {
public:
    ArcSystem(std::uint64_t N, double B);

    std::uint64_t N() const { return N_; }
    double B() const { return B_; }
    double Q() const { return Q_; }
    double half_width() const { return Q_ / double(N_); }

    ArcClass classify(double alpha) const;

    struct Arc {
        long long q, a;
        double lo, hi;  // clipped to [0,1]
    };
    // All major arcs (q <= Q, 0 <= a <= q, (a,q)=1), ascending in (q, a).
    std::vector<Arc> major_arcs() const;

private:
    std::uint64_t N_;
    double B_;
    double Q_;
};

}  // namespace omegasum
