#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "omegasum/additive.hpp"

using namespace omegasum;

TEST_CASE("make_omega_k rules") {
    auto w = make_omega_k(0);
    auto W = make_omega_k(1);
    auto W2 = make_omega_k(2);
    CHECK(w.rule(7, 5) == 1.0);
    CHECK(W.rule(7, 5) == 5.0);
    CHECK(W2.rule(2, 3) == 9.0);
    CHECK(W.totally_additive);
    CHECK(!w.totally_additive);
    CHECK_THROWS_AS(make_omega_k(-1), std::invalid_argument);
}

TEST_CASE("F0 membership") {
    FactorTable t(1000);
    for (int k = 0; k <= 4; ++k) CHECK(is_in_F0(make_omega_k(k), t));

    AdditiveFunction beta;  // f(p) = p: not in F0
    beta.rule = [](std::uint64_t p, int) { return double(p); };
    beta.name = "beta";
    CHECK(!is_in_F0(beta, t));
}

TEST_CASE("cap_F") {
    FactorTable t(2000000);
    auto w = make_omega_k(0);
    auto W = make_omega_k(1);
    CHECK(cap_F(w, t, 10) == 1.0);
    CHECK(cap_F(w, t, 1000000) == 1.0);
    CHECK(cap_F(W, t, 10) == 3.0);       // 2^3 = 8 <= 10 < 16
    CHECK(cap_F(W, t, 1000000) == 19.0); // 2^19 <= 1e6 < 2^20
    CHECK_THROWS_AS(cap_F(W, t, 1), std::invalid_argument);

    // non-decreasing in X
    double prev = 0.0;
    for (std::uint64_t X = 2; X <= 4096; X *= 2) {
        double c = cap_F(W, t, X);
        CHECK(c >= prev);
        prev = c;
    }

    // cap from a value table matches the rule-based cap
    auto values = value_table(W, t, 100000);
    CHECK(cap_F_from_values(values, t, 100000) == cap_F(W, t, 100000));
}

TEST_CASE("value tables") {
    FactorTable t(100000);
    auto W = make_omega_k(1);
    auto w = make_omega_k(0);
    auto vW = value_table(W, t, 10);
    CHECK(vW == std::vector<double>{0, 0, 1, 1, 2, 1, 2, 1, 3, 2, 2});
    auto vw = value_table(w, t, 6);
    CHECK(vw == std::vector<double>{0, 0, 1, 1, 1, 1, 2});

    // additivity on random coprime pairs; total additivity for Omega
    auto big = value_table(W, t, 100000);
    auto bigw = value_table(w, t, 100000);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10000; ++i) {
        std::uint64_t m = 2 + rng() % 300;
        std::uint64_t n = 2 + rng() % (100000 / m - 1);
        CHECK(big[m * n] == big[m] + big[n]);
        if (gcd_u64(m, n) == 1) CHECK(bigw[m * n] == bigw[m] + bigw[n]);
    }
}
