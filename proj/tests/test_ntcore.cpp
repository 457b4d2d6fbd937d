#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "omegasum/factor_table.hpp"

using namespace omegasum;

TEST_CASE("sieve construction") {
    FactorTable t10(10);
    CHECK(t10.primes() == std::vector<std::uint32_t>{2, 3, 5, 7});

    FactorTable t1(1);
    CHECK(t1.primes().empty());

    FactorTable t100(100);
    CHECK(t100.primes().size() == 25);

    CHECK_THROWS_AS(FactorTable(0), std::invalid_argument);
}

TEST_CASE("sieve invariants") {
    FactorTable t(5000);
    for (std::uint64_t n = 2; n <= 5000; ++n) {
        std::uint32_t p = t.spf(n);
        CHECK(n % p == 0);
        CHECK(t.spf(p) == p);  // spf of a prime is itself
    }
    std::size_t count = 0;
    for (std::uint64_t n = 2; n <= 5000; ++n)
        if (t.spf(n) == n) ++count;
    CHECK(count == t.primes().size());
}

TEST_CASE("factorize") {
    FactorTable t(1000);
    auto f12 = t.factorize(12);
    CHECK(f12.pairs == std::vector<std::pair<std::uint64_t, int>>{{2, 2}, {3, 1}});
    auto f97 = t.factorize(97);
    CHECK(f97.pairs == std::vector<std::pair<std::uint64_t, int>>{{97, 1}});
    CHECK(t.factorize(1).pairs.empty());
    CHECK_THROWS_AS(t.factorize(0), std::out_of_range);
    CHECK_THROWS_AS(t.factorize(1001), std::out_of_range);

    for (std::uint64_t n = 1; n <= 1000; ++n) {
        auto f = t.factorize(n);
        CHECK(f.reconstruct() == n);
        for (std::size_t i = 1; i < f.pairs.size(); ++i)
            CHECK(f.pairs[i - 1].first < f.pairs[i].first);
    }
}

TEST_CASE("arithmetic function values") {
    FactorTable t(1000);
    CHECK(t.big_omega(12) == 3);
    CHECK(t.small_omega(12) == 2);
    CHECK(t.omega_k(12, 2) == 5);  // 2^2 + 1^2
    CHECK(t.mu(6) == 1);
    CHECK(t.phi(12) == 4);
    CHECK(t.big_omega(1) == 0);
    CHECK(t.small_omega(1) == 0);
    CHECK(t.mu(1) == 1);
    CHECK(t.phi(1) == 1);
    CHECK(t.omega_k(12, 0) == 2);  // Omega_0 = omega
    CHECK(t.omega_k(12, 1) == 3);  // Omega_1 = Omega
}

TEST_CASE("additivity on coprime pairs, exhaustive to 1000") {
    FactorTable t(1000);
    for (std::uint64_t m = 1; m <= 1000; ++m) {
        for (std::uint64_t n = 1; m * n <= 1000; ++n) {
            // Omega is totally additive
            CHECK(t.big_omega(m * n) == t.big_omega(m) + t.big_omega(n));
            if (gcd_u64(m, n) == 1) {
                CHECK(t.small_omega(m * n) == t.small_omega(m) + t.small_omega(n));
                CHECK(t.mu(m * n) == t.mu(m) * t.mu(n));
                CHECK(t.phi(m * n) == t.phi(m) * t.phi(n));
            }
        }
    }
}

TEST_CASE("divisors") {
    FactorTable t(1000);
    CHECK(t.divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(t.divisors(1) == std::vector<std::uint64_t>{1});
    CHECK(t.divisors(97) == std::vector<std::uint64_t>{1, 97});
}

TEST_CASE("ramanujan sums") {
    FactorTable t(1000);
    for (std::uint64_t n = 1; n <= 20; ++n) CHECK(t.ramanujan_mu(1, n) == 1);
    CHECK(t.ramanujan_mu(6, 6) == 2);
    CHECK(t.ramanujan_mu(4, 3) == 0);  // (q,n)=1 collapses to mu(4)
    CHECK(t.ramanujan_exponential(6, 6) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK_THROWS_AS(t.ramanujan_mu(0, 5), std::invalid_argument);

    // dual-route agreement, exhaustive q,n <= 200
    FactorTable big(200);
    for (std::uint64_t q = 1; q <= 200; ++q)
        for (std::uint64_t n = 1; n <= 200; ++n)
            CHECK(std::abs(big.ramanujan_exponential(q, n) - double(big.ramanujan_mu(q, n))) <=
                  1e-9);
}

TEST_CASE("dirichlet convolution point values") {
    FactorTable t(1000);
    auto Om = [&](std::uint64_t n) { return double(t.big_omega(n)); };
    auto Mu = [&](std::uint64_t n) { return double(t.mu(n)); };
    CHECK(t.dirichlet_convolve_point(Om, Mu, 6) == doctest::Approx(0.0));
    CHECK(t.dirichlet_convolve_point(Om, Mu, 4) == doctest::Approx(1.0));
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 97u})
        CHECK(t.dirichlet_convolve_point(Om, Mu, p) == doctest::Approx(1.0));
}

TEST_CASE("mobius divisor sum vanishes except at 1") {
    FactorTable t(10000);
    for (std::uint64_t q = 1; q <= 10000; ++q) {
        long long s = 0;
        for (std::uint64_t d : t.divisors(q)) s += t.mu(d);
        CHECK(s == (q == 1 ? 1 : 0));
    }
}

TEST_CASE("sigma_s") {
    FactorTable t(1000);
    CHECK(t.sigma_s(4, -1.0) == doctest::Approx(1.75));
    CHECK(t.sigma_s(12, 0.0) == doctest::Approx(6.0));
    double expect = 1.0 + std::pow(2.0, -0.5) + std::pow(3.0, -0.5) + std::pow(6.0, -0.5);
    CHECK(t.sigma_s(6, -0.5) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("rho product") {
    FactorTable t(1000);
    CHECK(t.rho(1.0, 1.0, 1).real() == doctest::Approx(1.0));
    CHECK(t.rho(1.0, 1.0, 2).real() == doctest::Approx(0.5));
    CHECK(t.rho(1.0, 1.0, 12).real() == doctest::Approx(1.0 / 3.0));
    auto z = t.rho(2.0, std::complex<double>(0.0, 1.0), 6);
    auto expect = (1.0 - std::complex<double>(0.0, 1.0) / 4.0) *
                  (1.0 - std::complex<double>(0.0, 1.0) / 9.0);
    CHECK(std::abs(z - expect) <= 1e-14);
}

TEST_CASE("residue class exponential sum identity c_{q'}(a) = mu(q')") {
    FactorTable t(100);
    for (std::uint64_t q = 1; q <= 100; ++q) {
        for (std::uint64_t a = 1; a <= q; ++a) {
            if (gcd_u64(a, q) != 1) continue;
            for (std::uint64_t g : t.divisors(q)) {
                double re = 0.0, im = 0.0;
                for (std::uint64_t r = 1; r <= q; ++r) {
                    if (gcd_u64(r, q) != g) continue;
                    double th = 2.0 * std::numbers::pi * double(r) * double(a) / double(q);
                    re += std::cos(th);
                    im += std::sin(th);
                }
                CHECK(std::abs(re - double(t.mu(q / g))) <= 1e-9);
                CHECK(std::abs(im) <= 1e-9);
            }
        }
    }
}

TEST_CASE("omega table matches per-n evaluation") {
    FactorTable t(2000);
    auto tab = t.omega_table(2000);
    for (std::uint64_t n = 1; n <= 2000; ++n) CHECK(tab[n] == t.big_omega(n));
}
