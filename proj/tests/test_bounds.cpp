#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "omegasum/additive.hpp"
#include "omegasum/bounds.hpp"
#include "omegasum/expsum.hpp"

using namespace omegasum;

TEST_CASE("main_bound values") {
    // X=1e6, q=1e3, Delta=1/4, Ff=19
    double L = std::log(1e6);
    double expect = (1e6 / std::pow(1e3, 0.25) + std::pow(1e6, 5.0 / 6.0) +
                     std::pow(1e6, 0.75) * std::pow(1e3, 0.25)) *
                    (std::pow(L, 4.0) + L * 19.0);
    CHECK(main_bound(1e6, 1e3, 0.25, 19.0) == doctest::Approx(expect));
    CHECK(expect == doctest::Approx(1.67e10).epsilon(0.01));

    // q=1 collapse
    double e1 = (1e6 + std::pow(1e6, 5.0 / 6.0) + std::pow(1e6, 0.75)) *
                (std::pow(L, 4.0) + L * 19.0);
    CHECK(main_bound(1e6, 1.0, 0.25, 19.0) == doctest::Approx(e1));

    // monotone nondecreasing in Ff
    CHECK(main_bound(1e6, 10.0, 0.25, 5.0) <= main_bound(1e6, 10.0, 0.25, 6.0));

    CHECK_THROWS_AS(main_bound(1e6, 10.0, 0.5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(main_bound(1e6, 10.0, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("refined_bound") {
    // alpha = a/q exactly: collapses to the simple three-term form
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 1000; ++i) {
        double x = 1.0 + double(rng() % 1000000);
        double y = 1.0 + double(rng() % 1000);
        double gamma = 0.01 + 0.98 * double(rng() % 1000) / 1000.0;
        long long q = 1 + (long long)(rng() % 100);
        long long a = (long long)(rng() % (q + 1));
        double simple =
            x * std::pow(double(q), -gamma) + y + std::pow(x, 1.0 - gamma) * std::pow(double(q), gamma);
        CHECK(refined_bound(x, y, gamma, double(a) / double(q), a, q) == simple);
    }

    // gamma=1/2, q=1, x|alpha - a| = 3: x/2 + y + sqrt(x)*2
    double x = 100.0;
    double alpha = 3.0 / x;  // a=0, q=1
    CHECK(refined_bound(x, 5.0, 0.5, alpha, 0, 1) ==
          doctest::Approx(x / 2.0 + 5.0 + std::sqrt(x) * 2.0));
}

TEST_CASE("reference bounds") {
    double L3 = std::pow(std::log(1e4), 3.0);
    CHECK(reference_bound(BoundKind::Vinogradov, 1e4, 1.0) ==
          doctest::Approx((1e4 + std::pow(1e4, 0.8) + 1e2) * L3));

    double drzz = reference_bound(BoundKind::Drzz, 1e4, 16.0);
    double expect = 1e4 / 2.0 * std::pow(std::log(1e4), 2.5) +
                    std::pow(1e4, 6.0 / 7.0) * std::pow(std::log(1e4), 19.0 / 7.0) +
                    std::pow(1e4, 0.75) * 2.0 * std::pow(std::log(1e4), 2.5);
    CHECK(drzz == doctest::Approx(expect));

    CHECK(reference_bound(BoundKind::Semiprime, 1e4, 64.0) > 0.0);
    CHECK(reference_bound(BoundKind::MadhuDas, 1e4, 50.0, 4.0) > 0.0);
    CHECK_THROWS_AS(reference_bound(BoundKind::MadhuDas, 1e4, 3.0, 10.0),
                    std::invalid_argument);  // R > q
}

TEST_CASE("upsilon_bound") {
    CHECK(upsilon_bound(1e5, 7.0, 0.3, 1.0, 4.0) == main_bound(1e5, 7.0, 0.3, 4.0));
    CHECK(upsilon_bound(1e5, 7.0, 0.3, 0.2, 4.0) == main_bound(1e5, 7.0, 0.3, 4.0));

    // Upsilon=16, Delta=1/4 doubles the first term
    double X = 1e5, q = 9.0, d = 0.25, Ff = 4.0;
    double L = std::log(X);
    double factor = std::pow(L, 4.0) + L * Ff;
    double base = main_bound(X, q, d, Ff);
    double extra = X / std::pow(q, d) * factor;  // first term appears once more
    CHECK(upsilon_bound(X, q, d, 16.0, Ff) == doctest::Approx(base + extra));

    CHECK_THROWS_AS(upsilon_bound(1e5, 7.0, 0.3, 0.0, 4.0), std::invalid_argument);
}

TEST_CASE("ratio_scan contract") {
    FactorTable t(20000);
    auto values = value_table(make_omega_k(1), t, 20000);
    AlphaSet set;
    set.kind = AlphaSet::Kind::Farey;
    set.farey_Q = 20;
    auto alphas = make_alphas(set);

    BoundSpec spec;
    spec.kind = BoundKind::MainF0;
    spec.delta = 0.25;
    auto records = ratio_scan(values, t, {1000, 20000}, alphas, spec);
    REQUIRE(records.size() == 2 * alphas.size());

    for (const auto& r : records) {
        // theorem hypothesis discipline
        CHECK(gcd_u64(std::abs(r.a), r.q) == 1);
        CHECK(std::abs(r.alpha - double(r.a) / double(r.q)) <= 1.0 / (double(r.q) * double(r.q)) + 1e-15);
        CHECK(r.bound > 0.0);
        CHECK(r.ratio >= 0.0);
        if (r.abs_S > 0.0) CHECK(r.ratio > 0.0);
    }
    // sorted by X then alpha
    for (std::size_t i = 1; i < records.size(); ++i) {
        CHECK((records[i - 1].X < records[i].X ||
               (records[i - 1].X == records[i].X && records[i - 1].alpha <= records[i].alpha)));
    }

    // alpha=0 (q=1): ratio = sum Omega / main_bound, well below 1
    CHECK(records[0].alpha == 0.0);
    CHECK(records[0].ratio < 1.0);

    // deterministic across thread counts
    auto rec4 = ratio_scan(values, t, {1000, 20000}, alphas, spec, 4);
    REQUIRE(rec4.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(rec4[i].abs_S == records[i].abs_S);
        CHECK(rec4[i].ratio == records[i].ratio);
    }
}

TEST_CASE("make_alphas variants") {
    AlphaSet r;
    r.kind = AlphaSet::Kind::Random;
    r.random_n = 100;
    r.seed = 42;
    auto a1 = make_alphas(r);
    auto a2 = make_alphas(r);
    CHECK(a1 == a2);  // seeded determinism
    CHECK(a1.size() == 100);
    for (double x : a1) CHECK((x >= 0.0 && x < 1.0));

    AlphaSet s;
    s.kind = AlphaSet::Kind::ConvergentStress;
    auto st = make_alphas(s);
    CHECK(st.size() > 10);
}
