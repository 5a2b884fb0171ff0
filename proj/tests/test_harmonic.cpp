#include <catch2/catch_amalgamated.hpp>

#include "svfcheck/harmonic.hpp"

#include "oracles.hpp"

using namespace svfcheck;

TEST_CASE("harmonic m-point values") {
    CHECK(harmonic_m_point(1, 3, 0.0, 0.5) == Catch::Approx(0.5).epsilon(1e-12));
    CHECK(harmonic_m_point(1, 3, 1.0, 0.5) == Catch::Approx(3.0).epsilon(1e-12));
    CHECK(harmonic_m_point(1, 3, 0.5, 1.0) == Catch::Approx(1.5).epsilon(1e-12));
    CHECK(harmonic_m_point(1, 3, 0.5, 0.5) == Catch::Approx(6.0 / 7.0).epsilon(1e-12));
}

TEST_CASE("harmonic m-point rejects bad arguments") {
    CHECK_THROWS_AS(harmonic_m_point(0, 1, 0.5, 1), std::domain_error);
    CHECK_THROWS_AS(harmonic_m_point(1, -2, 0.5, 1), std::domain_error);
    CHECK_THROWS_AS(harmonic_m_point(1, 1, 1.5, 1), std::domain_error);
    CHECK_THROWS_AS(harmonic_m_point(1, 1, 0.5, 0), std::domain_error);
    CHECK_THROWS_AS(harmonic_m_point(1, 1, 0.5, 1.5), std::domain_error);
}

TEST_CASE("harmonic m-point stays between its endpoints and is monotone in t") {
    test_oracle::Rng rng(11);
    for (int i = 0; i < 2000; ++i) {
        const double x = rng.uniform(0.05, 20);
        const double y = rng.uniform(0.05, 20);
        const double m = rng.uniform(0.05, 1.0);
        const double lo = std::min(m * x, y), hi = std::max(m * x, y);
        double prev = harmonic_m_point(x, y, 0, m);
        const bool increasing = y >= m * x;
        for (double t : {0.1, 0.3, 0.5, 0.8, 1.0}) {
            const double h = harmonic_m_point(x, y, t, m);
            REQUIRE(h >= lo - 1e-12 * hi);
            REQUIRE(h <= hi + 1e-12 * hi);
            if (increasing)
                REQUIRE(h >= prev - 1e-12 * hi);
            else
                REQUIRE(h <= prev + 1e-12 * hi);
            prev = h;
        }
    }
}

TEST_CASE("m = 1 fixed point and HM <= AM") {
    test_oracle::Rng rng(13);
    for (int i = 0; i < 2000; ++i) {
        const double x = rng.uniform(0.05, 20);
        const double t = rng.next();
        CHECK(harmonic_m_point(x, x, t, 1.0) == Catch::Approx(x).epsilon(1e-12));
        const double y = rng.uniform(0.05, 20);
        const double hm = harmonic_m_point(x, y, 0.5, 1.0);
        CHECK(hm == Catch::Approx(2 * x * y / (x + y)).epsilon(1e-12));
        CHECK(hm <= 0.5 * (x + y) + 1e-12 * (x + y));
    }
}

TEST_CASE("h_m never exceeds h_1") {
    test_oracle::Rng rng(17);
    for (int i = 0; i < 5000; ++i) {
        const double x = rng.uniform(0.05, 20);
        const double y = rng.uniform(0.05, 20);
        const double t = rng.next();
        const double m = rng.uniform(0.01, 1.0);
        REQUIRE(harmonic_m_point(x, y, t, m) <=
                harmonic_m_point(x, y, t, 1.0) + 1e-12 * (x + y));
    }
}

TEST_CASE("dyadic rationals") {
    CHECK(dyadic_value(DyadicRational(1, 1)) == 0.5);
    CHECK(dyadic_value(DyadicRational(0, 5)) == 0.0);
    CHECK(dyadic_value(DyadicRational(3, 2)) == 0.75);
    CHECK(dyadic_value(DyadicRational(32, 5)) == 1.0);  // k = 2^n allowed
    CHECK_THROWS_AS(DyadicRational(33, 5), std::invalid_argument);
    CHECK_THROWS_AS(DyadicRational(1, 63), std::invalid_argument);
}

TEST_CASE("harmonically m-convex domain checks") {
    const GridSpec grid{33, 33, 17};

    auto ok = is_harmonically_m_convex_domain(PositiveDomain(1, 10), 1.0, grid);
    CHECK(ok.verdict == Verdict::Pass);

    auto bad = is_harmonically_m_convex_domain(PositiveDomain(1, 10), 0.1, grid);
    REQUIRE(bad.verdict == Verdict::Fail);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->t <= 0.2);  // violation appears near t = 0
    CHECK(bad.worst_margin == Catch::Approx(0.9));  // m*x = 0.1 at x = 1

    // (0, 10] represented with an open lower endpoint, sampled from 1e-6
    auto open = is_harmonically_m_convex_domain(PositiveDomain(0, 10, true), 0.5, grid);
    CHECK(open.verdict == Verdict::Pass);

    // the closed approximation [1e-6, 10] genuinely fails
    auto closed = is_harmonically_m_convex_domain(PositiveDomain(1e-6, 10), 0.5, grid);
    CHECK(closed.verdict == Verdict::Fail);
}

TEST_CASE("starshaped domain checks") {
    const GridSpec grid{33, 33, 17};
    CHECK(is_starshaped(Interval(0, 5), grid).verdict == Verdict::Pass);
    auto bad = is_starshaped(Interval(1, 5), grid);
    REQUIRE(bad.verdict == Verdict::Fail);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->t * bad.witness->x < 1.0);  // the scaled point left D
    CHECK(is_starshaped(Interval(0, 0), grid).verdict == Verdict::Pass);
}

TEST_CASE("positive domain validation") {
    CHECK_THROWS_AS(PositiveDomain(-1, 5), std::invalid_argument);
    CHECK_THROWS_AS(PositiveDomain(0, 5), std::invalid_argument);  // closed at 0
    CHECK(PositiveDomain(0, 5, true).sample_lo() == Catch::Approx(1e-6));
    CHECK(PositiveDomain(1, 5, true).sample_lo() == Catch::Approx(1 + 1e-6));
    CHECK(PositiveDomain(1, 5, false, true).sample_hi() == Catch::Approx(5 - 1e-6));
}
