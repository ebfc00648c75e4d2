#include "doctest.h"

#include <cmath>
#include <vector>

#include "entrokit/dynamics.hpp"

using namespace entrokit;

TEST_CASE("lap numbers double for the classic chaotic maps") {
    for (const auto& f : {IntervalMap::logistic(4.0), IntervalMap::tent(),
                          IntervalMap::doubling()}) {
        const auto seq = lap_number_entropy(f, 14);
        REQUIRE(seq.size() == 14);
        for (const auto& est : seq) {
            CHECK(est.laps == (std::int64_t(1) << est.n));
            CHECK(est.rate == doctest::Approx(std::log(2.0)).epsilon(1e-12));
        }
    }
}

TEST_CASE("monotone maps have a single lap") {
    const auto f = IntervalMap::piecewise_linear({0.0, 1.0}, {0.0, 1.0});
    for (const auto& est : lap_number_entropy(f, 10)) {
        CHECK(est.laps == 1);
        CHECK(est.rate == 0.0);
    }
}

TEST_CASE("piecewise-linear bimodal map grows subexponentially when flat") {
    // tent of height 1/2: image [0, 1/2], second iterate is monotone there
    const auto f = IntervalMap::piecewise_linear({0.0, 0.5, 1.0}, {0.0, 0.5, 0.0});
    const auto seq = lap_number_entropy(f, 12);
    CHECK(seq[0].laps == 2);
    // every later image sits inside [0, 1/2] where the map is monotone
    for (std::size_t i = 1; i < seq.size(); ++i) CHECK(seq[i].laps == 2);
    CHECK(seq.back().rate < 0.1);
}

TEST_CASE("lap counting guards") {
    CHECK_THROWS_AS(lap_number_entropy(IntervalMap::tent(), 0), std::domain_error);
    CHECK_THROWS_AS(lap_number_entropy(IntervalMap::tent(), 63), std::domain_error);
    CHECK_THROWS_AS(lap_number_entropy(IntervalMap::tent(), 30), std::length_error);
    CHECK_THROWS_AS(IntervalMap::piecewise_linear({0.0, 0.5, 0.5, 1.0},
                                                  {0.0, 1.0, 1.0, 0.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(IntervalMap::logistic(5.0), std::domain_error);
}

TEST_CASE("lyapunov estimate reproduces ln 2 for the doubling map") {
    const auto est = lyapunov_entropy_estimate_1d(IntervalMap::doubling(), 0.1234567, 1000,
                                                  10);
    CHECK(est.value == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(est.skipped == 0);
}

TEST_CASE("lyapunov estimate on the logistic a=4 orbit") {
    const auto est =
        lyapunov_entropy_estimate_1d(IntervalMap::logistic(4.0), 0.3141592653, 1000000, 1000);
    CHECK(std::abs(est.value - std::log(2.0)) < 0.01);
}

TEST_CASE("stable dynamics clamp to zero") {
    // logistic a=2: the orbit is attracted to 1/2 where the derivative is 0
    const auto est =
        lyapunov_entropy_estimate_1d(IntervalMap::logistic(2.0), 0.1, 20000, 1000);
    CHECK(est.value == 0.0);
    CHECK(est.raw_average < 0.0);
}

TEST_CASE("non-differentiable samples are skipped and counted") {
    // tent orbit through 1/4 -> 1/2 (kink) -> 1 -> 0 -> 0 ...
    const auto est = lyapunov_entropy_estimate_1d(IntervalMap::tent(), 0.25, 10, 0);
    CHECK(est.skipped == 1);
}

TEST_CASE("lap and lyapunov estimates agree for logistic a=4") {
    const auto laps = lap_number_entropy(IntervalMap::logistic(4.0), 16);
    const auto lyap =
        lyapunov_entropy_estimate_1d(IntervalMap::logistic(4.0), 0.2718281828, 500000, 1000);
    CHECK(std::abs(laps.back().rate - lyap.value) < 0.02);
}

TEST_CASE("toral automorphism entropies") {
    CHECK(toral_automorphism_entropy({{1, 0}, {0, 1}}) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(toral_automorphism_entropy({{1}}) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(toral_automorphism_entropy({{0, 1}, {-1, 0}}) ==
          doctest::Approx(0.0).epsilon(1e-9));

    const double cat = std::log(0.5 * (3.0 + std::sqrt(5.0)));
    CHECK(toral_automorphism_entropy({{2, 1}, {1, 1}}) ==
          doctest::Approx(cat).epsilon(1e-11));

    // 3x3 with an expanding pair: x^3 - x - 1 companion-like matrix has
    // |det| = 1 and one real root ~1.3247 (the plastic number)
    CHECK(toral_automorphism_entropy({{0, 1, 0}, {0, 0, 1}, {1, 1, 0}}) ==
          doctest::Approx(std::log(1.3247179572447460)).epsilon(1e-10));

    // block diagonal cat (+) cat: doubled entropy, multiplicities counted
    CHECK(toral_automorphism_entropy({{2, 1, 0, 0},
                                      {1, 1, 0, 0},
                                      {0, 0, 2, 1},
                                      {0, 0, 1, 1}}) ==
          doctest::Approx(2.0 * cat).epsilon(1e-6));
}

TEST_CASE("toral oracle guards") {
    CHECK_THROWS_AS(toral_automorphism_entropy({{2, 0}, {0, 1}}), std::domain_error);
    CHECK_THROWS_AS(toral_automorphism_entropy({{1, 2}, {0, 1}, {0, 0}}),
                    std::invalid_argument);
    const std::vector<std::vector<long long>> big(5, std::vector<long long>(5, 0));
    CHECK_THROWS_AS(toral_automorphism_entropy(big), std::domain_error);
}
