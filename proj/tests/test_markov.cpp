#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "entrokit/markov.hpp"
#include "entrokit/rng.hpp"
#include "entrokit/series.hpp"

using namespace entrokit;

namespace {

const std::vector<std::vector<double>> kTwoState = {{0.9, 0.1}, {0.2, 0.8}};

// model probability of an observed prefix, for the equipartition check
double neg_log_prob_rate(const MarkovModel& m, const SymbolSeq& s) {
    double lp = std::log(m.stationary()[static_cast<std::size_t>(s.symbols[0])]);
    for (std::size_t t = 1; t < s.size(); ++t)
        lp += std::log(m.transition()[static_cast<std::size_t>(s.symbols[t - 1])]
                                     [static_cast<std::size_t>(s.symbols[t])]);
    return -lp / static_cast<double>(s.size());
}

}  // namespace

TEST_CASE("bernoulli shift entropies") {
    CHECK(bernoulli_entropy(ProbVec({0.5, 0.5})) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(bernoulli_entropy(ProbVec({1.0 / 3, 1.0 / 3, 1.0 / 3})) ==
          doctest::Approx(std::log(3.0)).epsilon(1e-14));
    CHECK(bernoulli_entropy(ProbVec({1.0, 0.0})) == 0.0);
}

TEST_CASE("markov entropy rate") {
    // i.i.d. special case: every row equals the marginal
    const ProbVec p({0.2, 0.5, 0.3});
    CHECK(markov_entropy_rate(MarkovModel::bernoulli(p)) ==
          doctest::Approx(bernoulli_entropy(p)).epsilon(1e-13));

    // deterministic permutation: all transition entries in {0,1}
    const MarkovModel cycle(ProbVec::uniform(3),
                            {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
    CHECK(markov_entropy_rate(cycle) == 0.0);

    // the worked two-state chain
    const MarkovModel m(ProbVec({2.0 / 3, 1.0 / 3}), kTwoState);
    const double expected = -(2.0 / 3) * (0.9 * std::log(0.9) + 0.1 * std::log(0.1)) -
                            (1.0 / 3) * (0.2 * std::log(0.2) + 0.8 * std::log(0.8));
    CHECK(markov_entropy_rate(m) == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("markov model validation") {
    CHECK_THROWS_AS(MarkovModel(ProbVec({0.5, 0.5}), kTwoState), std::invalid_argument);
    CHECK_THROWS_AS(MarkovModel(ProbVec({0.5, 0.5}), {{0.9, 0.2}, {0.2, 0.8}}),
                    std::invalid_argument);
}

TEST_CASE("stationary distribution") {
    // doubly stochastic: uniform
    const auto u = stationary_distribution({{0.5, 0.3, 0.2}, {0.2, 0.5, 0.3}, {0.3, 0.2, 0.5}});
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(u[i] == doctest::Approx(1.0 / 3).epsilon(1e-12));

    const auto p = stationary_distribution(kTwoState);
    CHECK(p[0] == doctest::Approx(2.0 / 3).epsilon(1e-12));
    CHECK(p[1] == doctest::Approx(1.0 / 3).epsilon(1e-12));

    // single-cycle permutation
    const auto c = stationary_distribution({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(c[i] == doctest::Approx(1.0 / 3).epsilon(1e-12));

    // reducible matrix names an absorbing class
    try {
        stationary_distribution({{1.0, 0.0}, {0.5, 0.5}});
        FAIL("expected an error for the reducible matrix");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("absorbing class {0}") != std::string::npos);
    }
}

TEST_CASE("simulation is deterministic and matches the model statistics") {
    const MarkovModel cycle(ProbVec::uniform(3), {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
    const auto seq = simulate_markov(cycle, 30, 7);
    for (std::size_t t = 1; t < seq.size(); ++t)
        CHECK(seq.symbols[t] == (seq.symbols[t - 1] + 1) % 3);

    const auto a = simulate_markov(cycle, 100, 42);
    const auto b = simulate_markov(cycle, 100, 42);
    CHECK(a.symbols == b.symbols);

    const MarkovModel coin = MarkovModel::bernoulli(ProbVec({0.5, 0.5}));
    const auto s = simulate_markov(coin, 1000000, 3);
    const double ones = static_cast<double>(
        std::count(s.symbols.begin(), s.symbols.end(), 1));
    CHECK(std::abs(ones / 1e6 - 0.5) < 0.002);
}

TEST_CASE("plug-in entropy rate") {
    // constant sequence
    const SymbolSeq constant(std::vector<int>(500, 0), 1);
    const auto c = plugin_entropy_rate(constant, 3);
    CHECK(c.block_entropy == 0.0);
    CHECK(c.conditional_rate == 0.0);

    CHECK_THROWS_AS(plugin_entropy_rate(constant, 0), std::domain_error);
    CHECK_THROWS_AS(plugin_entropy_rate(constant, 500), std::domain_error);

    // simulated fair coin: conditional rate near ln 2 at n = 8
    const auto coin = simulate_markov(MarkovModel::bernoulli(ProbVec({0.5, 0.5})), 1000000, 5);
    const auto e8 = plugin_entropy_rate(coin, 8);
    CHECK(std::abs(e8.conditional_rate - std::log(2.0)) < 0.01);
    CHECK_FALSE(e8.sparse_warning);

    // simulated two-state chain: conditional rate near the exact formula
    const MarkovModel m(ProbVec({2.0 / 3, 1.0 / 3}), kTwoState);
    const auto sim = simulate_markov(m, 1000000, 11);
    const auto e6 = plugin_entropy_rate(sim, 6);
    CHECK(std::abs(e6.conditional_rate - markov_entropy_rate(m)) < 0.01);
}

TEST_CASE("conditional plug-in rate decreases in the block length") {
    const MarkovModel m(ProbVec({2.0 / 3, 1.0 / 3}), kTwoState);
    const auto sim = simulate_markov(m, 1000000, 13);
    double prev = 1e300;
    for (int n = 1; n <= 6; ++n) {
        const double rate = plugin_entropy_rate(sim, n).conditional_rate;
        CHECK(rate <= prev + 0.01);  // statistical slack
        prev = rate;
    }
}

TEST_CASE("equipartition of simulated messages") {
    const MarkovModel m(ProbVec({2.0 / 3, 1.0 / 3}), kTwoState);
    const double h = markov_entropy_rate(m);
    const int draws = 200, len = 1000;
    std::vector<double> rates;
    rates.reserve(draws);
    for (int d = 0; d < draws; ++d)
        rates.push_back(neg_log_prob_rate(m, simulate_markov(m, len, 1000 + d)));
    const double mean = std::accumulate(rates.begin(), rates.end(), 0.0) / draws;
    double var = 0.0;
    for (double r : rates) var += (r - mean) * (r - mean);
    var /= (draws - 1);
    const double se = std::sqrt(var / draws);
    CHECK(std::abs(mean - h) <= 3.0 * se);
}

TEST_CASE("symbolize applies the half-open cell convention") {
    const TimeSeries s({-1.0, 0.0, 0.25, 0.5, 0.75, 2.0});
    const auto seq = symbolize(s, {0.0, 0.5, 1.0});
    CHECK(seq.alphabet_size == 4);
    CHECK(seq.symbols == std::vector<int>{0, 1, 1, 2, 2, 3});  // cut values go up

    const TimeSeries constant({3.5, 3.5, 3.5});
    const auto all_same = symbolize(constant, {1.0, 2.0});
    CHECK(all_same.symbols == std::vector<int>{2, 2, 2});

    CHECK_THROWS_AS(symbolize(s, {0.5, 0.5}), std::invalid_argument);
}

TEST_CASE("tent orbit symbolized at 1/2 looks like a fair coin") {
    // Exact integer tent orbit p/q -> 2p/q or 2(q-p)/q with odd q: the
    // doubling never collapses the way double-precision orbits do.
    const long long q = (1LL << 31) - 1;
    long long p = 123456789;
    const int n = 200000;
    std::vector<double> orbit;
    orbit.reserve(n);
    for (int t = 0; t < n; ++t) {
        orbit.push_back(static_cast<double>(p) / static_cast<double>(q));
        p = 2 * p;
        if (p > q) p = 2 * q - p;
    }
    const auto seq = symbolize(TimeSeries(orbit), {0.5});
    const double heads = static_cast<double>(
        std::count(seq.symbols.begin(), seq.symbols.end(), 1));
    CHECK(std::abs(heads / n - 0.5) < 0.01);
    // and the coded sequence has entropy rate near ln 2
    const auto est = plugin_entropy_rate(seq, 6);
    CHECK(std::abs(est.conditional_rate - std::log(2.0)) < 0.01);
}
