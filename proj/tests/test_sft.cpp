#include "doctest.h"

#include <cmath>
#include <vector>

#include "entrokit/markov.hpp"
#include "entrokit/rng.hpp"
#include "entrokit/sft.hpp"

using namespace entrokit;

namespace {

// random irreducible 0/1 matrix: a full cycle guarantees irreducibility
// and kills zero rows/columns, then extra edges are sprinkled in
std::vector<std::vector<int>> random_irreducible(Rng& rng, std::size_t n) {
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.next_below(i)]);
    for (std::size_t i = 0; i < n; ++i) a[perm[i]][perm[(i + 1) % n]] = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (rng.next_double() < 0.35) a[i][j] = 1;
    return a;
}

}  // namespace

TEST_CASE("full shift entropy is ln k") {
    for (std::size_t k = 2; k <= 5; ++k) {
        std::vector<std::vector<int>> ones(k, std::vector<int>(k, 1));
        CHECK(topological_markov_entropy(TransitionMatrix01(ones)) ==
              doctest::Approx(std::log(static_cast<double>(k))).epsilon(1e-12));
    }
}

TEST_CASE("golden mean shift") {
    const TransitionMatrix01 a({{1, 1}, {1, 0}});
    const double phi = 0.5 * (1.0 + std::sqrt(5.0));
    CHECK(topological_markov_entropy(a) == doctest::Approx(std::log(phi)).epsilon(1e-12));
    CHECK(a.irreducible());
}

TEST_CASE("identity matrix has zero entropy") {
    const TransitionMatrix01 eye({{1, 0}, {0, 1}});
    CHECK(topological_markov_entropy(eye) == doctest::Approx(0.0).epsilon(1e-13));
    CHECK_FALSE(eye.irreducible());
}

TEST_CASE("periodic matrices converge too") {
    // bipartite star: eigenvalues +-sqrt(2), 0
    const TransitionMatrix01 a({{0, 1, 1}, {1, 0, 0}, {1, 0, 0}});
    CHECK(topological_markov_entropy(a) ==
          doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("transition matrix validation") {
    CHECK_THROWS_AS(TransitionMatrix01({{1, 1}, {0, 0}}), std::invalid_argument);  // zero row
    CHECK_THROWS_AS(TransitionMatrix01({{1, 0}, {1, 0}}), std::invalid_argument);  // zero col
    CHECK_THROWS_AS(TransitionMatrix01({{1, 2}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(TransitionMatrix01({{1, 1}, {1, 1, 1}}), std::invalid_argument);
}

TEST_CASE("parry measure on the full 2-shift is the fair coin") {
    const auto m = parry_measure(TransitionMatrix01({{1, 1}, {1, 1}}));
    CHECK(m.stationary()[0] == doctest::Approx(0.5).epsilon(1e-12));
    for (const auto& row : m.transition())
        for (double p : row) CHECK(p == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(markov_entropy_rate(m) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("parry measure realizes the golden-mean entropy") {
    const TransitionMatrix01 a({{1, 1}, {1, 0}});
    const auto m = parry_measure(a);
    CHECK(markov_entropy_rate(m) ==
          doctest::Approx(topological_markov_entropy(a)).epsilon(1e-11));
}

TEST_CASE("parry measure of a cycle is deterministic") {
    const auto m = parry_measure(TransitionMatrix01({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));
    CHECK(markov_entropy_rate(m) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("parry measure requires irreducibility") {
    CHECK_THROWS_AS(parry_measure(TransitionMatrix01({{1, 1}, {0, 1}})),
                    std::invalid_argument);
}

TEST_CASE("variational principle on random SFTs") {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + rng.next_below(7);  // up to 8 states
        const TransitionMatrix01 a(random_irreducible(rng, n));
        const double htop = topological_markov_entropy(a);
        const auto parry = parry_measure(a);
        CHECK(std::abs(markov_entropy_rate(parry) - htop) < 1e-10);

        // any compatible Markov measure is dominated by the Parry measure
        for (int inner = 0; inner < 5; ++inner) {
            std::vector<std::vector<double>> p(n, std::vector<double>(n, 0.0));
            for (std::size_t i = 0; i < n; ++i) {
                double row = 0.0;
                for (std::size_t j = 0; j < n; ++j)
                    if (a.at(i, j) == 1) {
                        p[i][j] = 0.05 + rng.next_double();
                        row += p[i][j];
                    }
                for (std::size_t j = 0; j < n; ++j) p[i][j] /= row;
            }
            const auto model = MarkovModel::from_transition(p);
            CHECK(markov_entropy_rate(model) <= htop + 1e-10);
        }
    }
}
