#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "entrokit/huffman.hpp"
#include "entrokit/rng.hpp"

using namespace entrokit;

namespace {

// Brute-force optimal prefix-code average length: minimize sum p_i L_i over
// all length assignments satisfying the Kraft inequality for the arity.
double optimal_prefix_length(const std::vector<double>& p, int arity, int max_len) {
    const std::size_t m = p.size();
    std::vector<int> lengths(m, 1);
    double best = 1e300;
    for (;;) {
        double kraft = 0.0, avg = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            kraft += std::pow(static_cast<double>(arity), -lengths[i]);
            avg += p[i] * lengths[i];
        }
        if (kraft <= 1.0 + 1e-12) best = std::min(best, avg);
        // odometer over length vectors
        std::size_t pos = 0;
        while (pos < m && lengths[pos] == max_len) lengths[pos++] = 1;
        if (pos == m) break;
        ++lengths[pos];
    }
    return best;
}

ProbVec random_dist(Rng& rng, std::size_t n) {
    std::vector<double> v(n);
    double sum = 0.0;
    for (double& x : v) {
        x = -std::log(1.0 - rng.next_double());
        sum += x;
    }
    for (double& x : v) x /= sum;
    double mass = 0.0;
    for (double x : v) mass += x;
    v.back() += 1.0 - mass;
    return ProbVec(v);
}

}  // namespace

TEST_CASE("dyadic distribution is coded at the entropy") {
    const auto r = huffman_average_length(ProbVec({0.5, 0.25, 0.25}), 2);
    CHECK(r.avg_length == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(r.entropy_base_d == doctest::Approx(1.5).epsilon(1e-13));
    CHECK(r.code_lengths == std::vector<int>{1, 2, 2});
}

TEST_CASE("uniform over 2^k gets a balanced binary tree") {
    for (int k = 1; k <= 5; ++k) {
        const std::size_t n = std::size_t(1) << k;
        const auto r = huffman_average_length(ProbVec::uniform(n), 2);
        CHECK(r.avg_length == doctest::Approx(static_cast<double>(k)).epsilon(1e-13));
        for (int len : r.code_lengths) CHECK(len == k);
    }
}

TEST_CASE("noiseless-coding bound on the three-symbol example") {
    const ProbVec p({0.4, 0.3, 0.3});
    const auto r = huffman_average_length(p, 2);
    CHECK(r.avg_length >= r.entropy_base_d);
    CHECK(r.avg_length < r.entropy_base_d + 1.0);
    // Huffman is optimal among all binary prefix codes of depth <= 3
    CHECK(r.avg_length ==
          doctest::Approx(optimal_prefix_length(p.probs(), 2, 3)).epsilon(1e-13));
}

TEST_CASE("huffman is optimal against brute force, binary and ternary") {
    Rng rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + rng.next_below(4);  // up to 5 symbols
        const ProbVec p = random_dist(rng, n);
        const auto r2 = huffman_average_length(p, 2);
        CHECK(r2.avg_length ==
              doctest::Approx(optimal_prefix_length(p.probs(), 2, 6)).epsilon(1e-12));
        const auto r3 = huffman_average_length(p, 3);
        CHECK(r3.avg_length ==
              doctest::Approx(optimal_prefix_length(p.probs(), 3, 4)).epsilon(1e-12));
    }
}

TEST_CASE("noiseless-coding bound on random distributions") {
    Rng rng(22);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + rng.next_below(12);
        const ProbVec p = random_dist(rng, n);
        const int arity = 2 + static_cast<int>(rng.next_below(3));
        const auto r = huffman_average_length(p, arity);
        CHECK(r.avg_length >= r.entropy_base_d - 1e-12);
        CHECK(r.avg_length < r.entropy_base_d + 1.0);
    }
}

TEST_CASE("degenerate and error cases") {
    const auto single = huffman_average_length(ProbVec({1.0}), 2);
    CHECK(single.avg_length == 0.0);
    CHECK_THROWS_AS(huffman_average_length(ProbVec({0.5, 0.5}), 1), std::domain_error);

    // zero-probability symbols still receive codewords
    const auto r = huffman_average_length(ProbVec({0.5, 0.5, 0.0}), 2);
    CHECK(r.code_lengths.size() == 3);
    CHECK(r.code_lengths[2] >= 1);

    // deterministic ties: equal weights merge by smallest original index
    const auto a = huffman_average_length(ProbVec({0.25, 0.25, 0.25, 0.25}), 2);
    const auto b = huffman_average_length(ProbVec({0.25, 0.25, 0.25, 0.25}), 2);
    CHECK(a.code_lengths == b.code_lengths);
    CHECK(a.avg_length == 2.0);
}
