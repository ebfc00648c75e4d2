#pragma once

#include <cstdint>
#include <vector>

#include "entrokit/prob.hpp"
#include "entrokit/series.hpp"

namespace entrokit {

/// Stationary vector plus row-stochastic transition matrix. The exact
/// entropy-rate oracle object for Markov sources.
class MarkovModel {
public:
    MarkovModel(ProbVec stationary, std::vector<std::vector<double>> transition);

    // Convenience: solves for the stationary vector of an irreducible matrix.
    static MarkovModel from_transition(std::vector<std::vector<double>> transition);

    // i.i.d. source with marginal p (every row equals p).
    static MarkovModel bernoulli(const ProbVec& p);

    std::size_t states() const { return transition_.size(); }
    const ProbVec& stationary() const { return stationary_; }
    const std::vector<std::vector<double>>& transition() const { return transition_; }

private:
    ProbVec stationary_;
    std::vector<std::vector<double>> transition_;
};

// Entropy of the p-Bernoulli shift (equals the Shannon entropy of p), nats.
double bernoulli_entropy(const ProbVec& p);

// Entropy rate of the (p,P)-Markov shift: -sum_ij p_i p_ij ln p_ij, nats.
double markov_entropy_rate(const MarkovModel& m);

// Unique stationary vector of an irreducible row-stochastic matrix.
// Reducible input raises an error naming one absorbing class.
ProbVec stationary_distribution(const std::vector<std::vector<double>>& transition);

// Deterministic simulation: the initial state is drawn from the stationary
// vector, transitions by inverse-CDF sampling of the rows.
SymbolSeq simulate_markov(const MarkovModel& m, std::size_t length, std::uint64_t seed);

}  // namespace entrokit
