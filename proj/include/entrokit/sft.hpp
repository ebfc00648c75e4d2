#pragma once

#include <vector>

#include "entrokit/markov.hpp"

namespace entrokit {

/// 0/1 transition matrix of a topological Markov chain (1-step SFT).
/// Every symbol must be extendable: no all-zero row or column.
/// Irreducibility is computed, not assumed.
class TransitionMatrix01 {
public:
    explicit TransitionMatrix01(std::vector<std::vector<int>> entries);

    std::size_t size() const { return entries_.size(); }
    int at(std::size_t i, std::size_t j) const { return entries_[i][j]; }
    const std::vector<std::vector<int>>& entries() const { return entries_; }
    bool irreducible() const { return irreducible_; }

private:
    std::vector<std::vector<int>> entries_;
    bool irreducible_ = false;
};

// Spectral radius of a nonnegative matrix by power iteration on A + I
// (the shift removes periodicity). Converges to relative 1e-12 or better.
double spectral_radius(const std::vector<std::vector<double>>& a);

// Topological entropy ln(rho_A) of the SFT defined by A, nats.
double topological_markov_entropy(const TransitionMatrix01& a);

// The Markov measure of maximal entropy on an irreducible SFT:
//   p_ij = a_ij v_j / (rho v_i),   p_i = u_i v_i / (u . v)
// with u, v the left/right Perron eigenvectors. Its entropy rate equals
// ln(rho_A) (variational principle realized).
MarkovModel parry_measure(const TransitionMatrix01& a);

}  // namespace entrokit
