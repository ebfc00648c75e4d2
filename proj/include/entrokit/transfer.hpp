#pragma once

#include <cstdint>
#include <vector>

#include "entrokit/group.hpp"
#include "entrokit/series.hpp"

namespace entrokit {

/// Two equal-length symbol sequences over possibly different alphabets.
struct PairedSymbolSeq {
    SymbolSeq x;
    SymbolSeq y;

    PairedSymbolSeq(SymbolSeq xs, SymbolSeq ys);
};

struct TEParams {
    int lambda = 1;     // coupling delay, >= 1
    int x_history = 1;  // n
    int y_history = 1;  // k
};

// Weighted joint over (future, x-history, y-history) contexts. Weights are
// raw counts for sample estimates or probabilities for exact tables; the
// evaluation is the same either way.
struct TripleJoint {
    // flattened [a][b][c] with a < dim_a, b < dim_b, c < dim_c
    std::vector<double> weights;
    int dim_a = 0, dim_b = 0, dim_c = 0;

    double& at(int a, int b, int c) {
        return weights[(static_cast<std::size_t>(a) * dim_b + b) * dim_c + c];
    }
    double get(int a, int b, int c) const {
        return weights[(static_cast<std::size_t>(a) * dim_b + b) * dim_c + c];
    }
};

// T_{Y->X} from a joint over (x_{t+Lambda}, x-history, y-history). Both
// printed forms -- the conditional-entropy difference and the conditional
// mutual information -- reduce per term to ln(w_abc * w_b / (w_ab * w_bc)),
// which is what is evaluated; zero-weight contexts contribute zero.
double transfer_entropy_from_joint(const TripleJoint& joint);

// Builds the empirical (future, x-history, y-history) joint of the pair
// at the given delay/history lengths.
TripleJoint te_joint_from_samples(const PairedSymbolSeq& p, const TEParams& params);

// Plug-in transfer entropy T_{Y->X}(Lambda) from samples.
// Flags: true when distinct observed context tuples exceed samples/10.
struct TransferEntropyResult {
    double value = 0.0;
    std::int64_t samples = 0;
    std::int64_t distinct_contexts = 0;
    bool sparse_warning = false;
};

TransferEntropyResult transfer_entropy(const PairedSymbolSeq& p, const TEParams& params);

// Directionality indicator Delta T_{Y->X} = T_{Y->X} - T_{X->Y}.
double directionality(const PairedSymbolSeq& p, const TEParams& params);

// Coupling complexity coefficient of G-valued variables:
//   C(a_1..a_N) = min_n I(a_n; tau_{a_1,a_2}, ..., tau_{a_{N-1},a_N})
// from the empirical joint of the samples (vars[n][t], equal lengths).
// A single variable has an empty transcript list and C = 0.
double coupling_complexity(const FiniteGroup& g,
                           const std::vector<std::vector<int>>& vars);

// Same, from an exact joint over (a_1,...,a_N) given as a flat array in
// row-major order with each axis of size |G|.
double coupling_complexity_from_joint(const FiniteGroup& g, int n_vars,
                                      const std::vector<double>& weights);

/// Dimensional reduction of the algebraic transfer entropy (k = n = 1):
/// under C(xi_{t+L}, eta_t, xi_t) = 0 and H(xi_t) <= H(eta_t),
///   I(xi_{t+L}; eta_t | xi_t) = I(tau_{xi_{t+L},xi_t}; tau_{eta_t,xi_t}).
struct AlgebraicTEReport {
    double lhs = 0.0;           // conditional mutual information form
    double rhs = 0.0;           // transcript mutual information
    double coupling_c = 0.0;    // C(xi_{t+L}, eta_t, xi_t)
    double h_xi = 0.0;          // H(xi_t)
    double h_eta = 0.0;         // H(eta_t)
    bool hypotheses_hold = false;
};

// From an exact joint w[a][b][c] over (xi_{t+Lambda}, eta_t, xi_t), all
// axes of size |G|.
AlgebraicTEReport algebraic_te_from_joint(const FiniteGroup& g, const TripleJoint& joint);

// From paired G-valued sample sequences at delay Lambda.
AlgebraicTEReport algebraic_transfer_entropy(const FiniteGroup& g, const std::vector<int>& xi,
                                             const std::vector<int>& eta, int lambda);

}  // namespace entrokit
