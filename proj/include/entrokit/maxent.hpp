#pragma once

#include <string>
#include <vector>

#include "entrokit/prob.hpp"

namespace entrokit {

/// Discrete maximum-entropy problem: finite support, K feature tables
/// phi_k(x_n) and target moments m_k.
struct MomentSpec {
    std::vector<double> support;                 // x_n, size N >= 1
    std::vector<std::vector<double>> features;   // K rows, each of size N
    std::vector<double> targets;                 // size K

    std::size_t alphabet_size() const { return support.size(); }
    std::size_t feature_count() const { return features.size(); }
    void validate() const;
};

struct MaxentSolution {
    ProbVec distribution;             // p*_n proportional to exp(sum_k l_k phi_k(x_n))
    std::vector<double> multipliers;  // lambda_1..lambda_K
    double log_partition;             // ln Z(lambda)
    double max_residual;              // max_k |model moment - target|
    int iterations;
};

// ln Z(lambda) with max-shift overflow control, and the model moments
// (the gradient of ln Z).
double log_partition(const MomentSpec& spec, const std::vector<double>& lambda);
std::vector<double> model_moments(const MomentSpec& spec, const std::vector<double>& lambda);

// Damped Newton on the convex dual ln Z(lambda) - lambda . m with
// backtracking line search; gradient steps when the Hessian is not
// positive definite. Converges when every moment residual is below tol.
MaxentSolution solve_discrete_maxent(const MomentSpec& spec, double tol = 1e-10,
                                     int max_iter = 500);

// Gibbs weights p_i proportional to exp(-beta * energy_i).
ProbVec gibbs_distribution(const std::vector<double>& energies, double beta);

// Tsallis maxent weights p_i proportional to (1 - (q-1) beta e_i)^{1/(q-1)};
// non-positive bases are truncated to probability zero before renormalizing.
ProbVec tsallis_maxent_distribution(const std::vector<double>& energies, double beta, double q);

enum class MaxentFamily { Uniform, Exponential, Gaussian };

struct ContinuousMaxent {
    MaxentFamily family;
    std::vector<double> params;   // uniform: {a,b}; exponential: {mean}; gaussian: {mean, variance}
    double differential_entropy;  // nats
    std::string note;             // non-empty when a caveat applies
};

ContinuousMaxent continuous_maxent_uniform(double a, double b);
ContinuousMaxent continuous_maxent_exponential(double mean);
ContinuousMaxent continuous_maxent_gaussian(double m1, double m2);  // first two raw moments

// Differential entropy 0.5 ln((2 pi e)^n det R) of the zero-mean Gaussian
// with autocorrelation matrix R (symmetric positive definite).
double gaussian_multivariate_entropy(const std::vector<std::vector<double>>& correlation);

}  // namespace entrokit
