#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "entrokit/series.hpp"

namespace entrokit {

/// Embedding length and similarity tolerance for the correlation-integral
/// estimators. The delay is fixed to 1.
struct CorrParams {
    int embed_len = 2;     // k >= 1
    double epsilon = 0.2;  // > 0, same units as the series
};

// Per-template similar-vector counts at length k: for each of the
// M = N-k+1 windows, the number of windows within max-norm distance
// epsilon, the window itself included (j = i counts).
std::vector<std::int64_t> template_match_counts(const std::vector<double>& x, int k,
                                                double epsilon);

// Number of unordered window pairs i < j (over M = N-k+1 windows) within
// max-norm distance epsilon. `prune` switches to the sorted-first-
// coordinate accelerator; both paths produce identical counts.
std::int64_t similar_pair_count(const std::vector<double>& x, int k, double epsilon,
                                bool prune = true);

// Approximate entropy Phi(k) - Phi(k+1), self-matches included.
double apen(const TimeSeries& x, const CorrParams& p);

// Sample entropy ln C(k) - ln C(k+1) over i<j pairs (self-matches
// excluded). Empty numerator or denominator makes the value undefined;
// that outcome is reported as nullopt, never as 0.
std::optional<double> sampen(const TimeSeries& x, const CorrParams& p);

// Relative frequency of similar window pairs at length k, in [0,1].
double correlation_integral_estimate(const TimeSeries& x, const CorrParams& p);

// ln(C(k)/C(k+1)); the identical quantity as sampen by construction.
std::optional<double> h2_estimate(const TimeSeries& x, const CorrParams& p);

}  // namespace entrokit
