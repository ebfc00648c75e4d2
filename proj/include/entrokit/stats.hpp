#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "entrokit/series.hpp"

namespace entrokit {

// Regularized lower incomplete gamma P(dof/2, x/2); quantile inverts the
// CDF by bracketed bisection to better than 1e-10.
double chi2_cdf(double x, int dof);
double chi2_quantile(double p, int dof);

enum class Decision { AcceptNull, RejectNull };

struct TestResult {
    double statistic = 0.0;
    int dof = 0;
    double critical_value = 0.0;
    double p_value = 0.0;
    Decision decision = Decision::AcceptNull;
    std::vector<std::string> flags;  // applicability caveats
};

// Chi-square goodness-of-fit test on ordinal patterns of disjoint windows
// (K = floor(N/L) of them) against the uniform pattern law:
//   chi2(L) = (L!/K) sum over visible patterns of count^2  -  K,
// dof = L! - 1, reject when the statistic exceeds the upper critical value
// at level alpha. The null is that the series is i.i.d.
TestResult method2_chi2_test(const TimeSeries& x, int order, double alpha);

// Permutation-entropy independence test on overlapping windows:
//   G(L) = 2 (N-L+1) (ln L! - h*_L)
// is asymptotically chi-square with L! - 1 dof under the i.i.d. null.
TestResult g_test(const TimeSeries& x, int order, double alpha);

struct SurrogateResult {
    std::int64_t observed_missing = 0;       // missing L-patterns of the series
    std::int64_t observed_missing_half = 0;  // same census on the first half
    std::vector<std::int64_t> surrogate_missing;
    double p_value = 0.0;  // fraction of surrogates with missing >= observed
    std::vector<std::string> flags;
};

// Missing-ordinal-pattern surrogate test: surrogates are uniform random
// permutations of the series (Fisher-Yates, seeded); determinism shows up
// as an observed missing count no surrogate reaches. Ties count toward
// the p-value. The half-length census is reported so false forbidden
// patterns can be spotted by checking stability in N.
SurrogateResult method1_surrogate_test(const TimeSeries& x, int order, int n_surrogates,
                                       std::uint64_t seed);

}  // namespace entrokit
