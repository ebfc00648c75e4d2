#pragma once

#include <cstdint>
#include <vector>

namespace entrokit {

/// Piecewise strictly monotone self-map of [0,1]. Built-ins: logistic
/// family a*x*(1-x), the full tent map 2*min(x, 1-x), the doubling map
/// 2x mod 1, and arbitrary piecewise-linear maps given by their nodes.
class IntervalMap {
public:
    static IntervalMap logistic(double a);
    static IntervalMap tent();
    static IntervalMap doubling();
    // Nodes (x_i, y_i) with strictly increasing x_0 = 0 < ... < x_m = 1;
    // linear between nodes, all y in [0,1].
    static IntervalMap piecewise_linear(std::vector<double> xs, std::vector<double> ys);

    double eval(double x) const;

    // Derivative along the orbit; at a breakpoint of the piecewise
    // structure the map may be non-differentiable and NaN is returned.
    double derivative(double x) const;

    // Interior branch boundaries (monotonicity can only change here).
    const std::vector<double>& interior_breaks() const { return breaks_; }

    // One-sided evaluation inside branch `b` (valid at its endpoints).
    double eval_on_branch(std::size_t b, double x) const;
    std::size_t branch_count() const { return breaks_.size() + 1; }
    std::size_t branch_containing(double x) const;

private:
    enum class Kind { Logistic, Tent, Doubling, PiecewiseLinear };
    Kind kind_ = Kind::Logistic;
    double a_ = 4.0;                  // logistic parameter
    std::vector<double> xs_, ys_;     // piecewise-linear nodes
    std::vector<double> breaks_;      // interior branch boundaries
};

struct LapEstimate {
    int n;
    std::int64_t laps;   // exact count of monotone laps of f^n
    double rate;         // ln(laps) / n
};

// Exact lap counts l_n of the iterates f^n by interval subdivision,
// reported as (n, ln(l_n)/n) for n = 1..n_max so the growth rate can be
// read off. The count is capped (memory grows with l_n); hitting the cap
// raises an error naming it.
std::vector<LapEstimate> lap_number_entropy(const IntervalMap& f, int n_max);

struct LyapunovEstimate {
    double value;          // positive part of the orbit average of ln|f'|
    double raw_average;    // before the positive-part clamp
    std::int64_t skipped;  // samples discarded at non-differentiable points
};

LyapunovEstimate lyapunov_entropy_estimate_1d(const IntervalMap& f, double x0,
                                              std::int64_t steps, std::int64_t burn_in);

// Entropy of the toral automorphism x -> Mx mod 1 for an integer matrix
// with |det M| = 1: the sum of ln|lambda_i| over expanding eigenvalues.
// Supported exactly for n <= 4 (characteristic-polynomial roots).
double toral_automorphism_entropy(const std::vector<std::vector<long long>>& m);

}  // namespace entrokit
