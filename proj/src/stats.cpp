#include "entrokit/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "entrokit/ordinal.hpp"
#include "entrokit/rng.hpp"

namespace entrokit {

namespace {

// Regularized lower incomplete gamma P(a, x): series expansion for
// x < a + 1, continued fraction for the complement otherwise.
double gamma_p(double a, double x) {
    if (x < 0.0 || a <= 0.0)
        throw std::domain_error("gamma_p: invalid arguments");
    if (x == 0.0) return 0.0;
    const double lg = std::lgamma(a);
    if (x < a + 1.0) {
        double term = 1.0 / a;
        double sum = term;
        double ap = a;
        for (int i = 0; i < 1000; ++i) {
            ap += 1.0;
            term *= x / ap;
            sum += term;
            if (std::abs(term) < std::abs(sum) * 1e-16) break;
        }
        return sum * std::exp(-x + a * std::log(x) - lg);
    }
    // Lentz continued fraction for Q(a, x)
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 1000; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    const double q = std::exp(-x + a * std::log(x) - lg) * h;
    return 1.0 - q;
}

std::int64_t missing_count(const std::vector<double>& values, int order) {
    const TimeSeries ts(values);
    return missing_patterns(ts, order).missing_count;
}

}  // namespace

double chi2_cdf(double x, int dof) {
    if (dof < 1) throw std::domain_error("chi2_cdf: dof must be >= 1");
    if (x < 0.0) throw std::domain_error("chi2_cdf: x must be >= 0");
    return gamma_p(0.5 * static_cast<double>(dof), 0.5 * x);
}

double chi2_quantile(double p, int dof) {
    if (dof < 1) throw std::domain_error("chi2_quantile: dof must be >= 1");
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("chi2_quantile: p must lie in (0, 1)");
    double lo = 0.0, hi = std::max(10.0, 2.0 * static_cast<double>(dof));
    while (chi2_cdf(hi, dof) < p) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (chi2_cdf(mid, dof) < p)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-12 * std::max(1.0, hi)) break;
    }
    return 0.5 * (lo + hi);
}

TestResult method2_chi2_test(const TimeSeries& x, int order, double alpha) {
    if (order < 2 || order > 6)
        throw std::domain_error("method2_chi2_test: order must be in [2, 6]");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("method2_chi2_test: alpha must lie in (0, 1)");
    const std::int64_t windows = static_cast<std::int64_t>(x.size()) / order;
    if (windows < 2)
        throw std::domain_error("method2_chi2_test: need at least 2 disjoint windows");

    const auto dist = ordinal_distribution(x, order, order);
    const double k = static_cast<double>(dist.total);
    const double cells = static_cast<double>(factorial(order));

    double sum_sq = 0.0;
    std::int64_t min_visible = -1;
    for (std::int64_t c : dist.counts) {
        if (c > 0) {
            sum_sq += static_cast<double>(c) * static_cast<double>(c);
            if (min_visible < 0 || c < min_visible) min_visible = c;
        }
    }
    TestResult r;
    r.statistic = (cells / k) * sum_sq - k;
    r.dof = static_cast<int>(cells) - 1;
    r.critical_value = chi2_quantile(1.0 - alpha, r.dof);
    r.p_value = 1.0 - chi2_cdf(r.statistic, r.dof);
    r.decision = r.statistic > r.critical_value ? Decision::RejectNull : Decision::AcceptNull;
    if (min_visible >= 0 && min_visible <= 10)
        r.flags.push_back("chi-square approximation shaky: a visible pattern has count <= 10");
    if (k / cells <= 5.0)
        r.flags.push_back("chi-square approximation shaky: windows per pattern cell <= 5");
    return r;
}

TestResult g_test(const TimeSeries& x, int order, double alpha) {
    if (order < 2)
        throw std::domain_error("g_test: order must be >= 2");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("g_test: alpha must lie in (0, 1)");
    if (x.size() < static_cast<std::size_t>(order))
        throw std::domain_error("g_test: series shorter than the pattern order");

    const auto pe = permutation_entropy(x, order);
    const double windows = static_cast<double>(x.size()) - order + 1;
    const double ln_cells = std::log(static_cast<double>(factorial(order)));

    TestResult r;
    r.statistic = 2.0 * windows * (ln_cells - pe.raw);
    if (r.statistic < 0.0) r.statistic = 0.0;  // guard rounding at the uniform law
    r.dof = static_cast<int>(factorial(order)) - 1;
    r.critical_value = chi2_quantile(1.0 - alpha, r.dof);
    r.p_value = 1.0 - chi2_cdf(r.statistic, r.dof);
    r.decision = r.statistic > r.critical_value ? Decision::RejectNull : Decision::AcceptNull;
    if (windows < 5.0 * static_cast<double>(factorial(order)))
        r.flags.push_back("asymptotic chi-square approximation shaky: few windows per pattern");
    return r;
}

SurrogateResult method1_surrogate_test(const TimeSeries& x, int order, int n_surrogates,
                                       std::uint64_t seed) {
    if (n_surrogates < 1)
        throw std::domain_error("method1_surrogate_test: need at least one surrogate");
    if (x.size() < static_cast<std::size_t>(order))
        throw std::domain_error("method1_surrogate_test: series shorter than the pattern order");

    SurrogateResult r;
    r.observed_missing = missing_patterns(x, order).missing_count;

    const std::size_t half = x.size() / 2;
    if (half >= static_cast<std::size_t>(order) && half >= 2) {
        std::vector<double> head(x.values().begin(),
                                 x.values().begin() + static_cast<long>(half));
        r.observed_missing_half = missing_count(head, order);
    } else {
        r.observed_missing_half = -1;  // half series too short for a census
        r.flags.push_back("half-length census unavailable (series too short)");
    }

    const double recommended = static_cast<double>(factorial(order + 1));
    if (static_cast<double>(x.size()) < recommended)
        r.flags.push_back("series shorter than the recommended (L+1)! values");
    if (n_surrogates < 19)
        r.flags.push_back("fewer than 19 surrogates: p-value resolution above 0.05");

    Rng master(seed);
    std::int64_t at_least = 0;
    r.surrogate_missing.reserve(static_cast<std::size_t>(n_surrogates));
    for (int s = 0; s < n_surrogates; ++s) {
        Rng rng = master.derive(static_cast<std::uint64_t>(s) + 1);
        std::vector<double> shuffled = x.values();
        for (std::size_t i = shuffled.size(); i > 1; --i)
            std::swap(shuffled[i - 1], shuffled[rng.next_below(i)]);
        const std::int64_t miss = missing_count(shuffled, order);
        r.surrogate_missing.push_back(miss);
        if (miss >= r.observed_missing) ++at_least;  // ties count toward the p-value
    }
    r.p_value = static_cast<double>(at_least) / static_cast<double>(n_surrogates);
    return r;
}

}  // namespace entrokit
