#include "entrokit/maxent.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace entrokit {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Cholesky factorization in place; returns false if not positive definite.
bool cholesky(std::vector<std::vector<double>>& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = a[i][j];
            for (std::size_t k = 0; k < j; ++k) s -= a[i][k] * a[j][k];
            if (i == j) {
                if (!(s > 0.0)) return false;
                a[i][i] = std::sqrt(s);
            } else {
                a[i][j] = s / a[j][j];
            }
        }
    }
    return true;
}

// Solves L L^T x = b given the Cholesky factor in the lower triangle.
std::vector<double> cholesky_solve(const std::vector<std::vector<double>>& l,
                                   std::vector<double> b) {
    const std::size_t n = l.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < i; ++k) b[i] -= l[i][k] * b[k];
        b[i] /= l[i][i];
    }
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t k = i + 1; k < n; ++k) b[i] -= l[k][i] * b[k];
        b[i] /= l[i][i];
    }
    return b;
}

std::vector<double> scores(const MomentSpec& spec, const std::vector<double>& lambda) {
    const std::size_t n = spec.alphabet_size();
    std::vector<double> s(n, 0.0);
    for (std::size_t k = 0; k < spec.feature_count(); ++k)
        for (std::size_t i = 0; i < n; ++i) s[i] += lambda[k] * spec.features[k][i];
    return s;
}

std::vector<double> weights_from_scores(const std::vector<double>& s) {
    const double shift = *std::max_element(s.begin(), s.end());
    std::vector<double> w(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) w[i] = std::exp(s[i] - shift);
    return w;
}

ProbVec normalize_exact(std::vector<double> w) {
    double total = 0.0;
    for (double v : w) total += v;
    if (!(total > 0.0))
        throw std::domain_error("maxent: all weights vanished");
    for (double& v : w) v /= total;
    // push the rounding residue into the largest entry
    double mass = 0.0;
    for (double v : w) mass += v;
    auto big = std::max_element(w.begin(), w.end());
    *big += 1.0 - mass;
    return ProbVec(std::move(w));
}

// Feasibility: the target moment vector must lie inside the convex hull of
// the feature vectors. Tested exactly for K <= 2; K >= 3 relies on the
// solver's divergence detection.
void feasibility_check(const MomentSpec& spec) {
    const std::size_t kk = spec.feature_count();
    for (std::size_t k = 0; k < kk; ++k) {
        const auto& phi = spec.features[k];
        const double lo = *std::min_element(phi.begin(), phi.end());
        const double hi = *std::max_element(phi.begin(), phi.end());
        const double m = spec.targets[k];
        if (hi - lo < 1e-14) {  // constant feature: vacuous or contradictory
            if (std::abs(m - lo) > 1e-9)
                throw std::invalid_argument(
                    "maxent: target " + std::to_string(k) + " infeasible (constant feature)");
            continue;
        }
        if (!(m > lo && m < hi))
            throw std::invalid_argument("maxent: target " + std::to_string(k) +
                                        " outside the open feature range (" +
                                        std::to_string(lo) + ", " + std::to_string(hi) + ")");
    }
    if (kk != 2) return;

    // 2-D hull test (monotone chain) on (phi_1, phi_2) points.
    struct Pt { double x, y; };
    std::vector<Pt> pts(spec.alphabet_size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        pts[i] = {spec.features[0][i], spec.features[1][i]};
    std::sort(pts.begin(), pts.end(),
              [](const Pt& a, const Pt& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    auto cross = [](const Pt& o, const Pt& a, const Pt& b) {
        return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
    };
    std::vector<Pt> hull;
    for (int pass = 0; pass < 2; ++pass) {
        const std::size_t base = hull.size();
        for (const Pt& p : pts) {
            while (hull.size() >= base + 2 &&
                   cross(hull[hull.size() - 2], hull[hull.size() - 1], p) <= 0.0)
                hull.pop_back();
            hull.push_back(p);
        }
        hull.pop_back();
        std::reverse(pts.begin(), pts.end());
    }
    const Pt target{spec.targets[0], spec.targets[1]};
    if (hull.size() < 3) {
        // Degenerate (collinear) hull: the 1-D range checks above already
        // constrain the box; require the target to sit on the segment.
        const Pt a = pts.front(), b = pts.back();
        const double cr = cross(a, b, target);
        const double scale = std::max({1.0, std::abs(b.x - a.x), std::abs(b.y - a.y)});
        if (std::abs(cr) > 1e-9 * scale)
            throw std::invalid_argument("maxent: target outside the (degenerate) feature hull");
        return;
    }
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Pt& a = hull[i];
        const Pt& b = hull[(i + 1) % hull.size()];
        if (cross(a, b, target) <= 0.0)
            throw std::invalid_argument("maxent: target outside the feature convex hull");
    }
}

}  // namespace

void MomentSpec::validate() const {
    if (support.empty())
        throw std::invalid_argument("MomentSpec: support must be non-empty");
    if (targets.size() != features.size())
        throw std::invalid_argument("MomentSpec: one target per feature required");
    for (const auto& phi : features) {
        if (phi.size() != support.size())
            throw std::invalid_argument("MomentSpec: feature table width mismatch");
        for (double v : phi)
            if (!std::isfinite(v))
                throw std::invalid_argument("MomentSpec: feature values must be finite");
    }
    for (double v : support)
        if (!std::isfinite(v))
            throw std::invalid_argument("MomentSpec: support points must be finite");
    for (double v : targets)
        if (!std::isfinite(v))
            throw std::invalid_argument("MomentSpec: targets must be finite");
}

double log_partition(const MomentSpec& spec, const std::vector<double>& lambda) {
    if (lambda.size() != spec.feature_count())
        throw std::invalid_argument("log_partition: multiplier count mismatch");
    const auto s = scores(spec, lambda);
    const double shift = *std::max_element(s.begin(), s.end());
    double z = 0.0;
    for (double v : s) z += std::exp(v - shift);
    return shift + std::log(z);
}

std::vector<double> model_moments(const MomentSpec& spec, const std::vector<double>& lambda) {
    if (lambda.size() != spec.feature_count())
        throw std::invalid_argument("model_moments: multiplier count mismatch");
    const auto w = weights_from_scores(scores(spec, lambda));
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    std::vector<double> mu(spec.feature_count(), 0.0);
    for (std::size_t k = 0; k < spec.feature_count(); ++k) {
        for (std::size_t i = 0; i < w.size(); ++i) mu[k] += w[i] * spec.features[k][i];
        mu[k] /= total;
    }
    return mu;
}

MaxentSolution solve_discrete_maxent(const MomentSpec& spec, double tol, int max_iter) {
    spec.validate();
    if (!(tol > 0.0)) throw std::domain_error("solve_discrete_maxent: tol must be > 0");
    feasibility_check(spec);

    const std::size_t kk = spec.feature_count();
    std::vector<double> lambda(kk, 0.0);

    if (kk == 0) {
        MaxentSolution sol{ProbVec::uniform(spec.alphabet_size()), lambda,
                           std::log(static_cast<double>(spec.alphabet_size())), 0.0, 0};
        return sol;
    }

    auto dual = [&spec](const std::vector<double>& l) {
        double d = log_partition(spec, l);
        for (std::size_t k = 0; k < l.size(); ++k) d -= l[k] * spec.targets[k];
        return d;
    };

    double objective = dual(lambda);
    int it = 0;
    for (; it < max_iter; ++it) {
        const auto w = weights_from_scores(scores(spec, lambda));
        const double total = std::accumulate(w.begin(), w.end(), 0.0);
        std::vector<double> p(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) p[i] = w[i] / total;

        std::vector<double> grad(kk, 0.0);
        for (std::size_t k = 0; k < kk; ++k) {
            for (std::size_t i = 0; i < p.size(); ++i) grad[k] += p[i] * spec.features[k][i];
            grad[k] -= spec.targets[k];
        }
        double residual = 0.0;
        for (double gk : grad) residual = std::max(residual, std::abs(gk));
        if (residual <= tol) {
            MaxentSolution sol{normalize_exact(w), lambda, log_partition(spec, lambda),
                               residual, it};
            return sol;
        }

        // Hessian = feature covariance under p (positive semidefinite).
        std::vector<double> mu(kk, 0.0);
        for (std::size_t k = 0; k < kk; ++k)
            for (std::size_t i = 0; i < p.size(); ++i) mu[k] += p[i] * spec.features[k][i];
        std::vector<std::vector<double>> hess(kk, std::vector<double>(kk, 0.0));
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t k = 0; k < kk; ++k) {
                const double dk = spec.features[k][i] - mu[k];
                for (std::size_t l = 0; l <= k; ++l)
                    hess[k][l] += p[i] * dk * (spec.features[l][i] - mu[l]);
            }
        for (std::size_t k = 0; k < kk; ++k)
            for (std::size_t l = k + 1; l < kk; ++l) hess[k][l] = hess[l][k];

        std::vector<double> neg_grad(kk);
        for (std::size_t k = 0; k < kk; ++k) neg_grad[k] = -grad[k];
        auto factor = hess;
        std::vector<double> step;
        if (cholesky(factor)) {
            step = cholesky_solve(factor, neg_grad);
        } else {
            step = neg_grad;  // gradient fallback on a non-PD Hessian
        }

        // Backtracking line search keeps the dual non-increasing.
        double slope = 0.0;
        for (std::size_t k = 0; k < kk; ++k) slope += grad[k] * step[k];
        if (slope >= 0.0) {  // not a descent direction; fall back
            step = neg_grad;
            slope = 0.0;
            for (std::size_t k = 0; k < kk; ++k) slope += grad[k] * step[k];
        }
        double t = 1.0;
        std::vector<double> trial(kk);
        double trial_obj = objective;
        for (int ls = 0; ls < 60; ++ls) {
            for (std::size_t k = 0; k < kk; ++k) trial[k] = lambda[k] + t * step[k];
            trial_obj = dual(trial);
            if (trial_obj <= objective + 0.25 * t * slope) break;
            t *= 0.5;
        }
        lambda = trial;
        objective = trial_obj;

        // Divergence detection covers infeasible targets for K >= 3.
        double lmax = 0.0;
        for (double lv : lambda) lmax = std::max(lmax, std::abs(lv));
        if (lmax > 1e5)
            throw std::runtime_error(
                "solve_discrete_maxent: multipliers diverging (target likely infeasible); "
                "residual " + std::to_string(residual));
    }
    const auto mu = model_moments(spec, lambda);
    double residual = 0.0;
    for (std::size_t k = 0; k < kk; ++k)
        residual = std::max(residual, std::abs(mu[k] - spec.targets[k]));
    throw std::runtime_error("solve_discrete_maxent: no convergence in " +
                             std::to_string(max_iter) + " iterations; residual " +
                             std::to_string(residual));
}

ProbVec gibbs_distribution(const std::vector<double>& energies, double beta) {
    if (energies.empty())
        throw std::invalid_argument("gibbs_distribution: energies must be non-empty");
    for (double e : energies)
        if (!std::isfinite(e))
            throw std::invalid_argument("gibbs_distribution: energies must be finite");
    std::vector<double> s(energies.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = -beta * energies[i];
    return normalize_exact(weights_from_scores(s));
}

ProbVec tsallis_maxent_distribution(const std::vector<double>& energies, double beta,
                                    double q) {
    if (energies.empty())
        throw std::invalid_argument("tsallis_maxent_distribution: energies must be non-empty");
    if (q == 1.0)
        throw std::domain_error("tsallis_maxent_distribution: q = 1 is the Gibbs case");
    std::vector<double> w(energies.size(), 0.0);
    bool any = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double base = 1.0 - (q - 1.0) * beta * energies[i];
        if (base > 0.0) {
            w[i] = std::pow(base, 1.0 / (q - 1.0));
            any = true;
        }
    }
    if (!any)
        throw std::domain_error("tsallis_maxent_distribution: every cutoff base is non-positive");
    return normalize_exact(std::move(w));
}

ContinuousMaxent continuous_maxent_uniform(double a, double b) {
    if (!(b > a))
        throw std::domain_error("continuous_maxent_uniform: need b > a");
    ContinuousMaxent r{MaxentFamily::Uniform, {a, b}, std::log(b - a),
                       "sign convention: returns ln(b-a), the differential entropy of the "
                       "uniform density; some sources print the opposite sign"};
    return r;
}

ContinuousMaxent continuous_maxent_exponential(double mean) {
    if (!(mean > 0.0))
        throw std::domain_error("continuous_maxent_exponential: mean must be > 0");
    return {MaxentFamily::Exponential, {mean}, std::log(mean) + 1.0, ""};
}

ContinuousMaxent continuous_maxent_gaussian(double m1, double m2) {
    const double variance = m2 - m1 * m1;
    if (!(variance > 0.0))
        throw std::domain_error("continuous_maxent_gaussian: need m2 > m1^2");
    return {MaxentFamily::Gaussian, {m1, variance},
            0.5 * std::log(2.0 * kPi * std::exp(1.0) * variance), ""};
}

double gaussian_multivariate_entropy(const std::vector<std::vector<double>>& correlation) {
    const std::size_t n = correlation.size();
    if (n == 0)
        throw std::invalid_argument("gaussian_multivariate_entropy: empty matrix");
    for (std::size_t i = 0; i < n; ++i) {
        if (correlation[i].size() != n)
            throw std::invalid_argument("gaussian_multivariate_entropy: matrix must be square");
        for (std::size_t j = 0; j < n; ++j)
            if (std::abs(correlation[i][j] - correlation[j][i]) > 1e-12)
                throw std::invalid_argument("gaussian_multivariate_entropy: matrix must be symmetric");
    }
    auto factor = correlation;
    if (!cholesky(factor))
        throw std::domain_error("gaussian_multivariate_entropy: matrix is not positive definite");
    double log_det = 0.0;
    for (std::size_t i = 0; i < n; ++i) log_det += 2.0 * std::log(factor[i][i]);
    return 0.5 * (static_cast<double>(n) * std::log(2.0 * kPi * std::exp(1.0)) + log_det);
}

}  // namespace entrokit
