#include "entrokit/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

namespace entrokit {

// ---------------------------------------------------------------------------
// IntervalMap
// ---------------------------------------------------------------------------

IntervalMap IntervalMap::logistic(double a) {
    if (!(a > 0.0) || a > 4.0)
        throw std::domain_error("IntervalMap::logistic: parameter must be in (0, 4]");
    IntervalMap f;
    f.kind_ = Kind::Logistic;
    f.a_ = a;
    f.breaks_ = {0.5};
    return f;
}

IntervalMap IntervalMap::tent() {
    IntervalMap f;
    f.kind_ = Kind::Tent;
    f.breaks_ = {0.5};
    return f;
}

IntervalMap IntervalMap::doubling() {
    IntervalMap f;
    f.kind_ = Kind::Doubling;
    f.breaks_ = {0.5};
    return f;
}

IntervalMap IntervalMap::piecewise_linear(std::vector<double> xs, std::vector<double> ys) {
    if (xs.size() < 2 || xs.size() != ys.size())
        throw std::invalid_argument("piecewise_linear: need matching node lists, >= 2 nodes");
    if (xs.front() != 0.0 || xs.back() != 1.0)
        throw std::invalid_argument("piecewise_linear: domain must span [0,1]");
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1]))
            throw std::invalid_argument("piecewise_linear: x nodes must be strictly increasing");
    for (double y : ys)
        if (y < 0.0 || y > 1.0)
            throw std::invalid_argument("piecewise_linear: values must stay in [0,1]");
    IntervalMap f;
    f.kind_ = Kind::PiecewiseLinear;
    f.xs_ = std::move(xs);
    f.ys_ = std::move(ys);
    f.breaks_.assign(f.xs_.begin() + 1, f.xs_.end() - 1);
    return f;
}

double IntervalMap::eval(double x) const {
    switch (kind_) {
        case Kind::Logistic: return a_ * x * (1.0 - x);
        case Kind::Tent: return 2.0 * std::min(x, 1.0 - x);
        case Kind::Doubling: return x < 0.5 ? 2.0 * x : 2.0 * x - 1.0;
        case Kind::PiecewiseLinear: {
            const std::size_t b = branch_containing(x);
            return eval_on_branch(b, x);
        }
    }
    return 0.0;
}

double IntervalMap::derivative(double x) const {
    switch (kind_) {
        case Kind::Logistic: return a_ * (1.0 - 2.0 * x);
        case Kind::Tent:
            if (x == 0.5) return std::numeric_limits<double>::quiet_NaN();
            return x < 0.5 ? 2.0 : -2.0;
        case Kind::Doubling:
            return 2.0;  // differentiable on each branch; jump is not a kink
        case Kind::PiecewiseLinear: {
            for (std::size_t i = 1; i + 1 < xs_.size(); ++i)
                if (x == xs_[i]) return std::numeric_limits<double>::quiet_NaN();
            const std::size_t b = branch_containing(x);
            return (ys_[b + 1] - ys_[b]) / (xs_[b + 1] - xs_[b]);
        }
    }
    return 0.0;
}

std::size_t IntervalMap::branch_containing(double x) const {
    // branch b covers [break_{b-1}, break_b); the last branch is closed above
    std::size_t b = static_cast<std::size_t>(
        std::upper_bound(breaks_.begin(), breaks_.end(), x) - breaks_.begin());
    return b;
}

double IntervalMap::eval_on_branch(std::size_t b, double x) const {
    switch (kind_) {
        case Kind::Logistic:
        case Kind::Tent:
            return eval(x);  // continuous: branch does not matter
        case Kind::Doubling:
            return b == 0 ? 2.0 * x : 2.0 * x - 1.0;  // left-branch limit at 1/2 is 1
        case Kind::PiecewiseLinear: {
            const double t = (x - xs_[b]) / (xs_[b + 1] - xs_[b]);
            return ys_[b] + t * (ys_[b + 1] - ys_[b]);
        }
    }
    return 0.0;
}

// ---------------------------------------------------------------------------
// Lap numbers
// ---------------------------------------------------------------------------

std::vector<LapEstimate> lap_number_entropy(const IntervalMap& f, int n_max) {
    if (n_max < 1)
        throw std::domain_error("lap_number_entropy: n_max must be >= 1");
    if (n_max > 62)
        throw std::domain_error("lap_number_entropy: n_max > 62 overflows the lap counter");
    constexpr std::size_t kMaxLaps = std::size_t(1) << 22;

    // Laps of f^n are tracked by their image intervals. A lap with image J
    // splits under f at every interior breakpoint inside J; each resulting
    // piece lies in a single branch, so its new image is the branch values
    // at the piece endpoints.
    struct Piece { double lo, hi; };
    std::vector<Piece> pieces;
    const auto& cuts = f.interior_breaks();

    // laps of f^1: one per branch, image = branch endpoint values
    {
        std::vector<double> ends = {0.0};
        ends.insert(ends.end(), cuts.begin(), cuts.end());
        ends.push_back(1.0);
        for (std::size_t b = 0; b + 1 < ends.size(); ++b) {
            double y0 = f.eval_on_branch(b, ends[b]);
            double y1 = f.eval_on_branch(b, ends[b + 1]);
            pieces.push_back({std::min(y0, y1), std::max(y0, y1)});
        }
    }

    std::vector<LapEstimate> out;
    out.push_back({1, static_cast<std::int64_t>(pieces.size()),
                   std::log(static_cast<double>(pieces.size())) / 1.0});

    for (int n = 2; n <= n_max; ++n) {
        std::vector<Piece> next;
        next.reserve(pieces.size() * 2);
        for (const Piece& piece : pieces) {
            // endpoints of the subdivision of J = [lo, hi] by interior cuts
            double prev = piece.lo;
            for (double c : cuts) {
                if (c <= piece.lo) continue;
                if (c >= piece.hi) break;
                const std::size_t b = f.branch_containing(0.5 * (prev + c));
                double y0 = f.eval_on_branch(b, prev);
                double y1 = f.eval_on_branch(b, c);
                next.push_back({std::min(y0, y1), std::max(y0, y1)});
                prev = c;
            }
            const std::size_t b = f.branch_containing(0.5 * (prev + piece.hi));
            double y0 = f.eval_on_branch(b, prev);
            double y1 = f.eval_on_branch(b, piece.hi);
            next.push_back({std::min(y0, y1), std::max(y0, y1)});
            if (next.size() > kMaxLaps)
                throw std::length_error(
                    "lap_number_entropy: lap count exceeded the 2^22 piece cap at n = " +
                    std::to_string(n));
        }
        pieces.swap(next);
        out.push_back({n, static_cast<std::int64_t>(pieces.size()),
                       std::log(static_cast<double>(pieces.size())) / static_cast<double>(n)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Lyapunov / Pesin estimate
// ---------------------------------------------------------------------------

LyapunovEstimate lyapunov_entropy_estimate_1d(const IntervalMap& f, double x0,
                                              std::int64_t steps, std::int64_t burn_in) {
    if (steps < 1)
        throw std::domain_error("lyapunov_entropy_estimate_1d: need at least one step");
    if (burn_in < 0)
        throw std::domain_error("lyapunov_entropy_estimate_1d: negative burn-in");
    if (!(x0 >= 0.0 && x0 <= 1.0))
        throw std::domain_error("lyapunov_entropy_estimate_1d: x0 must lie in [0,1]");

    double x = x0;
    for (std::int64_t t = 0; t < burn_in; ++t) x = f.eval(x);

    double sum = 0.0;
    std::int64_t used = 0, skipped = 0;
    for (std::int64_t t = 0; t < steps; ++t) {
        const double d = f.derivative(x);
        if (std::isnan(d)) {
            ++skipped;
        } else {
            sum += std::log(std::abs(d));
            ++used;
        }
        x = f.eval(x);
    }
    LyapunovEstimate est{};
    est.skipped = skipped;
    est.raw_average = used > 0 ? sum / static_cast<double>(used)
                               : -std::numeric_limits<double>::infinity();
    est.value = std::max(est.raw_average, 0.0);
    return est;
}

// ---------------------------------------------------------------------------
// Toral automorphisms
// ---------------------------------------------------------------------------

namespace {

// Characteristic polynomial coefficients by Faddeev-LeVerrier. For an
// integer matrix the coefficients are integers; they are rounded to kill
// the division residue.
std::vector<double> char_poly(const std::vector<std::vector<long long>>& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<double>(m[i][j]);

    // p(x) = x^n + c[n-1] x^{n-1} + ... + c[0]
    std::vector<double> c(n, 0.0);
    std::vector<std::vector<double>> mk = a;
    for (std::size_t k = 1; k <= n; ++k) {
        double tr = 0.0;
        for (std::size_t i = 0; i < n; ++i) tr += mk[i][i];
        const double ck = -tr / static_cast<double>(k);
        c[n - k] = std::round(ck);
        if (k == n) break;
        for (std::size_t i = 0; i < n; ++i) mk[i][i] += c[n - k];
        // mk <- a * mk
        std::vector<std::vector<double>> prod(n, std::vector<double>(n, 0.0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                if (a[i][l] == 0.0) continue;
                for (std::size_t j = 0; j < n; ++j) prod[i][j] += a[i][l] * mk[l][j];
            }
        mk.swap(prod);
    }
    return c;
}

long long det_int(const std::vector<std::vector<long long>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    long long det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<long long>> minor(n - 1, std::vector<long long>(n - 1));
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t cidx = 0; cidx < n; ++cidx) {
                if (cidx == j) continue;
                minor[r - 1][cc++] = m[r][cidx];
            }
        }
        const long long term = m[0][j] * det_int(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

// All roots of the monic polynomial x^n + c[n-1]x^{n-1} + ... + c[0]
// by Durand-Kerner iteration.
std::vector<std::complex<double>> poly_roots(const std::vector<double>& c) {
    const std::size_t n = c.size();
    auto eval = [&c, n](std::complex<double> x) {
        std::complex<double> v(1.0, 0.0);
        for (std::size_t i = n; i-- > 0;) v = v * x + c[i];
        return v;
    };
    std::vector<std::complex<double>> z(n);
    const std::complex<double> gen(0.4, 0.9);
    std::complex<double> acc(1.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        acc *= gen;
        z[i] = acc;
    }
    for (int it = 0; it < 500; ++it) {
        double max_step = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            std::complex<double> denom(1.0, 0.0);
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) denom *= (z[i] - z[j]);
            const std::complex<double> step = eval(z[i]) / denom;
            z[i] -= step;
            max_step = std::max(max_step, std::abs(step));
        }
        if (max_step < 1e-15) break;
    }
    return z;
}

}  // namespace

double toral_automorphism_entropy(const std::vector<std::vector<long long>>& m) {
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("toral_automorphism_entropy: empty matrix");
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("toral_automorphism_entropy: matrix must be square");
    if (n > 4)
        throw std::domain_error(
            "toral_automorphism_entropy: supported for n <= 4 (exact eigenvalue oracle)");
    const long long det = det_int(m);
    if (det != 1 && det != -1)
        throw std::domain_error("toral_automorphism_entropy: |det| must be 1 (got " +
                                std::to_string(det) + ")");

    const auto roots = poly_roots(char_poly(m));
    double h = 0.0;
    for (const auto& z : roots) {
        const double mod = std::abs(z);
        // Roots of unity can only be located to ~1e-4 when repeated
        // (Durand-Kerner is linear at multiple roots); integer matrices of
        // size <= 4 with |det| = 1 have no eigenvalue with 1 < |lambda| < 1.3,
        // so snapping a 1e-3 band to the unit circle is safe.
        if (std::abs(mod - 1.0) < 1e-3) continue;
        if (mod > 1.0) h += std::log(mod);
    }
    return h;
}

}  // namespace entrokit
