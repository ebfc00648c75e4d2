#include "entrokit/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace entrokit {

namespace {

void check_params(const CorrParams& p) {
    if (p.embed_len < 1)
        throw std::domain_error("correlation: embedding length must be >= 1");
    if (!(p.epsilon > 0.0))
        throw std::domain_error("correlation: tolerance epsilon must be > 0");
}

// Closed inequality: windows are similar iff max-norm distance <= epsilon.
bool windows_similar(const std::vector<double>& x, std::size_t i, std::size_t j, int k,
                     double epsilon) {
    for (int l = 0; l < k; ++l)
        if (std::abs(x[i + static_cast<std::size_t>(l)] - x[j + static_cast<std::size_t>(l)]) >
            epsilon)
            return false;
    return true;
}

std::int64_t pair_count_naive(const std::vector<double>& x, int k, double epsilon) {
    const std::size_t m = x.size() - static_cast<std::size_t>(k) + 1;
    std::int64_t count = 0;
    for (std::size_t i = 0; i + 1 < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (windows_similar(x, i, j, k, epsilon)) ++count;
    return count;
}

// Sorted-first-coordinate pruning: pairs whose first coordinates differ by
// more than epsilon can never match, and they form a contiguous exclusion
// in sorted order.
std::int64_t pair_count_pruned(const std::vector<double>& x, int k, double epsilon) {
    const std::size_t m = x.size() - static_cast<std::size_t>(k) + 1;
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&x](std::size_t a, std::size_t b) { return x[a] < x[b]; });

    std::int64_t count = 0;
    std::size_t lo = 0;
    for (std::size_t pos = 0; pos < m; ++pos) {
        const std::size_t i = order[pos];
        while (x[i] - x[order[lo]] > epsilon) ++lo;
        for (std::size_t q = lo; q < pos; ++q) {
            const std::size_t j = order[q];
            // first coordinate already within epsilon
            bool ok = true;
            for (int l = 1; l < k; ++l)
                if (std::abs(x[i + static_cast<std::size_t>(l)] -
                             x[j + static_cast<std::size_t>(l)]) > epsilon) {
                    ok = false;
                    break;
                }
            if (ok) ++count;
        }
    }
    return count;
}

double pair_relative_frequency(const std::vector<double>& x, int k, double epsilon) {
    const std::size_t m = x.size() - static_cast<std::size_t>(k) + 1;
    const double pairs = 0.5 * static_cast<double>(m) * static_cast<double>(m - 1);
    return static_cast<double>(similar_pair_count(x, k, epsilon, true)) / pairs;
}

}  // namespace

std::vector<std::int64_t> template_match_counts(const std::vector<double>& x, int k,
                                                double epsilon) {
    if (k < 1) throw std::domain_error("template_match_counts: k must be >= 1");
    if (!(epsilon > 0.0)) throw std::domain_error("template_match_counts: epsilon must be > 0");
    if (x.size() < static_cast<std::size_t>(k))
        throw std::domain_error("template_match_counts: series shorter than window");
    const std::size_t m = x.size() - static_cast<std::size_t>(k) + 1;

    std::vector<std::int64_t> counts(m, 1);  // self-match included
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&x](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    std::size_t lo = 0;
    for (std::size_t pos = 0; pos < m; ++pos) {
        const std::size_t i = order[pos];
        while (x[i] - x[order[lo]] > epsilon) ++lo;
        for (std::size_t q = lo; q < pos; ++q) {
            const std::size_t j = order[q];
            bool ok = true;
            for (int l = 1; l < k; ++l)
                if (std::abs(x[i + static_cast<std::size_t>(l)] -
                             x[j + static_cast<std::size_t>(l)]) > epsilon) {
                    ok = false;
                    break;
                }
            if (ok) {
                ++counts[i];
                ++counts[j];
            }
        }
    }
    return counts;
}

std::int64_t similar_pair_count(const std::vector<double>& x, int k, double epsilon,
                                bool prune) {
    if (k < 1) throw std::domain_error("similar_pair_count: k must be >= 1");
    if (!(epsilon > 0.0)) throw std::domain_error("similar_pair_count: epsilon must be > 0");
    if (x.size() < static_cast<std::size_t>(k) + 1)
        throw std::domain_error("similar_pair_count: need at least two windows");
    return prune ? pair_count_pruned(x, k, epsilon) : pair_count_naive(x, k, epsilon);
}

double apen(const TimeSeries& x, const CorrParams& p) {
    check_params(p);
    const int k = p.embed_len;
    if (x.size() < static_cast<std::size_t>(k) + 2)
        throw std::domain_error("apen: series must have at least k + 2 values");

    auto phi = [&x, &p](int len) {
        const auto counts = template_match_counts(x.values(), len, p.epsilon);
        const double m = static_cast<double>(counts.size());
        double s = 0.0;
        for (std::int64_t c : counts) s += std::log(static_cast<double>(c) / m);
        return s / m;
    };
    return phi(k) - phi(k + 1);
}

std::optional<double> sampen(const TimeSeries& x, const CorrParams& p) {
    check_params(p);
    const int k = p.embed_len;
    if (x.size() < static_cast<std::size_t>(k) + 2)
        throw std::domain_error("sampen: series must have at least k + 2 values");

    const std::int64_t c_k = similar_pair_count(x.values(), k, p.epsilon);
    const std::int64_t c_k1 = similar_pair_count(x.values(), k + 1, p.epsilon);
    if (c_k1 == 0) return std::nullopt;  // undefined, distinct from 0

    const double m_k = static_cast<double>(x.size() - static_cast<std::size_t>(k) + 1);
    const double m_k1 = m_k - 1.0;
    const double chat_k = static_cast<double>(c_k) / (0.5 * m_k * (m_k - 1.0));
    const double chat_k1 = static_cast<double>(c_k1) / (0.5 * m_k1 * (m_k1 - 1.0));
    return std::log(chat_k) - std::log(chat_k1);
}

double correlation_integral_estimate(const TimeSeries& x, const CorrParams& p) {
    check_params(p);
    if (x.size() < static_cast<std::size_t>(p.embed_len) + 1)
        throw std::domain_error("correlation_integral_estimate: need at least two windows");
    return pair_relative_frequency(x.values(), p.embed_len, p.epsilon);
}

std::optional<double> h2_estimate(const TimeSeries& x, const CorrParams& p) {
    return sampen(x, p);  // identical quantity, identical arithmetic path
}

}  // namespace entrokit
