#include "entrokit/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace entrokit {

TimeSeries::TimeSeries(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < 2)
        throw std::invalid_argument("TimeSeries: need at least 2 values");
    for (double v : values_)
        if (!std::isfinite(v))
            throw std::invalid_argument("TimeSeries: values must be finite");
}

double TimeSeries::mean() const {
    double s = 0.0;
    for (double v : values_) s += v;
    return s / static_cast<double>(values_.size());
}

double TimeSeries::sample_std() const {
    const double m = mean();
    double ss = 0.0;
    for (double v : values_) ss += (v - m) * (v - m);
    return std::sqrt(ss / static_cast<double>(values_.size() - 1));
}

SymbolSeq::SymbolSeq(std::vector<int> syms, int k) : symbols(std::move(syms)), alphabet_size(k) {
    if (k < 1) throw std::invalid_argument("SymbolSeq: alphabet size must be >= 1");
    for (int s : symbols)
        if (s < 0 || s >= k)
            throw std::invalid_argument("SymbolSeq: symbol out of alphabet range");
}

SymbolSeq symbolize(const TimeSeries& series, const std::vector<double>& cut_points) {
    if (series.size() == 0)
        throw std::invalid_argument("symbolize: empty series");
    if (!std::is_sorted(cut_points.begin(), cut_points.end()) ||
        std::adjacent_find(cut_points.begin(), cut_points.end()) != cut_points.end())
        throw std::invalid_argument("symbolize: cut points must be strictly increasing");

    std::vector<int> syms;
    syms.reserve(series.size());
    for (double v : series.values()) {
        // number of cut points <= v: a value at a cut goes to the upper cell
        auto it = std::upper_bound(cut_points.begin(), cut_points.end(), v);
        syms.push_back(static_cast<int>(it - cut_points.begin()));
    }
    return SymbolSeq(std::move(syms), static_cast<int>(cut_points.size()) + 1);
}

namespace {

// Shannon entropy (nats) of empirical block counts.
double count_entropy(const std::unordered_map<std::uint64_t, std::int64_t>& counts,
                     std::int64_t total) {
    double h = 0.0;
    const double n = static_cast<double>(total);
    for (const auto& [key, c] : counts) {
        (void)key;
        if (c > 0) {
            const double p = static_cast<double>(c) / n;
            h -= p * std::log(p);
        }
    }
    return h;
}

std::unordered_map<std::uint64_t, std::int64_t> block_counts(const SymbolSeq& s, int n) {
    std::unordered_map<std::uint64_t, std::int64_t> counts;
    const std::uint64_t k = static_cast<std::uint64_t>(s.alphabet_size);
    const std::size_t windows = s.size() - static_cast<std::size_t>(n) + 1;
    counts.reserve(windows / 4 + 8);
    for (std::size_t t = 0; t < windows; ++t) {
        std::uint64_t key = 0;
        for (int j = 0; j < n; ++j)
            key = key * k + static_cast<std::uint64_t>(s.symbols[t + static_cast<std::size_t>(j)]);
        ++counts[key];
    }
    return counts;
}

}  // namespace

EntropyRateEstimate plugin_entropy_rate(const SymbolSeq& s, int block_len) {
    if (block_len < 1)
        throw std::domain_error("plugin_entropy_rate: block length must be >= 1");
    if (static_cast<std::size_t>(block_len) >= s.size())
        throw std::domain_error("plugin_entropy_rate: block length must be < series length");
    // key fits in 64 bits?
    double key_bits = static_cast<double>(block_len) *
                      std::log2(static_cast<double>(std::max(2, s.alphabet_size)));
    if (key_bits > 62.0)
        throw std::domain_error("plugin_entropy_rate: k^n exceeds the 64-bit block key");

    auto counts_n = block_counts(s, block_len);
    const std::int64_t windows_n = static_cast<std::int64_t>(s.size()) - block_len + 1;
    const double h_n = count_entropy(counts_n, windows_n);

    double h_prev = 0.0;
    if (block_len > 1) {
        auto counts_prev = block_counts(s, block_len - 1);
        const std::int64_t windows_prev = static_cast<std::int64_t>(s.size()) - block_len + 2;
        h_prev = count_entropy(counts_prev, windows_prev);
    }

    EntropyRateEstimate est{};
    est.block_entropy = h_n;
    est.block_rate = h_n / static_cast<double>(block_len);
    est.conditional_rate = h_n - h_prev;
    est.distinct_blocks = counts_n.size();
    est.sparse_warning =
        counts_n.size() * 10 > s.size();  // guard: distinct blocks <= |s|/10
    return est;
}

}  // namespace entrokit
