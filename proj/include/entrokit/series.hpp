#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace entrokit {

/// Finite real-valued sequence with uniform sampling. All entries must be
/// finite and the length at least 2.
class TimeSeries {
public:
    explicit TimeSeries(std::vector<double> values);

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }

    double mean() const;
    double sample_std() const;  // unbiased (n-1) denominator

private:
    std::vector<double> values_;
};

/// Finite sequence over the alphabet {0, ..., alphabet_size-1}.
struct SymbolSeq {
    std::vector<int> symbols;
    int alphabet_size = 0;

    SymbolSeq() = default;
    SymbolSeq(std::vector<int> syms, int k);

    std::size_t size() const { return symbols.size(); }
};

// Coding map: symbol = index of the half-open cell [c_i, c_{i+1})
// containing the value, with cell 0 = (-inf, c_0) and the last cell
// unbounded above. A value exactly at a cut point lands in the upper cell.
SymbolSeq symbolize(const TimeSeries& series, const std::vector<double>& cut_points);

struct EntropyRateEstimate {
    double block_entropy;     // H_n of the empirical n-block distribution (nats)
    double block_rate;        // H_n / n
    double conditional_rate;  // H_n - H_{n-1}  (preferred estimator)
    std::size_t distinct_blocks;
    bool sparse_warning;      // distinct observed n-blocks > |s| / 10
};

// Plug-in entropy-rate estimate from observed overlapping n-block
// frequencies. No bias correction is applied.
EntropyRateEstimate plugin_entropy_rate(const SymbolSeq& s, int block_len);

}  // namespace entrokit
