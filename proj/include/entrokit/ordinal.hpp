#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "entrokit/series.hpp"

namespace entrokit {

/// Ordinal pattern: the permutation r of {0,...,L-1} with
/// window[r_0] < window[r_1] < ... (ties ranked by earlier index).
/// Element of the symmetric group S_L under `compose`.
class OrdinalPattern {
public:
    explicit OrdinalPattern(std::vector<std::uint8_t> ranks);
    static OrdinalPattern identity(int order);

    int order() const { return static_cast<int>(ranks_.size()); }
    const std::vector<std::uint8_t>& ranks() const { return ranks_; }
    std::uint8_t operator[](std::size_t i) const { return ranks_[i]; }

    bool operator==(const OrdinalPattern& other) const { return ranks_ == other.ranks_; }

private:
    std::vector<std::uint8_t> ranks_;
};

OrdinalPattern pattern_of(std::span<const double> window);

// Group product exactly as (r o s)_i = s_{r_i}; the identity (0,...,L-1)
// is neutral.
OrdinalPattern compose(const OrdinalPattern& r, const OrdinalPattern& s);
OrdinalPattern invert(const OrdinalPattern& r);

// Transcript tau = target o source^{-1}, the unique tau with
// compose(tau, source) == target.
OrdinalPattern transcript(const OrdinalPattern& source, const OrdinalPattern& target);

// Bijection S_L <-> {0, ..., L!-1} (factorial number system), used to
// index census arrays.
std::uint64_t lehmer_index(const OrdinalPattern& p);
OrdinalPattern pattern_from_lehmer(std::uint64_t index, int order);

std::uint64_t factorial(int n);

/// Empirical distribution of ordinal patterns of one order, exact counts.
struct PatternDistribution {
    int order = 0;
    std::vector<std::int64_t> counts;  // size L!, indexed by Lehmer code
    std::int64_t total = 0;
};

// Sliding-window pattern counts. stride 1 = overlapping windows;
// stride L = disjoint windows. Censuses are exact; order is capped at 8
// so L! stays enumerable.
PatternDistribution ordinal_distribution(const TimeSeries& x, int order, int stride = 1);

struct PermutationEntropyResult {
    double raw;         // H(pi_L) of the empirical pattern distribution, nats
    double per_symbol;  // raw / (L - 1)
    double normalized;  // raw / ln(L!)
};

PermutationEntropyResult permutation_entropy(const TimeSeries& x, int order);

// Conditional entropy of ordinal patterns,
// H(pi_L v T^{-1} pi_L) - H(pi_L), from joint counts of the patterns of
// consecutive windows.
double conditional_entropy_ordinal(const TimeSeries& x, int order);

struct MissingPatternCensus {
    std::int64_t observed_count = 0;
    std::int64_t missing_count = 0;
    std::vector<OrdinalPattern> missing;
};

MissingPatternCensus missing_patterns(const TimeSeries& x, int order);

// (1/L) ln |pi_L|: log-count of observed patterns per window length.
double topological_perm_entropy_order(const TimeSeries& x, int order);

}  // namespace entrokit
