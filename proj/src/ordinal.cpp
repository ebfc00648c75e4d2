#include "entrokit/ordinal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace entrokit {

namespace {

constexpr int kMaxCensusOrder = 8;  // 8! = 40320 census cells

void check_census_order(int order) {
    if (order < 2) throw std::domain_error("ordinal: pattern order must be >= 2");
    if (order > kMaxCensusOrder)
        throw std::domain_error("ordinal: pattern order capped at 8 (exact L! census)");
}

double entropy_of_counts(const std::vector<std::int64_t>& counts, std::int64_t total) {
    double h = 0.0;
    const double n = static_cast<double>(total);
    for (std::int64_t c : counts) {
        if (c > 0) {
            const double p = static_cast<double>(c) / n;
            h -= p * std::log(p);
        }
    }
    return h;
}

}  // namespace

OrdinalPattern::OrdinalPattern(std::vector<std::uint8_t> ranks) : ranks_(std::move(ranks)) {
    if (ranks_.size() < 2)
        throw std::domain_error("OrdinalPattern: order must be >= 2");
    std::vector<bool> seen(ranks_.size(), false);
    for (std::uint8_t r : ranks_) {
        if (r >= ranks_.size() || seen[r])
            throw std::invalid_argument("OrdinalPattern: ranks must be a permutation of 0..L-1");
        seen[r] = true;
    }
}

OrdinalPattern OrdinalPattern::identity(int order) {
    std::vector<std::uint8_t> r(static_cast<std::size_t>(order));
    std::iota(r.begin(), r.end(), std::uint8_t{0});
    return OrdinalPattern(std::move(r));
}

OrdinalPattern pattern_of(std::span<const double> window) {
    const std::size_t l = window.size();
    if (l < 2) throw std::domain_error("pattern_of: window must have at least 2 values");
    if (l > 255) throw std::domain_error("pattern_of: window too long");
    std::vector<std::uint8_t> idx(l);
    std::iota(idx.begin(), idx.end(), std::uint8_t{0});
    // ties broken by earlier index ranking lower
    std::stable_sort(idx.begin(), idx.end(),
                     [&window](std::uint8_t a, std::uint8_t b) { return window[a] < window[b]; });
    return OrdinalPattern(std::move(idx));
}

OrdinalPattern compose(const OrdinalPattern& r, const OrdinalPattern& s) {
    if (r.order() != s.order())
        throw std::domain_error("compose: patterns must have equal order");
    std::vector<std::uint8_t> out(static_cast<std::size_t>(r.order()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = s[r[i]];
    return OrdinalPattern(std::move(out));
}

OrdinalPattern invert(const OrdinalPattern& r) {
    std::vector<std::uint8_t> out(static_cast<std::size_t>(r.order()));
    for (std::size_t i = 0; i < out.size(); ++i) out[r[i]] = static_cast<std::uint8_t>(i);
    return OrdinalPattern(std::move(out));
}

OrdinalPattern transcript(const OrdinalPattern& source, const OrdinalPattern& target) {
    if (source.order() != target.order())
        throw std::domain_error("transcript: patterns must have equal order");
    return compose(target, invert(source));
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t lehmer_index(const OrdinalPattern& p) {
    const int l = p.order();
    std::uint64_t index = 0;
    for (int i = 0; i < l; ++i) {
        int smaller_later = 0;
        for (int j = i + 1; j < l; ++j)
            if (p[static_cast<std::size_t>(j)] < p[static_cast<std::size_t>(i)]) ++smaller_later;
        index += static_cast<std::uint64_t>(smaller_later) * factorial(l - 1 - i);
    }
    return index;
}

OrdinalPattern pattern_from_lehmer(std::uint64_t index, int order) {
    if (order < 2 || order > 20)
        throw std::domain_error("pattern_from_lehmer: unsupported order");
    std::vector<std::uint8_t> pool(static_cast<std::size_t>(order));
    std::iota(pool.begin(), pool.end(), std::uint8_t{0});
    std::vector<std::uint8_t> out;
    out.reserve(pool.size());
    for (int i = 0; i < order; ++i) {
        const std::uint64_t f = factorial(order - 1 - i);
        const std::uint64_t digit = index / f;
        index %= f;
        if (digit >= pool.size())
            throw std::domain_error("pattern_from_lehmer: index out of range");
        out.push_back(pool[digit]);
        pool.erase(pool.begin() + static_cast<long>(digit));
    }
    return OrdinalPattern(std::move(out));
}

PatternDistribution ordinal_distribution(const TimeSeries& x, int order, int stride) {
    check_census_order(order);
    if (x.size() < static_cast<std::size_t>(order))
        throw std::domain_error("ordinal_distribution: series shorter than the pattern order");
    if (stride != 1 && stride != order)
        throw std::domain_error("ordinal_distribution: stride must be 1 or L");

    PatternDistribution dist;
    dist.order = order;
    dist.counts.assign(factorial(order), 0);
    const auto& v = x.values();
    for (std::size_t t = 0; t + static_cast<std::size_t>(order) <= v.size();
         t += static_cast<std::size_t>(stride)) {
        const auto pat = pattern_of(std::span<const double>(v.data() + t,
                                                            static_cast<std::size_t>(order)));
        ++dist.counts[lehmer_index(pat)];
        ++dist.total;
    }
    return dist;
}

PermutationEntropyResult permutation_entropy(const TimeSeries& x, int order) {
    const auto dist = ordinal_distribution(x, order, 1);
    PermutationEntropyResult r{};
    r.raw = entropy_of_counts(dist.counts, dist.total);
    r.per_symbol = r.raw / static_cast<double>(order - 1);
    r.normalized = r.raw / std::log(static_cast<double>(factorial(order)));
    return r;
}

double conditional_entropy_ordinal(const TimeSeries& x, int order) {
    check_census_order(order);
    if (x.size() < static_cast<std::size_t>(order) + 1)
        throw std::domain_error("conditional_entropy_ordinal: series must have at least L+1 values");

    // Joint census of (pattern at t, pattern at t+1) and the marginal of
    // the first component over the same windows, so the plug-in difference
    // H(joint) - H(marginal) is the empirical H(pi_L v T^{-1} pi_L) - H(pi_L).
    const std::uint64_t cells = factorial(order);
    std::vector<std::int64_t> joint(cells * cells, 0), marginal(cells, 0);
    const auto& v = x.values();
    const std::size_t windows = v.size() - static_cast<std::size_t>(order);
    for (std::size_t t = 0; t < windows; ++t) {
        const auto a = lehmer_index(pattern_of(
            std::span<const double>(v.data() + t, static_cast<std::size_t>(order))));
        const auto b = lehmer_index(pattern_of(
            std::span<const double>(v.data() + t + 1, static_cast<std::size_t>(order))));
        ++joint[a * cells + b];
        ++marginal[a];
    }
    const auto total = static_cast<std::int64_t>(windows);
    return entropy_of_counts(joint, total) - entropy_of_counts(marginal, total);
}

MissingPatternCensus missing_patterns(const TimeSeries& x, int order) {
    const auto dist = ordinal_distribution(x, order, 1);
    MissingPatternCensus census;
    for (std::uint64_t code = 0; code < dist.counts.size(); ++code) {
        if (dist.counts[code] > 0) {
            ++census.observed_count;
        } else {
            ++census.missing_count;
            census.missing.push_back(pattern_from_lehmer(code, order));
        }
    }
    return census;
}

double topological_perm_entropy_order(const TimeSeries& x, int order) {
    const auto census = missing_patterns(x, order);
    return std::log(static_cast<double>(census.observed_count)) / static_cast<double>(order);
}

}  // namespace entrokit
