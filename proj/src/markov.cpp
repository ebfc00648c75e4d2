#include "entrokit/markov.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "entrokit/rng.hpp"

namespace entrokit {

namespace {

void validate_row_stochastic(const std::vector<std::vector<double>>& t) {
    const std::size_t k = t.size();
    if (k == 0) throw std::invalid_argument("MarkovModel: empty transition matrix");
    for (std::size_t i = 0; i < k; ++i) {
        if (t[i].size() != k)
            throw std::invalid_argument("MarkovModel: transition matrix must be square");
        double row = 0.0;
        for (double v : t[i]) {
            if (!(v >= 0.0))
                throw std::invalid_argument("MarkovModel: transition entries must be >= 0");
            row += v;
        }
        if (std::abs(row - 1.0) > 1e-12)
            throw std::invalid_argument("MarkovModel: row " + std::to_string(i) +
                                        " sums to " + std::to_string(row));
    }
}

// Strongly connected components of the positive-entry digraph (Tarjan).
std::vector<std::vector<int>> strong_components(const std::vector<std::vector<double>>& t) {
    const int n = static_cast<int>(t.size());
    std::vector<int> index(n, -1), low(n, 0), stack;
    std::vector<bool> on_stack(n, false);
    std::vector<std::vector<int>> comps;
    int counter = 0;

    struct Frame { int v; int next; };
    for (int start = 0; start < n; ++start) {
        if (index[start] != -1) continue;
        std::vector<Frame> frames = {{start, 0}};
        index[start] = low[start] = counter++;
        stack.push_back(start);
        on_stack[start] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.next < n) {
                int w = f.next++;
                if (t[static_cast<std::size_t>(f.v)][static_cast<std::size_t>(w)] <= 0.0) continue;
                if (index[w] == -1) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                int v = f.v;
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().v] = std::min(low[frames.back().v], low[v]);
                if (low[v] == index[v]) {
                    std::vector<int> comp;
                    for (;;) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp.push_back(w);
                        if (w == v) break;
                    }
                    comps.push_back(std::move(comp));
                }
            }
        }
    }
    return comps;
}

}  // namespace

MarkovModel::MarkovModel(ProbVec stationary, std::vector<std::vector<double>> transition)
    : stationary_(std::move(stationary)), transition_(std::move(transition)) {
    validate_row_stochastic(transition_);
    if (stationary_.size() != transition_.size())
        throw std::invalid_argument("MarkovModel: stationary vector size mismatch");
    // p P = p within 1e-10
    const std::size_t k = transition_.size();
    for (std::size_t j = 0; j < k; ++j) {
        double pj = 0.0;
        for (std::size_t i = 0; i < k; ++i) pj += stationary_[i] * transition_[i][j];
        if (std::abs(pj - stationary_[j]) > 1e-10)
            throw std::invalid_argument(
                "MarkovModel: vector is not stationary (component " + std::to_string(j) +
                " maps to " + std::to_string(pj) + ")");
    }
}

MarkovModel MarkovModel::from_transition(std::vector<std::vector<double>> transition) {
    ProbVec p = stationary_distribution(transition);
    return MarkovModel(std::move(p), std::move(transition));
}

MarkovModel MarkovModel::bernoulli(const ProbVec& p) {
    std::vector<std::vector<double>> t(p.size(), p.probs());
    return MarkovModel(p, std::move(t));
}

double bernoulli_entropy(const ProbVec& p) {
    return shannon_entropy(p);
}

double markov_entropy_rate(const MarkovModel& m) {
    double h = 0.0;
    const auto& t = m.transition();
    for (std::size_t i = 0; i < m.states(); ++i) {
        const double pi = m.stationary()[i];
        if (pi <= 0.0) continue;
        for (double pij : t[i])
            if (pij > 0.0) h -= pi * pij * std::log(pij);
    }
    return h;
}

ProbVec stationary_distribution(const std::vector<std::vector<double>>& transition) {
    validate_row_stochastic(transition);
    const std::size_t k = transition.size();

    auto comps = strong_components(transition);
    if (comps.size() > 1) {
        // Name an absorbing class: a component with no edge leaving it.
        for (const auto& comp : comps) {
            std::vector<bool> inside(k, false);
            for (int v : comp) inside[static_cast<std::size_t>(v)] = true;
            bool closed = true;
            for (int v : comp)
                for (std::size_t j = 0; j < k && closed; ++j)
                    if (transition[static_cast<std::size_t>(v)][j] > 0.0 && !inside[j])
                        closed = false;
            if (closed) {
                std::string states;
                for (int v : comp) states += (states.empty() ? "" : ",") + std::to_string(v);
                throw std::invalid_argument(
                    "stationary_distribution: matrix is reducible; absorbing class {" +
                    states + "}");
            }
        }
        throw std::invalid_argument("stationary_distribution: matrix is reducible");
    }

    // Solve p (P - I) = 0 with sum(p) = 1: transpose to (P^T - I) x = 0 and
    // replace the last equation by the normalization row.
    std::vector<std::vector<double>> a(k, std::vector<double>(k + 1, 0.0));
    for (std::size_t i = 0; i + 1 < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) a[i][j] = transition[j][i];
        a[i][i] -= 1.0;
        a[i][k] = 0.0;
    }
    for (std::size_t j = 0; j < k; ++j) a[k - 1][j] = 1.0;
    a[k - 1][k] = 1.0;

    // Gaussian elimination with partial pivoting.
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < k; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        std::swap(a[col], a[piv]);
        if (std::abs(a[col][col]) < 1e-14)
            throw std::runtime_error("stationary_distribution: singular system");
        for (std::size_t r = col + 1; r < k; ++r) {
            const double f = a[r][col] / a[col][col];
            if (f == 0.0) continue;
            for (std::size_t c = col; c <= k; ++c) a[r][c] -= f * a[col][c];
        }
    }
    std::vector<double> p(k);
    for (std::size_t i = k; i-- > 0;) {
        double s = a[i][k];
        for (std::size_t j = i + 1; j < k; ++j) s -= a[i][j] * p[j];
        p[i] = s / a[i][i];
    }
    // Clean tiny negatives from elimination and renormalize exactly.
    double mass = 0.0;
    for (double& x : p) {
        if (x < 0.0 && x > -1e-12) x = 0.0;
        mass += x;
    }
    for (double& x : p) x /= mass;
    double total = 0.0;
    for (double x : p) total += x;
    p.back() += 1.0 - total;
    return ProbVec(std::move(p));
}

SymbolSeq simulate_markov(const MarkovModel& m, std::size_t length, std::uint64_t seed) {
    if (length < 1)
        throw std::domain_error("simulate_markov: length must be >= 1");
    Rng rng(seed);
    const std::size_t k = m.states();

    auto draw = [&rng](const std::vector<double>& weights) {
        const double u = rng.next_double();
        double acc = 0.0;
        std::size_t last_positive = 0;
        for (std::size_t i = 0; i < weights.size(); ++i)
            if (weights[i] > 0.0) last_positive = i;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            acc += weights[i];
            if (u < acc) return i;
        }
        return last_positive;  // u landed on accumulated rounding
    };

    std::vector<int> out;
    out.reserve(length);
    std::size_t state = draw(m.stationary().probs());
    out.push_back(static_cast<int>(state));
    for (std::size_t t = 1; t < length; ++t) {
        state = draw(m.transition()[state]);
        out.push_back(static_cast<int>(state));
    }
    return SymbolSeq(std::move(out), static_cast<int>(k));
}

}  // namespace entrokit
