#include "entrokit/sft.hpp"

#include <cmath>
#include <stdexcept>

namespace entrokit {

namespace {

// Strong connectivity via BFS on the graph and its transpose.
bool strongly_connected(const std::vector<std::vector<int>>& a) {
    const std::size_t n = a.size();
    auto reaches_all = [n](auto edge) {
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> queue = {0};
        seen[0] = true;
        std::size_t found = 1;
        while (!queue.empty()) {
            std::size_t v = queue.back();
            queue.pop_back();
            for (std::size_t w = 0; w < n; ++w) {
                if (!seen[w] && edge(v, w)) {
                    seen[w] = true;
                    ++found;
                    queue.push_back(w);
                }
            }
        }
        return found == n;
    };
    return reaches_all([&a](std::size_t v, std::size_t w) { return a[v][w] != 0; }) &&
           reaches_all([&a](std::size_t v, std::size_t w) { return a[w][v] != 0; });
}

struct PerronPair {
    double rho;               // spectral radius of A
    std::vector<double> vec;  // Perron vector, normalized to sum 1
};

// Power iteration on B = A + I; the shift makes periodic irreducible
// matrices converge too. Stops when both the eigenvalue estimate and the
// vector are stationary to near machine precision.
PerronPair perron(const std::vector<std::vector<double>>& a, bool transpose) {
    const std::size_t n = a.size();
    std::vector<double> v(n, 1.0 / static_cast<double>(n)), w(n);
    double lambda = 0.0;
    const int max_iter = 200000;
    for (int it = 0; it < max_iter; ++it) {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double s = v[i];  // the +I shift
            for (std::size_t j = 0; j < n; ++j)
                s += (transpose ? a[j][i] : a[i][j]) * v[j];
            w[i] = s;
            total += s;
        }
        if (!(total > 0.0))
            throw std::runtime_error("spectral_radius: matrix annihilated the iterate");
        double max_change = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double nv = w[i] / total;
            max_change = std::max(max_change, std::abs(nv - v[i]));
            v[i] = nv;
        }
        const double new_lambda = total;
        const bool value_done = std::abs(new_lambda - lambda) <= 1e-14 * std::max(1.0, new_lambda);
        lambda = new_lambda;
        if (value_done && max_change <= 1e-15) break;
    }
    return {lambda - 1.0, v};
}

}  // namespace

TransitionMatrix01::TransitionMatrix01(std::vector<std::vector<int>> entries)
    : entries_(std::move(entries)) {
    const std::size_t n = entries_.size();
    if (n == 0) throw std::invalid_argument("TransitionMatrix01: empty matrix");
    std::vector<bool> col_has(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (entries_[i].size() != n)
            throw std::invalid_argument("TransitionMatrix01: matrix must be square");
        bool row_has = false;
        for (std::size_t j = 0; j < n; ++j) {
            const int e = entries_[i][j];
            if (e != 0 && e != 1)
                throw std::invalid_argument("TransitionMatrix01: entries must be 0 or 1");
            if (e == 1) {
                row_has = true;
                col_has[j] = true;
            }
        }
        if (!row_has)
            throw std::invalid_argument("TransitionMatrix01: all-zero row " + std::to_string(i) +
                                        " (symbol not extendable forward)");
    }
    for (std::size_t j = 0; j < n; ++j)
        if (!col_has[j])
            throw std::invalid_argument("TransitionMatrix01: all-zero column " + std::to_string(j) +
                                        " (symbol not extendable backward)");
    irreducible_ = strongly_connected(entries_);
}

double spectral_radius(const std::vector<std::vector<double>>& a) {
    if (a.empty()) throw std::invalid_argument("spectral_radius: empty matrix");
    for (const auto& row : a) {
        if (row.size() != a.size())
            throw std::invalid_argument("spectral_radius: matrix must be square");
        for (double v : row)
            if (!(v >= 0.0))
                throw std::invalid_argument("spectral_radius: entries must be >= 0");
    }
    return perron(a, false).rho;
}

double topological_markov_entropy(const TransitionMatrix01& a) {
    std::vector<std::vector<double>> m(a.size(), std::vector<double>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) m[i][j] = a.at(i, j);
    return std::log(perron(m, false).rho);
}

MarkovModel parry_measure(const TransitionMatrix01& a) {
    if (!a.irreducible())
        throw std::invalid_argument("parry_measure: transition matrix must be irreducible");
    const std::size_t n = a.size();
    std::vector<std::vector<double>> m(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a.at(i, j);

    const PerronPair right = perron(m, false);
    const PerronPair left = perron(m, true);
    const double rho = right.rho;

    // p_ij = a_ij v_j / (rho v_i), rows renormalized to kill the residual
    // of the eigenvector iteration.
    std::vector<std::vector<double>> p(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (a.at(i, j) == 0) continue;
            p[i][j] = right.vec[j] / (rho * right.vec[i]);
            row += p[i][j];
        }
        for (std::size_t j = 0; j < n; ++j) p[i][j] /= row;
    }

    // p_i = u_i v_i / (u.v); fall back to the exact linear solve if the
    // iterated eigenvectors leave a stationarity residual.
    std::vector<double> pi(n);
    double dot = 0.0;
    for (std::size_t i = 0; i < n; ++i) dot += left.vec[i] * right.vec[i];
    for (std::size_t i = 0; i < n; ++i) pi[i] = left.vec[i] * right.vec[i] / dot;
    double mass = 0.0;
    for (double x : pi) mass += x;
    pi.back() += 1.0 - mass;

    double residual = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double pj = 0.0;
        for (std::size_t i = 0; i < n; ++i) pj += pi[i] * p[i][j];
        residual = std::max(residual, std::abs(pj - pi[j]));
    }
    if (residual > 1e-12)
        return MarkovModel(stationary_distribution(p), std::move(p));
    return MarkovModel(ProbVec(std::move(pi)), std::move(p));
}

}  // namespace entrokit
