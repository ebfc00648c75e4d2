#include "entrokit/transfer.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace entrokit {

namespace {

double checked_pow_dims(double base, int expo) {
    double d = 1.0;
    for (int i = 0; i < expo; ++i) {
        d *= base;
        if (d > (1 << 26))
            throw std::domain_error("transfer: history dimensions too large to tabulate");
    }
    return d;
}

// Entropy (nats) of a weighted count map.
double entropy_of_map(const std::unordered_map<std::uint64_t, double>& counts, double total) {
    double h = 0.0;
    for (const auto& [key, w] : counts) {
        (void)key;
        if (w > 0.0) {
            const double p = w / total;
            h -= p * std::log(p);
        }
    }
    return h;
}

}  // namespace

PairedSymbolSeq::PairedSymbolSeq(SymbolSeq xs, SymbolSeq ys)
    : x(std::move(xs)), y(std::move(ys)) {
    if (x.size() != y.size())
        throw std::invalid_argument("PairedSymbolSeq: sequences must have equal length");
    if (x.size() == 0)
        throw std::invalid_argument("PairedSymbolSeq: sequences must be non-empty");
}

double transfer_entropy_from_joint(const TripleJoint& joint) {
    const int da = joint.dim_a, db = joint.dim_b, dc = joint.dim_c;
    if (da < 1 || db < 1 || dc < 1 ||
        joint.weights.size() !=
            static_cast<std::size_t>(da) * static_cast<std::size_t>(db) *
                static_cast<std::size_t>(dc))
        throw std::invalid_argument("transfer_entropy_from_joint: shape mismatch");

    std::vector<double> w_b(static_cast<std::size_t>(db), 0.0);
    std::vector<double> w_ab(static_cast<std::size_t>(da) * db, 0.0);
    std::vector<double> w_bc(static_cast<std::size_t>(db) * dc, 0.0);
    double total = 0.0;
    for (int a = 0; a < da; ++a)
        for (int b = 0; b < db; ++b)
            for (int c = 0; c < dc; ++c) {
                const double w = joint.get(a, b, c);
                if (w < 0.0)
                    throw std::invalid_argument("transfer_entropy_from_joint: negative weight");
                if (w == 0.0) continue;
                total += w;
                w_b[static_cast<std::size_t>(b)] += w;
                w_ab[static_cast<std::size_t>(a) * db + b] += w;
                w_bc[static_cast<std::size_t>(b) * dc + c] += w;
            }
    if (!(total > 0.0))
        throw std::invalid_argument("transfer_entropy_from_joint: empty joint");

    // Both printed evaluation routes -- H(a|b) - H(a|b,c) and the
    // conditional mutual information -- reduce per outcome to the same
    // count ratio, evaluated here once.
    double te = 0.0;
    for (int a = 0; a < da; ++a)
        for (int b = 0; b < db; ++b)
            for (int c = 0; c < dc; ++c) {
                const double w = joint.get(a, b, c);
                if (w == 0.0) continue;
                const double num = w * w_b[static_cast<std::size_t>(b)];
                const double den = w_ab[static_cast<std::size_t>(a) * db + b] *
                                   w_bc[static_cast<std::size_t>(b) * dc + c];
                te += (w / total) * std::log(num / den);
            }
    return te;
}

TripleJoint te_joint_from_samples(const PairedSymbolSeq& p, const TEParams& params) {
    if (params.lambda < 1)
        throw std::domain_error("transfer_entropy: coupling delay must be >= 1");
    if (params.x_history < 1 || params.y_history < 1)
        throw std::domain_error("transfer_entropy: history lengths must be >= 1");

    const int n = params.x_history, k = params.y_history, lambda = params.lambda;
    const std::size_t len = p.x.size();
    const int warm = std::max(n, k) - 1;
    if (static_cast<std::size_t>(warm + lambda) >= len)
        throw std::domain_error("transfer_entropy: sequences too short for the requested "
                                "histories and delay");

    const double kx = p.x.alphabet_size, ky = p.y.alphabet_size;
    const double db = checked_pow_dims(kx, n);
    const double dc = checked_pow_dims(ky, k);
    if (kx * db * dc > (1 << 26))
        throw std::domain_error("transfer: history dimensions too large to tabulate");

    TripleJoint joint;
    joint.dim_a = p.x.alphabet_size;
    joint.dim_b = static_cast<int>(db);
    joint.dim_c = static_cast<int>(dc);
    joint.weights.assign(static_cast<std::size_t>(joint.dim_a) * joint.dim_b * joint.dim_c, 0.0);

    for (std::size_t t = static_cast<std::size_t>(warm); t + lambda < len; ++t) {
        const int a = p.x.symbols[t + static_cast<std::size_t>(lambda)];
        int b = 0;
        for (int j = 0; j < n; ++j)
            b = b * p.x.alphabet_size + p.x.symbols[t - static_cast<std::size_t>(j)];
        int c = 0;
        for (int j = 0; j < k; ++j)
            c = c * p.y.alphabet_size + p.y.symbols[t - static_cast<std::size_t>(j)];
        joint.at(a, b, c) += 1.0;
    }
    return joint;
}

TransferEntropyResult transfer_entropy(const PairedSymbolSeq& p, const TEParams& params) {
    const TripleJoint joint = te_joint_from_samples(p, params);
    TransferEntropyResult r;
    r.value = transfer_entropy_from_joint(joint);
    for (double w : joint.weights) {
        if (w > 0.0) {
            ++r.distinct_contexts;
            r.samples += static_cast<std::int64_t>(w);
        }
    }
    r.sparse_warning = r.distinct_contexts * 10 > r.samples;
    return r;
}

double directionality(const PairedSymbolSeq& p, const TEParams& params) {
    const double t_yx = transfer_entropy(p, params).value;
    const double t_xy = transfer_entropy(PairedSymbolSeq(p.y, p.x), params).value;
    return t_yx - t_xy;
}

// ---------------------------------------------------------------------------
// Coupling complexity
// ---------------------------------------------------------------------------

namespace {

// Shared evaluator over weighted outcome tuples (a_1,...,a_N).
double coupling_from_outcomes(const FiniteGroup& g,
                              const std::vector<std::pair<std::vector<int>, double>>& outcomes,
                              int n_vars) {
    if (n_vars < 1) throw std::domain_error("coupling_complexity: need at least one variable");
    if (n_vars == 1) return 0.0;  // empty transcript list

    const std::uint64_t gsize = static_cast<std::uint64_t>(g.size());
    double min_mi = 0.0;
    bool first = true;
    for (int n = 0; n < n_vars; ++n) {
        std::unordered_map<std::uint64_t, double> joint, var_marg, tau_marg;
        double total = 0.0;
        for (const auto& [tuple, w] : outcomes) {
            if (w <= 0.0) continue;
            std::uint64_t tau_key = 0;
            for (int j = 0; j + 1 < n_vars; ++j) {
                const int tau = g.transcript(tuple[static_cast<std::size_t>(j)],
                                             tuple[static_cast<std::size_t>(j + 1)]);
                tau_key = tau_key * gsize + static_cast<std::uint64_t>(tau);
            }
            const auto var_key = static_cast<std::uint64_t>(tuple[static_cast<std::size_t>(n)]);
            joint[(var_key << 48) | tau_key] += w;
            var_marg[var_key] += w;
            tau_marg[tau_key] += w;
            total += w;
        }
        const double mi = entropy_of_map(var_marg, total) + entropy_of_map(tau_marg, total) -
                          entropy_of_map(joint, total);
        if (first || mi < min_mi) {
            min_mi = mi;
            first = false;
        }
    }
    return min_mi;
}

}  // namespace

double coupling_complexity(const FiniteGroup& g, const std::vector<std::vector<int>>& vars) {
    const int n_vars = static_cast<int>(vars.size());
    if (n_vars < 1) throw std::domain_error("coupling_complexity: need at least one variable");
    const std::size_t len = vars.front().size();
    if (len == 0) throw std::domain_error("coupling_complexity: empty sample sequences");
    for (const auto& v : vars) {
        if (v.size() != len)
            throw std::invalid_argument("coupling_complexity: sequences must have equal length");
        for (int s : v)
            if (s < 0 || s >= g.size())
                throw std::invalid_argument("coupling_complexity: symbol outside the group");
    }
    if ((n_vars - 1) * std::log2(static_cast<double>(std::max(2, g.size()))) > 47.0)
        throw std::domain_error("coupling_complexity: transcript tuple exceeds the 48-bit key");

    std::vector<std::pair<std::vector<int>, double>> outcomes;
    outcomes.reserve(len);
    std::vector<int> tuple(static_cast<std::size_t>(n_vars));
    for (std::size_t t = 0; t < len; ++t) {
        for (int n = 0; n < n_vars; ++n) tuple[static_cast<std::size_t>(n)] = vars[n][t];
        outcomes.emplace_back(tuple, 1.0);
    }
    return coupling_from_outcomes(g, outcomes, n_vars);
}

double coupling_complexity_from_joint(const FiniteGroup& g, int n_vars,
                                      const std::vector<double>& weights) {
    if (n_vars < 1) throw std::domain_error("coupling_complexity: need at least one variable");
    std::size_t cells = 1;
    for (int i = 0; i < n_vars; ++i) cells *= static_cast<std::size_t>(g.size());
    if (weights.size() != cells)
        throw std::invalid_argument("coupling_complexity_from_joint: weight count mismatch");

    std::vector<std::pair<std::vector<int>, double>> outcomes;
    std::vector<int> tuple(static_cast<std::size_t>(n_vars));
    for (std::size_t flat = 0; flat < cells; ++flat) {
        if (weights[flat] == 0.0) continue;
        std::size_t rest = flat;
        for (int n = n_vars - 1; n >= 0; --n) {
            tuple[static_cast<std::size_t>(n)] = static_cast<int>(rest % g.size());
            rest /= static_cast<std::size_t>(g.size());
        }
        outcomes.emplace_back(tuple, weights[flat]);
    }
    return coupling_from_outcomes(g, outcomes, n_vars);
}

// ---------------------------------------------------------------------------
// Algebraic transfer entropy and its dimensional reduction
// ---------------------------------------------------------------------------

AlgebraicTEReport algebraic_te_from_joint(const FiniteGroup& g, const TripleJoint& joint) {
    const int gs = g.size();
    if (joint.dim_a != gs || joint.dim_b != gs || joint.dim_c != gs)
        throw std::invalid_argument("algebraic_te_from_joint: axes must all have size |G|");

    AlgebraicTEReport report;
    report.lhs = transfer_entropy_from_joint(joint);

    // rhs: mutual information of the two transcripts
    std::unordered_map<std::uint64_t, double> uv, u_marg, v_marg, b_marg, c_marg;
    double total = 0.0;
    for (int a = 0; a < gs; ++a)
        for (int b = 0; b < gs; ++b)
            for (int c = 0; c < gs; ++c) {
                const double w = joint.get(a, b, c);
                if (w <= 0.0) continue;
                const int u = g.transcript(a, c);  // tau_{xi_{t+L}, xi_t}
                const int v = g.transcript(b, c);  // tau_{eta_t, xi_t}
                uv[(static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v)] += w;
                u_marg[static_cast<std::uint64_t>(u)] += w;
                v_marg[static_cast<std::uint64_t>(v)] += w;
                b_marg[static_cast<std::uint64_t>(b)] += w;
                c_marg[static_cast<std::uint64_t>(c)] += w;
                total += w;
            }
    report.rhs = entropy_of_map(u_marg, total) + entropy_of_map(v_marg, total) -
                 entropy_of_map(uv, total);

    // hypothesis checks: C(xi_{t+L}, eta_t, xi_t) = 0 and H(xi_t) <= H(eta_t)
    report.coupling_c = coupling_complexity_from_joint(g, 3, joint.weights);
    report.h_eta = entropy_of_map(b_marg, total);
    report.h_xi = entropy_of_map(c_marg, total);
    report.hypotheses_hold =
        report.coupling_c <= 1e-12 && report.h_xi <= report.h_eta + 1e-12;
    return report;
}

AlgebraicTEReport algebraic_transfer_entropy(const FiniteGroup& g, const std::vector<int>& xi,
                                             const std::vector<int>& eta, int lambda) {
    if (lambda < 1)
        throw std::domain_error("algebraic_transfer_entropy: coupling delay must be >= 1");
    if (xi.size() != eta.size())
        throw std::invalid_argument("algebraic_transfer_entropy: sequences must match in length");
    if (xi.size() <= static_cast<std::size_t>(lambda))
        throw std::domain_error("algebraic_transfer_entropy: sequences too short for the delay");
    for (std::size_t t = 0; t < xi.size(); ++t)
        if (xi[t] < 0 || xi[t] >= g.size() || eta[t] < 0 || eta[t] >= g.size())
            throw std::invalid_argument("algebraic_transfer_entropy: symbol outside the group");

    TripleJoint joint;
    joint.dim_a = joint.dim_b = joint.dim_c = g.size();
    joint.weights.assign(static_cast<std::size_t>(g.size()) * g.size() * g.size(), 0.0);
    for (std::size_t t = 0; t + static_cast<std::size_t>(lambda) < xi.size(); ++t)
        joint.at(xi[t + static_cast<std::size_t>(lambda)], eta[t], xi[t]) += 1.0;
    return algebraic_te_from_joint(g, joint);
}

}  // namespace entrokit
