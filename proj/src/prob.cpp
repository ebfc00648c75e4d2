#include "entrokit/prob.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "entrokit/rng.hpp"

namespace entrokit {

namespace {

constexpr double kMassTolerance = 1e-12;
constexpr double kNegativeClamp = -1e-14;

double plogp(double p) {
    return p > 0.0 ? p * std::log(p) : 0.0;
}

// Shannon entropy of a raw nonnegative vector normalized to mass 1.
double entropy_nats(const std::vector<double>& probs) {
    double h = 0.0;
    for (double p : probs) h -= plogp(p);
    return h;
}

}  // namespace

ProbVec::ProbVec(std::vector<double> probs, std::vector<std::string> labels)
    : probs_(std::move(probs)), labels_(std::move(labels)) {
    if (probs_.empty())
        throw std::invalid_argument("ProbVec: distribution must have at least one entry");
    if (!labels_.empty() && labels_.size() != probs_.size())
        throw std::invalid_argument("ProbVec: label count does not match entry count");
    double mass = 0.0;
    for (double& p : probs_) {
        if (!std::isfinite(p))
            throw std::invalid_argument("ProbVec: entries must be finite");
        if (p < 0.0) {
            if (p < kNegativeClamp)
                throw std::invalid_argument("ProbVec: negative probability entry");
            p = 0.0;
        }
        if (p > 1.0 + 1e-12)
            throw std::invalid_argument("ProbVec: probability entry exceeds 1");
        mass += p;
    }
    if (std::abs(mass - 1.0) > kMassTolerance)
        throw std::invalid_argument("ProbVec: entries must sum to 1 (got " +
                                    std::to_string(mass) + ")");
}

ProbVec ProbVec::uniform(std::size_t n) {
    if (n == 0) throw std::invalid_argument("ProbVec::uniform: n must be positive");
    return ProbVec(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

std::size_t ProbVec::support_size() const {
    return static_cast<std::size_t>(
        std::count_if(probs_.begin(), probs_.end(), [](double p) { return p > 0.0; }));
}

LogBase LogBase::of(double base) {
    if (!(base > 1.0))
        throw std::domain_error("LogBase: base must be > 1");
    LogBase b;
    b.natural_ = false;
    b.base_ = base;
    b.scale_ = 1.0 / std::log(base);
    return b;
}

JointTable::JointTable(std::vector<double> cells, std::size_t rows, std::size_t cols)
    : cells_(std::move(cells)), rows_(rows), cols_(cols) {
    if (rows_ == 0 || cols_ == 0 || cells_.size() != rows_ * cols_)
        throw std::invalid_argument("JointTable: shape does not match cell count");
    double mass = 0.0;
    for (double& c : cells_) {
        if (!std::isfinite(c))
            throw std::invalid_argument("JointTable: entries must be finite");
        if (c < 0.0) {
            if (c < kNegativeClamp)
                throw std::invalid_argument("JointTable: negative entry");
            c = 0.0;
        }
        mass += c;
    }
    if (std::abs(mass - 1.0) > kMassTolerance)
        throw std::invalid_argument("JointTable: total mass must be 1 (got " +
                                    std::to_string(mass) + ")");
}

JointTable::JointTable(const std::vector<std::vector<double>>& rows)
    : JointTable(
          [&rows] {
              std::vector<double> flat;
              for (const auto& r : rows) {
                  if (r.size() != rows.front().size())
                      throw std::invalid_argument("JointTable: ragged rows");
                  flat.insert(flat.end(), r.begin(), r.end());
              }
              return flat;
          }(),
          rows.size(), rows.empty() ? 0 : rows.front().size()) {}

JointTable JointTable::product(const ProbVec& px, const ProbVec& py) {
    std::vector<double> cells(px.size() * py.size());
    for (std::size_t i = 0; i < px.size(); ++i)
        for (std::size_t j = 0; j < py.size(); ++j)
            cells[i * py.size() + j] = px[i] * py[j];
    return JointTable(std::move(cells), px.size(), py.size());
}

ProbVec JointTable::row_marginal() const {
    std::vector<double> m(rows_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m[i] += at(i, j);
    return ProbVec(std::move(m));
}

ProbVec JointTable::col_marginal() const {
    std::vector<double> m(cols_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m[j] += at(i, j);
    return ProbVec(std::move(m));
}

double shannon_entropy(const ProbVec& p, LogBase base) {
    return entropy_nats(p.probs()) * base.from_nats();
}

double renyi_entropy(const ProbVec& p, double q) {
    if (q < 0.0 || std::isnan(q))
        throw std::domain_error("renyi_entropy: order q must be >= 0");
    if (q == 1.0) return entropy_nats(p.probs());
    if (std::isinf(q)) {
        const double pmax = *std::max_element(p.probs().begin(), p.probs().end());
        return -std::log(pmax);
    }
    if (q == 0.0) return std::log(static_cast<double>(p.support_size()));
    double moment = 0.0;
    for (double pi : p.probs())
        if (pi > 0.0) moment += std::pow(pi, q);
    return std::log(moment) / (1.0 - q);
}

double tsallis_entropy(const ProbVec& p, double q) {
    if (!(q > 0.0))
        throw std::domain_error("tsallis_entropy: order q must be > 0");
    if (q == 1.0) return entropy_nats(p.probs());
    double moment = 0.0;
    for (double pi : p.probs())
        if (pi > 0.0) moment += std::pow(pi, q);
    return (moment - 1.0) / (1.0 - q);
}

double renyi_tsallis_convert(double value, double q, ConvertDirection dir) {
    if (q == 1.0)
        throw std::domain_error("renyi_tsallis_convert: q = 1 (both reduce to Shannon)");
    const double omq = 1.0 - q;
    if (dir == ConvertDirection::TsallisToRenyi) {
        const double arg = 1.0 + omq * value;
        if (!(arg > 0.0))
            throw std::domain_error("renyi_tsallis_convert: 1 + (1-q)g must be positive");
        return std::log(arg) / omq;
    }
    return (std::exp(omq * value) - 1.0) / omq;
}

JointSummary joint_conditional_mutual(const JointTable& t) {
    JointSummary s{};
    s.h_joint = entropy_nats(t.cells());
    s.h_x = entropy_nats(t.row_marginal().probs());
    s.h_y = entropy_nats(t.col_marginal().probs());
    s.h_x_given_y = s.h_joint - s.h_y;
    s.h_y_given_x = s.h_joint - s.h_x;
    s.mutual_information = s.h_x + s.h_y - s.h_joint;
    return s;
}

// ---------------------------------------------------------------------------
// Axiom suite
// ---------------------------------------------------------------------------

namespace {

double evaluate(EntropyFamily f, double q, const std::vector<double>& probs) {
    ProbVec p(probs);
    switch (f) {
        case EntropyFamily::Shannon: return shannon_entropy(p);
        case EntropyFamily::Renyi: return renyi_entropy(p, q);
        case EntropyFamily::Tsallis: return tsallis_entropy(p, q);
    }
    return 0.0;
}

std::vector<double> random_distribution(Rng& rng, std::size_t n) {
    std::vector<double> v(n);
    double sum = 0.0;
    for (double& x : v) {
        x = -std::log(1.0 - rng.next_double());
        sum += x;
    }
    for (double& x : v) x /= sum;
    // renormalize exactly enough for the 1e-12 mass check
    double mass = std::accumulate(v.begin(), v.end(), 0.0);
    v.back() += 1.0 - mass;
    if (v.back() < 0.0) v.back() = 0.0;
    return v;
}

std::vector<double> product_of(const std::vector<double>& p, const std::vector<double>& q) {
    std::vector<double> joint;
    joint.reserve(p.size() * q.size());
    for (double pi : p)
        for (double qj : q) joint.push_back(pi * qj);
    return joint;
}

struct Instance {
    std::vector<double> joint;  // row-major m x n
    std::size_t m, n;
};

// P7 right-hand side: H(row sums) + sum_i p_i.^a H(row_i / p_i.)
double strong_additivity_rhs(EntropyFamily f, double q, double a, const Instance& inst) {
    std::vector<double> rowsum(inst.m, 0.0);
    for (std::size_t i = 0; i < inst.m; ++i)
        for (std::size_t j = 0; j < inst.n; ++j) rowsum[i] += inst.joint[i * inst.n + j];
    // guard the marginal against the 1e-12 mass gate
    double mass = std::accumulate(rowsum.begin(), rowsum.end(), 0.0);
    rowsum.back() += 1.0 - mass;
    double rhs = evaluate(f, q, rowsum);
    for (std::size_t i = 0; i < inst.m; ++i) {
        if (rowsum[i] <= 0.0) continue;
        std::vector<double> cond(inst.n);
        double cmass = 0.0;
        for (std::size_t j = 0; j < inst.n; ++j) {
            cond[j] = inst.joint[i * inst.n + j] / rowsum[i];
            cmass += cond[j];
        }
        cond.back() += 1.0 - cmass;
        if (cond.back() < 0.0) cond.back() = 0.0;
        rhs += std::pow(rowsum[i], a) * evaluate(f, q, cond);
    }
    return rhs;
}

}  // namespace

AxiomReport khinchin_axiom_suite(const std::vector<ProbVec>& distributions,
                                 const std::vector<double>& q_params,
                                 std::uint64_t seed) {
    AxiomReport report;
    Rng rng(seed);

    // Fixed seeded instance set plus whatever the caller supplies.
    std::vector<std::vector<double>> insts;
    for (const auto& d : distributions) insts.push_back(d.probs());
    for (std::size_t n : {2u, 3u, 5u, 7u}) insts.push_back(random_distribution(rng, n));

    std::vector<Instance> joints;
    for (std::size_t t = 0; t < 4; ++t) {
        std::size_t m = 2 + rng.next_below(3), n = 2 + rng.next_below(3);
        auto flat = random_distribution(rng, m * n);
        joints.push_back({flat, m, n});
    }

    struct Functional { EntropyFamily fam; double q; double a; };
    std::vector<Functional> fams = {{EntropyFamily::Shannon, 1.0, 1.0}};
    for (double q : q_params) {
        fams.push_back({EntropyFamily::Renyi, q, 1.0});
        fams.push_back({EntropyFamily::Tsallis, q, q});
    }

    auto push = [&report](const char* axiom, const Functional& f, double dev, bool ok) {
        report.checks.push_back({axiom, f.fam, f.q, f.a, dev, ok});
    };

    for (const auto& f : fams) {
        // P2 symmetry under shuffles.
        double dev2 = 0.0;
        for (const auto& inst : insts) {
            auto shuffled = inst;
            for (std::size_t i = shuffled.size(); i > 1; --i)
                std::swap(shuffled[i - 1], shuffled[rng.next_below(i)]);
            dev2 = std::max(dev2, std::abs(evaluate(f.fam, f.q, inst) -
                                           evaluate(f.fam, f.q, shuffled)));
        }
        push("P2", f, dev2, dev2 <= 1e-12);

        // P3 monotonicity of uniform entropies.
        bool mono = true;
        double prev = evaluate(f.fam, f.q, std::vector<double>(2, 0.5));
        for (std::size_t n = 3; n <= 8; ++n) {
            double cur = evaluate(f.fam, f.q, std::vector<double>(n, 1.0 / n));
            if (!(cur > prev)) mono = false;
            prev = cur;
        }
        push("P3", f, 0.0, mono);

        // P4 maximality at the uniform distribution.
        double margin4 = 0.0;
        bool ok4 = true;
        for (const auto& inst : insts) {
            double h = evaluate(f.fam, f.q, inst);
            double hu = evaluate(f.fam, f.q, std::vector<double>(inst.size(), 1.0 / inst.size()));
            margin4 = std::max(margin4, h - hu);
            if (h > hu + 1e-12) ok4 = false;
        }
        push("P4", f, margin4, ok4);

        // P5 expansibility: inserting a zero entry changes nothing.
        double dev5 = 0.0;
        for (const auto& inst : insts) {
            auto padded = inst;
            padded.insert(padded.begin() + static_cast<long>(rng.next_below(padded.size() + 1)), 0.0);
            dev5 = std::max(dev5, std::abs(evaluate(f.fam, f.q, inst) -
                                           evaluate(f.fam, f.q, padded)));
        }
        push("P5", f, dev5, dev5 <= 1e-12);

        // P6 a-additivity on independent products.
        double dev6 = 0.0;
        for (std::size_t i = 0; i + 1 < insts.size(); i += 2) {
            const auto& p = insts[i];
            const auto& qd = insts[i + 1];
            double hp = evaluate(f.fam, f.q, p);
            double hq = evaluate(f.fam, f.q, qd);
            double lhs = evaluate(f.fam, f.q, product_of(p, qd));
            double rhs = hp + hq + (1.0 - f.a) * hp * hq;
            dev6 = std::max(dev6, std::abs(lhs - rhs));
        }
        push("P6", f, dev6, dev6 <= 1e-11);

        // P7 strong a-additivity on generic joints.
        double dev7 = 0.0;
        for (const auto& inst : joints) {
            double lhs = evaluate(f.fam, f.q, inst.joint);
            double rhs = strong_additivity_rhs(f.fam, f.q, f.a, inst);
            dev7 = std::max(dev7, std::abs(lhs - rhs));
        }
        bool expect7 = f.fam != EntropyFamily::Renyi;
        push("P7", f, dev7, dev7 <= 1e-11);
        if (f.fam == EntropyFamily::Renyi && dev7 > 1e-6) {
            report.renyi_strong_additivity_violated = true;
            report.renyi_violation_size = std::max(report.renyi_violation_size, dev7);
        }
        (void)expect7;

        // P8 a-recursivity: merge the first two entries.
        double dev8 = 0.0;
        for (const auto& inst : insts) {
            if (inst.size() < 3) continue;
            double p12 = inst[0] + inst[1];
            if (p12 <= 0.0) continue;
            std::vector<double> merged = {p12};
            merged.insert(merged.end(), inst.begin() + 2, inst.end());
            std::vector<double> split = {inst[0] / p12, inst[1] / p12};
            split.back() += 1.0 - (split[0] + split[1]);
            double lhs = evaluate(f.fam, f.q, inst);
            double rhs = evaluate(f.fam, f.q, merged) +
                         std::pow(p12, f.a) * evaluate(f.fam, f.q, split);
            dev8 = std::max(dev8, std::abs(lhs - rhs));
        }
        push("P8", f, dev8, dev8 <= 1e-11);
        if (f.fam == EntropyFamily::Renyi && dev8 > 1e-6) {
            report.renyi_strong_additivity_violated = true;
            report.renyi_violation_size = std::max(report.renyi_violation_size, dev8);
        }
    }

    return report;
}

}  // namespace entrokit
