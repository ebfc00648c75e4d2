#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace entrokit {

/// Finite probability distribution over an indexed alphabet.
///
/// Entries must lie in [0,1] and sum to 1 within 1e-12. Tiny negative
/// values in [-1e-14, 0) are clamped to 0 on ingestion (floating-point
/// tolerance); anything below that is rejected. Zero entries are legal
/// and are skipped by the 0*ln(0) := 0 convention everywhere.
class ProbVec {
public:
    explicit ProbVec(std::vector<double> probs,
                     std::vector<std::string> labels = {});

    static ProbVec uniform(std::size_t n);

    std::size_t size() const { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_[i]; }
    const std::vector<double>& probs() const { return probs_; }
    const std::vector<std::string>& labels() const { return labels_; }

    std::size_t support_size() const;

private:
    std::vector<double> probs_;
    std::vector<std::string> labels_;
};

/// Logarithm base for entropy units. Natural log (nats) is the default
/// throughout; base 2 gives bits.
class LogBase {
public:
    static LogBase natural() { return LogBase(); }
    static LogBase of(double base);
    static LogBase bits() { return of(2.0); }

    bool is_natural() const { return natural_; }
    double base() const { return base_; }

    // Multiplier converting a value in nats to this base's units.
    double from_nats() const { return scale_; }

private:
    LogBase() = default;
    bool natural_ = true;
    double base_ = 0.0;
    double scale_ = 1.0;
};

/// Joint distribution p(x,y) of two finite-alphabet variables.
class JointTable {
public:
    JointTable(std::vector<double> cells, std::size_t rows, std::size_t cols);
    explicit JointTable(const std::vector<std::vector<double>>& rows);

    static JointTable product(const ProbVec& px, const ProbVec& py);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double at(std::size_t x, std::size_t y) const { return cells_[x * cols_ + y]; }
    const std::vector<double>& cells() const { return cells_; }

    ProbVec row_marginal() const;  // distribution of X
    ProbVec col_marginal() const;  // distribution of Y

private:
    std::vector<double> cells_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
};

double shannon_entropy(const ProbVec& p, LogBase base = LogBase::natural());

// Renyi entropy in nats. q = 1 and q = infinity are explicit branches
// (Shannon and min-entropy), q = 0 counts the support.
double renyi_entropy(const ProbVec& p, double q);

// Tsallis entropy, k_B := 1; q = 1 is the Shannon branch.
double tsallis_entropy(const ProbVec& p, double q);

enum class ConvertDirection { TsallisToRenyi, RenyiToTsallis };

// Monotone relation between the Renyi and Tsallis functionals at fixed q:
//   renyi = ln(1 + (1-q) tsallis) / (1-q),  tsallis = (e^{(1-q) renyi} - 1) / (1-q).
double renyi_tsallis_convert(double value, double q, ConvertDirection dir);

struct JointSummary {
    double h_joint;        // H(X,Y)
    double h_x;            // H(X)
    double h_y;            // H(Y)
    double h_x_given_y;    // H(X|Y) = H(X,Y) - H(Y)
    double h_y_given_x;    // H(Y|X) = H(X,Y) - H(X)
    double mutual_information;  // I(X;Y) = H(X) + H(Y) - H(X,Y)
};

JointSummary joint_conditional_mutual(const JointTable& t);

// ---------------------------------------------------------------------------
// Axiom suite: numerically checks the Shannon-Khinchin style properties
// (P2)-(P8) on concrete instances for the Shannon, Renyi and Tsallis
// functionals. Evidence-based: it can falsify a property on the tested
// instances, never prove it.
// ---------------------------------------------------------------------------

enum class EntropyFamily { Shannon, Renyi, Tsallis };

struct AxiomCheck {
    std::string axiom;       // "P2", ..., "P8"
    EntropyFamily family;
    double q;                // family parameter (ignored for Shannon)
    double a;                // additivity exponent used in P6/P7/P8
    double max_deviation;    // worst |lhs - rhs| seen (or margin for inequalities)
    bool satisfied;
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    // The documented Thm 3.1(ii) behaviour: Renyi fails strong additivity /
    // recursivity at a = 1 while remaining additive.
    bool renyi_strong_additivity_violated = false;
    double renyi_violation_size = 0.0;
};

AxiomReport khinchin_axiom_suite(const std::vector<ProbVec>& distributions,
                                 const std::vector<double>& q_params,
                                 std::uint64_t seed = 20240901);

}  // namespace entrokit
