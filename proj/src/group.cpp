#include "entrokit/group.hpp"

#include <stdexcept>

#include "entrokit/ordinal.hpp"

namespace entrokit {

namespace {

class CyclicGroup final : public FiniteGroup {
public:
    explicit CyclicGroup(int m) : m_(m) {
        if (m < 1) throw std::domain_error("cyclic group: modulus must be >= 1");
    }
    int size() const override { return m_; }
    int op(int a, int b) const override { return (a + b) % m_; }
    int inverse(int a) const override { return (m_ - a) % m_; }
    std::string name() const override { return "Z" + std::to_string(m_); }

private:
    int m_;
};

class SymmetricGroup final : public FiniteGroup {
public:
    explicit SymmetricGroup(int degree) : degree_(degree) {
        if (degree < 2 || degree > 8)
            throw std::domain_error("symmetric group: degree must be in [2, 8]");
        n_ = static_cast<int>(factorial(degree));
        inv_.assign(static_cast<std::size_t>(n_), 0);
        for (int a = 0; a < n_; ++a) {
            const auto pa = pattern_from_lehmer(static_cast<std::uint64_t>(a), degree);
            inv_[static_cast<std::size_t>(a)] = static_cast<int>(lehmer_index(invert(pa)));
        }
        // Dense product table only while it stays small; S7/S8 products are
        // computed per call.
        if (degree <= 6) {
            op_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
            for (int a = 0; a < n_; ++a) {
                const auto pa = pattern_from_lehmer(static_cast<std::uint64_t>(a), degree);
                for (int b = 0; b < n_; ++b) {
                    const auto pb = pattern_from_lehmer(static_cast<std::uint64_t>(b), degree);
                    op_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
                        static_cast<std::size_t>(b)] =
                        static_cast<int>(lehmer_index(compose(pa, pb)));
                }
            }
        }
        identity_ = static_cast<int>(lehmer_index(OrdinalPattern::identity(degree)));
    }
    int size() const override { return n_; }
    int op(int a, int b) const override {
        if (!op_.empty())
            return op_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
                       static_cast<std::size_t>(b)];
        const auto pa = pattern_from_lehmer(static_cast<std::uint64_t>(a), degree_);
        const auto pb = pattern_from_lehmer(static_cast<std::uint64_t>(b), degree_);
        return static_cast<int>(lehmer_index(compose(pa, pb)));
    }
    int inverse(int a) const override { return inv_[static_cast<std::size_t>(a)]; }
    std::string name() const override { return "S" + std::to_string(degree_); }

private:
    int degree_;
    int n_;
    std::vector<int> op_;
    std::vector<int> inv_;
};

}  // namespace

std::unique_ptr<FiniteGroup> make_cyclic_group(int m) {
    return std::make_unique<CyclicGroup>(m);
}

std::unique_ptr<FiniteGroup> make_symmetric_group(int degree) {
    return std::make_unique<SymmetricGroup>(degree);
}

}  // namespace entrokit
