#pragma once

#include <memory>
#include <string>
#include <vector>

namespace entrokit {

/// Finite group with elements indexed 0..size-1. Implementations: the
/// cyclic group Z_m and the symmetric group S_L (elements indexed by
/// Lehmer code, product per the ordinal-pattern composition).
class FiniteGroup {
public:
    virtual ~FiniteGroup() = default;
    virtual int size() const = 0;
    virtual int op(int a, int b) const = 0;   // group product ab
    virtual int inverse(int a) const = 0;
    virtual std::string name() const = 0;

    // Transcript from source alpha to target beta: tau = beta * alpha^{-1}.
    int transcript(int source, int target) const { return op(target, inverse(source)); }

    int identity() const { return identity_; }

protected:
    int identity_ = 0;
};

std::unique_ptr<FiniteGroup> make_cyclic_group(int m);
std::unique_ptr<FiniteGroup> make_symmetric_group(int degree);  // degree <= 8

}  // namespace entrokit
