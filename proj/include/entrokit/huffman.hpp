#pragma once

#include <vector>

#include "entrokit/prob.hpp"

namespace entrokit {

struct HuffmanResult {
    double avg_length;               // sum p_i * L_i
    double entropy_base_d;           // H(X) in base-D units
    std::vector<int> code_lengths;   // per input symbol
};

// Builds a D-ary Huffman code for p and reports the average codeword
// length, which satisfies the noiseless-coding bound
//   H_D(X) <= avg_length < H_D(X) + 1.
// Merging ties are broken by the smallest original symbol index in the
// subtree, so the code (and the lengths) are deterministic.
HuffmanResult huffman_average_length(const ProbVec& p, int arity);

}  // namespace entrokit
