#include "entrokit/huffman.hpp"

#include <cstddef>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace entrokit {

namespace {

struct Node {
    double weight;
    std::size_t tie_index;   // smallest original symbol index in the subtree
    std::size_t id;          // into the node pool
};

struct NodeOrder {
    bool operator()(const Node& a, const Node& b) const {
        // priority_queue is a max-heap; invert for "smallest first"
        return std::tie(a.weight, a.tie_index) > std::tie(b.weight, b.tie_index);
    }
};

}  // namespace

HuffmanResult huffman_average_length(const ProbVec& p, int arity) {
    if (arity < 2)
        throw std::domain_error("huffman_average_length: code arity must be >= 2");

    const std::size_t m = p.size();
    HuffmanResult result{};
    result.entropy_base_d = shannon_entropy(p, LogBase::of(static_cast<double>(arity)));
    result.code_lengths.assign(m, 0);
    if (m == 1) {
        result.avg_length = 0.0;  // single symbol: empty codeword
        return result;
    }

    // Pad with zero-weight dummies so every merge takes exactly `arity`
    // nodes: need (count - 1) divisible by (arity - 1).
    std::size_t count = m;
    while ((count - 1) % static_cast<std::size_t>(arity - 1) != 0) ++count;

    std::vector<std::vector<std::size_t>> children(count);  // leaves have none
    std::vector<std::size_t> depth;

    std::priority_queue<Node, std::vector<Node>, NodeOrder> heap;
    for (std::size_t i = 0; i < m; ++i)
        heap.push({p[i], i, i});
    for (std::size_t i = m; i < count; ++i)
        heap.push({0.0, i, i});  // dummies sort after real zero-weight symbols

    std::size_t next_id = count;
    while (heap.size() > 1) {
        double w = 0.0;
        std::size_t tie = static_cast<std::size_t>(-1);
        std::vector<std::size_t> kids;
        for (int j = 0; j < arity; ++j) {
            Node n = heap.top();
            heap.pop();
            w += n.weight;
            tie = std::min(tie, n.tie_index);
            kids.push_back(n.id);
        }
        children.push_back(std::move(kids));
        heap.push({w, tie, next_id++});
    }

    // Walk the tree from the root to assign depths.
    depth.assign(children.size(), 0);
    std::vector<std::size_t> stack = {heap.top().id};
    while (!stack.empty()) {
        std::size_t node = stack.back();
        stack.pop_back();
        for (std::size_t kid : children[node]) {
            depth[kid] = depth[node] + 1;
            stack.push_back(kid);
        }
    }

    double avg = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        result.code_lengths[i] = static_cast<int>(depth[i]);
        avg += p[i] * static_cast<double>(depth[i]);
    }
    result.avg_length = avg;
    return result;
}

}  // namespace entrokit
