#include "chainorder/support.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace chainorder {

double frequency_threshold(int n, double gamma) {
    return std::pow(static_cast<double>(n), 1.0 - gamma);
}

bool exceeds_threshold(Count count, double threshold) {
    return static_cast<double>(count) > threshold + 1e-9;
}

namespace {

void check_args(const Sequence& seq, int n, int k, double gamma) {
    if (n < 1 || n > seq.n())
        throw std::invalid_argument("n must be in [1, seq.n()]");
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    if (!(gamma > 0.0 && gamma < 1.0))
        throw std::invalid_argument("gamma must be in (0, 1)");
}

}  // namespace

SupportSet support_first_half(const Sequence& seq, int n, int k) {
    check_args(seq, n, k, 0.5);
    SupportSet s;
    s.k = k;
    const int half_end = split_index(n) - 1;
    for (int t = k; t <= half_end; ++t)
        s.blocks.insert(Block(seq.symbols.begin() + (t - k),
                              seq.symbols.begin() + (t + 1)));
    return s;
}

SupportSet support_second_half(const Sequence& seq, int n, int k, double gamma) {
    check_args(seq, n, k, gamma);
    SupportSet s;
    s.k = k;
    const int n1 = split_index(n);
    std::unordered_map<Block, Count, BlockHash> counts;
    for (int t = n1 + k; t <= n; ++t)
        ++counts[Block(seq.symbols.begin() + (t - k), seq.symbols.begin() + (t + 1))];
    const double thr = frequency_threshold(n, gamma);
    for (auto& [b, c] : counts)
        if (exceeds_threshold(c, thr)) s.blocks.insert(b);
    return s;
}

SupportSet support_intersection(const Sequence& seq, int n, int k, double gamma) {
    SupportSet first = support_first_half(seq, n, k);
    SupportSet second = support_second_half(seq, n, k, gamma);
    SupportSet out;
    out.k = k;
    const SupportSet& small = first.size() <= second.size() ? first : second;
    const SupportSet& large = first.size() <= second.size() ? second : first;
    for (const Block& b : small.blocks)
        if (large.contains(b)) out.blocks.insert(b);
    return out;
}

namespace {

// Transient occurrence lists while a level is under construction. Lists stay
// ascending because parents are extended in position order.
struct Building {
    std::vector<int> pos2;  // end positions in the second half
    std::vector<int> pos1;  // end positions in the first half
};

}  // namespace

SupportLevels::SupportLevels(const Sequence& seq, int n, double gamma)
    : n_(n), n1_(split_index(n)), gamma_(gamma),
      threshold_(frequency_threshold(n, gamma)) {
    check_args(seq, n, 0, gamma);

    // seed: one candidate per symbol, bucketed in symbol order
    std::map<SymbolId, Building> seed;
    for (int t = n1_; t <= n_; ++t) seed[seq[t]].pos2.push_back(t);
    for (int t = 0; t <= n1_ - 1; ++t) seed[seq[t]].pos1.push_back(t);

    std::vector<Building> survivors;  // aligned with the freshly built level
    auto keep = [&](std::int32_t parent, SymbolId sym, Building&& b,
                    std::vector<Node>& level) {
        if (!exceeds_threshold(static_cast<Count>(b.pos2.size()), threshold_))
            return;
        Node node;
        node.parent = parent;
        node.symbol = sym;
        node.count_second_half = static_cast<Count>(b.pos2.size());
        node.count_denominator =
            node.count_second_half - (b.pos2.back() == n_ ? 1 : 0);
        node.in_first_half = !b.pos1.empty();
        level.push_back(node);
        survivors.push_back(std::move(b));
    };

    std::vector<Node> level;
    for (auto& [sym, b] : seed) keep(-1, sym, std::move(b), level);
    seed.clear();

    while (!level.empty()) {
        levels_.push_back(std::move(level));
        level.clear();
        std::vector<Building> parents;
        parents.swap(survivors);

        for (std::size_t p = 0; p < parents.size(); ++p) {
            std::map<SymbolId, Building> children;
            for (int t : parents[p].pos2)
                if (t + 1 <= n_) children[seq[t + 1]].pos2.push_back(t + 1);
            for (int t : parents[p].pos1)
                if (t + 1 <= n1_ - 1) children[seq[t + 1]].pos1.push_back(t + 1);
            for (auto& [sym, child] : children) {
                if (child.pos2.empty()) continue;
                keep(static_cast<std::int32_t>(p), sym, std::move(child), level);
            }
        }
    }
}

const std::vector<SupportLevels::Node>& SupportLevels::nodes(int block_len) const {
    if (block_len < 1 || block_len > max_block_len())
        throw std::out_of_range("no such support level");
    return levels_[static_cast<std::size_t>(block_len - 1)];
}

Block SupportLevels::block_of(int block_len, std::size_t index) const {
    Block b(static_cast<std::size_t>(block_len));
    int level = block_len;
    std::size_t at = index;
    for (int j = block_len - 1; j >= 0; --j) {
        const Node& node = nodes(level)[at];
        b[static_cast<std::size_t>(j)] = node.symbol;
        at = static_cast<std::size_t>(node.parent);
        --level;
    }
    return b;
}

SupportLevels::LevelMap SupportLevels::materialize_level(int block_len) const {
    LevelMap out;
    const auto& level = nodes(block_len);
    for (std::size_t i = 0; i < level.size(); ++i) {
        LevelEntry e;
        e.count_second_half = level[i].count_second_half;
        e.count_denominator = level[i].count_denominator;
        e.in_first_half = level[i].in_first_half;
        out.emplace(block_of(block_len, i), e);
    }
    return out;
}

}  // namespace chainorder
