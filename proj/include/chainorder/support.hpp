#pragma once

#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "chainorder/counting.hpp"
#include "chainorder/sequence.hpp"

namespace chainorder {

// The count floor n^{1-gamma} a block must strictly exceed in the second half.
double frequency_threshold(int n, double gamma);

// Strict "count > threshold", with counts within 1e-9 of the threshold
// treated as not greater so ties resolve the same way on every platform.
bool exceeds_threshold(Count count, double threshold);

// Set of blocks of one fixed length k+1.
struct SupportSet {
    int k = 0;
    std::unordered_set<Block, BlockHash> blocks;

    bool contains(const Block& b) const { return blocks.count(b) > 0; }
    std::size_t size() const { return blocks.size(); }
};

// Blocks of length k+1 occurring anywhere in the first half X_0^{ceil(n/2)-1}.
SupportSet support_first_half(const Sequence& seq, int n, int k);

// Blocks of length k+1 occurring more than n^{1-gamma} times in the second
// half X_{ceil(n/2)}^n.
SupportSet support_second_half(const Sequence& seq, int n, int k, double gamma);

// Intersection of the two halves' supports.
SupportSet support_intersection(const Sequence& seq, int n, int k, double gamma);

// Per-block data the estimator consumes at one level.
struct LevelEntry {
    Count count_second_half = 0;   // end positions in [n1, n]
    Count count_denominator = 0;   // end positions in [n1, n-1]
    bool in_first_half = false;    // occurs with end position in [len-1, n1-1]
};

// Every block length whose second-half count can clear the threshold, built
// level by level: a block is counted at length L+1 only if its length-L
// prefix already cleared the threshold (a longer block never outcounts its
// prefix, so nothing frequent is missed). Construction stops at the first
// empty level; max_block_len() is the pruning bound L*.
//
// Levels form a tree: each node extends its parent (the length-(L-1) prefix)
// by one symbol, so a block is O(1) storage no matter how long it is and
// deeply repetitive inputs stay in bounded memory. Level L holds exactly the
// second-half support at k = L-1, and every prefix or suffix a conditional
// needs is itself frequent, so all lookups stay inside the structure.
// Immutable after construction and shared by all delta_hat values of one
// estimate.
class SupportLevels {
public:
    struct Node {
        std::int32_t parent = -1;  // index into the previous level, -1 at level 1
        SymbolId symbol = 0;       // last symbol of the block
        Count count_second_half = 0;
        Count count_denominator = 0;
        bool in_first_half = false;
    };
    using LevelMap = std::unordered_map<Block, LevelEntry, BlockHash>;

    SupportLevels(const Sequence& seq, int n, double gamma);

    int max_block_len() const { return static_cast<int>(levels_.size()); }
    // block_len in [1, max_block_len()]
    const std::vector<Node>& nodes(int block_len) const;
    // Full block of a node, by walking its ancestry.
    Block block_of(int block_len, std::size_t index) const;
    // Content-addressed view of one level, built on demand.
    LevelMap materialize_level(int block_len) const;

    int n() const { return n_; }
    int n1() const { return n1_; }
    double gamma() const { return gamma_; }
    double threshold() const { return threshold_; }
    Count second_half_size() const { return static_cast<Count>(n_ - n1_ + 1); }

private:
    int n_;
    int n1_;
    double gamma_;
    double threshold_;
    std::vector<std::vector<Node>> levels_;
};

}  // namespace chainorder
