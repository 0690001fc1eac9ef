#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "chainorder/sequence.hpp"

namespace chainorder {

// Inclusive index window [n1, n2] into a sequence.
struct Window {
    int n1 = 0;
    int n2 = 0;
};

struct BlockHash {
    std::size_t operator()(const Block& b) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ull ^ b.size();
        for (SymbolId s : b)
            h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(s)) +
                 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};

using Count = std::int64_t;

// Occurrences of a block of length m+1 with end position t in [n1+m, n2],
// i.e. the block lies fully inside the window. Overlaps count; blocks longer
// than the window count 0.
Count count_block(const Sequence& seq, Window w, const Block& b);

// Strictly increasing end positions of every occurrence; size() equals
// count_block on the same inputs.
std::vector<int> occurrence_positions(const Sequence& seq, Window w, const Block& b);

// All block counts of length 1..max_len within a window, materialized in one
// pass. Blocks absent from the map have count 0.
struct WindowCounts {
    Window window;
    int max_len = 0;
    std::unordered_map<Block, Count, BlockHash> counts;

    Count count(const Block& b) const {
        auto it = counts.find(b);
        return it == counts.end() ? 0 : it->second;
    }
};

WindowCounts build_counts(const Sequence& seq, Window w, int max_len);

// Empirical conditional probability of symbol x after a length-k context,
// from the samples in [n1, n2]:
//   #{t in [n1+k, n2]   : X_{t-k}^t     = (context, x)}
//   ---------------------------------------------------
//   #{t in [n1+k-1, n2-1] : X_{t-k+1}^t = context}
// with 0/0 defined as 0. For the empty context the denominator is the window
// length, so the value is the marginal frequency of x.
double empirical_conditional(const Sequence& seq, Window w, const Block& context,
                             SymbolId x);

}  // namespace chainorder
