#include "chainorder/counting.hpp"

#include <stdexcept>

namespace chainorder {

namespace {

void check_window(const Sequence& seq, Window w) {
    if (w.n1 < 0 || w.n1 > w.n2 || w.n2 > seq.n())
        throw std::out_of_range("window out of range for sequence");
}

bool matches_at(const Sequence& seq, const Block& b, int end) {
    const int m = static_cast<int>(b.size()) - 1;
    for (int j = 0; j <= m; ++j)
        if (seq[end - m + j] != b[static_cast<std::size_t>(j)]) return false;
    return true;
}

}  // namespace

Count count_block(const Sequence& seq, Window w, const Block& b) {
    check_window(seq, w);
    if (b.empty()) throw std::invalid_argument("count_block: block must be nonempty");
    const int m = static_cast<int>(b.size()) - 1;
    Count c = 0;
    for (int t = w.n1 + m; t <= w.n2; ++t)
        if (matches_at(seq, b, t)) ++c;
    return c;
}

std::vector<int> occurrence_positions(const Sequence& seq, Window w, const Block& b) {
    check_window(seq, w);
    if (b.empty())
        throw std::invalid_argument("occurrence_positions: block must be nonempty");
    const int m = static_cast<int>(b.size()) - 1;
    std::vector<int> out;
    for (int t = w.n1 + m; t <= w.n2; ++t)
        if (matches_at(seq, b, t)) out.push_back(t);
    return out;
}

WindowCounts build_counts(const Sequence& seq, Window w, int max_len) {
    check_window(seq, w);
    if (max_len < 1) throw std::invalid_argument("build_counts: max_len must be >= 1");
    WindowCounts wc;
    wc.window = w;
    wc.max_len = max_len;
    for (int t = w.n1; t <= w.n2; ++t) {
        Block key;
        key.reserve(static_cast<std::size_t>(max_len));
        // grow the block ending at t backwards while it stays in the window
        for (int len = 1; len <= max_len && t - len + 1 >= w.n1; ++len) {
            key.insert(key.begin(), seq[t - len + 1]);
            ++wc.counts[key];
        }
    }
    return wc;
}

double empirical_conditional(const Sequence& seq, Window w, const Block& context,
                             SymbolId x) {
    check_window(seq, w);
    const int k = static_cast<int>(context.size());
    Count numer, denom;
    if (k == 0) {
        numer = count_block(seq, w, Block{x});
        denom = static_cast<Count>(w.n2 - w.n1 + 1);
    } else {
        Block pair = context;
        pair.push_back(x);
        numer = count_block(seq, w, pair);
        denom = (w.n1 <= w.n2 - 1) ? count_block(seq, Window{w.n1, w.n2 - 1}, context)
                                   : 0;
    }
    if (denom == 0) return 0.0;
    return static_cast<double>(numer) / static_cast<double>(denom);
}

}  // namespace chainorder
