#include "chainorder/estimator.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <unordered_map>

#include "chainorder/counting.hpp"

namespace chainorder {

namespace {

std::string number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

}  // namespace

EstimatorParams::EstimatorParams(double gamma, double beta)
    : gamma_(gamma), beta_(beta) {
    if (!(gamma > 0.0 && gamma < 1.0))
        throw std::invalid_argument("gamma must be in (0, 1), got " + number(gamma));
    if (!(beta > 0.0))
        throw std::invalid_argument("beta must be > 0, got " + number(beta));
    if (!(2.0 * beta + gamma < 1.0))
        throw std::invalid_argument("2*beta + gamma must be < 1, got " +
                                    number(2.0 * beta + gamma));
}

double delta_hat(const SupportLevels& levels, int k) {
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    const int lstar = levels.max_block_len();
    if (k + 2 > lstar) return 0.0;

    // content views of the two fixed levels the short conditional reads
    SupportLevels::LevelMap tail_pairs, tail_ctxs;
    std::vector<Count> symbol_counts;
    if (k == 0) {
        for (const auto& node : levels.nodes(1)) {
            if (static_cast<std::size_t>(node.symbol) >= symbol_counts.size())
                symbol_counts.resize(static_cast<std::size_t>(node.symbol) + 1, 0);
            symbol_counts[static_cast<std::size_t>(node.symbol)] =
                node.count_second_half;
        }
    } else {
        tail_pairs = levels.materialize_level(k + 1);
        tail_ctxs = levels.materialize_level(k);
    }

    double best = 0.0;
    Block tail(static_cast<std::size_t>(k) + 1);
    // extension level m = k + i; candidate pairs are the frequent blocks of
    // length m + 1 also seen in the first half
    for (int m = k + 1; m + 1 <= lstar; ++m) {
        const auto& pairs = levels.nodes(m + 1);
        const auto& prefixes = levels.nodes(m);
        for (const auto& pn : pairs) {
            if (!pn.in_first_half) continue;

            // conditional on the full length-m context (the pair's prefix)
            const auto& fe = prefixes[static_cast<std::size_t>(pn.parent)];
            const double c_full =
                fe.count_denominator > 0
                    ? static_cast<double>(pn.count_second_half) /
                          static_cast<double>(fe.count_denominator)
                    : 0.0;

            // conditional on the last k symbols of that context
            double c_short;
            if (k == 0) {
                c_short = static_cast<double>(
                              symbol_counts[static_cast<std::size_t>(pn.symbol)]) /
                          static_cast<double>(levels.second_half_size());
            } else {
                // collect the pair's last k+1 symbols by walking up the tree
                const SupportLevels::Node* cur = &pn;
                int level = m + 1;
                for (int j = k; j >= 0; --j) {
                    tail[static_cast<std::size_t>(j)] = cur->symbol;
                    if (j > 0) {
                        --level;
                        cur = &levels.nodes(level)[static_cast<std::size_t>(cur->parent)];
                    }
                }
                const LevelEntry& te = tail_pairs.at(tail);
                const Block tail_ctx(tail.begin(), tail.end() - 1);
                const LevelEntry& se = tail_ctxs.at(tail_ctx);
                c_short = se.count_denominator > 0
                              ? static_cast<double>(te.count_second_half) /
                                    static_cast<double>(se.count_denominator)
                              : 0.0;
            }

            const double diff = std::fabs(c_short - c_full);
            if (diff > best) best = diff;
        }
    }
    return best;
}

double delta_hat(const Sequence& seq, int n, int k, double gamma) {
    if (n < 1 || n > seq.n())
        throw std::invalid_argument("n must be in [1, seq.n()]");
    if (k < 0 || k >= n) throw std::invalid_argument("k must be in [0, n)");
    SupportLevels levels(seq, n, gamma);
    return delta_hat(levels, k);
}

double brute_force_delta_hat(const Sequence& seq, int n, int k, double gamma) {
    if (n < 1 || n > seq.n())
        throw std::invalid_argument("n must be in [1, seq.n()]");
    if (k < 0 || k >= n) throw std::invalid_argument("k must be in [0, n)");
    if (!(gamma > 0.0 && gamma < 1.0))
        throw std::invalid_argument("gamma must be in (0, 1)");

    const int n1 = split_index(n);
    const double thr = frequency_threshold(n, gamma);
    const Window second{n1, n};
    const Window first{0, n1 - 1};

    double best = 0.0;
    for (int i = 1; i <= n; ++i) {
        const int m = k + i;  // extended context length
        if (m + 1 > n - n1 + 1) continue;  // no block of this length fits

        // every distinct block of length m+1 in the second half
        std::unordered_map<Block, Count, BlockHash> seen;
        for (int t = n1 + m; t <= n; ++t)
            ++seen[Block(seq.symbols.begin() + (t - m), seq.symbols.begin() + (t + 1))];

        for (const auto& [blk, c] : seen) {
            if (!exceeds_threshold(c, thr)) continue;
            if (m + 1 > n1 || count_block(seq, first, blk) < 1) continue;

            const Block full_ctx(blk.begin(), blk.end() - 1);
            const Block short_ctx(blk.end() - 1 - k, blk.end() - 1);
            const SymbolId x = blk.back();
            const double c_full = empirical_conditional(seq, second, full_ctx, x);
            const double c_short = empirical_conditional(seq, second, short_ctx, x);
            const double diff = std::fabs(c_short - c_full);
            if (diff > best) best = diff;
        }
    }
    return best;
}

DeltaReport estimate_order(const Sequence& seq, const EstimatorParams& params) {
    if (seq.empty()) throw std::invalid_argument("sequence must be nonempty");
    DeltaReport report;
    report.n = seq.n();
    report.params = params;
    report.threshold = std::pow(static_cast<double>(report.n), -params.beta());
    report.chi = 0;
    if (report.n == 0) return report;

    SupportLevels levels(seq, report.n, params.gamma());
    for (int k = 0; k < report.n; ++k) {
        const double d = delta_hat(levels, k);
        report.per_k.emplace_back(k, d);
        if (d <= report.threshold) {
            report.chi = k;
            return report;
        }
    }
    // unreachable: delta_hat is 0 from the pruning bound on, and 0 <= n^-beta
    report.chi = report.n - 1;
    return report;
}

bool decide_markov_below(const Sequence& seq, const EstimatorParams& params,
                         int max_order) {
    if (max_order <= 0) throw std::invalid_argument("max_order must be > 0");
    return estimate_order(seq, params).chi < max_order;
}

}  // namespace chainorder
