#pragma once

#include <utility>
#include <vector>

#include "chainorder/sequence.hpp"
#include "chainorder/support.hpp"

namespace chainorder {

// Estimator parameters. gamma sets the second-half count floor n^{1-gamma};
// beta sets the acceptance threshold n^{-beta}. The constructor enforces
// 0 < gamma < 1, beta > 0 and 2*beta + gamma < 1.
class EstimatorParams {
public:
    explicit EstimatorParams(double gamma = 0.5, double beta = 0.2);

    double gamma() const { return gamma_; }
    double beta() const { return beta_; }

private:
    double gamma_;
    double beta_;
};

struct DeltaReport {
    int n = 0;
    EstimatorParams params;
    double threshold = 0.0;                     // n^{-beta}
    std::vector<std::pair<int, double>> per_k;  // (k, delta_hat), k examined in order
    int chi = 0;                                // smallest listed k at or below threshold
};

// Empirical deviation statistic for level k: the largest change in any
// supported next-symbol conditional when the length-k context is extended,
// over the second half of X_0^n. 0 when no extension level has support.
double delta_hat(const Sequence& seq, int n, int k, double gamma);

// Same value computed from a prebuilt level structure (one build serves every
// k of an estimate).
double delta_hat(const SupportLevels& levels, int k);

// Reference implementation by the literal definition: walks every extension
// depth i = 1..n, enumerates candidate blocks by scanning the second half and
// evaluates membership and conditionals through the counting primitives. No
// level pruning, no shared state with the fast path. Intended for n up to a
// few hundred.
double brute_force_delta_hat(const Sequence& seq, int n, int k, double gamma);

// The order estimate: smallest 0 <= k < n with delta_hat <= n^{-beta}; 0 for
// a single-sample sequence. per_k records every examined level.
DeltaReport estimate_order(const Sequence& seq, const EstimatorParams& params);

// YES/NO rule for "is this a Markov chain of order below max_order".
bool decide_markov_below(const Sequence& seq, const EstimatorParams& params,
                         int max_order);

}  // namespace chainorder
