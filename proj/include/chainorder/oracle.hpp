#pragma once

#include <cstdint>
#include <vector>

#include "chainorder/sequence.hpp"

namespace chainorder {

// Explicit finite-order Markov chain: one probability row per length-K
// context. Contexts are ranked base-A with the oldest symbol most
// significant; rank 0 is the all-zeros context (or the empty context for
// K = 0, which has exactly one row).
class ChainSpec {
public:
    ChainSpec(int order, Alphabet alphabet, std::vector<std::vector<double>> rows);

    int order() const { return order_; }
    int alphabet_size() const { return static_cast<int>(alphabet_.size()); }
    const Alphabet& alphabet() const { return alphabet_; }
    std::int64_t num_contexts() const { return static_cast<std::int64_t>(rows_.size()); }

    std::int64_t context_rank(const Block& context) const;  // context length == order
    Block context_at(std::int64_t rank) const;
    const std::vector<double>& row(std::int64_t rank) const { return rows_[rank]; }
    // Row for the last K symbols of a context of length >= K.
    const std::vector<double>& row_for(const Block& context) const;
    // Rank of the context after appending x and dropping the oldest symbol.
    std::int64_t next_context_rank(std::int64_t rank, SymbolId x) const;

private:
    int order_;
    Alphabet alphabet_;
    std::vector<std::vector<double>> rows_;     // indexed by context rank
    std::vector<std::int64_t> powers_;          // A^0..A^K
};

// Stationary law of the length-K context chain, indexed by context rank.
struct StationaryDist {
    int order = 0;
    int alphabet_size = 1;
    std::vector<double> pi;

    double prob(std::int64_t rank) const { return pi[rank]; }
    double prob(const Block& context) const;
};

// Power iteration from the uniform distribution; converges when successive
// iterates differ by < 1e-12 in total variation, capped at 1e6 sweeps.
// Throws std::runtime_error("chain may be periodic or reducible") at the cap.
StationaryDist stationary_distribution(const ChainSpec& spec);

// Stationary probability of observing a block of any length (1.0 for the
// empty block): marginalization of pi for short blocks, chain rule beyond K.
double block_probability(const ChainSpec& spec, const StationaryDist& pi,
                         const Block& block);

// True next-symbol conditional given a context of any length m: the spec row
// for m >= K, the pi-weighted mixture of rows for m < K. Throws
// std::runtime_error("context outside support S_m") when the context has no
// stationary mass.
double conditional_prob(const ChainSpec& spec, const StationaryDist& pi,
                        const Block& context, SymbolId x);

// Population deviation at level k: the largest change in any supported
// conditional when the context grows past length k. Exactly 0 for k >= K;
// for k < K the enumeration over i = 1..K-k is exhaustive (conditioning
// deeper than K symbols changes nothing).
double population_delta(const ChainSpec& spec, const StationaryDist& pi, int k);

// Smallest k with population_delta(k) = 0 (within 1e-12); at most spec.order().
int true_order(const ChainSpec& spec, const StationaryDist& pi);

}  // namespace chainorder
