#pragma once

#include <cstdint>
#include <vector>

#include "chainorder/oracle.hpp"
#include "chainorder/sequence.hpp"

namespace chainorder {

struct Seed {
    std::uint64_t value = 0;
};

// Replicate r of an experiment runs with base + r.
inline Seed derived_seed(Seed base, int replicate) {
    return Seed{base.value + static_cast<std::uint64_t>(replicate)};
}

// Hidden-state process with per-state emission rows. For generic parameters
// the observed process is not a Markov chain of any finite order.
class HmmSpec {
public:
    HmmSpec(std::vector<std::vector<double>> hidden_transitions,
            std::vector<std::vector<double>> emissions, Alphabet alphabet);

    int hidden_states() const { return static_cast<int>(hidden_.size()); }
    int alphabet_size() const { return static_cast<int>(alphabet_.size()); }
    const std::vector<std::vector<double>>& hidden_transitions() const { return hidden_; }
    const std::vector<std::vector<double>>& emissions() const { return emissions_; }
    const Alphabet& alphabet() const { return alphabet_; }

    // H=2, hidden rows [[0.9,0.1],[0.1,0.9]], emissions [[0.8,0.2],[0.3,0.7]].
    static HmmSpec defaults();

private:
    std::vector<std::vector<double>> hidden_;
    std::vector<std::vector<double>> emissions_;
    Alphabet alphabet_;
};

// Exactly stationary chain sample: the initial K symbols are one draw from
// pi, every later symbol one draw from the current context's row.
Sequence sample_chain(const ChainSpec& spec, const StationaryDist& pi,
                      std::int64_t length, Seed seed);

// i.i.d. draws from a probability vector (must sum to 1 within 1e-9).
// A K=0 chain sample with the same row and seed is the identical sequence.
Sequence sample_iid(const std::vector<double>& dist, std::int64_t length, Seed seed);

// Hidden path started from the hidden chain's stationary law; one emission
// draw then one transition draw per step. Throws
// std::runtime_error("non-ergodic hidden chain") unless the positive-
// probability transition graph is strongly connected and aperiodic.
Sequence sample_hmm(const HmmSpec& spec, std::int64_t length, Seed seed);

}  // namespace chainorder
