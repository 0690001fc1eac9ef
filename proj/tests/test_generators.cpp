#include <doctest.h>

#include <cmath>

#include "chainorder/counting.hpp"
#include "chainorder/generators.hpp"
#include "hmm_oracle.hpp"

using namespace chainorder;

namespace {

ChainSpec two_state_chain() {
    return ChainSpec(1, Alphabet({"0", "1"}), {{0.9, 0.1}, {0.2, 0.8}});
}

}  // namespace

TEST_CASE("samplers are deterministic in the seed") {
    ChainSpec spec = two_state_chain();
    StationaryDist pi = stationary_distribution(spec);
    CHECK(sample_chain(spec, pi, 500, Seed{7}).symbols ==
          sample_chain(spec, pi, 500, Seed{7}).symbols);
    CHECK(sample_chain(spec, pi, 500, Seed{7}).symbols !=
          sample_chain(spec, pi, 500, Seed{8}).symbols);

    CHECK(sample_iid({0.4, 0.6}, 500, Seed{9}).symbols ==
          sample_iid({0.4, 0.6}, 500, Seed{9}).symbols);

    HmmSpec hmm = HmmSpec::defaults();
    CHECK(sample_hmm(hmm, 500, Seed{10}).symbols ==
          sample_hmm(hmm, 500, Seed{10}).symbols);
}

TEST_CASE("degenerate rows pin the successor") {
    ChainSpec spec(1, Alphabet({"a", "b"}), {{1.0, 0.0}, {1.0, 0.0}});
    StationaryDist pi = stationary_distribution(spec);
    Sequence seq = sample_chain(spec, pi, 200, Seed{3});
    for (std::size_t t = 1; t < seq.size(); ++t) CHECK(seq.symbols[t] == 0);

    Sequence point = sample_iid({1.0}, 50, Seed{4});
    for (SymbolId s : point.symbols) CHECK(s == 0);
}

TEST_CASE("chain sample frequencies track the spec row") {
    ChainSpec spec = two_state_chain();
    StationaryDist pi = stationary_distribution(spec);
    Sequence seq = sample_chain(spec, pi, 1000000, Seed{12345});
    const double c = empirical_conditional(seq, {0, seq.n()}, Block{0}, 1);
    CHECK(c == doctest::Approx(0.1).epsilon(0.1));
    CHECK(std::fabs(c - 0.1) < 0.01);
}

TEST_CASE("iid sample frequencies obey the law of large numbers") {
    Sequence seq = sample_iid({1.0 / 3, 1.0 / 3, 1.0 / 3}, 100000, Seed{777});
    for (SymbolId x = 0; x < 3; ++x) {
        const Count c = count_block(seq, {0, seq.n()}, Block{x});
        CHECK(std::fabs(static_cast<double>(c) / 100000.0 - 1.0 / 3) < 0.01);
    }
}

TEST_CASE("order-0 chain sampling and iid sampling are the same stream") {
    ChainSpec spec(0, Alphabet({"x", "y", "z"}), {{0.2, 0.5, 0.3}});
    StationaryDist pi = stationary_distribution(spec);
    CHECK(sample_chain(spec, pi, 2000, Seed{99}).symbols ==
          sample_iid({0.2, 0.5, 0.3}, 2000, Seed{99}).symbols);
}

TEST_CASE("chain samples are stationary between halves") {
    ChainSpec spec = two_state_chain();
    StationaryDist pi = stationary_distribution(spec);
    Sequence seq = sample_chain(spec, pi, 1000000, Seed{31337});
    const int mid = static_cast<int>(seq.size()) / 2;
    for (SymbolId x = 0; x < 2; ++x) {
        const double f1 =
            static_cast<double>(count_block(seq, {0, mid - 1}, Block{x})) / mid;
        const double f2 = static_cast<double>(count_block(
                              seq, {mid, seq.n()}, Block{x})) /
                          (seq.size() - static_cast<std::size_t>(mid));
        CHECK(std::fabs(f1 - f2) < 0.01);
    }
}

TEST_CASE("context frequencies of a long sample match the stationary law") {
    ChainSpec spec(2, Alphabet({"0", "1"}),
                   {{0.8, 0.2}, {0.8, 0.2}, {0.2, 0.8}, {0.2, 0.8}});
    StationaryDist pi = stationary_distribution(spec);
    Sequence seq = sample_chain(spec, pi, 1000000, Seed{2024});
    double tv = 0.0;
    for (std::int64_t rank = 0; rank < spec.num_contexts(); ++rank) {
        const Block ctx = spec.context_at(rank);
        const double freq =
            static_cast<double>(count_block(seq, {0, seq.n()}, ctx)) /
            static_cast<double>(seq.size() - 1);
        tv += std::fabs(freq - pi.pi[static_cast<std::size_t>(rank)]);
    }
    CHECK(0.5 * tv < 0.01);
}

TEST_CASE("hmm sampling validates ergodicity") {
    // reducible: state 1 never reaches state 0
    CHECK_THROWS_WITH_AS(
        sample_hmm(HmmSpec({{0.5, 0.5}, {0.0, 1.0}}, {{1.0, 0.0}, {0.0, 1.0}},
                           Alphabet({"a", "b"})),
                   100, Seed{1}),
        "non-ergodic hidden chain", std::runtime_error);
    // periodic: strict alternation
    CHECK_THROWS_WITH_AS(
        sample_hmm(HmmSpec({{0.0, 1.0}, {1.0, 0.0}}, {{1.0, 0.0}, {0.0, 1.0}},
                           Alphabet({"a", "b"})),
                   100, Seed{1}),
        "non-ergodic hidden chain", std::runtime_error);
}

TEST_CASE("identity emissions reveal the hidden chain") {
    HmmSpec spec({{0.9, 0.1}, {0.3, 0.7}}, {{1.0, 0.0}, {0.0, 1.0}},
                 Alphabet({"0", "1"}));
    Sequence seq = sample_hmm(spec, 200000, Seed{55});
    CHECK(std::fabs(empirical_conditional(seq, {0, seq.n()}, Block{0}, 1) - 0.1) < 0.01);
    CHECK(std::fabs(empirical_conditional(seq, {0, seq.n()}, Block{1}, 0) - 0.3) < 0.01);
}

TEST_CASE("default hmm needs more memory than any tested level") {
    HmmSpec spec = HmmSpec::defaults();
    for (int k = 0; k <= 3; ++k)
        CHECK(testoracle::truncated_population_delta(spec, k, 3) > 1e-3);
}

TEST_CASE("derived seeds step linearly") {
    CHECK(derived_seed(Seed{100}, 0).value == 100);
    CHECK(derived_seed(Seed{100}, 7).value == 107);
}

TEST_CASE("hmm spec validation") {
    CHECK_THROWS_AS(HmmSpec({{1.0}}, {{1.0}}, Alphabet({"a"})),
                    std::invalid_argument);  // single hidden state
    CHECK_THROWS_AS(HmmSpec({{0.9, 0.2}, {0.1, 0.9}}, {{1.0, 0.0}, {0.0, 1.0}},
                            Alphabet({"a", "b"})),
                    std::invalid_argument);  // bad row sum
}
