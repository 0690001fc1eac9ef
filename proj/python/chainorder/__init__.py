"""Markov order estimation for discrete token sequences.

The heavy lifting lives in the compiled extension; this package re-exports it.
"""

from ._core import (  # noqa: F401
    Alphabet,
    ChainSpec,
    DeltaReport,
    EstimatorParams,
    HmmSpec,
    Seed,
    Sequence,
    StationaryDist,
    Window,
    block_probability,
    brute_force_delta_hat,
    build_counts,
    chain_spec_from_json_text,
    conditional_prob,
    count_block,
    decide_markov_below,
    decode,
    delta_hat,
    derived_seed,
    empirical_conditional,
    estimate_order,
    hmm_spec_from_json_text,
    ingest,
    ingest_file,
    load_chain_spec,
    load_hmm_spec,
    max_frequent_block_length,
    occurrence_positions,
    population_delta,
    sample_chain,
    sample_hmm,
    sample_iid,
    split_index,
    stationary_distribution,
    support_first_half,
    support_intersection,
    support_second_half,
    true_order,
)

__version__ = "0.1.0"
