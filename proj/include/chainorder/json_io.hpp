#pragma once

#include <string>

#include "chainorder/generators.hpp"
#include "chainorder/oracle.hpp"

namespace chainorder {

// Chain spec file: {"order": K, "alphabet": [tokens...],
//   "transitions": {"tok1,tok2,...": [pA...], ...}} with one entry per
// length-K context keyed by comma-joined tokens ("" for K = 0) and rows
// aligned with the alphabet order. All A^K contexts are required.
ChainSpec load_chain_spec(const std::string& path);
ChainSpec chain_spec_from_json_text(const std::string& text);

// HMM spec file: {"hidden_transitions": HxH, "emissions": HxA,
//   "alphabet": [A tokens]}.
HmmSpec load_hmm_spec(const std::string& path);
HmmSpec hmm_spec_from_json_text(const std::string& text);

}  // namespace chainorder
