#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chainorder/estimator.hpp"
#include "chainorder/generators.hpp"
#include "chainorder/json_io.hpp"
#include "chainorder/oracle.hpp"
#include "chainorder/sequence.hpp"
#include "chainorder/support.hpp"

namespace py = pybind11;
using namespace chainorder;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Markov order estimation: counting, supports, the chi estimator, "
              "an exact population oracle and seeded process samplers";

    py::class_<Alphabet>(m, "Alphabet")
        .def(py::init<std::vector<std::string>>(), py::arg("tokens"))
        .def("add", &Alphabet::add, py::arg("token"))
        .def("id_of", &Alphabet::id_of, py::arg("token"))
        .def("token", &Alphabet::token, py::arg("id"))
        .def("tokens", &Alphabet::tokens)
        .def("__len__", &Alphabet::size);

    py::class_<Sequence>(m, "Sequence")
        .def(py::init<std::vector<SymbolId>>(), py::arg("symbols"))
        .def_readonly("symbols", &Sequence::symbols)
        .def_property_readonly("n", &Sequence::n)
        .def("__len__", &Sequence::size);

    py::class_<Window>(m, "Window")
        .def(py::init<int, int>(), py::arg("n1"), py::arg("n2"))
        .def_readwrite("n1", &Window::n1)
        .def_readwrite("n2", &Window::n2);

    m.def("ingest", [](const std::string& text) { return ingest_string(text); },
          py::arg("text"), "Tokenize whitespace-separated text into (Alphabet, Sequence)");
    m.def("ingest_file", &ingest_file, py::arg("path"));
    m.def("decode", &decode, py::arg("seq"), py::arg("alphabet"));
    m.def("split_index", &split_index, py::arg("n"));

    m.def("count_block", &count_block, py::arg("seq"), py::arg("window"), py::arg("block"));
    m.def("occurrence_positions", &occurrence_positions, py::arg("seq"),
          py::arg("window"), py::arg("block"));
    m.def("build_counts",
          [](const Sequence& seq, Window w, int max_len) {
              std::unordered_map<Block, Count, BlockHash> counts =
                  build_counts(seq, w, max_len).counts;
              py::dict out;
              for (auto& [b, c] : counts) out[py::tuple(py::cast(b))] = c;
              return out;
          },
          py::arg("seq"), py::arg("window"), py::arg("max_len"));
    m.def("empirical_conditional", &empirical_conditional, py::arg("seq"),
          py::arg("window"), py::arg("context"), py::arg("x"));

    auto blocks_of = [](const SupportSet& s) {
        std::vector<Block> out(s.blocks.begin(), s.blocks.end());
        return out;
    };
    m.def("support_first_half",
          [blocks_of](const Sequence& seq, int n, int k) {
              return blocks_of(support_first_half(seq, n, k));
          },
          py::arg("seq"), py::arg("n"), py::arg("k"));
    m.def("support_second_half",
          [blocks_of](const Sequence& seq, int n, int k, double gamma) {
              return blocks_of(support_second_half(seq, n, k, gamma));
          },
          py::arg("seq"), py::arg("n"), py::arg("k"), py::arg("gamma"));
    m.def("support_intersection",
          [blocks_of](const Sequence& seq, int n, int k, double gamma) {
              return blocks_of(support_intersection(seq, n, k, gamma));
          },
          py::arg("seq"), py::arg("n"), py::arg("k"), py::arg("gamma"));
    m.def("max_frequent_block_length",
          [](const Sequence& seq, int n, double gamma) {
              return SupportLevels(seq, n, gamma).max_block_len();
          },
          py::arg("seq"), py::arg("n"), py::arg("gamma"),
          "Pruning bound L*: the largest block length still above the count floor");

    py::class_<EstimatorParams>(m, "EstimatorParams")
        .def(py::init<double, double>(), py::arg("gamma") = 0.5, py::arg("beta") = 0.2)
        .def_property_readonly("gamma", &EstimatorParams::gamma)
        .def_property_readonly("beta", &EstimatorParams::beta);

    py::class_<DeltaReport>(m, "DeltaReport")
        .def_readonly("n", &DeltaReport::n)
        .def_readonly("threshold", &DeltaReport::threshold)
        .def_readonly("per_k", &DeltaReport::per_k)
        .def_readonly("chi", &DeltaReport::chi);

    m.def("delta_hat",
          py::overload_cast<const Sequence&, int, int, double>(&delta_hat),
          py::arg("seq"), py::arg("n"), py::arg("k"), py::arg("gamma"));
    m.def("brute_force_delta_hat", &brute_force_delta_hat, py::arg("seq"),
          py::arg("n"), py::arg("k"), py::arg("gamma"));
    m.def("estimate_order", &estimate_order, py::arg("seq"), py::arg("params"));
    m.def("decide_markov_below", &decide_markov_below, py::arg("seq"),
          py::arg("params"), py::arg("max_order"));

    py::class_<ChainSpec>(m, "ChainSpec")
        .def(py::init<int, Alphabet, std::vector<std::vector<double>>>(),
             py::arg("order"), py::arg("alphabet"), py::arg("rows"))
        .def_property_readonly("order", &ChainSpec::order)
        .def_property_readonly("alphabet_size", &ChainSpec::alphabet_size)
        .def("alphabet", &ChainSpec::alphabet)
        .def("row", &ChainSpec::row, py::arg("rank"))
        .def("context_at", &ChainSpec::context_at, py::arg("rank"))
        .def("context_rank", &ChainSpec::context_rank, py::arg("context"))
        .def_property_readonly("num_contexts", &ChainSpec::num_contexts);

    py::class_<StationaryDist>(m, "StationaryDist")
        .def_readonly("pi", &StationaryDist::pi)
        .def("prob", py::overload_cast<const Block&>(&StationaryDist::prob, py::const_),
             py::arg("context"));

    m.def("stationary_distribution", &stationary_distribution, py::arg("spec"));
    m.def("block_probability", &block_probability, py::arg("spec"), py::arg("pi"),
          py::arg("block"));
    m.def("conditional_prob", &conditional_prob, py::arg("spec"), py::arg("pi"),
          py::arg("context"), py::arg("x"));
    m.def("population_delta", &population_delta, py::arg("spec"), py::arg("pi"),
          py::arg("k"));
    m.def("true_order", &true_order, py::arg("spec"), py::arg("pi"));

    py::class_<HmmSpec>(m, "HmmSpec")
        .def(py::init<std::vector<std::vector<double>>,
                      std::vector<std::vector<double>>, Alphabet>(),
             py::arg("hidden_transitions"), py::arg("emissions"), py::arg("alphabet"))
        .def_static("defaults", &HmmSpec::defaults)
        .def_property_readonly("hidden_states", &HmmSpec::hidden_states)
        .def("hidden_transitions", &HmmSpec::hidden_transitions)
        .def("emissions", &HmmSpec::emissions)
        .def("alphabet", &HmmSpec::alphabet);

    py::class_<Seed>(m, "Seed").def(py::init<std::uint64_t>(), py::arg("value"));
    m.def("derived_seed", &derived_seed, py::arg("base"), py::arg("replicate"));

    m.def("sample_chain",
          [](const ChainSpec& spec, const StationaryDist& pi, std::int64_t length,
             std::uint64_t seed) { return sample_chain(spec, pi, length, Seed{seed}); },
          py::arg("spec"), py::arg("pi"), py::arg("length"), py::arg("seed"));
    m.def("sample_iid",
          [](const std::vector<double>& dist, std::int64_t length, std::uint64_t seed) {
              return sample_iid(dist, length, Seed{seed});
          },
          py::arg("dist"), py::arg("length"), py::arg("seed"));
    m.def("sample_hmm",
          [](const HmmSpec& spec, std::int64_t length, std::uint64_t seed) {
              return sample_hmm(spec, length, Seed{seed});
          },
          py::arg("spec"), py::arg("length"), py::arg("seed"));

    m.def("load_chain_spec", &load_chain_spec, py::arg("path"));
    m.def("chain_spec_from_json_text", &chain_spec_from_json_text, py::arg("text"));
    m.def("load_hmm_spec", &load_hmm_spec, py::arg("path"));
    m.def("hmm_spec_from_json_text", &hmm_spec_from_json_text, py::arg("text"));
}
