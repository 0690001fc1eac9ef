// chainorder: estimate the memory length of a token process, simulate test
// processes, and run convergence sweeps. Exit codes: 0 success (or YES),
// 1 NO from `decide`, 2 usage or input errors.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chainorder/estimator.hpp"
#include "chainorder/generators.hpp"
#include "chainorder/json_io.hpp"
#include "chainorder/sequence.hpp"

namespace {

using namespace chainorder;

std::string sig6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

struct CommonOpts {
    std::string input;
    double gamma = 0.5;
    double beta = 0.2;
};

void add_param_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--input", o.input, "token sequence file")->required();
    cmd->add_option("--gamma", o.gamma, "count-floor exponent, in (0,1)");
    cmd->add_option("--beta", o.beta, "threshold exponent, 2*beta+gamma < 1");
}

int run_estimate(const CommonOpts& o) {
    EstimatorParams params(o.gamma, o.beta);
    auto [alphabet, seq] = ingest_file(o.input);
    DeltaReport report = estimate_order(seq, params);
    std::printf("n = %d\n", report.n);
    std::printf("gamma = %s\n", sig6(params.gamma()).c_str());
    std::printf("beta = %s\n", sig6(params.beta()).c_str());
    std::printf("threshold = %s\n", sig6(report.threshold).c_str());
    std::printf("k delta_hat\n");
    for (const auto& [k, d] : report.per_k)
        std::printf("%d %s\n", k, sig6(d).c_str());
    std::printf("chi = %d\n", report.chi);
    return 0;
}

int run_delta_profile(const CommonOpts& o, int k_max) {
    EstimatorParams params(o.gamma, o.beta);
    if (k_max < 0) throw std::invalid_argument("--k-max must be >= 0");
    auto [alphabet, seq] = ingest_file(o.input);
    const int n = seq.n();
    const double threshold = std::pow(static_cast<double>(n), -params.beta());
    std::printf("k,delta_hat,threshold\n");
    if (n >= 1) {
        SupportLevels levels(seq, n, params.gamma());
        for (int k = 0; k <= k_max; ++k) {
            const double d = k < n ? delta_hat(levels, k) : 0.0;
            std::printf("%d,%s,%s\n", k, sig6(d).c_str(), sig6(threshold).c_str());
        }
    } else {
        for (int k = 0; k <= k_max; ++k)
            std::printf("%d,0,%s\n", k, sig6(threshold).c_str());
    }
    return 0;
}

std::pair<Sequence, Alphabet> generate(const std::string& model,
                                       const std::string& spec_path,
                                       std::int64_t length, Seed seed) {
    if (model == "chain" || model == "iid") {
        ChainSpec spec = load_chain_spec(spec_path);
        if (model == "iid") {
            if (spec.order() != 0)
                throw std::runtime_error("iid model requires an order-0 chain spec");
            return {sample_iid(spec.row(0), length, seed), spec.alphabet()};
        }
        StationaryDist pi = stationary_distribution(spec);
        return {sample_chain(spec, pi, length, seed), spec.alphabet()};
    }
    if (model == "hmm") {
        HmmSpec spec = load_hmm_spec(spec_path);
        return {sample_hmm(spec, length, seed), spec.alphabet()};
    }
    throw std::runtime_error("unknown model kind: " + model +
                             " (expected chain, iid or hmm)");
}

int run_simulate(const std::string& spec_path, const std::string& model,
                 std::int64_t length, std::uint64_t seed,
                 const std::string& output) {
    auto [seq, alphabet] = generate(model, spec_path, length, Seed{seed});
    std::ofstream out(output);
    if (!out) throw std::runtime_error("cannot open output file: " + output);
    for (std::size_t t = 0; t < seq.size(); ++t) {
        if (t) out << ' ';
        out << alphabet.token(seq.symbols[t]);
    }
    out << '\n';
    return 0;
}

int run_sweep(const std::string& spec_path, const std::string& model,
              const std::string& lengths_csv, int replicates, std::uint64_t base_seed,
              double gamma, double beta, const std::string& output) {
    EstimatorParams params(gamma, beta);
    if (replicates < 1) throw std::invalid_argument("--replicates must be >= 1");

    std::vector<std::int64_t> lengths;
    {
        std::string item;
        std::istringstream in(lengths_csv);
        while (std::getline(in, item, ','))
            if (!item.empty()) lengths.push_back(std::stoll(item));
    }
    if (lengths.empty()) throw std::invalid_argument("--lengths is empty");
    for (std::size_t i = 1; i < lengths.size(); ++i)
        if (lengths[i] <= lengths[i - 1])
            throw std::invalid_argument("--lengths must be strictly ascending");

    std::ofstream out(output);
    if (!out) throw std::runtime_error("cannot open output file: " + output);
    out << "n,replicate,seed,chi,runtime_s\n";
    for (std::int64_t len : lengths) {
        for (int r = 0; r < replicates; ++r) {
            const Seed seed = derived_seed(Seed{base_seed}, r);
            auto [seq, alphabet] = generate(model, spec_path, len, seed);
            const auto start = std::chrono::steady_clock::now();
            DeltaReport report = estimate_order(seq, params);
            const double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                    .count();
            out << report.n << ',' << r << ',' << seed.value << ',' << report.chi
                << ',' << sig6(secs) << '\n';
        }
    }
    return 0;
}

int run_decide(const CommonOpts& o, int max_order) {
    EstimatorParams params(o.gamma, o.beta);
    if (max_order <= 0) throw std::invalid_argument("--max-order must be > 0");
    auto [alphabet, seq] = ingest_file(o.input);
    const bool yes = decide_markov_below(seq, params, max_order);
    std::printf("%s\n", yes ? "YES" : "NO");
    return yes ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Markov order estimation for token sequences"};
    app.require_subcommand(1);

    CommonOpts est_opts;
    CLI::App* estimate = app.add_subcommand(
        "estimate", "print the deviation profile and the order estimate chi");
    add_param_flags(estimate, est_opts);

    CommonOpts prof_opts;
    int k_max = 10;
    CLI::App* profile = app.add_subcommand(
        "delta-profile", "CSV of delta_hat for k = 0..k_max on stdout");
    add_param_flags(profile, prof_opts);
    profile->add_option("--k-max", k_max, "largest k to report");

    std::string sim_spec, sim_model, sim_output;
    std::int64_t sim_length = 0;
    std::uint64_t sim_seed = 0;
    CLI::App* simulate =
        app.add_subcommand("simulate", "sample a process into a token file");
    simulate->add_option("--spec", sim_spec, "model spec JSON file")->required();
    simulate->add_option("--model", sim_model, "chain, iid or hmm")->required();
    simulate->add_option("--length", sim_length, "tokens to generate")->required();
    simulate->add_option("--seed", sim_seed, "random seed");
    simulate->add_option("--output", sim_output, "token file to write")->required();

    std::string sw_spec, sw_model, sw_lengths, sw_output;
    int sw_replicates = 1;
    std::uint64_t sw_seed = 0;
    double sw_gamma = 0.5, sw_beta = 0.2;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "estimate chi across lengths and replicates, write CSV");
    sweep->add_option("--spec", sw_spec, "model spec JSON file")->required();
    sweep->add_option("--model", sw_model, "chain, iid or hmm")->required();
    sweep->add_option("--lengths", sw_lengths, "comma-separated token counts, ascending")
        ->required();
    sweep->add_option("--replicates", sw_replicates, "replicates per length");
    sweep->add_option("--seed", sw_seed, "base seed; replicate r uses seed base+r");
    sweep->add_option("--gamma", sw_gamma, "count-floor exponent");
    sweep->add_option("--beta", sw_beta, "threshold exponent");
    sweep->add_option("--output", sw_output, "CSV file to write")->required();

    CommonOpts dec_opts;
    int max_order = 0;
    CLI::App* decide = app.add_subcommand(
        "decide", "YES (exit 0) if chi < max-order, NO (exit 1) otherwise");
    add_param_flags(decide, dec_opts);
    decide->add_option("--max-order", max_order, "order bound M")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (estimate->parsed()) return run_estimate(est_opts);
        if (profile->parsed()) return run_delta_profile(prof_opts, k_max);
        if (simulate->parsed())
            return run_simulate(sim_spec, sim_model, sim_length, sim_seed, sim_output);
        if (sweep->parsed())
            return run_sweep(sw_spec, sw_model, sw_lengths, sw_replicates, sw_seed,
                             sw_gamma, sw_beta, sw_output);
        if (decide->parsed()) return run_decide(dec_opts, max_order);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
