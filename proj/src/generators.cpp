#include "chainorder/generators.hpp"

#include <numeric>
#include <stdexcept>

#include "chainorder/rng.hpp"

namespace chainorder {

namespace {

constexpr double kRowSumTol = 1e-9;

void check_stochastic(const std::vector<std::vector<double>>& rows,
                      std::size_t width, const char* what) {
    for (const auto& row : rows) {
        if (row.size() != width)
            throw std::invalid_argument(std::string(what) + ": ragged matrix");
        double sum = 0.0;
        for (double p : row) {
            if (!(p >= 0.0))
                throw std::invalid_argument(std::string(what) +
                                            ": probabilities must be >= 0");
            sum += p;
        }
        if (sum < 1.0 - kRowSumTol || sum > 1.0 + kRowSumTol)
            throw std::invalid_argument(std::string(what) + ": row must sum to 1");
    }
}

// Strong connectivity and aperiodicity of the positive-probability graph.
bool ergodic(const std::vector<std::vector<double>>& t) {
    const int h = static_cast<int>(t.size());
    auto reach = [&](bool transpose) {
        std::vector<char> seen(static_cast<std::size_t>(h), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < h; ++v) {
                const double p = transpose ? t[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]
                                           : t[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
                if (p > 0.0 && !seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = 1;
                    stack.push_back(v);
                }
            }
        }
        for (char s : seen)
            if (!s) return false;
        return true;
    };
    if (!reach(false) || !reach(true)) return false;

    // period = gcd over edges (u,v) of level[u] + 1 - level[v]
    std::vector<int> level(static_cast<std::size_t>(h), -1);
    std::vector<int> queue{0};
    level[0] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        for (int v = 0; v < h; ++v)
            if (t[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] > 0.0 &&
                level[static_cast<std::size_t>(v)] < 0) {
                level[static_cast<std::size_t>(v)] = level[static_cast<std::size_t>(u)] + 1;
                queue.push_back(v);
            }
    }
    int period = 0;
    for (int u = 0; u < h; ++u)
        for (int v = 0; v < h; ++v)
            if (t[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] > 0.0)
                period = std::gcd(period, level[static_cast<std::size_t>(u)] + 1 -
                                              level[static_cast<std::size_t>(v)]);
    return period == 1;
}

Alphabet numbered_alphabet(int size) {
    std::vector<std::string> tokens;
    tokens.reserve(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) tokens.push_back(std::to_string(i));
    return Alphabet(std::move(tokens));
}

}  // namespace

HmmSpec::HmmSpec(std::vector<std::vector<double>> hidden_transitions,
                 std::vector<std::vector<double>> emissions, Alphabet alphabet)
    : hidden_(std::move(hidden_transitions)), emissions_(std::move(emissions)),
      alphabet_(std::move(alphabet)) {
    const std::size_t h = hidden_.size();
    if (h < 2) throw std::invalid_argument("hmm: need at least 2 hidden states");
    check_stochastic(hidden_, h, "hmm hidden_transitions");
    if (emissions_.size() != h)
        throw std::invalid_argument("hmm: emissions must have one row per hidden state");
    if (alphabet_.size() < 1) throw std::invalid_argument("hmm: alphabet is empty");
    check_stochastic(emissions_, alphabet_.size(), "hmm emissions");
}

HmmSpec HmmSpec::defaults() {
    return HmmSpec({{0.9, 0.1}, {0.1, 0.9}}, {{0.8, 0.2}, {0.3, 0.7}},
                   numbered_alphabet(2));
}

Sequence sample_chain(const ChainSpec& spec, const StationaryDist& pi,
                      std::int64_t length, Seed seed) {
    if (length < 1) throw std::invalid_argument("length must be >= 1");
    std::mt19937_64 g(seed.value);
    Sequence seq;
    seq.symbols.reserve(static_cast<std::size_t>(length));

    std::int64_t rank = 0;
    if (spec.order() > 0) {
        rank = static_cast<std::int64_t>(categorical(g, pi.pi));
        const Block ctx = spec.context_at(rank);
        for (SymbolId s : ctx) {
            if (static_cast<std::int64_t>(seq.size()) == length) break;
            seq.symbols.push_back(s);
        }
    }
    while (static_cast<std::int64_t>(seq.size()) < length) {
        const SymbolId x = static_cast<SymbolId>(categorical(g, spec.row(rank)));
        seq.symbols.push_back(x);
        rank = spec.next_context_rank(rank, x);
    }
    return seq;
}

Sequence sample_iid(const std::vector<double>& dist, std::int64_t length, Seed seed) {
    if (length < 1) throw std::invalid_argument("length must be >= 1");
    check_stochastic({dist}, dist.size(), "iid distribution");
    std::mt19937_64 g(seed.value);
    Sequence seq;
    seq.symbols.reserve(static_cast<std::size_t>(length));
    for (std::int64_t t = 0; t < length; ++t)
        seq.symbols.push_back(static_cast<SymbolId>(categorical(g, dist)));
    return seq;
}

Sequence sample_hmm(const HmmSpec& spec, std::int64_t length, Seed seed) {
    if (length < 1) throw std::invalid_argument("length must be >= 1");
    if (!ergodic(spec.hidden_transitions()))
        throw std::runtime_error("non-ergodic hidden chain");

    // stationary law of the hidden chain via the context-chain machinery
    ChainSpec hidden(1, numbered_alphabet(spec.hidden_states()),
                     spec.hidden_transitions());
    const StationaryDist hidden_pi = stationary_distribution(hidden);

    std::mt19937_64 g(seed.value);
    Sequence seq;
    seq.symbols.reserve(static_cast<std::size_t>(length));
    std::size_t state = categorical(g, hidden_pi.pi);
    for (std::int64_t t = 0; t < length; ++t) {
        seq.symbols.push_back(
            static_cast<SymbolId>(categorical(g, spec.emissions()[state])));
        state = categorical(g, spec.hidden_transitions()[state]);
    }
    return seq;
}

}  // namespace chainorder
