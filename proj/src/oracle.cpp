#include "chainorder/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace chainorder {

namespace {

constexpr double kRowSumTol = 1e-9;
constexpr double kSupportTol = 1e-15;  // stationary mass below this is noise
constexpr double kOrderTol = 1e-12;
constexpr int kMaxPowerSweeps = 1000000;

void check_stochastic_row(const std::vector<double>& row, std::size_t width,
                          const std::string& what) {
    if (row.size() != width)
        throw std::invalid_argument(what + ": row must have " +
                                    std::to_string(width) + " entries");
    double sum = 0.0;
    for (double p : row) {
        if (!(p >= 0.0))
            throw std::invalid_argument(what + ": probabilities must be >= 0");
        sum += p;
    }
    if (std::fabs(sum - 1.0) > kRowSumTol)
        throw std::invalid_argument(what + ": row must sum to 1");
}

}  // namespace

ChainSpec::ChainSpec(int order, Alphabet alphabet,
                     std::vector<std::vector<double>> rows)
    : order_(order), alphabet_(std::move(alphabet)), rows_(std::move(rows)) {
    if (order_ < 0) throw std::invalid_argument("order must be >= 0");
    const std::int64_t a = static_cast<std::int64_t>(alphabet_.size());
    if (a < 1) throw std::invalid_argument("alphabet must be nonempty");

    powers_.assign(static_cast<std::size_t>(order_) + 1, 1);
    for (int j = 1; j <= order_; ++j) {
        if (powers_[j - 1] > (1LL << 40) / a)
            throw std::invalid_argument("context table too large");
        powers_[static_cast<std::size_t>(j)] = powers_[j - 1] * a;
    }
    if (static_cast<std::int64_t>(rows_.size()) != powers_[static_cast<std::size_t>(order_)])
        throw std::invalid_argument("transitions must cover every length-" +
                                    std::to_string(order_) + " context");
    for (std::size_t r = 0; r < rows_.size(); ++r)
        check_stochastic_row(rows_[r], alphabet_.size(),
                             "transitions row " + std::to_string(r));
}

std::int64_t ChainSpec::context_rank(const Block& context) const {
    if (static_cast<int>(context.size()) != order_)
        throw std::invalid_argument("context length must equal the order");
    std::int64_t rank = 0;
    for (SymbolId s : context) {
        if (s < 0 || s >= alphabet_size())
            throw std::out_of_range("context symbol out of range");
        rank = rank * alphabet_size() + s;
    }
    return rank;
}

Block ChainSpec::context_at(std::int64_t rank) const {
    if (rank < 0 || rank >= num_contexts())
        throw std::out_of_range("context rank out of range");
    Block ctx(static_cast<std::size_t>(order_));
    for (int j = order_ - 1; j >= 0; --j) {
        ctx[static_cast<std::size_t>(j)] = static_cast<SymbolId>(rank % alphabet_size());
        rank /= alphabet_size();
    }
    return ctx;
}

const std::vector<double>& ChainSpec::row_for(const Block& context) const {
    if (static_cast<int>(context.size()) < order_)
        throw std::invalid_argument("context shorter than the order");
    std::int64_t rank = 0;
    for (std::size_t j = context.size() - static_cast<std::size_t>(order_);
         j < context.size(); ++j)
        rank = rank * alphabet_size() + context[j];
    return rows_[static_cast<std::size_t>(rank)];
}

std::int64_t ChainSpec::next_context_rank(std::int64_t rank, SymbolId x) const {
    if (order_ == 0) return 0;
    return (rank % powers_[static_cast<std::size_t>(order_ - 1)]) * alphabet_size() + x;
}

double StationaryDist::prob(const Block& context) const {
    if (static_cast<int>(context.size()) != order)
        throw std::invalid_argument("context length must equal the order");
    std::int64_t rank = 0;
    for (SymbolId s : context) {
        if (s < 0 || s >= static_cast<SymbolId>(alphabet_size))
            throw std::out_of_range("context symbol out of range");
        rank = rank * alphabet_size + s;
    }
    return pi.at(static_cast<std::size_t>(rank));
}

StationaryDist stationary_distribution(const ChainSpec& spec) {
    StationaryDist out;
    out.order = spec.order();
    out.alphabet_size = spec.alphabet_size();
    const std::int64_t states = spec.num_contexts();
    if (spec.order() == 0) {
        out.pi = {1.0};
        return out;
    }

    std::vector<double> pi(static_cast<std::size_t>(states),
                           1.0 / static_cast<double>(states));
    std::vector<double> next(static_cast<std::size_t>(states));
    for (int sweep = 0; sweep < kMaxPowerSweeps; ++sweep) {
        std::fill(next.begin(), next.end(), 0.0);
        for (std::int64_t s = 0; s < states; ++s) {
            const std::vector<double>& row = spec.row(s);
            for (int x = 0; x < spec.alphabet_size(); ++x)
                if (row[static_cast<std::size_t>(x)] > 0.0)
                    next[static_cast<std::size_t>(spec.next_context_rank(s, x))] +=
                        pi[static_cast<std::size_t>(s)] * row[static_cast<std::size_t>(x)];
        }
        double l1 = 0.0;
        for (std::int64_t s = 0; s < states; ++s)
            l1 += std::fabs(next[static_cast<std::size_t>(s)] -
                            pi[static_cast<std::size_t>(s)]);
        pi.swap(next);
        if (0.5 * l1 < 1e-12) {
            double total = 0.0;
            for (double p : pi) total += p;
            for (double& p : pi) p /= total;
            out.pi = std::move(pi);
            return out;
        }
    }
    throw std::runtime_error("chain may be periodic or reducible");
}

double block_probability(const ChainSpec& spec, const StationaryDist& pi,
                         const Block& block) {
    const int k = spec.order();
    const int a = spec.alphabet_size();
    const int len = static_cast<int>(block.size());
    if (len == 0) return 1.0;

    if (len <= k) {
        // sum pi over every context that ends with the block
        std::int64_t tail = 0;
        for (SymbolId s : block) tail = tail * a + s;
        std::int64_t tail_span = 1;
        for (int j = 0; j < len; ++j) tail_span *= a;
        double total = 0.0;
        const std::int64_t prefixes = spec.num_contexts() / tail_span;
        for (std::int64_t w = 0; w < prefixes; ++w)
            total += pi.pi[static_cast<std::size_t>(w * tail_span + tail)];
        return total;
    }

    // chain rule past the order
    double p;
    std::int64_t rank = 0;
    if (k == 0) {
        p = 1.0;
    } else {
        for (int j = 0; j < k; ++j) rank = rank * a + block[static_cast<std::size_t>(j)];
        p = pi.pi[static_cast<std::size_t>(rank)];
    }
    for (int t = k; t < len; ++t) {
        if (p == 0.0) return 0.0;
        const SymbolId x = block[static_cast<std::size_t>(t)];
        p *= spec.row(rank)[static_cast<std::size_t>(x)];
        rank = spec.next_context_rank(rank, x);
    }
    return p;
}

double conditional_prob(const ChainSpec& spec, const StationaryDist& pi,
                        const Block& context, SymbolId x) {
    const int k = spec.order();
    const int m = static_cast<int>(context.size());
    if (x < 0 || x >= spec.alphabet_size())
        throw std::out_of_range("symbol out of range");

    if (m >= k) {
        if (block_probability(spec, pi, context) <= kSupportTol)
            throw std::runtime_error("context outside support S_" + std::to_string(m));
        return spec.row_for(context)[static_cast<std::size_t>(x)];
    }

    // short context: mix the rows of every context ending with it
    std::int64_t tail = 0;
    for (SymbolId s : context) tail = tail * spec.alphabet_size() + s;
    std::int64_t tail_span = 1;
    for (int j = 0; j < m; ++j) tail_span *= spec.alphabet_size();
    double numer = 0.0, denom = 0.0;
    const std::int64_t prefixes = spec.num_contexts() / tail_span;
    for (std::int64_t w = 0; w < prefixes; ++w) {
        const std::int64_t rank = w * tail_span + tail;
        const double mass = pi.pi[static_cast<std::size_t>(rank)];
        denom += mass;
        numer += mass * spec.row(rank)[static_cast<std::size_t>(x)];
    }
    if (denom <= kSupportTol)
        throw std::runtime_error("context outside support S_" + std::to_string(m));
    return numer / denom;
}

double population_delta(const ChainSpec& spec, const StationaryDist& pi, int k) {
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    const int order = spec.order();
    if (k >= order) return 0.0;  // conditioning deeper than the order is idle

    const int a = spec.alphabet_size();
    double best = 0.0;
    for (int i = 1; i <= order - k; ++i) {
        const int len = k + i;
        std::int64_t combos = 1;
        for (int j = 0; j < len; ++j) combos *= a;
        for (std::int64_t c = 0; c < combos; ++c) {
            Block ctx(static_cast<std::size_t>(len));
            std::int64_t rest = c;
            for (int j = len - 1; j >= 0; --j) {
                ctx[static_cast<std::size_t>(j)] = static_cast<SymbolId>(rest % a);
                rest /= a;
            }
            if (block_probability(spec, pi, ctx) <= kSupportTol) continue;
            const Block short_ctx(ctx.end() - k, ctx.end());
            for (SymbolId x = 0; x < a; ++x) {
                Block pair = ctx;
                pair.push_back(x);
                if (block_probability(spec, pi, pair) <= kSupportTol) continue;
                const double diff = std::fabs(conditional_prob(spec, pi, short_ctx, x) -
                                              conditional_prob(spec, pi, ctx, x));
                if (diff > best) best = diff;
            }
        }
    }
    return best;
}

int true_order(const ChainSpec& spec, const StationaryDist& pi) {
    for (int k = 0; k <= spec.order(); ++k)
        if (population_delta(spec, pi, k) <= kOrderTol) return k;
    return spec.order();
}

}  // namespace chainorder
