#include "seqcc/transfer_entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace seqcc {

namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

/// base^exp, throwing when the result (or a later product with it) cannot be
/// represented. `headroom` is multiplied in for the representability check.
std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t result = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (base != 0 && result > kMax / base) {
            throw std::invalid_argument(
                "transfer entropy: history code space exceeds 64 bits");
        }
        result *= base;
    }
    return result;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (b != 0 && a > kMax / b) {
        throw std::invalid_argument(
            "transfer entropy: history code space exceeds 64 bits");
    }
    return a * b;
}

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void validate_config(const TeConfig& config) {
    if (config.source_lags == 0 || config.target_lags == 0) {
        throw std::invalid_argument("transfer entropy: lags must be >= 1");
    }
    if (!(config.significance_level > 0.0 && config.significance_level < 1.0)) {
        throw std::invalid_argument(
            "transfer entropy: significance level must be in (0,1)");
    }
}

double te_nats(const std::vector<EmbeddedTuple>& tuples, std::uint64_t ax_pow_s,
               std::uint64_t ay_pow_t, std::uint64_t ax) {
    // Combined keys stay within 64 bits: ax * ax^s * ay^t was checked during
    // embedding.
    (void)ax;
    std::unordered_map<std::uint64_t, std::uint64_t> c_x;     // x_past
    std::unordered_map<std::uint64_t, std::uint64_t> c_xy;    // (x_past, y_past)
    std::unordered_map<std::uint64_t, std::uint64_t> c_nx;    // (x_next, x_past)
    std::unordered_map<std::uint64_t, std::uint64_t> c_nxy;   // all three
    c_x.reserve(tuples.size());
    c_xy.reserve(tuples.size());
    c_nx.reserve(tuples.size());
    c_nxy.reserve(tuples.size());

    for (const auto& tup : tuples) {
        const std::uint64_t key_nx = tup.x_next * ax_pow_s + tup.x_past;
        ++c_x[tup.x_past];
        ++c_xy[tup.x_past * ay_pow_t + tup.y_past];
        ++c_nx[key_nx];
        ++c_nxy[key_nx * ay_pow_t + tup.y_past];
    }

    const double n = static_cast<double>(tuples.size());
    double te = 0.0;
    for (const auto& [key, c3] : c_nxy) {
        const std::uint64_t y_past = key % ay_pow_t;
        const std::uint64_t key_nx = key / ay_pow_t;
        const std::uint64_t x_past = key_nx % ax_pow_s;
        const double cx = static_cast<double>(c_x.at(x_past));
        const double cxy = static_cast<double>(c_xy.at(x_past * ay_pow_t + y_past));
        const double cnx = static_cast<double>(c_nx.at(key_nx));
        const double c = static_cast<double>(c3);
        te += (c / n) * std::log((c * cx) / (cxy * cnx));
    }
    return std::max(te, 0.0);
}

} // namespace

std::vector<EmbeddedTuple> embed_histories(const SymbolSequence& x,
                                           const SymbolSequence& y,
                                           std::uint32_t s, std::uint32_t t) {
    if (s == 0 || t == 0) {
        throw std::invalid_argument("embed_histories: lags must be >= 1");
    }
    if (x.size() != y.size()) {
        throw std::invalid_argument("embed_histories: unequal lengths");
    }
    const std::size_t max_lag = std::max(s, t);
    if (x.size() < max_lag + 2) {
        throw std::invalid_argument("embed_histories: sequences too short");
    }

    const std::uint64_t ax_pow_s = checked_pow(x.alphabet_size(), s);
    const std::uint64_t ay_pow_t = checked_pow(y.alphabet_size(), t);
    checked_mul(checked_mul(x.alphabet_size(), ax_pow_s), ay_pow_t);

    std::vector<EmbeddedTuple> tuples;
    tuples.reserve(x.size() - max_lag);
    for (std::size_t n = max_lag - 1; n + 1 < x.size(); ++n) {
        Symbol x_past = 0;
        for (std::size_t i = n + 1 - s; i <= n; ++i) {
            x_past = x_past * x.alphabet_size() + x[i];
        }
        Symbol y_past = 0;
        for (std::size_t i = n + 1 - t; i <= n; ++i) {
            y_past = y_past * y.alphabet_size() + y[i];
        }
        tuples.push_back(EmbeddedTuple{x[n + 1], x_past, y_past});
    }
    return tuples;
}

TeResult transfer_entropy(const SymbolSequence& y_source,
                          const SymbolSequence& x_target,
                          const TeConfig& config) {
    validate_config(config);
    const std::uint32_t s = config.target_lags;
    const std::uint32_t t = config.source_lags;
    const auto tuples = embed_histories(x_target, y_source, s, t);

    const std::uint64_t ax_pow_s = checked_pow(x_target.alphabet_size(), s);
    const std::uint64_t ay_pow_t = checked_pow(y_source.alphabet_size(), t);

    TeResult result;
    result.effective_samples = tuples.size();
    result.log_base = config.log_base;
    result.source_lags = t;
    result.target_lags = s;
    result.value = detail::from_nats(
        te_nats(tuples, ax_pow_s, ay_pow_t, x_target.alphabet_size()),
        config.log_base);
    return result;
}

TeResult surrogate_test(const SymbolSequence& y_source,
                        const SymbolSequence& x_target,
                        const TeConfig& config) {
    validate_config(config);
    if (config.surrogate_count == 0) {
        throw std::invalid_argument("surrogate_test: surrogate_count must be >= 1");
    }

    TeResult result = transfer_entropy(y_source, x_target, config);

    SurrogateOutcome outcome;
    outcome.null_values.reserve(config.surrogate_count);
    for (std::uint32_t member = 0; member < config.surrogate_count; ++member) {
        std::mt19937_64 engine(splitmix64(config.rng_seed + member));
        std::vector<Symbol> permuted = y_source.symbols();
        for (std::size_t i = permuted.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(engine() % i);
            std::swap(permuted[i - 1], permuted[j]);
        }
        const SymbolSequence surrogate(std::move(permuted),
                                       y_source.alphabet_size());
        TeConfig member_config = config;
        member_config.surrogate_count = 0;
        outcome.null_values.push_back(
            transfer_entropy(surrogate, x_target, member_config).value);
    }

    std::vector<double> sorted = outcome.null_values;
    std::sort(sorted.begin(), sorted.end());
    const double rank_real =
        std::ceil((1.0 - config.significance_level) * sorted.size());
    const std::size_t rank = std::min<std::size_t>(
        sorted.size(),
        std::max<std::size_t>(1, static_cast<std::size_t>(rank_real)));
    const double threshold = sorted[rank - 1];

    // Structural ties (null == observed to rounding) must not flip on
    // summation-order noise, so the one-sided comparison carries a guard.
    outcome.passed = result.value > threshold + 1e-12;
    outcome.value_after_test = outcome.passed ? result.value : 0.0;
    result.surrogate = std::move(outcome);
    return result;
}

} // namespace seqcc
