#include "seqcc/infotheory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace seqcc {

std::string to_string(LogBase base) {
    return base == LogBase::Two ? "2" : "e";
}

namespace {

std::vector<std::uint64_t> symbol_counts(const SymbolSequence& x) {
    if (x.empty()) {
        throw std::invalid_argument("estimator requires a non-empty sequence");
    }
    std::unordered_map<Symbol, std::uint64_t> table;
    table.reserve(x.size());
    for (Symbol s : x) {
        ++table[s];
    }
    std::vector<std::uint64_t> counts;
    counts.reserve(table.size());
    for (const auto& [sym, c] : table) {
        counts.push_back(c);
    }
    return counts;
}

} // namespace

namespace detail {

double entropy_nats_from_counts(std::vector<std::uint64_t> counts,
                                std::uint64_t total) {
    // Descending count order fixes the accumulation order, so equal count
    // multisets produce bit-identical results regardless of symbol labels.
    std::sort(counts.begin(), counts.end(), std::greater<>());
    double acc = 0.0;
    for (std::uint64_t c : counts) {
        acc += static_cast<double>(c) * std::log(static_cast<double>(c));
    }
    const double n = static_cast<double>(total);
    return std::log(n) - acc / n;
}

double from_nats(double nats, LogBase base) {
    return base == LogBase::Two ? nats / std::log(2.0) : nats;
}

} // namespace detail

DistributionEstimate empirical_pmf(const SymbolSequence& x) {
    if (x.empty()) {
        throw std::invalid_argument("empirical_pmf: empty sequence");
    }
    std::unordered_map<Symbol, std::uint64_t> table;
    for (Symbol s : x) {
        ++table[s];
    }
    DistributionEstimate est;
    est.sample_count = x.size();
    const double n = static_cast<double>(x.size());
    for (const auto& [sym, c] : table) {
        est.probabilities.emplace(sym, static_cast<double>(c) / n);
    }
    return est;
}

double entropy(const SymbolSequence& x, LogBase base) {
    return detail::from_nats(
        detail::entropy_nats_from_counts(symbol_counts(x), x.size()), base);
}

double joint_entropy(const SymbolSequence& x, const SymbolSequence& y,
                     LogBase base) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("joint_entropy: unequal lengths");
    }
    return entropy(to_joint_symbols(x, y), base);
}

double conditional_entropy(const SymbolSequence& x, const SymbolSequence& y,
                           LogBase base) {
    return joint_entropy(x, y, base) - entropy(y, base);
}

double mutual_information(const SymbolSequence& x, const SymbolSequence& y,
                          LogBase base) {
    return entropy(x, base) + entropy(y, base) - joint_entropy(x, y, base);
}

} // namespace seqcc
