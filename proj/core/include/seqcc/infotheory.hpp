#pragma once

#include <cstddef>
#include <map>

#include "seqcc/symbolic.hpp"

namespace seqcc {

enum class LogBase { Two, Natural };

std::string to_string(LogBase base);

/// Empirical probability mass function over observed symbols. Zero-count
/// outcomes are omitted, so every stored probability is strictly positive
/// and the values sum to 1 (up to rounding).
struct DistributionEstimate {
    std::map<Symbol, double> probabilities;
    std::size_t sample_count = 0;
};

DistributionEstimate empirical_pmf(const SymbolSequence& x);

/// Plug-in Shannon entropy of the empirical symbol frequencies.
double entropy(const SymbolSequence& x, LogBase base = LogBase::Two);

/// Entropy of the per-position composite sequence to_joint_symbols(x, y).
double joint_entropy(const SymbolSequence& x, const SymbolSequence& y,
                     LogBase base = LogBase::Two);

/// H(X|Y) = H(X,Y) - H(Y), all plug-in.
double conditional_entropy(const SymbolSequence& x, const SymbolSequence& y,
                           LogBase base = LogBase::Two);

/// MI(X,Y) = H(X) + H(Y) - H(X,Y), all plug-in. Exactly symmetric in its
/// arguments: both orders see the same multiset of joint counts and the
/// summation is done in a canonical order.
double mutual_information(const SymbolSequence& x, const SymbolSequence& y,
                          LogBase base = LogBase::Two);

namespace detail {
/// Entropy in nats from raw counts; sorts a copy of the counts so the
/// accumulation order (and hence the rounding) is content-determined.
double entropy_nats_from_counts(std::vector<std::uint64_t> counts,
                                std::uint64_t total);
double from_nats(double nats, LogBase base);
} // namespace detail

} // namespace seqcc
