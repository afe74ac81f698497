#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "seqcc/infotheory.hpp"
#include "seqcc/symbolic.hpp"

namespace seqcc {

struct TeConfig {
    /// Source history length t (lags 1..t of the source enter the condition).
    std::uint32_t source_lags = 1;
    /// Target history length s.
    std::uint32_t target_lags = 1;
    LogBase log_base = LogBase::Two;
    /// 0 disables the surrogate test.
    std::uint32_t surrogate_count = 0;
    double significance_level = 0.05;
    std::uint64_t rng_seed = 1;
};

struct SurrogateOutcome {
    /// Null TE values, one per surrogate, in member-index order.
    std::vector<double> null_values;
    bool passed = false;
    /// Observed TE if passed, else 0.
    double value_after_test = 0.0;
};

struct TeResult {
    double value = 0.0;
    /// Number of embedded (next, target-past, source-past) tuples:
    /// L - max(source_lags, target_lags).
    std::size_t effective_samples = 0;
    LogBase log_base = LogBase::Two;
    std::uint32_t source_lags = 1;
    std::uint32_t target_lags = 1;
    std::optional<SurrogateOutcome> surrogate;
};

struct EmbeddedTuple {
    Symbol x_next = 0;
    Symbol x_past = 0; ///< composite code over alphabet(x)^s
    Symbol y_past = 0; ///< composite code over alphabet(y)^t
};

/// Uniform history embedding: for n = max(s,t)-1 .. L-2 (0-indexed) emit
/// (x[n+1], code of x[n-s+1..n], code of y[n-t+1..n]). Histories are exact
/// composite integers; configurations whose code space would not fit 64 bits
/// are rejected.
std::vector<EmbeddedTuple> embed_histories(const SymbolSequence& x,
                                           const SymbolSequence& y,
                                           std::uint32_t s, std::uint32_t t);

/// Plug-in binned transfer entropy TE(source -> target): the empirical value
/// of H(next | target past) - H(next | target past, source past) from the
/// joint counts of the embedded tuples. Non-negative by construction; tiny
/// negative rounding noise is clamped to 0.
TeResult transfer_entropy(const SymbolSequence& y_source,
                          const SymbolSequence& x_target,
                          const TeConfig& config);

/// Permutation-surrogate significance test. Each of the surrogate_count
/// members recomputes TE with a seeded random permutation of the source
/// series (destroying its temporal structure, preserving its marginal).
/// One-sided: passed iff the observed TE exceeds the (1 - level) order
/// statistic of the null values. Member seeds are derived from rng_seed and
/// the member index, so results do not depend on evaluation order.
TeResult surrogate_test(const SymbolSequence& y_source,
                        const SymbolSequence& x_target,
                        const TeConfig& config);

} // namespace seqcc
