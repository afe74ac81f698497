#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace seqcc {

using Symbol = std::uint64_t;

/// Finite sequence of non-negative integer symbols over an explicit alphabet
/// 0..alphabet_size-1. The universal input of every measure in this library.
///
/// An empty sequence is constructible (so containers of sequences are cheap to
/// default-build) but every estimator rejects it.
class SymbolSequence {
public:
    SymbolSequence() = default;
    SymbolSequence(std::vector<Symbol> symbols, Symbol alphabet_size);

    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    Symbol alphabet_size() const { return alphabet_size_; }
    const std::vector<Symbol>& symbols() const { return symbols_; }
    std::span<const Symbol> span() const { return symbols_; }

    auto begin() const { return symbols_.begin(); }
    auto end() const { return symbols_.end(); }

    bool operator==(const SymbolSequence&) const = default;

private:
    std::vector<Symbol> symbols_;
    Symbol alphabet_size_ = 1;
};

/// Bijective table between original numeric labels (e.g. -1, 0, +1) and
/// symbol codes. Labels are stored sorted ascending, so code assignment is
/// deterministic; aligned sequences of one multivariate system share a single
/// encoding built from the union of their values.
class SymbolEncoding {
public:
    static SymbolEncoding from_values(std::span<const double> values);
    static SymbolEncoding from_columns(std::span<const std::vector<double>> columns);

    Symbol encode_value(double value) const;
    double label_of(Symbol s) const;
    SymbolSequence encode(std::span<const double> series) const;
    std::vector<double> decode(const SymbolSequence& sequence) const;

    Symbol alphabet_size() const { return static_cast<Symbol>(labels_.size()); }
    const std::vector<double>& labels() const { return labels_; }

    /// {"schema_version":1,"labels":{"0":-1.0,...}} with keys in symbol order.
    std::string to_json() const;

private:
    std::vector<double> labels_;
};

enum class BinStrategy { EqualWidth, EqualFrequency };

std::string to_string(BinStrategy strategy);

struct QuantizeResult {
    SymbolSequence sequence;
    /// Internal bin edges (n_bins - 1 of them), ascending.
    std::vector<double> edges;
    BinStrategy strategy = BinStrategy::EqualWidth;
};

/// Discretize a real-valued series into n_bins symbols.
///
/// Equal-width partitions [min, max] into n_bins equal intervals with the top
/// edge inclusive, so the series maximum always lands in bin n_bins-1.
/// Equal-frequency uses empirical quantile edges (the ceil(j*n/K)-th order
/// statistic for edge j); values equal to an edge go to the lower bin, which
/// makes the assignment deterministic and order-independent.
QuantizeResult quantize(std::span<const double> series, Symbol n_bins,
                        BinStrategy strategy);

/// Drop every time index at which ANY input sequence holds `target`; relative
/// order is preserved and all outputs keep a common (shorter) length.
std::vector<SymbolSequence> remove_joint_symbol(
    std::span<const SymbolSequence> sequences, Symbol target);

/// Composite per-position code x[i]*alphabet(y) + y[i]; injective on pairs.
/// The result's alphabet is the product of the input alphabets.
SymbolSequence to_joint_symbols(const SymbolSequence& x, const SymbolSequence& y);

/// Invert a composite code produced by to_joint_symbols.
std::pair<Symbol, Symbol> split_joint_symbol(Symbol code, Symbol y_alphabet);

/// Sample Pearson correlation on numeric values.
double pearson_correlation(std::span<const double> x, std::span<const double> y);
/// Convenience overload: correlates the raw symbol codes.
double pearson_correlation(const SymbolSequence& x, const SymbolSequence& y);

struct AcfResult {
    /// Autocorrelation per lag, index 0..max_lag; values[0] == 1.
    std::vector<double> values;
    /// 95% confidence band half-width, 1.96/sqrt(N).
    double confidence_halfwidth = 0.0;

    /// Lag in 1..max_lag with the largest autocorrelation (smallest on ties).
    std::size_t argmax_lag() const;
};

/// Sample autocorrelation with the biased (1/N) covariance normalization.
AcfResult acf(std::span<const double> x, std::size_t max_lag);
AcfResult acf(const SymbolSequence& x, std::size_t max_lag);

} // namespace seqcc
