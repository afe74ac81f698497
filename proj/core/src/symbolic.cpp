#include "seqcc/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace seqcc {

SymbolSequence::SymbolSequence(std::vector<Symbol> symbols, Symbol alphabet_size)
    : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
    if (alphabet_size_ == 0) {
        throw std::invalid_argument("SymbolSequence: alphabet_size must be positive");
    }
    for (Symbol s : symbols_) {
        if (s >= alphabet_size_) {
            throw std::invalid_argument(
                "SymbolSequence: symbol " + std::to_string(s) +
                " outside alphabet of size " + std::to_string(alphabet_size_));
        }
    }
}

SymbolEncoding SymbolEncoding::from_values(std::span<const double> values) {
    SymbolEncoding enc;
    enc.labels_.reserve(values.size());
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("SymbolEncoding: non-finite label");
        }
        enc.labels_.push_back(v);
    }
    std::sort(enc.labels_.begin(), enc.labels_.end());
    enc.labels_.erase(std::unique(enc.labels_.begin(), enc.labels_.end()),
                      enc.labels_.end());
    if (enc.labels_.empty()) {
        throw std::invalid_argument("SymbolEncoding: no labels");
    }
    return enc;
}

SymbolEncoding SymbolEncoding::from_columns(
    std::span<const std::vector<double>> columns) {
    std::vector<double> all;
    for (const auto& col : columns) {
        all.insert(all.end(), col.begin(), col.end());
    }
    return from_values(all);
}

Symbol SymbolEncoding::encode_value(double value) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), value);
    if (it == labels_.end() || *it != value) {
        throw std::invalid_argument("SymbolEncoding: unknown label " +
                                    std::to_string(value));
    }
    return static_cast<Symbol>(it - labels_.begin());
}

double SymbolEncoding::label_of(Symbol s) const {
    if (s >= labels_.size()) {
        throw std::invalid_argument("SymbolEncoding: symbol out of range");
    }
    return labels_[s];
}

SymbolSequence SymbolEncoding::encode(std::span<const double> series) const {
    std::vector<Symbol> out;
    out.reserve(series.size());
    for (double v : series) {
        out.push_back(encode_value(v));
    }
    return SymbolSequence(std::move(out), alphabet_size());
}

std::vector<double> SymbolEncoding::decode(const SymbolSequence& sequence) const {
    std::vector<double> out;
    out.reserve(sequence.size());
    for (Symbol s : sequence) {
        out.push_back(label_of(s));
    }
    return out;
}

namespace {

std::string format_number(double v) {
    if (v == std::floor(v) && std::abs(v) < 9.007199254740992e15) {
        return std::to_string(static_cast<long long>(v));
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

std::string SymbolEncoding::to_json() const {
    std::string out = "{\"schema_version\":1,\"labels\":{";
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (i != 0) out += ',';
        out += '"';
        out += std::to_string(i);
        out += "\":";
        out += format_number(labels_[i]);
    }
    out += "}}";
    return out;
}

std::string to_string(BinStrategy strategy) {
    return strategy == BinStrategy::EqualWidth ? "equal-width" : "equal-frequency";
}

QuantizeResult quantize(std::span<const double> series, Symbol n_bins,
                        BinStrategy strategy) {
    if (series.empty()) {
        throw std::invalid_argument("quantize: empty series");
    }
    if (n_bins == 0) {
        throw std::invalid_argument("quantize: n_bins must be >= 1");
    }
    for (double v : series) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("quantize: non-finite value in series");
        }
    }

    QuantizeResult result;
    result.strategy = strategy;
    std::vector<Symbol> symbols(series.size(), 0);

    if (n_bins == 1) {
        result.sequence = SymbolSequence(std::move(symbols), 1);
        return result;
    }

    if (strategy == BinStrategy::EqualWidth) {
        const auto [lo_it, hi_it] = std::minmax_element(series.begin(), series.end());
        const double lo = *lo_it;
        const double hi = *hi_it;
        const double range = hi - lo;
        for (Symbol j = 1; j < n_bins; ++j) {
            result.edges.push_back(lo + range * static_cast<double>(j) /
                                            static_cast<double>(n_bins));
        }
        for (std::size_t i = 0; i < series.size(); ++i) {
            if (range == 0.0) {
                symbols[i] = 0;
                continue;
            }
            double idx = std::floor((series[i] - lo) / range *
                                    static_cast<double>(n_bins));
            if (idx < 0.0) idx = 0.0;
            if (idx >= static_cast<double>(n_bins)) {
                idx = static_cast<double>(n_bins) - 1.0; // top edge inclusive
            }
            symbols[i] = static_cast<Symbol>(idx);
        }
    } else {
        std::vector<double> sorted(series.begin(), series.end());
        std::sort(sorted.begin(), sorted.end());
        const std::size_t n = sorted.size();
        for (Symbol j = 1; j < n_bins; ++j) {
            // edge j is the ceil(j*n/K)-th order statistic
            const std::size_t rank =
                (static_cast<std::size_t>(j) * n + static_cast<std::size_t>(n_bins) - 1) /
                static_cast<std::size_t>(n_bins);
            result.edges.push_back(sorted[std::min(rank, n) - 1]);
        }
        for (std::size_t i = 0; i < series.size(); ++i) {
            // count of edges strictly below the value: ties go to the lower bin
            const auto it = std::lower_bound(result.edges.begin(),
                                             result.edges.end(), series[i]);
            symbols[i] = static_cast<Symbol>(it - result.edges.begin());
        }
    }

    result.sequence = SymbolSequence(std::move(symbols), n_bins);
    return result;
}

std::vector<SymbolSequence> remove_joint_symbol(
    std::span<const SymbolSequence> sequences, Symbol target) {
    if (sequences.empty()) {
        throw std::invalid_argument("remove_joint_symbol: no sequences");
    }
    const std::size_t n = sequences[0].size();
    for (const auto& seq : sequences) {
        if (seq.size() != n) {
            throw std::invalid_argument("remove_joint_symbol: unequal lengths");
        }
    }

    std::vector<std::vector<Symbol>> kept(sequences.size());
    for (std::size_t i = 0; i < n; ++i) {
        bool drop = false;
        for (const auto& seq : sequences) {
            if (seq[i] == target) {
                drop = true;
                break;
            }
        }
        if (drop) continue;
        for (std::size_t k = 0; k < sequences.size(); ++k) {
            kept[k].push_back(sequences[k][i]);
        }
    }
    if (kept[0].empty()) {
        throw std::invalid_argument("remove_joint_symbol: result would be empty");
    }

    std::vector<SymbolSequence> out;
    out.reserve(sequences.size());
    for (std::size_t k = 0; k < sequences.size(); ++k) {
        out.emplace_back(std::move(kept[k]), sequences[k].alphabet_size());
    }
    return out;
}

SymbolSequence to_joint_symbols(const SymbolSequence& x, const SymbolSequence& y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("to_joint_symbols: unequal lengths");
    }
    const Symbol ax = x.alphabet_size();
    const Symbol ay = y.alphabet_size();
    if (ay != 0 && ax > std::numeric_limits<Symbol>::max() / ay) {
        throw std::overflow_error("to_joint_symbols: alphabet product overflows");
    }
    std::vector<Symbol> out;
    out.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out.push_back(x[i] * ay + y[i]);
    }
    return SymbolSequence(std::move(out), ax * ay);
}

std::pair<Symbol, Symbol> split_joint_symbol(Symbol code, Symbol y_alphabet) {
    if (y_alphabet == 0) {
        throw std::invalid_argument("split_joint_symbol: zero alphabet");
    }
    return {code / y_alphabet, code % y_alphabet};
}

double pearson_correlation(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("pearson_correlation: unequal lengths");
    }
    if (x.size() < 2) {
        throw std::invalid_argument("pearson_correlation: length must be >= 2");
    }
    const std::size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw std::domain_error("pearson_correlation: zero variance");
    }
    return sxy / std::sqrt(sxx * syy);
}

namespace {
std::vector<double> to_doubles(const SymbolSequence& x) {
    std::vector<double> out;
    out.reserve(x.size());
    for (Symbol s : x) {
        out.push_back(static_cast<double>(s));
    }
    return out;
}
} // namespace

double pearson_correlation(const SymbolSequence& x, const SymbolSequence& y) {
    const auto dx = to_doubles(x);
    const auto dy = to_doubles(y);
    return pearson_correlation(std::span<const double>(dx),
                               std::span<const double>(dy));
}

std::size_t AcfResult::argmax_lag() const {
    std::size_t best = 1;
    for (std::size_t k = 2; k < values.size(); ++k) {
        if (values[k] > values[best]) {
            best = k;
        }
    }
    return best;
}

AcfResult acf(std::span<const double> x, std::size_t max_lag) {
    if (max_lag == 0) {
        throw std::invalid_argument("acf: max_lag must be >= 1");
    }
    if (x.size() < max_lag + 2) {
        throw std::invalid_argument("acf: series shorter than max_lag + 2");
    }
    const std::size_t n = x.size();
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= static_cast<double>(n);

    std::vector<double> centered(n);
    for (std::size_t i = 0; i < n; ++i) centered[i] = x[i] - mean;

    double c0 = 0.0;
    for (double v : centered) c0 += v * v;
    c0 /= static_cast<double>(n);
    if (c0 == 0.0) {
        throw std::domain_error("acf: zero variance");
    }

    AcfResult result;
    result.values.resize(max_lag + 1);
    result.values[0] = 1.0;
    for (std::size_t k = 1; k <= max_lag; ++k) {
        double ck = 0.0;
        for (std::size_t i = 0; i + k < n; ++i) {
            ck += centered[i] * centered[i + k];
        }
        ck /= static_cast<double>(n); // biased normalization
        result.values[k] = ck / c0;
    }
    result.confidence_halfwidth = 1.96 / std::sqrt(static_cast<double>(n));
    return result;
}

AcfResult acf(const SymbolSequence& x, std::size_t max_lag) {
    const auto dx = to_doubles(x);
    return acf(std::span<const double>(dx), max_lag);
}

} // namespace seqcc
