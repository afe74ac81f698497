#include "seqcc/compression.hpp"

#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace seqcc {

namespace {

struct PairHash {
    std::size_t operator()(const std::pair<Symbol, Symbol>& p) const {
        std::uint64_t h = p.first * 0x9e3779b97f4a7c15ULL;
        h ^= p.second + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

using TallyMap =
    std::unordered_map<std::pair<Symbol, Symbol>, detail::PairTally, PairHash>;

TallyMap tally_pairs(std::span<const Symbol> seq) {
    TallyMap tallies;
    const std::size_t n = seq.size();
    // Unequal neighbours: occurrences of one pair type can never overlap,
    // so every adjacent position counts.
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (seq[i] == seq[i + 1]) continue;
        auto [it, inserted] =
            tallies.try_emplace({seq[i], seq[i + 1]}, detail::PairTally{0, i});
        ++it->second.count;
    }
    // Equal neighbours: a run of m equal symbols holds floor(m/2)
    // non-overlapping occurrences of its self-pair, matched from the run start.
    std::size_t i = 0;
    while (i + 1 < n) {
        if (seq[i] != seq[i + 1]) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < n && seq[j] == seq[i]) ++j;
        auto [it, inserted] =
            tallies.try_emplace({seq[i], seq[i]}, detail::PairTally{0, i});
        it->second.count += (j - i) / 2;
        i = j;
    }
    return tallies;
}

bool is_constant(std::span<const Symbol> seq) {
    for (std::size_t i = 1; i < seq.size(); ++i) {
        if (seq[i] != seq[0]) return false;
    }
    return true;
}

/// One in-place substitution pass; returns the step record.
PairSubstitution step_impl(std::vector<Symbol>& seq, Symbol& alphabet) {
    const auto tallies = tally_pairs(seq);
    if (tallies.empty()) {
        throw std::invalid_argument("nsrps_step: length must be >= 2");
    }

    // Maximal count, ties broken by leftmost first occurrence. The winner is
    // unique (a position determines one pair), so map order does not matter.
    std::pair<Symbol, Symbol> best{};
    detail::PairTally best_tally{0, std::numeric_limits<std::size_t>::max()};
    for (const auto& [pair, tally] : tallies) {
        if (tally.count > best_tally.count ||
            (tally.count == best_tally.count &&
             tally.first_index < best_tally.first_index)) {
            best = pair;
            best_tally = tally;
        }
    }

    if (alphabet == std::numeric_limits<Symbol>::max()) {
        throw std::overflow_error("nsrps_step: fresh symbol would overflow");
    }
    const Symbol fresh = alphabet;

    std::vector<Symbol> out;
    out.reserve(seq.size());
    std::size_t i = 0;
    while (i < seq.size()) {
        if (i + 1 < seq.size() && seq[i] == best.first && seq[i + 1] == best.second) {
            out.push_back(fresh);
            i += 2;
        } else {
            out.push_back(seq[i]);
            ++i;
        }
    }

    seq = std::move(out);
    ++alphabet;
    return PairSubstitution{best.first, best.second, fresh, seq.size()};
}

} // namespace

namespace detail {

std::map<std::pair<Symbol, Symbol>, PairTally>
count_adjacent_pairs(std::span<const Symbol> sequence) {
    std::map<std::pair<Symbol, Symbol>, PairTally> out;
    for (const auto& [pair, tally] : tally_pairs(sequence)) {
        out.emplace(pair, tally);
    }
    return out;
}

} // namespace detail

std::pair<SymbolSequence, PairSubstitution> nsrps_step(const SymbolSequence& x) {
    if (x.size() < 2) {
        throw std::invalid_argument("nsrps_step: length must be >= 2");
    }
    std::vector<Symbol> work = x.symbols();
    Symbol alphabet = x.alphabet_size();
    const PairSubstitution sub = step_impl(work, alphabet);
    return {SymbolSequence(std::move(work), alphabet), sub};
}

EtcResult etc(const SymbolSequence& x) {
    if (x.empty()) {
        throw std::invalid_argument("etc: empty sequence");
    }
    EtcResult result;
    result.input_length = x.size();

    std::vector<Symbol> work = x.symbols();
    Symbol alphabet = x.alphabet_size();
    while (!is_constant(work)) {
        result.trace.push_back(step_impl(work, alphabet));
        ++result.iterations;
    }
    result.normalized =
        result.input_length >= 2
            ? static_cast<double>(result.iterations) /
                  static_cast<double>(result.input_length - 1)
            : 0.0;
    return result;
}

EtcResult etc2d(const SymbolSequence& x, const SymbolSequence& y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("etc2d: unequal lengths");
    }
    return etc(to_joint_symbols(x, y));
}

double metc(const SymbolSequence& x, const SymbolSequence& y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("metc: unequal lengths");
    }
    if (x.size() < 2) {
        throw std::invalid_argument("metc: length must be >= 2");
    }
    return etc(x).normalized + etc(y).normalized - etc2d(x, y).normalized;
}

std::string format_trace(const EtcResult& result) {
    std::string out;
    for (std::size_t k = 0; k < result.trace.size(); ++k) {
        const auto& step = result.trace[k];
        out += "step " + std::to_string(k + 1) + ": replace (" +
               std::to_string(step.first) + "," + std::to_string(step.second) +
               ") -> " + std::to_string(step.fresh) + ", length " +
               std::to_string(step.resulting_length) + "\n";
    }
    return out;
}

} // namespace seqcc
