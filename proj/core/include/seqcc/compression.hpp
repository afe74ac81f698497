#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "seqcc/symbolic.hpp"

namespace seqcc {

/// One pair-substitution pass: `first second` -> `fresh`.
struct PairSubstitution {
    Symbol first = 0;
    Symbol second = 0;
    Symbol fresh = 0;
    std::size_t resulting_length = 0;
};

/// Outcome of a full effort-to-compress run.
///
/// `iterations` is the number of pair-substitution passes needed to reduce
/// the input to a constant sequence; `normalized` divides by L-1 (0 for a
/// length-1 input), so it always lies in [0, 1].
struct EtcResult {
    std::uint64_t iterations = 0;
    std::size_t input_length = 0;
    double normalized = 0.0;
    std::vector<PairSubstitution> trace;
};

// Pair-substitution conventions, fixed so that runs are fully deterministic:
//  - adjacent pairs are counted by a greedy left-to-right non-overlapping
//    scan per pair type (a run of m equal symbols holds floor(m/2)
//    occurrences of its self-pair);
//  - among equally frequent pairs the one whose first occurrence is leftmost
//    wins;
//  - every greedily matched occurrence is replaced in one pass;
//  - the fresh symbol is the current alphabet size, which then grows by one.

/// Apply one substitution pass. Requires length >= 2; a constant input of
/// length >= 2 is still reducible (its self-pair is replaced).
std::pair<SymbolSequence, PairSubstitution> nsrps_step(const SymbolSequence& x);

/// Iterate nsrps_step until the sequence has a single distinct symbol.
/// A constant input needs no work and reports 0 iterations.
EtcResult etc(const SymbolSequence& x);

/// etc applied to the composite sequence to_joint_symbols(x, y).
EtcResult etc2d(const SymbolSequence& x, const SymbolSequence& y);

/// metc(x, y) = etc(x).normalized + etc(y).normalized - etc2d(x, y).normalized.
/// All three terms share the L-1 denominator since the inputs are equal
/// length. Exactly symmetric: the two composite orders are bijective
/// relabelings of each other and pair substitution only sees the equality
/// pattern.
double metc(const SymbolSequence& x, const SymbolSequence& y);

/// One line per iteration: "step k: replace (a,b) -> c, length m".
std::string format_trace(const EtcResult& result);

namespace detail {
struct PairTally {
    std::uint64_t count = 0;
    std::size_t first_index = 0;
};
/// Greedy non-overlapping adjacent-pair tallies with first-occurrence index.
std::map<std::pair<Symbol, Symbol>, PairTally>
count_adjacent_pairs(std::span<const Symbol> sequence);
} // namespace detail

} // namespace seqcc
