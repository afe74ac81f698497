#include "seqcc/threeneuron.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "seqcc/compression.hpp"
#include "seqcc/transfer_entropy.hpp"

namespace seqcc {

namespace {

constexpr double kMiTarget = 0.9183;
constexpr double kMiTol = 5e-5;
constexpr double kRhoTol = 1e-9;
constexpr double kExactTol = 1e-12;
constexpr double kMetcTol = 5e-5;
constexpr std::array<double, 3> kMetcTargets = {0.1277, 0.1277, 0.2766};
constexpr std::array<double, 3> kMetcPrimedTargets = {0.0, 0.0, 0.0968};

std::vector<double> labels_of(const std::vector<int>& xs) {
    return std::vector<double>(xs.begin(), xs.end());
}

} // namespace

std::array<int, 12> rotate_block(const std::array<int, 12>& block, int k) {
    std::array<int, 12> out{};
    for (int i = 0; i < 12; ++i) {
        out[static_cast<std::size_t>(i)] =
            block[static_cast<std::size_t>((i + k) % 12)];
    }
    return out;
}

NeuronSystem build_system(const std::array<int, 12>& a,
                          const std::array<int, 12>& b,
                          const std::array<int, 12>& c, int shift_k) {
    for (const auto& block : {a, b, c}) {
        for (int v : block) {
            if (v != -1 && v != 0 && v != 1) {
                throw std::invalid_argument(
                    "build_system: block values must be in {-1, 0, +1}");
            }
        }
    }
    if (shift_k < 1 || shift_k > 11) {
        throw std::invalid_argument("build_system: shift_k must be in 1..11");
    }
    for (std::size_t i = 0; i < 12; ++i) {
        if ((a[i] == 0) != (b[i] == 0) || (b[i] == 0) != (c[i] == 0)) {
            throw std::invalid_argument(
                "build_system: OFF (zero) positions differ between blocks");
        }
    }
    if (c != rotate_block(b, shift_k)) {
        throw std::invalid_argument(
            "build_system: C is not the cyclic shift of B by shift_k");
    }
    for (std::size_t i = 0; i < 12; ++i) {
        if ((b[i] == 0) !=
            (b[static_cast<std::size_t>((static_cast<int>(i) + shift_k) % 12)] == 0)) {
            throw std::invalid_argument(
                "build_system: zero set of B is not invariant under shift_k");
        }
    }

    NeuronSystem sys;
    sys.a = a;
    sys.b = b;
    sys.c = c;
    sys.shift_k = shift_k;

    sys.x1.reserve(48);
    sys.x2.reserve(48);
    sys.x3.reserve(48);
    for (int rep = 0; rep < 4; ++rep) {
        const auto& x2_block = (rep % 2 == 0) ? b : c;
        const auto& x3_block = (rep % 2 == 0) ? c : b;
        for (std::size_t i = 0; i < 12; ++i) {
            sys.x1.push_back(a[i]);
            sys.x2.push_back(x2_block[i]);
            sys.x3.push_back(x3_block[i]);
        }
    }

    for (std::size_t i = 0; i < 48; ++i) {
        if (sys.x1[i] == 0) continue;
        sys.x1p.push_back(sys.x1[i]);
        sys.x2p.push_back(sys.x2[i]);
        sys.x3p.push_back(sys.x3[i]);
    }
    if (sys.x1p.empty()) {
        throw std::invalid_argument("build_system: every instant is OFF");
    }

    const std::array<std::vector<double>, 3> cols = {
        labels_of(sys.x1), labels_of(sys.x2), labels_of(sys.x3)};
    sys.encoding = SymbolEncoding::from_columns(cols);
    sys.s1 = sys.encoding.encode(cols[0]);
    sys.s2 = sys.encoding.encode(cols[1]);
    sys.s3 = sys.encoding.encode(cols[2]);

    const std::array<std::vector<double>, 3> pcols = {
        labels_of(sys.x1p), labels_of(sys.x2p), labels_of(sys.x3p)};
    sys.primed_encoding = SymbolEncoding::from_columns(pcols);
    sys.s1p = sys.primed_encoding.encode(pcols[0]);
    sys.s2p = sys.primed_encoding.encode(pcols[1]);
    sys.s3p = sys.primed_encoding.encode(pcols[2]);

    return sys;
}

NeuronSystem canonical_system() {
    const std::array<int, 12> a = {0, 1, -1, 0, 1, 1, 0, 1, -1, 0, -1, -1};
    const std::array<int, 12> b = {0, 1, 1, 0, 1, 1, 0, -1, -1, 0, -1, -1};
    return build_system(a, b, rotate_block(b, 3), 3);
}

NeuronSystem system_from_series(const std::vector<int>& x1,
                                const std::vector<int>& x2,
                                const std::vector<int>& x3) {
    if (x1.size() != 48 || x2.size() != 48 || x3.size() != 48) {
        throw std::invalid_argument("system_from_series: series must have length 48");
    }
    std::array<int, 12> a{}, b{}, c{};
    std::copy_n(x1.begin(), 12, a.begin());
    std::copy_n(x2.begin(), 12, b.begin());
    std::copy_n(x2.begin() + 12, 12, c.begin());

    for (std::size_t i = 0; i < 48; ++i) {
        if (x1[i] != a[i % 12]) {
            throw std::invalid_argument(
                "system_from_series: X1 is not four repeats of its first block");
        }
        const auto& x2_block = ((i / 12) % 2 == 0) ? b : c;
        const auto& x3_block = ((i / 12) % 2 == 0) ? c : b;
        if (x2[i] != x2_block[i % 12]) {
            throw std::invalid_argument("system_from_series: X2 is not [B C B C]");
        }
        if (x3[i] != x3_block[i % 12]) {
            throw std::invalid_argument("system_from_series: X3 is not [C B C B]");
        }
    }

    int shift_k = 0;
    for (int k = 1; k <= 11; ++k) {
        if (c == rotate_block(b, k)) {
            shift_k = k;
            break;
        }
    }
    if (shift_k == 0) {
        throw std::invalid_argument(
            "system_from_series: C is not a cyclic permutation of B");
    }
    return build_system(a, b, c, shift_k);
}

double structural_mi_bits() {
    return (1.0 / 3.0) * std::log2(3.0) + (2.0 / 3.0) * std::log2(1.5);
}

const ScoredCandidate& SearchResult::selected() const {
    if (!exact.empty()) return exact.front();
    if (!qualified.empty()) return qualified.front();
    throw std::logic_error("SearchResult: no candidate survived the search");
}

namespace {

struct CandidateMeasures {
    std::array<double, 3> rho{}, rho_p{};
    std::array<double, 3> mi{}, mi_p{};
    std::array<double, 3> metc_v{}, metc_p{};
    double h2p = 0.0, h3p = 0.0;
};

CandidateMeasures measure_candidate(const NeuronSystem& sys) {
    CandidateMeasures m;
    const std::array<const std::vector<int>*, 3> lab = {&sys.x1, &sys.x2, &sys.x3};
    const std::array<const std::vector<int>*, 3> lab_p = {&sys.x1p, &sys.x2p,
                                                          &sys.x3p};
    const std::array<const SymbolSequence*, 3> seq = {&sys.s1, &sys.s2, &sys.s3};
    const std::array<const SymbolSequence*, 3> seq_p = {&sys.s1p, &sys.s2p,
                                                        &sys.s3p};
    const std::array<std::pair<int, int>, 3> pairs = {{{0, 1}, {0, 2}, {1, 2}}};
    for (std::size_t p = 0; p < 3; ++p) {
        const auto [i, j] = pairs[p];
        const auto di = labels_of(*lab[i]);
        const auto dj = labels_of(*lab[j]);
        m.rho[p] = pearson_correlation(std::span<const double>(di),
                                       std::span<const double>(dj));
        const auto dip = labels_of(*lab_p[i]);
        const auto djp = labels_of(*lab_p[j]);
        m.rho_p[p] = pearson_correlation(std::span<const double>(dip),
                                         std::span<const double>(djp));
        m.mi[p] = mutual_information(*seq[i], *seq[j]);
        m.mi_p[p] = mutual_information(*seq_p[i], *seq_p[j]);
        m.metc_v[p] = metc(*seq[i], *seq[j]);
        m.metc_p[p] = metc(*seq_p[i], *seq_p[j]);
    }
    m.h2p = entropy(sys.s2p);
    m.h3p = entropy(sys.s3p);
    return m;
}

bool meets_info_targets(const CandidateMeasures& m) {
    for (std::size_t p = 0; p < 3; ++p) {
        if (std::abs(m.rho[p]) > kRhoTol) return false;
        if (std::abs(m.rho_p[p]) > kRhoTol) return false;
        if (std::abs(m.mi[p] - kMiTarget) > kMiTol) return false;
        if (std::abs(m.mi_p[p]) > kExactTol) return false;
    }
    return std::abs(m.h2p - 1.0) <= kExactTol && std::abs(m.h3p - 1.0) <= kExactTol;
}

int count_table_cells(const CandidateMeasures& m) {
    int cells = 0;
    for (std::size_t p = 0; p < 3; ++p) {
        if (std::abs(m.rho[p]) <= kRhoTol) ++cells;
        if (std::abs(m.rho_p[p]) <= kRhoTol) ++cells;
        if (std::abs(m.mi[p] - kMiTarget) <= kMiTol) ++cells;
        if (std::abs(m.mi_p[p]) <= kExactTol) ++cells;
        if (std::abs(m.metc_v[p] - kMetcTargets[p]) <= kMetcTol) ++cells;
        if (std::abs(m.metc_p[p] - kMetcPrimedTargets[p]) <= kMetcTol) ++cells;
    }
    return cells;
}

bool metc_all_exact(const CandidateMeasures& m) {
    for (std::size_t p = 0; p < 3; ++p) {
        if (std::abs(m.metc_v[p] - kMetcTargets[p]) > kMetcTol) return false;
        if (std::abs(m.metc_p[p] - kMetcPrimedTargets[p]) > kMetcTol) return false;
    }
    return true;
}

bool metc_ordering_ok(const CandidateMeasures& m) {
    return m.metc_v[2] >= 2.0 * m.metc_v[0] - kExactTol &&
           m.metc_v[2] >= 2.0 * m.metc_v[1] - kExactTol &&
           m.metc_v[0] > kExactTol && m.metc_v[1] > kExactTol &&
           m.metc_p[2] > kExactTol && std::abs(m.metc_p[0]) <= kExactTol &&
           std::abs(m.metc_p[1]) <= kExactTol;
}

bool acf_peak_at_12(const NeuronSystem& sys) {
    const auto d1 = labels_of(sys.x1);
    const AcfResult r = acf(std::span<const double>(d1), 20);
    for (std::size_t lag = 1; lag <= 20; ++lag) {
        if (lag != 12 && r.values[12] <= r.values[lag] + 1e-12) {
            return false;
        }
    }
    return true;
}

double te12_nats(const SymbolSequence& src, const SymbolSequence& tgt) {
    TeConfig cfg;
    cfg.source_lags = 12;
    cfg.target_lags = 12;
    cfg.log_base = LogBase::Natural;
    return transfer_entropy(src, tgt, cfg).value;
}

bool te_fallback_ok(const NeuronSystem& sys) {
    const double te23 = te12_nats(sys.s2, sys.s3);
    const double te32 = te12_nats(sys.s3, sys.s2);
    if (std::abs(te23 - te32) > 1e-9 || te23 <= 1e-9) return false;
    const double te23p = te12_nats(sys.s2p, sys.s3p);
    const double te32p = te12_nats(sys.s3p, sys.s2p);
    return std::abs(te23p - te32p) <= 1e-9;
}

/// Orbit partition of 0..11 under i -> i+k (mod 12).
std::vector<std::uint32_t> orbit_masks(int k) {
    std::vector<std::uint32_t> orbits;
    std::uint32_t seen = 0;
    for (int start = 0; start < 12; ++start) {
        if (seen & (1u << start)) continue;
        std::uint32_t mask = 0;
        int i = start;
        while (!(mask & (1u << i))) {
            mask |= 1u << i;
            i = (i + k) % 12;
        }
        seen |= mask;
        orbits.push_back(mask);
    }
    return orbits;
}

bool joint_sign_balance(const std::vector<int>& u, const std::vector<int>& v) {
    int pp = 0, pm = 0, mp = 0, mm = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0 || v[i] == 0) continue;
        if (u[i] > 0) {
            (v[i] > 0 ? pp : pm) += 1;
        } else {
            (v[i] > 0 ? mp : mm) += 1;
        }
    }
    return pp == pm && pm == mp && mp == mm;
}

} // namespace

SearchResult reconstruct_patterns() {
    SearchResult result;

    for (int k = 1; k <= 11; ++k) {
        const auto orbits = orbit_masks(k);
        const std::uint32_t subset_count = 1u << orbits.size();
        for (std::uint32_t subset = 1; subset < subset_count; ++subset) {
            std::uint32_t pmask = 0;
            for (std::size_t o = 0; o < orbits.size(); ++o) {
                if (subset & (1u << o)) pmask |= orbits[o];
            }
            const int zero_count = std::popcount(pmask);
            // The entropy and MI targets force the zero fraction to 1/3 or
            // 2/3 of each block, so only |P| in {4, 8} can survive.
            if (zero_count != 4 && zero_count != 8) continue;

            std::vector<int> nonzero;
            for (int i = 0; i < 12; ++i) {
                if (!(pmask & (1u << i))) nonzero.push_back(i);
            }
            const int free_n = static_cast<int>(nonzero.size());
            const int half = free_n / 2;
            const std::uint32_t sign_count = 1u << free_n;

            for (std::uint32_t amask = 0; amask < sign_count; ++amask) {
                if (std::popcount(amask) != half) continue;
                std::array<int, 12> a{};
                for (int j = 0; j < free_n; ++j) {
                    a[static_cast<std::size_t>(nonzero[static_cast<std::size_t>(j)])] =
                        (amask & (1u << j)) ? 1 : -1;
                }
                for (std::uint32_t bmask = 0; bmask < sign_count; ++bmask) {
                    if (std::popcount(bmask) != half) continue;
                    std::array<int, 12> b{};
                    for (int j = 0; j < free_n; ++j) {
                        b[static_cast<std::size_t>(
                            nonzero[static_cast<std::size_t>(j)])] =
                            (bmask & (1u << j)) ? 1 : -1;
                    }
                    ++result.enumerated;

                    const std::array<int, 12> c = rotate_block(b, k);
                    std::vector<int> x1, x2, x3;
                    x1.reserve(48);
                    x2.reserve(48);
                    x3.reserve(48);
                    for (int rep = 0; rep < 4; ++rep) {
                        const auto& x2_block = (rep % 2 == 0) ? b : c;
                        const auto& x3_block = (rep % 2 == 0) ? c : b;
                        for (std::size_t i = 0; i < 12; ++i) {
                            x1.push_back(a[i]);
                            x2.push_back(x2_block[i]);
                            x3.push_back(x3_block[i]);
                        }
                    }
                    // Integer prefilter equivalent to the MI / rho / primed
                    // targets: every pairwise sign joint must be uniform.
                    if (!joint_sign_balance(x1, x2) || !joint_sign_balance(x1, x3) ||
                        !joint_sign_balance(x2, x3)) {
                        continue;
                    }

                    NeuronSystem sys = build_system(a, b, c, k);
                    const CandidateMeasures m = measure_candidate(sys);
                    if (!meets_info_targets(m)) continue;
                    ++result.retained;

                    CandidateScore score;
                    score.table_cells_matched = count_table_cells(m);
                    score.metc_all_exact = metc_all_exact(m);
                    score.metc_ordering_ok = metc_ordering_ok(m);
                    score.acf_lag12_ok = acf_peak_at_12(sys);
                    if ((score.metc_ordering_ok && score.acf_lag12_ok) ||
                        score.metc_all_exact) {
                        score.te_fallback_ok = te_fallback_ok(sys);
                    }

                    const bool exact =
                        score.metc_all_exact && score.table_cells_matched == 18;
                    const bool qualified = score.metc_ordering_ok &&
                                           score.te_fallback_ok &&
                                           score.acf_lag12_ok;
                    if (!exact && !qualified) continue;

                    ScoredCandidate cand;
                    cand.system = std::move(sys);
                    cand.score = score;
                    cand.key = {static_cast<std::uint64_t>(k), pmask, amask, bmask};
                    if (exact) {
                        result.exact.push_back(cand);
                    }
                    if (qualified) {
                        result.qualified.push_back(std::move(cand));
                    }
                }
            }
        }
    }

    const auto rank = [](const ScoredCandidate& lhs, const ScoredCandidate& rhs) {
        if (lhs.score.table_cells_matched != rhs.score.table_cells_matched) {
            return lhs.score.table_cells_matched > rhs.score.table_cells_matched;
        }
        return lhs.key < rhs.key;
    };
    std::sort(result.exact.begin(), result.exact.end(), rank);
    std::sort(result.qualified.begin(), result.qualified.end(), rank);
    return result;
}

namespace {

ReportCell make_cell(std::string name, double target, double actual,
                     double tolerance, std::string note = "") {
    ReportCell cell;
    cell.name = std::move(name);
    cell.target = target;
    cell.actual = actual;
    cell.tolerance = tolerance;
    cell.pass = std::abs(actual - target) <= tolerance;
    cell.note = std::move(note);
    return cell;
}

ReportCell one_sided_cell(std::string name, double actual, double margin,
                          std::string note) {
    ReportCell cell;
    cell.name = std::move(name);
    cell.target = 0.0;
    cell.actual = actual;
    cell.tolerance = margin;
    cell.pass = actual > margin;
    cell.note = std::move(note);
    return cell;
}

} // namespace

ReproductionReport run_report(const NeuronSystem& sys, const ReportConfig& config) {
    ReproductionReport report;
    const CandidateMeasures m = measure_candidate(sys);
    const std::array<std::string, 3> pair_names = {"X1,X2", "X1,X3", "X2,X3"};
    const std::array<std::string, 3> primed_names = {"X1',X2'", "X1',X3'",
                                                     "X2',X3'"};

    for (std::size_t p = 0; p < 3; ++p) {
        report.cells.push_back(make_cell("rho(" + pair_names[p] + ")", 0.0,
                                         m.rho[p], kRhoTol));
        report.cells.push_back(make_cell("rho(" + primed_names[p] + ")", 0.0,
                                         m.rho_p[p], kRhoTol));
        report.cells.push_back(make_cell("mi(" + pair_names[p] + ")", kMiTarget,
                                         m.mi[p], kMiTol));
        report.cells.push_back(make_cell("mi_closed_form(" + pair_names[p] + ")",
                                         structural_mi_bits(), m.mi[p], kExactTol));
        report.cells.push_back(make_cell("mi(" + primed_names[p] + ")", 0.0,
                                         m.mi_p[p], kExactTol));
    }
    report.cells.push_back(make_cell("H(X2')", 1.0, m.h2p, kExactTol));
    report.cells.push_back(make_cell("H(X3')", 1.0, m.h3p, kExactTol));

    // METC: exact table branch when all six cells match, otherwise the
    // ordering branch gates and the table comparisons become informational.
    report.metc_branch = metc_all_exact(m) ? "exact" : "ordering";
    if (report.metc_branch == "exact") {
        for (std::size_t p = 0; p < 3; ++p) {
            report.cells.push_back(make_cell("metc(" + pair_names[p] + ")",
                                             kMetcTargets[p], m.metc_v[p],
                                             kMetcTol));
            report.cells.push_back(make_cell("metc(" + primed_names[p] + ")",
                                             kMetcPrimedTargets[p], m.metc_p[p],
                                             kMetcTol));
        }
    } else {
        report.cells.push_back(one_sided_cell(
            "metc_order(X2,X3 >= 2*X1,X2)", m.metc_v[2] - 2.0 * m.metc_v[0],
            -kExactTol, "one-sided"));
        report.cells.push_back(one_sided_cell(
            "metc_order(X2,X3 >= 2*X1,X3)", m.metc_v[2] - 2.0 * m.metc_v[1],
            -kExactTol, "one-sided"));
        report.cells.push_back(one_sided_cell("metc_pos(X1,X2)", m.metc_v[0],
                                              kExactTol, "one-sided"));
        report.cells.push_back(one_sided_cell("metc_pos(X1,X3)", m.metc_v[1],
                                              kExactTol, "one-sided"));
        report.cells.push_back(one_sided_cell("metc_pos(X2',X3')", m.metc_p[2],
                                              kExactTol, "one-sided"));
        report.cells.push_back(
            make_cell("metc_zero(X1',X2')", 0.0, m.metc_p[0], kExactTol));
        report.cells.push_back(
            make_cell("metc_zero(X1',X3')", 0.0, m.metc_p[1], kExactTol));
        for (std::size_t p = 0; p < 3; ++p) {
            report.informational.push_back(
                make_cell("metc(" + pair_names[p] + ")", kMetcTargets[p],
                          m.metc_v[p], kMetcTol, "nearest achieved"));
            report.informational.push_back(
                make_cell("metc(" + primed_names[p] + ")", kMetcPrimedTargets[p],
                          m.metc_p[p], kMetcTol, "nearest achieved"));
        }
    }

    // Lag-12 transfer entropies with surrogate screening, natural log.
    TeConfig te_cfg;
    te_cfg.source_lags = 12;
    te_cfg.target_lags = 12;
    te_cfg.log_base = LogBase::Natural;
    te_cfg.surrogate_count = config.surrogate_count;
    te_cfg.significance_level = config.significance_level;
    te_cfg.rng_seed = config.rng_seed;

    struct DirectedPair {
        std::string name;
        const SymbolSequence* src;
        const SymbolSequence* tgt;
        bool involves_x1;
    };
    const std::vector<DirectedPair> directed = {
        {"X1->X2", &sys.s1, &sys.s2, true},
        {"X2->X1", &sys.s2, &sys.s1, true},
        {"X1->X3", &sys.s1, &sys.s3, true},
        {"X3->X1", &sys.s3, &sys.s1, true},
        {"X2->X3", &sys.s2, &sys.s3, false},
        {"X3->X2", &sys.s3, &sys.s2, false},
        {"X1'->X2'", &sys.s1p, &sys.s2p, true},
        {"X2'->X1'", &sys.s2p, &sys.s1p, true},
        {"X1'->X3'", &sys.s1p, &sys.s3p, true},
        {"X3'->X1'", &sys.s3p, &sys.s1p, true},
        {"X2'->X3'", &sys.s2p, &sys.s3p, false},
        {"X3'->X2'", &sys.s3p, &sys.s2p, false},
    };

    std::map<std::string, TeResult> te;
    for (const auto& pair : directed) {
        const TeResult r = surrogate_test(*pair.src, *pair.tgt, te_cfg);
        ReproductionReport::TeEntry entry;
        entry.pair = pair.name;
        entry.nats = r.value;
        entry.bits = r.value / std::log(2.0);
        entry.after_test_nats = r.surrogate->value_after_test;
        entry.surrogate_passed = r.surrogate->passed;
        report.te_entries.push_back(entry);
        te.emplace(pair.name, r);
    }

    const double te23 = te.at("X2->X3").value;
    const double te32 = te.at("X3->X2").value;
    const double te23p = te.at("X2'->X3'").value;
    const double te32p = te.at("X3'->X2'").value;
    const double ln3 = std::log(3.0);
    const double ln2 = std::log(2.0);

    const bool te_exact = std::abs(te23 - ln3) <= 1e-3 &&
                          std::abs(te32 - ln3) <= 1e-3 &&
                          std::abs(te23p - ln2) <= 1e-3 &&
                          std::abs(te32p - ln2) <= 1e-3;
    report.te_branch = te_exact ? "exact" : "fallback";

    if (te_exact) {
        report.cells.push_back(make_cell("te(X2->X3)", ln3, te23, 1e-3));
        report.cells.push_back(make_cell("te(X3->X2)", ln3, te32, 1e-3));
        report.cells.push_back(make_cell("te(X2'->X3')", ln2, te23p, 1e-3));
        report.cells.push_back(make_cell("te(X3'->X2')", ln2, te32p, 1e-3));
    } else {
        report.cells.push_back(
            make_cell("te_equal(X2<->X3)", 0.0, std::abs(te23 - te32), 1e-9));
        report.cells.push_back(
            make_cell("te_equal(X2'<->X3')", 0.0, std::abs(te23p - te32p), 1e-9));
        double max_x1_after = 0.0;
        for (const auto& pair : directed) {
            if (pair.involves_x1) {
                max_x1_after = std::max(
                    max_x1_after, te.at(pair.name).surrogate->value_after_test);
            }
        }
        report.cells.push_back(one_sided_cell(
            "te_exceeds_x1(X2->X3)", te23 - max_x1_after, 1e-9,
            "one-sided: raw TE(X2->X3) vs X1-involving TE after surrogates"));
        report.informational.push_back(
            make_cell("te(X2->X3)", ln3, te23, 1e-3, "nearest achieved"));
        report.informational.push_back(
            make_cell("te(X2'->X3')", ln2, te23p, 1e-3, "nearest achieved"));
    }
    for (const auto& pair : directed) {
        if (!pair.involves_x1) continue;
        report.cells.push_back(
            make_cell("te_after_surrogate(" + pair.name + ")", 0.0,
                      te.at(pair.name).surrogate->value_after_test, kExactTol));
    }

    // ACF peak of X1 over lags 1..20.
    const auto d1 = labels_of(sys.x1);
    const AcfResult acf_x1 = acf(std::span<const double>(d1), 20);
    report.cells.push_back(make_cell(
        "acf_argmax(X1)", 12.0, static_cast<double>(acf_x1.argmax_lag()), 0.0));

    // Doubling every pattern repetition must leave all first-order MI cells
    // unchanged (frequencies are invariant under whole-pattern repetition).
    {
        std::vector<int> x1d = sys.x1, x2d = sys.x2, x3d = sys.x3;
        x1d.insert(x1d.end(), sys.x1.begin(), sys.x1.end());
        x2d.insert(x2d.end(), sys.x2.begin(), sys.x2.end());
        x3d.insert(x3d.end(), sys.x3.begin(), sys.x3.end());
        const auto e1 = sys.encoding.encode(labels_of(x1d));
        const auto e2 = sys.encoding.encode(labels_of(x2d));
        const auto e3 = sys.encoding.encode(labels_of(x3d));
        const std::array<std::pair<const SymbolSequence*, const SymbolSequence*>,
                         3>
            dp = {{{&e1, &e2}, {&e1, &e3}, {&e2, &e3}}};
        for (std::size_t p = 0; p < 3; ++p) {
            const double mid = mutual_information(*dp[p].first, *dp[p].second);
            report.cells.push_back(make_cell("mi_doubled(" + pair_names[p] + ")",
                                             m.mi[p], mid, kExactTol));
        }
        std::vector<Symbol> p1, p2, p3;
        const Symbol zero_sym = sys.encoding.encode_value(0.0);
        for (std::size_t i = 0; i < e1.size(); ++i) {
            if (e1[i] == zero_sym) continue;
            p1.push_back(e1[i]);
            p2.push_back(e2[i]);
            p3.push_back(e3[i]);
        }
        const SymbolSequence f1(std::move(p1), 3), f2(std::move(p2), 3),
            f3(std::move(p3), 3);
        const std::array<std::pair<const SymbolSequence*, const SymbolSequence*>,
                         3>
            dpp = {{{&f1, &f2}, {&f1, &f3}, {&f2, &f3}}};
        for (std::size_t p = 0; p < 3; ++p) {
            const double mid = mutual_information(*dpp[p].first, *dpp[p].second);
            report.cells.push_back(make_cell(
                "mi_doubled(" + primed_names[p] + ")", m.mi_p[p], mid, kExactTol));
        }
    }

    report.all_pass = std::all_of(report.cells.begin(), report.cells.end(),
                                  [](const ReportCell& c) { return c.pass; });
    return report;
}

} // namespace seqcc
