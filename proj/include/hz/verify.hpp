// verify.hpp — sweep drivers that pit every closed form against brute force
// on the explicitly composed graph, and the CSV/ledger emission they feed.
#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hz/closed_form.hpp"
#include "hz/compose.hpp"
#include "hz/families.hpp"

namespace hz {

// One sweep point. `printed`/`corrected` hold the two closed-form routes for
// the structure; `example_formula` holds the per-family parametric value when
// one exists. `printed_variant` names which printed form the row carries
// (used by the discrepancy ledger).
struct VerificationRecord {
    std::string structure;
    std::string params;
    std::int64_t oracle = 0;
    std::optional<std::int64_t> printed;
    std::optional<std::int64_t> corrected;
    std::optional<std::int64_t> example_formula;
    bool printed_matches = true;
    bool corrected_matches = true;
    std::optional<bool> formula_matches;
    std::string printed_variant;
};

struct SweepOptions {
    bool include_out_of_range = false;
    std::uint64_t seed = 1;
};

namespace detail {

inline std::string opt_str(const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) : std::string();
}

inline std::string bool_str(bool b) { return b ? "true" : "false"; }

inline VerificationRecord make_record(std::string structure, std::string params,
                                      std::int64_t oracle, std::int64_t printed,
                                      std::string printed_variant, std::int64_t corrected,
                                      std::optional<std::int64_t> formula) {
    VerificationRecord r;
    r.structure = std::move(structure);
    r.params = std::move(params);
    r.oracle = oracle;
    r.printed = printed;
    r.corrected = corrected;
    r.example_formula = formula;
    r.printed_matches = printed == oracle;
    r.corrected_matches = corrected == oracle;
    if (formula) r.formula_matches = *formula == oracle;
    r.printed_variant = std::move(printed_variant);
    return r;
}

} // namespace detail

// --- family sweeps ---------------------------------------------------------
// Each point rebuilds the composite, brute-forces HM on it, and evaluates the
// closed forms from component summaries only. Points outside a formula's
// established validity range are skipped unless include_out_of_range is set.

inline std::vector<VerificationRecord> sweep_comb_t(int d_lo, int d_hi, int n_lo, int n_hi,
                                                    const SweepOptions& opt = {}) {
    std::vector<VerificationRecord> out;
    for (int d = d_lo; d <= d_hi; ++d)
        for (int n = n_lo; n <= n_hi; ++n) {
            const FormulaValue fv = comb_t_formula(d, n);
            if (!fv.in_validity_range && !opt.include_out_of_range) continue;
            const auto composed = comb_t(d, n);
            const std::vector<ComponentSummary> s(static_cast<std::size_t>(d),
                                                  summarize({cycle(n), 0}));
            out.push_back(detail::make_record(
                "comb_t", "d=" + std::to_string(d) + ";n=" + std::to_string(n),
                hyper_zagreb(composed.graph), hm_b1_printed(s), "b1_printed",
                hm_b1_corrected(s), fv.value));
        }
    return out;
}

inline std::vector<VerificationRecord> sweep_bridge_b(int d_lo, int d_hi,
                                                      const SweepOptions& opt = {}) {
    std::vector<VerificationRecord> out;
    for (int d = d_lo; d <= d_hi; ++d) {
        const FormulaValue fv = bridge_b_formula(d);
        if (!fv.in_validity_range && !opt.include_out_of_range) continue;
        const auto composed = bridge_b_family(d);
        const std::vector<ComponentSummary> s(static_cast<std::size_t>(d),
                                              summarize({path(3), 1}));
        out.push_back(detail::make_record("bridge_b", "d=" + std::to_string(d),
                                          hyper_zagreb(composed.graph), hm_b1_printed(s),
                                          "b1_printed", hm_b1_corrected(s), fv.value));
    }
    return out;
}

inline std::vector<VerificationRecord> sweep_comb_a(int d_lo, int d_hi, int m_lo, int m_hi,
                                                    const SweepOptions& opt = {}) {
    std::vector<VerificationRecord> out;
    for (int d = d_lo; d <= d_hi; ++d)
        for (int m = m_lo; m <= m_hi; ++m) {
            const FormulaValue fv = comb_a_formula(d, m);
            if (!fv.in_validity_range && !opt.include_out_of_range) continue;
            const auto composed = comb_a(d, m);
            const std::vector<ComponentSummary> s(static_cast<std::size_t>(d),
                                                  summarize({path(m), 0}));
            out.push_back(detail::make_record(
                "comb_a", "d=" + std::to_string(d) + ";m=" + std::to_string(m),
                hyper_zagreb(composed.graph), hm_b1_printed(s), "b1_printed",
                hm_b1_corrected(s), fv.value));
        }
    return out;
}

inline std::vector<VerificationRecord> sweep_van_hove(int n_lo, int n_hi,
                                                      const SweepOptions& opt = {}) {
    std::vector<VerificationRecord> out;
    for (int n = n_lo; n <= n_hi; ++n) {
        const FormulaValue fv = van_hove_formula(n);
        if (!fv.in_validity_range && !opt.include_out_of_range) continue;
        const auto composed = van_hove(n);
        std::vector<ComponentSummary> s;
        for (int i = 1; i <= n; ++i) s.push_back(summarize({path(i), 0}));
        for (int i = n - 1; i >= 1; --i) s.push_back(summarize({path(i), 0}));
        if (s.size() < 2) continue;  // n = 1 composes a single component; no link forms apply
        out.push_back(detail::make_record("van_hove", "n=" + std::to_string(n),
                                          hyper_zagreb(composed.graph), hm_b1_printed(s),
                                          "b1_printed", hm_b1_corrected(s), fv.value));
    }
    return out;
}

// meta/para rows carry the uniform two-anchor closed forms; the printed
// variant disagrees with brute force at every h >= 2 and those rows are the
// core of the discrepancy ledger. ortho rows are single-anchor bridge rows.
inline std::vector<VerificationRecord> sweep_polyphenyl(int h_lo, int h_hi,
                                                        std::optional<PolyKind> only,
                                                        const SweepOptions& opt = {}) {
    std::vector<VerificationRecord> out;
    for (PolyKind kind : {PolyKind::ortho, PolyKind::meta, PolyKind::para}) {
        if (only && kind != *only) continue;
        for (int h = h_lo; h <= h_hi; ++h) {
            const FormulaValue fv = polyphenyl_formula(h, kind);
            if (!fv.in_validity_range && !opt.include_out_of_range) continue;
            const auto composed = polyphenyl(h, kind);
            const std::string structure = std::string("poly_") + poly_kind_name(kind);
            const std::string params = "h=" + std::to_string(h);
            const std::int64_t oracle = hyper_zagreb(composed.graph);
            if (kind == PolyKind::ortho) {
                if (h < 2) continue;  // single ring: no link forms apply
                const std::vector<ComponentSummary> s(static_cast<std::size_t>(h),
                                                      summarize({cycle(6), 0}));
                out.push_back(detail::make_record(structure, params, oracle, hm_b1_printed(s),
                                                  "b1_printed", hm_b1_corrected(s), fv.value));
            } else {
                const ComponentSummary s =
                    summarize({cycle(6), 0, kind == PolyKind::meta ? 2 : 3});
                out.push_back(detail::make_record(
                    structure, params, oracle, hm_b2_uniform(s, h, FormulaVariant::printed),
                    "b2_uniform_printed", hm_b2_uniform(s, h, FormulaVariant::corrected),
                    fv.value));
            }
        }
    }
    return out;
}

inline std::vector<VerificationRecord> sweep_spiro(int n_lo, int n_hi, int d_lo, int d_hi,
                                                   std::optional<std::pair<int, int>> kl,
                                                   const SweepOptions& opt = {}) {
    std::vector<VerificationRecord> out;
    for (int n = n_lo; n <= n_hi; ++n) {
        std::vector<std::pair<int, int>> positions;
        if (kl) {
            positions.push_back(*kl);
        } else {
            for (int k = 0; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    const int gap = (l - k) % n;
                    if (gap != 1 && gap != n - 1) positions.emplace_back(k, l);
                }
        }
        for (const auto& [k, l] : positions)
            for (int d = d_lo; d <= d_hi; ++d) {
                const FormulaValue fv = spiro_formula(n, d);
                if (!fv.in_validity_range && !opt.include_out_of_range) continue;
                const auto composed = spiro(n, k, l, d);
                const std::vector<ComponentSummary> s(static_cast<std::size_t>(d),
                                                      summarize({cycle(n), k, l}));
                out.push_back(detail::make_record(
                    "spiro",
                    "n=" + std::to_string(n) + ";k=" + std::to_string(k) + ";l=" +
                        std::to_string(l) + ";d=" + std::to_string(d),
                    hyper_zagreb(composed.graph), hm_chain_printed(s), "chain_printed",
                    hm_chain_corrected(s), fv.value));
            }
    }
    return out;
}

// --- randomized structure sweeps --------------------------------------------
// Non-uniform component lists drawn from seeded random connected graphs.
// trials rows total; d cycles over [d_lo, d_hi].

namespace detail {

inline AnchoredComponent random_component(SplitMix64& rng, bool two_anchors) {
    const int n = 3 + static_cast<int>(rng.next_below(7));  // 3..9
    const std::int64_t capacity = static_cast<std::int64_t>(n) * (n - 1) / 2 - (n - 1);
    // Keep at least one non-edge so a non-adjacent anchor pair exists.
    const std::int64_t cap = two_anchors ? capacity - 1 : capacity;
    const std::int64_t extra =
        cap > 0 ? static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(cap + 1))) : 0;
    Graph g = random_connected(n, extra, rng.next());
    if (!two_anchors)
        return {std::move(g), static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)))};
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) pairs.emplace_back(u, v);
    const auto& [v, w] = pairs[static_cast<std::size_t>(rng.next_below(pairs.size()))];
    return {std::move(g), v, w};
}

} // namespace detail

inline std::vector<VerificationRecord> sweep_random_composites(CompositeKind kind, int d_lo,
                                                               int d_hi, int trials,
                                                               std::uint64_t seed) {
    if (d_lo < 2 || d_hi < d_lo)
        throw error(errc::bad_parameter, "random sweeps need 2 <= d_lo <= d_hi");
    if (trials < 1) throw error(errc::bad_parameter, "trials must be >= 1");
    SplitMix64 rng(seed);
    std::vector<VerificationRecord> out;
    for (int t = 0; t < trials; ++t) {
        const int d = d_lo + t % (d_hi - d_lo + 1);
        std::vector<AnchoredComponent> comps;
        std::vector<ComponentSummary> s;
        for (int i = 0; i < d; ++i) {
            comps.push_back(detail::random_component(rng, kind != CompositeKind::B1));
            s.push_back(summarize(comps.back()));
        }
        std::int64_t oracle = 0, printed = 0, corrected = 0;
        std::string structure, variant;
        switch (kind) {
            case CompositeKind::B1:
                structure = "bridge_b1";
                oracle = hyper_zagreb(bridge_b1(comps).graph);
                printed = hm_b1_printed(s);
                variant = "b1_printed";
                corrected = hm_b1_corrected(s);
                break;
            case CompositeKind::B2:
                structure = "bridge_b2";
                oracle = hyper_zagreb(bridge_b2(comps).graph);
                printed = hm_b2_unrepaired(s);
                variant = "b2_unrepaired";
                corrected = hm_b2_printed(s);
                break;
            case CompositeKind::Chain:
                structure = "chain";
                oracle = hyper_zagreb(chain(comps).graph);
                printed = hm_chain_printed(s);
                variant = "chain_printed";
                corrected = hm_chain_corrected(s);
                break;
        }
        out.push_back(detail::make_record(
            structure,
            "d=" + std::to_string(d) + ";seed=" + std::to_string(seed) + ";trial=" +
                std::to_string(t),
            oracle, printed, variant, corrected, std::nullopt));
    }
    return out;
}

// --- emission ----------------------------------------------------------------

inline constexpr const char* kVerifyCsvHeader =
    "structure,params,oracle,printed,corrected,example_formula,"
    "printed_matches,corrected_matches,formula_matches";

inline std::string to_csv(const std::vector<VerificationRecord>& records) {
    std::ostringstream out;
    out << kVerifyCsvHeader << '\n';
    for (const auto& r : records) {
        out << r.structure << ',' << r.params << ',' << r.oracle << ','
            << detail::opt_str(r.printed) << ',' << detail::opt_str(r.corrected) << ','
            << detail::opt_str(r.example_formula) << ','
            << (r.printed ? detail::bool_str(r.printed_matches) : std::string()) << ','
            << (r.corrected ? detail::bool_str(r.corrected_matches) : std::string()) << ','
            << (r.formula_matches ? detail::bool_str(*r.formula_matches) : std::string()) << '\n';
    }
    return out.str();
}

inline constexpr const char* kLedgerCsvHeader =
    "structure,variant,params,printed_value,corrected_value,oracle_value,"
    "printed_matches,corrected_matches";

// The discrepancy ledger: one row per sweep point and formula route whose
// value differs from brute force.
inline std::string to_ledger_csv(const std::vector<VerificationRecord>& records) {
    std::ostringstream out;
    out << kLedgerCsvHeader << '\n';
    for (const auto& r : records) {
        if (r.printed && !r.printed_matches)
            out << r.structure << ',' << r.printed_variant << ',' << r.params << ',' << *r.printed
                << ',' << detail::opt_str(r.corrected) << ',' << r.oracle << ",false,"
                << (r.corrected ? detail::bool_str(r.corrected_matches) : std::string()) << '\n';
        if (r.example_formula && r.formula_matches && !*r.formula_matches)
            out << r.structure << ",example_formula," << r.params << ',' << *r.example_formula
                << ',' << detail::opt_str(r.corrected) << ',' << r.oracle << ",false,"
                << (r.corrected ? detail::bool_str(r.corrected_matches) : std::string()) << '\n';
    }
    return out.str();
}

// Same records as JSON (fixed key order, null for absent optionals).
inline std::string to_json(const std::vector<VerificationRecord>& records) {
    std::ostringstream out;
    auto opt = [](const std::optional<std::int64_t>& v) {
        return v ? std::to_string(*v) : std::string("null");
    };
    out << "[";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        if (i) out << ",";
        out << "{\"structure\":\"" << r.structure << "\",\"params\":\"" << r.params
            << "\",\"oracle\":" << r.oracle << ",\"printed\":" << opt(r.printed)
            << ",\"corrected\":" << opt(r.corrected)
            << ",\"example_formula\":" << opt(r.example_formula) << ",\"printed_matches\":"
            << (r.printed ? detail::bool_str(r.printed_matches) : "null")
            << ",\"corrected_matches\":"
            << (r.corrected ? detail::bool_str(r.corrected_matches) : "null")
            << ",\"formula_matches\":"
            << (r.formula_matches ? detail::bool_str(*r.formula_matches) : "null") << "}";
    }
    out << "]\n";
    return out.str();
}

struct SweepSummary {
    std::size_t points = 0;
    std::size_t printed_mismatches = 0;
    std::size_t corrected_mismatches = 0;
    std::size_t formula_mismatches = 0;
};

inline SweepSummary summarize_records(const std::vector<VerificationRecord>& records) {
    SweepSummary s;
    s.points = records.size();
    for (const auto& r : records) {
        if (r.printed && !r.printed_matches) ++s.printed_mismatches;
        if (r.corrected && !r.corrected_matches) ++s.corrected_mismatches;
        if (r.formula_matches && !*r.formula_matches) ++s.formula_mismatches;
    }
    return s;
}

} // namespace hz
