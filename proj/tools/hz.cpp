// hz.cpp — command-line front end.
//
//   hz index <file>            degree-based indices of an edge-list graph (JSON)
//   hz gen <family> ...        generate a family member as an edge list
//   hz compose <kind> ...      build a bridge/chain composite from components
//   hz verify <target> ...     closed-form vs brute-force sweeps (CSV)
//
// Exit codes: 0 success, 1 I/O error, 2 bad user input, 3 a corrected closed
// form failed to match brute force (implementation bug, never expected).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hz/hz.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUser = 2;
constexpr int kExitVerifyFailed = 3;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open '" + path + "' for writing");
    out << data;
    if (!out) throw std::ios_base::failure("write to '" + path + "' failed");
}

struct Range {
    int lo = 0;
    int hi = 0;
};

// "a..b" or a single "a".
Range parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        Range r{std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
        if (r.hi < r.lo) throw std::invalid_argument("descending");
        return r;
    } catch (const std::exception&) {
        throw hz::error(hz::errc::bad_parameter,
                        "malformed range '" + text + "' (expected 'a' or 'a..b')");
    }
}

// "<path>:<v>" or "<path>:<v>:<w>".
hz::AnchoredComponent load_component(const std::string& spec, std::size_t index) {
    const auto first = spec.rfind(':');
    auto fail = [&](const std::string& why) -> hz::error {
        return hz::error(hz::errc::bad_parameter,
                         "component " + std::to_string(index) + ": " + why);
    };
    if (first == std::string::npos)
        throw fail("expected '<path>:<v>' or '<path>:<v>:<w>', got '" + spec + "'");
    std::string head = spec.substr(0, first);
    std::string last = spec.substr(first + 1);
    std::optional<int> w;
    std::string path = head;
    std::string v_text = last;
    const auto second = head.rfind(':');
    if (second != std::string::npos) {
        // Try to read "<path>:<v>:<w>"; fall back to "<path-with-colon>:<v>".
        try {
            w = std::stoi(last);
            v_text = head.substr(second + 1);
            path = head.substr(0, second);
            (void)std::stoi(v_text);
        } catch (const std::exception&) {
            w.reset();
            path = head;
            v_text = last;
        }
    }
    int v = 0;
    try {
        v = std::stoi(v_text);
    } catch (const std::exception&) {
        throw fail("anchor '" + v_text + "' is not an integer");
    }
    hz::Graph g;
    try {
        g = hz::parse_edge_list(read_input(path));
    } catch (const hz::error& e) {
        throw hz::error(e.code(), "component " + std::to_string(index) + " (" + path + "): " +
                                      e.what());
    }
    try {
        if (w) return {std::move(g), v, *w};
        return {std::move(g), v};
    } catch (const hz::error& e) {
        throw hz::error(e.code(), "component " + std::to_string(index) + ": " + e.what());
    }
}

int run(int argc, char** argv) {
    CLI::App app{"degree-based topological indices of bridge and chain composites"};
    app.require_subcommand(1);
    // '--h' is a sweep parameter below, so help lives on '--help' only.
    app.set_help_flag("--help", "print help and exit");
    auto sub = [&](CLI::App* parent, const std::string& name, const std::string& help) {
        auto* s = parent->add_subcommand(name, help);
        s->set_help_flag("--help", "print help and exit");
        return s;
    };

    // --- index ---------------------------------------------------------------
    std::string index_input, index_format = "json";
    auto* cmd_index = sub(&app, "index", "compute M1, M2, F, HM of an edge-list graph");
    cmd_index->add_option("file", index_input, "edge-list file ('-' for stdin)")->required();
    cmd_index->add_option("--format", index_format, "output format (json)");

    // --- gen -------------------------------------------------------------------
    std::string gen_out, gen_format = "edgelist";
    int g_n = 0, g_m = 0, g_d = 0, g_h = 0, g_k = 0, g_l = 0;
    std::int64_t g_extra = 0;
    std::uint64_t g_seed = 1;
    std::string g_kind;
    auto* cmd_gen = sub(&app, "gen", "generate a family member as an edge list");
    cmd_gen->add_option("--out", gen_out, "output path (default stdout)");
    cmd_gen->add_option("--format", gen_format, "output format (edgelist)");
    auto add_family = [&](const std::string& name, const std::string& help) {
        auto* s = sub(cmd_gen, name, help);
        s->fallthrough();  // lets --out appear after the family name
        return s;
    };
    auto* gen_cycle = add_family("cycle", "cycle C_n");
    gen_cycle->add_option("--n", g_n)->required();
    auto* gen_path = add_family("path", "path P_m");
    gen_path->add_option("--m", g_m)->required();
    auto* gen_comb_t = add_family("comb_t", "d cycles C_n bridged at one vertex");
    gen_comb_t->add_option("--d", g_d)->required();
    gen_comb_t->add_option("--n", g_n)->required();
    auto* gen_bridge_b = add_family("bridge_b", "d paths P_3 bridged at the middle vertex");
    gen_bridge_b->add_option("--d", g_d)->required();
    auto* gen_comb_a = add_family("comb_a", "d paths P_m bridged at an end vertex");
    gen_comb_a->add_option("--d", g_d)->required();
    gen_comb_a->add_option("--m", g_m)->required();
    auto* gen_van_hove = add_family("van_hove", "open comb with ramped teeth P_1..P_n..P_1");
    gen_van_hove->add_option("--n", g_n)->required();
    auto* gen_poly = add_family("poly", "hexagon chain (ortho, meta, para)");
    gen_poly->add_option("--h", g_h)->required();
    gen_poly->add_option("--kind", g_kind, "ortho|meta|para")->required();
    auto* gen_spiro = add_family("spiro", "d cycles C_n amalgamated at positions k, l");
    gen_spiro->add_option("--n", g_n)->required();
    gen_spiro->add_option("--k", g_k)->required();
    gen_spiro->add_option("--l", g_l)->required();
    gen_spiro->add_option("--d", g_d)->required();
    auto* gen_random = add_family("random", "seeded random connected graph");
    gen_random->add_option("--n", g_n)->required();
    gen_random->add_option("--extra", g_extra, "non-tree edges (default 0)");
    gen_random->add_option("--seed", g_seed, "PRNG seed (default 1)");
    cmd_gen->require_subcommand(1);

    // --- compose -----------------------------------------------------------------
    std::string compose_kind, compose_out, compose_anchor_map;
    std::vector<std::string> compose_specs;
    auto* cmd_compose =
        sub(&app, "compose", "compose components into a bridge or chain graph");
    cmd_compose->add_option("kind", compose_kind, "b1|b2|chain")->required();
    cmd_compose
        ->add_option("components", compose_specs,
                     "component specs '<path>:<v>' (b1) or '<path>:<v>:<w>' (b2, chain)")
        ->required();
    cmd_compose->add_option("--out", compose_out, "edge-list output path (default stdout)");
    cmd_compose->add_option("--anchor-map", compose_anchor_map,
                            "write the composed anchor ids as JSON to this path");

    // --- verify ---------------------------------------------------------------
    std::string verify_target, verify_out, verify_ledger, verify_kind, verify_format = "csv";
    std::string v_d, v_n, v_m, v_h;
    std::optional<int> v_k, v_l;
    int v_trials = 105;
    std::uint64_t v_seed = 1;
    bool v_include_oor = false;
    auto* cmd_verify = sub(
        &app, "verify", "sweep closed forms against brute force on composed graphs (CSV)");
    cmd_verify
        ->add_option("target", verify_target,
                     "comb_t|bridge_b|comb_a|van_hove|poly|spiro|theorems")
        ->required();
    cmd_verify->add_option("--d", v_d, "range 'a..b'");
    cmd_verify->add_option("--n", v_n, "range 'a..b'");
    cmd_verify->add_option("--m", v_m, "range 'a..b'");
    cmd_verify->add_option("--h", v_h, "range 'a..b'");
    cmd_verify->add_option("--k", v_k, "spiro position k (default: all valid pairs)");
    cmd_verify->add_option("--l", v_l, "spiro position l");
    cmd_verify->add_option("--kind", verify_kind, "poly: ortho|meta|para; theorems: b1|b2|chain");
    cmd_verify->add_option("--seeds", v_trials, "theorems: number of random trials (default 105)");
    cmd_verify->add_option("--seed", v_seed, "master PRNG seed (default 1)");
    cmd_verify->add_flag("--include-out-of-range", v_include_oor,
                         "also sweep points outside a formula's established validity range");
    cmd_verify->add_option("--format", verify_format, "csv (default) or json");
    cmd_verify->add_option("--out", verify_out, "output path (default stdout)");
    cmd_verify->add_option("--ledger", verify_ledger, "also write the discrepancy-ledger CSV here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUser;
    }

    try {
        if (*cmd_index) {
            if (index_format != "json")
                throw hz::error(hz::errc::bad_parameter,
                                "index supports --format json only, got '" + index_format + "'");
            const hz::Graph g = hz::parse_edge_list(read_input(index_input));
            const hz::IndexReport r = hz::index_report(g);
            ordered_json j;
            j["n"] = g.vertex_count();
            j["m"] = g.edge_count();
            j["indices"] = {{"m1", r.m1}, {"m2", r.m2}, {"f", r.f}, {"hm", r.hm}};
            std::cout << j.dump() << '\n';
            return kExitOk;
        }

        if (*cmd_gen) {
            if (gen_format != "edgelist")
                throw hz::error(hz::errc::bad_parameter,
                                "gen supports --format edgelist only, got '" + gen_format + "'");
            hz::Graph g;
            if (*gen_cycle) g = hz::cycle(g_n);
            else if (*gen_path) g = hz::path(g_m);
            else if (*gen_comb_t) g = hz::comb_t(g_d, g_n).graph;
            else if (*gen_bridge_b) g = hz::bridge_b_family(g_d).graph;
            else if (*gen_comb_a) g = hz::comb_a(g_d, g_m).graph;
            else if (*gen_van_hove) g = hz::van_hove(g_n).graph;
            else if (*gen_poly) {
                hz::PolyKind kind;
                if (g_kind == "ortho") kind = hz::PolyKind::ortho;
                else if (g_kind == "meta") kind = hz::PolyKind::meta;
                else if (g_kind == "para") kind = hz::PolyKind::para;
                else throw hz::error(hz::errc::bad_parameter,
                                     "--kind must be ortho, meta or para, got '" + g_kind + "'");
                g = hz::polyphenyl(g_h, kind).graph;
            } else if (*gen_spiro) {
                g = hz::spiro(g_n, g_k, g_l, g_d).graph;
            } else if (*gen_random) {
                g = hz::random_connected(g_n, g_extra, g_seed);
            }
            write_output(gen_out, hz::emit_edge_list(g));
            return kExitOk;
        }

        if (*cmd_compose) {
            std::vector<hz::AnchoredComponent> comps;
            for (std::size_t i = 0; i < compose_specs.size(); ++i)
                comps.push_back(load_component(compose_specs[i], i));
            hz::CompositeResult result;
            if (compose_kind == "b1") result = hz::bridge_b1(comps);
            else if (compose_kind == "b2") result = hz::bridge_b2(comps);
            else if (compose_kind == "chain") result = hz::chain(comps);
            else throw hz::error(hz::errc::bad_parameter,
                                 "kind must be b1, b2 or chain, got '" + compose_kind + "'");
            write_output(compose_out, hz::emit_edge_list(result.graph));
            if (!compose_anchor_map.empty()) {
                ordered_json j;
                j["kind"] = hz::composite_kind_name(result.kind);
                j["anchors"] = ordered_json::array();
                for (std::size_t i = 0; i < result.anchor_map.size(); ++i) {
                    ordered_json a;
                    a["component"] = i;
                    a["v"] = result.anchor_map[i].v;
                    if (result.anchor_map[i].w) a["w"] = *result.anchor_map[i].w;
                    j["anchors"].push_back(a);
                }
                write_output(compose_anchor_map, j.dump() + "\n");
            }
            return kExitOk;
        }

        if (*cmd_verify) {
            hz::SweepOptions opt;
            opt.include_out_of_range = v_include_oor;
            opt.seed = v_seed;
            auto range_or = [&](const std::string& text, Range fallback) {
                return text.empty() ? fallback : parse_range(text);
            };
            std::vector<hz::VerificationRecord> records;
            if (verify_target == "comb_t") {
                const Range d = range_or(v_d, {3, 10}), n = range_or(v_n, {3, 10});
                records = hz::sweep_comb_t(d.lo, d.hi, n.lo, n.hi, opt);
            } else if (verify_target == "bridge_b") {
                const Range d = range_or(v_d, {3, 12});
                records = hz::sweep_bridge_b(d.lo, d.hi, opt);
            } else if (verify_target == "comb_a") {
                const Range d = range_or(v_d, {3, 10}), m = range_or(v_m, {3, 10});
                records = hz::sweep_comb_a(d.lo, d.hi, m.lo, m.hi, opt);
            } else if (verify_target == "van_hove") {
                const Range n = range_or(v_n, {3, 8});
                records = hz::sweep_van_hove(n.lo, n.hi, opt);
            } else if (verify_target == "poly") {
                const Range h = range_or(v_h, {1, 10});
                std::optional<hz::PolyKind> only;
                if (!verify_kind.empty()) {
                    if (verify_kind == "ortho") only = hz::PolyKind::ortho;
                    else if (verify_kind == "meta") only = hz::PolyKind::meta;
                    else if (verify_kind == "para") only = hz::PolyKind::para;
                    else throw hz::error(hz::errc::bad_parameter,
                                         "--kind must be ortho, meta or para for poly");
                }
                records = hz::sweep_polyphenyl(h.lo, h.hi, only, opt);
            } else if (verify_target == "spiro") {
                const Range n = range_or(v_n, {4, 8}), d = range_or(v_d, {2, 10});
                std::optional<std::pair<int, int>> kl;
                if (v_k || v_l) {
                    if (!v_k || !v_l)
                        throw hz::error(hz::errc::bad_parameter, "--k and --l go together");
                    kl = std::make_pair(*v_k, *v_l);
                }
                records = hz::sweep_spiro(n.lo, n.hi, d.lo, d.hi, kl, opt);
            } else if (verify_target == "theorems") {
                const Range d = range_or(v_d, {2, 8});
                std::vector<hz::CompositeKind> kinds;
                if (verify_kind.empty() || verify_kind == "all")
                    kinds = {hz::CompositeKind::B1, hz::CompositeKind::B2,
                             hz::CompositeKind::Chain};
                else if (verify_kind == "b1") kinds = {hz::CompositeKind::B1};
                else if (verify_kind == "b2") kinds = {hz::CompositeKind::B2};
                else if (verify_kind == "chain") kinds = {hz::CompositeKind::Chain};
                else throw hz::error(hz::errc::bad_parameter,
                                     "--kind must be b1, b2, chain or all for theorems");
                for (auto k : kinds) {
                    auto part = hz::sweep_random_composites(k, d.lo, d.hi, v_trials, v_seed);
                    records.insert(records.end(), part.begin(), part.end());
                }
            } else {
                throw hz::error(hz::errc::bad_parameter,
                                "unknown verify target '" + verify_target + "'");
            }
            if (verify_format == "csv") write_output(verify_out, hz::to_csv(records));
            else if (verify_format == "json") write_output(verify_out, hz::to_json(records));
            else throw hz::error(hz::errc::bad_parameter,
                                 "verify supports --format csv or json, got '" + verify_format +
                                     "'");
            if (!verify_ledger.empty()) write_output(verify_ledger, hz::to_ledger_csv(records));
            const hz::SweepSummary s = hz::summarize_records(records);
            std::cerr << "verify: " << s.points << " points, corrected mismatches: "
                      << s.corrected_mismatches << ", printed mismatches: " << s.printed_mismatches
                      << ", formula mismatches: " << s.formula_mismatches << '\n';
            return s.corrected_mismatches == 0 ? kExitOk : kExitVerifyFailed;
        }
    } catch (const hz::error& e) {
        std::cerr << "hz: " << e.what() << '\n';
        return e.code() == hz::errc::internal_identity_violation ? kExitVerifyFailed : kExitUser;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "hz: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitUser;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
