// Command-line workbench: constructions, single checks, randomized sweeps,
// machine-readable reports. Exit codes: 0 all checks pass, 1 a checked
// assertion failed (witness in the report), 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "gapforge/alpha.hpp"
#include "gapforge/bounds.hpp"
#include "gapforge/debruijn.hpp"
#include "gapforge/errors.hpp"
#include "gapforge/extremal.hpp"
#include "gapforge/rational.hpp"
#include "gapforge/returning.hpp"
#include "gapforge/sets.hpp"
#include "gapforge/sidon.hpp"
#include "gapforge/sweeps.hpp"
#include "gapforge/threegap.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace gapforge;

constexpr int kSchemaVersion = 1;

json rat_json(const Rat& x) { return rat_to_string(x); }

json bracket_json(const Bracket& b) {
    json j;
    j["lo"] = rat_json(b.lo);
    j["hi"] = rat_json(b.hi);
    return j;
}

json tuple_json(const RDiffTuple& t) {
    json arr = json::array();
    for (const Rat& x : t) arr.push_back(rat_json(x));
    return arr;
}

json int_tuple_json(const std::vector<std::int64_t>& t) {
    json arr = json::array();
    for (std::int64_t x : t) arr.push_back(x);
    return arr;
}

json set_json(const SortedSet& s) {
    json arr = json::array();
    for (const Rat& x : s) arr.push_back(rat_json(x));
    return arr;
}

void emit(const json& report, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw invalid_input("cannot open output path: " + out_path);
    f << report.dump(2) << "\n";
}

json sweep_json(const SweepResult& r) {
    json j;
    j["suite"] = r.suite;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["ok"] = r.ok();
    j["failure_count"] = r.failures.size();
    json fails = json::array();
    for (const auto& [trial, witness] : r.failures) {
        json f;
        f["trial"] = trial;
        f["witness"] = witness;
        fails.push_back(f);
    }
    j["failures"] = fails;
    if (r.has_ratios) {
        j["min_ratio"] = r.min_ratio;
        j["max_ratio"] = r.max_ratio;
    }
    return j;
}

std::string sweep_csv(const SweepResult& r) {
    std::string out = "suite,trial,ok,witness\n";
    std::size_t fi = 0;
    for (std::uint64_t i = 0; i < r.trials; ++i) {
        bool failed = fi < r.failures.size() && r.failures[fi].first == i;
        out += r.suite + "," + std::to_string(i) + "," + (failed ? "0," : "1,");
        if (failed) out += "\"" + r.failures[fi++].second + "\"";
        out += "\n";
    }
    return out;
}

int cmd_debruijn(int alphabet, int r, const std::string& out_path) {
    auto seq = window_sequence(alphabet, r);
    auto check = verify_sequence(seq, alphabet, r);

    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "debruijn";
    j["alphabet"] = alphabet;
    j["r"] = r;
    j["k"] = seq.size();
    json arr = json::array();
    for (int s : seq) arr.push_back(s + 1); // symbols reported as 1..m
    j["sequence"] = arr;
    json rep;
    rep["windows_distinct"] = check.windows_distinct.pass;
    rep["length_expected"] = check.length_expected.pass;
    rep["adjacent_distinct"] = check.adjacent_distinct.pass;
    if (!check.windows_distinct.pass) rep["windows_witness"] = check.windows_distinct.witness;
    if (!check.length_expected.pass) rep["length_witness"] = check.length_expected.witness;
    if (!check.adjacent_distinct.pass) rep["adjacent_witness"] = check.adjacent_distinct.witness;
    j["verification"] = rep;
    emit(j, out_path);
    return check.all_pass() ? 0 : 1;
}

int cmd_sidon(int n, const std::string& out_path) {
    auto s = mian_chowla(n);
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "sidon";
    j["n"] = n;
    json arr = json::array();
    for (const Int& x : s.elems) arr.push_back(x.str());
    j["elements"] = arr;
    j["is_sidon"] = is_sidon(s.elems);
    emit(j, out_path);
    return 0;
}

int cmd_extremal(int sidon_size, int r, const std::string& out_path) {
    SidonSet s = mian_chowla(sidon_size);
    ExtremalPair pair = extremal_pair(s, r);
    bool distinct = has_distinct_consecutive_r_diffs(pair.A, r);
    bool cap_ok = pair.sumset_size <= pair.sumset_cap;
    Bracket ratio = sumset_ratio(pair.sumset_size, pair.A.size(), pair.B.size(), r);

    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "extremal";
    j["sidon_size"] = sidon_size;
    j["r"] = r;
    json alphabet = json::array();
    for (const Int& x : s.elems) alphabet.push_back(x.str());
    j["alphabet"] = alphabet;
    j["k"] = pair.k;
    j["M"] = pair.M.str();
    j["sumset_size"] = pair.sumset_size;
    j["sumset_cap"] = pair.sumset_cap;
    j["cap_holds"] = cap_ok;
    j["distinct_r_diffs"] = distinct;
    j["ratio"] = bracket_json(ratio);
    if (pair.k <= 4000) {
        auto self_rep = self_sumset_report(pair);
        json sj;
        sj["self_sumset"] = self_rep.self_sumset;
        sj["ruzsa_lhs"] = self_rep.ruzsa_lhs.str();
        sj["ruzsa_rhs"] = self_rep.ruzsa_rhs.str();
        sj["ruzsa_holds"] = self_rep.ruzsa_holds;
        sj["exponent_estimate"] = self_rep.exponent_estimate;
        j["self_sumset_report"] = sj;
    } else {
        j["self_sumset_report"] = "skipped (k > 4000)";
    }
    j["A"] = set_json(pair.A);
    j["B"] = set_json(pair.B);
    emit(j, out_path);
    return distinct && cap_ok ? 0 : 1;
}

int cmd_threegap(const std::string& alpha_text, std::int64_t n, int r, bool table, bool sweep,
                 std::uint64_t trials, std::uint64_t seed, const std::string& out_path) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "threegap";
    j["alpha_spec"] = alpha_text;
    j["n"] = n;
    j["r"] = r;

    if (sweep) {
        SweepCaps caps;
        caps.n = n;
        caps.r = r;
        auto res = run_orbit_bound_sweep(seed, trials, caps);
        j["sweep"] = sweep_json(res);
        emit(j, out_path);
        return res.ok() ? 0 : 1;
    }

    Rat alpha = resolve_alpha(AlphaSpec::parse(alpha_text), n);
    j["alpha"] = rat_json(alpha);
    auto o = orbit(alpha, n);
    auto diffs = cyclic_r_diffs(o, r);
    std::size_t bound = static_cast<std::size_t>(2 * r + 1);
    bool bound_ok = diffs.size() <= bound;
    j["distinct_window_count"] = diffs.size();
    j["bound"] = bound;
    j["bound_holds"] = bound_ok;
    json tuples = json::array();
    for (const auto& t : diffs) tuples.push_back(tuple_json(t));
    j["windows"] = tuples;
    auto rev = reversal_check(o);
    j["reversal_holds"] = rev.holds;

    bool table_ok = true;
    if (table) {
        auto frame = neighbor_frame(o, r);
        json fj;
        fj["left"] = int_tuple_json(frame.left);
        fj["right"] = int_tuple_json(frame.right);
        j["neighbor_frame"] = fj;
        auto bt = breakpoint_table(o, r);
        j["breakpoints"] = int_tuple_json(bt.breakpoints);
        json ivs = json::array();
        for (auto [lo, hi] : bt.intervals()) {
            json iv;
            iv["from"] = lo;
            iv["to"] = hi;
            iv["window"] = tuple_json(bt.lookup(lo));
            ivs.push_back(iv);
        }
        j["intervals"] = ivs;
        auto sound = check_breakpoint_table(o, bt, r);
        table_ok = sound.holds;
        j["table_sound"] = sound.holds;
        if (!sound.holds) j["table_first_mismatch"] = sound.first_mismatch;
    }
    emit(j, out_path);
    return bound_ok && rev.holds && table_ok ? 0 : 1;
}

int cmd_returning(const std::string& theta_text, const std::string& phi_text, int r,
                  std::int64_t t_max, const std::string& out_path) {
    Rat theta = parse_rat(theta_text);
    Rat phi = parse_rat(phi_text);
    ReturnSet rs = returning_times(theta, phi, t_max);

    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "returning";
    j["theta"] = rat_json(theta);
    j["phi"] = rat_json(phi);
    j["t_max"] = t_max;
    j["return_count"] = rs.times.size();
    json head = json::array();
    for (std::size_t i = 0; i < rs.times.size() && i < 50; ++i) head.push_back(rs.times[i]);
    j["first_times"] = head;

    bool all_ok = true;
    if (rs.times.size() >= 3) {
        SlaterPair sp = slater_pair(theta, phi);
        json sj;
        sj["a"] = sp.a;
        sj["b"] = sp.b;
        sj["alpha"] = rat_json(sp.alpha);
        sj["beta"] = rat_json(sp.beta);
        j["slater_pair"] = sj;

        auto part1 = next_gap_partition(sp, phi);
        json p1;
        p1["bounds"] = json::array();
        for (const Rat& b : part1.bounds) p1["bounds"].push_back(rat_json(b));
        p1["labels"] = json::array();
        for (const auto& l : part1.labels) p1["labels"].push_back(int_tuple_json(l));
        auto m1 = check_gap_partition(rs, part1, 1);
        p1["all_match"] = m1.all_match;
        p1["checked"] = m1.checked;
        if (!m1.all_match) {
            p1["mismatch_time"] = m1.mismatch_time;
            all_ok = false;
        }
        j["next_gap_partition"] = p1;

        auto part2 = next_two_gaps_partition(sp, phi);
        if (part2.partition) {
            json p2;
            p2["case"] = part2.partition->case_id;
            p2["bounds"] = json::array();
            for (const Rat& b : part2.partition->bounds) p2["bounds"].push_back(rat_json(b));
            p2["labels"] = json::array();
            for (const auto& l : part2.partition->labels) p2["labels"].push_back(int_tuple_json(l));
            auto m2 = check_gap_partition(rs, *part2.partition, 2);
            p2["all_match"] = m2.all_match;
            p2["checked"] = m2.checked;
            if (!m2.all_match) {
                p2["mismatch_time"] = m2.mismatch_time;
                all_ok = false;
            }
            j["next_two_gaps_partition"] = p2;
        } else {
            j["next_two_gaps_partition"] = part2.note;
        }

        json wj = json::array();
        for (int rr = 1; rr <= r; ++rr) {
            if (rs.times.size() < static_cast<std::size_t>(2 * rr + 1)) break;
            auto windows = empirical_r_diffs(rs, rr);
            json w;
            w["r"] = rr;
            w["count"] = windows.size();
            w["bound"] = 2 * rr + 1;
            bool ok = windows.size() <= static_cast<std::size_t>(2 * rr + 1);
            w["bound_holds"] = ok;
            if (!ok) all_ok = false;
            json tuples = json::array();
            for (const auto& t : windows) tuples.push_back(int_tuple_json(t));
            w["windows"] = tuples;
            wj.push_back(w);
        }
        j["window_counts"] = wj;
    }
    emit(j, out_path);
    return all_ok ? 0 : 1;
}

int cmd_duality(std::int64_t p, std::int64_t q, std::int64_t n, int r, const std::string& out_path) {
    auto rep = duality_check(p, q, n, r);
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "duality";
    j["p"] = p;
    j["q"] = q;
    j["n"] = n;
    j["r"] = r;
    j["p_prime"] = rep.p_prime.str();
    j["period_set"] = int_tuple_json(rep.period_set);
    j["translated_set_equal"] = rep.translated_set_equal;
    j["unshifted_set_equal"] = rep.unshifted_set_equal;
    j["cyclic_diffs_scaled"] = rep.cyclic_diffs_scaled;
    emit(j, out_path);
    return rep.translated_set_equal && rep.cyclic_diffs_scaled ? 0 : 1;
}

int cmd_verify(const std::string& suite, std::uint64_t trials, std::uint64_t seed,
               const SweepCaps& caps, const std::string& format, const std::string& out_path) {
    SweepResult res;
    if (suite == "dcd") res = run_counting_sweep(seed, trials, caps);
    else if (suite == "main2") res = run_lower_bound_sweep(seed, trials, caps);
    else if (suite == "dcd2") res = run_subset_bound_sweep(seed, trials, caps);
    else if (suite == "fp") res = run_mod_p_sweep(seed, trials, caps);
    else if (suite == "multidim") res = run_multidim_sweep(seed, trials, caps);
    else throw invalid_input("unknown suite: " + suite + " (expected dcd|main2|dcd2|fp|multidim)");

    if (format == "csv") {
        std::string body = sweep_csv(res);
        if (out_path.empty()) {
            std::cout << body;
        } else {
            std::ofstream f(out_path);
            if (!f) throw invalid_input("cannot open output path: " + out_path);
            f << body;
        }
    } else {
        json j;
        j["schema_version"] = kSchemaVersion;
        j["command"] = "verify";
        json cj;
        cj["k"] = caps.k;
        cj["l"] = caps.l;
        cj["n"] = caps.n;
        cj["t_max"] = caps.t_max;
        cj["r"] = caps.r;
        cj["d"] = caps.d;
        j["caps"] = cj;
        j["report"] = sweep_json(res);
        emit(j, out_path);
    }
    return res.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for sumset bounds, window sequences, rotation orbits, and returning times"};
    app.require_subcommand(1);

    // debruijn
    auto* db = app.add_subcommand("debruijn", "build and verify a distinct-window sequence");
    int db_alphabet = 3, db_r = 2;
    std::string db_out;
    db->add_option("--alphabet", db_alphabet, "alphabet size (>= 2)")->required();
    db->add_option("--r", db_r, "window order (>= 1)")->required();
    db->add_option("--out", db_out, "output path (default stdout)");

    // sidon
    auto* si = app.add_subcommand("sidon", "greedy Sidon set");
    int si_n = 8;
    std::string si_out;
    si->add_option("--n", si_n, "number of elements")->required();
    si->add_option("--out", si_out, "output path (default stdout)");

    // extremal
    auto* ex = app.add_subcommand("extremal", "embedded extremal pair and its metrics");
    int ex_size = 4, ex_r = 2;
    std::string ex_out;
    ex->add_option("--sidon-size", ex_size, "Sidon alphabet size")->required();
    ex->add_option("--r", ex_r, "difference order")->required();
    ex->add_option("--emit,--out", ex_out, "output path (default stdout)");

    // threegap
    auto* tg = app.add_subcommand("threegap", "rotation orbit windows, breakpoint table, sweeps");
    std::string tg_alpha;
    std::int64_t tg_n = 100;
    int tg_r = 1;
    bool tg_table = false, tg_sweep = false;
    std::uint64_t tg_trials = 100, tg_seed = 0;
    std::string tg_out;
    tg->add_option("--alpha", tg_alpha, "rotation number: p/q | cf:[..] | dec:value:digits");
    tg->add_option("--n", tg_n, "orbit length")->required();
    tg->add_option("--r", tg_r, "window order")->required();
    tg->add_flag("--table", tg_table, "emit neighbor frame and breakpoint table");
    tg->add_flag("--sweep", tg_sweep, "run randomized bound sweep instead of a single orbit");
    tg->add_option("--trials", tg_trials, "sweep trials");
    tg->add_option("--seed", tg_seed, "sweep seed");
    tg->add_option("--out", tg_out, "output path (default stdout)");

    // returning
    auto* rt = app.add_subcommand("returning", "returning-time gaps and partitions");
    std::string rt_theta, rt_phi, rt_out;
    int rt_r = 2;
    std::int64_t rt_tmax = 100000;
    rt->add_option("--theta", rt_theta, "rotation number p/q")->required();
    rt->add_option("--phi", rt_phi, "arc length p/q")->required();
    rt->add_option("--r", rt_r, "max window order");
    rt->add_option("--tmax", rt_tmax, "horizon");
    rt->add_option("--out", rt_out, "output path (default stdout)");

    // duality
    auto* du = app.add_subcommand("duality", "period set vs scaled orbit for rational rotation");
    std::int64_t du_p = 3, du_q = 7, du_n = 3;
    int du_r = 1;
    std::string du_out;
    du->add_option("--p", du_p)->required();
    du->add_option("--q", du_q)->required();
    du->add_option("--n", du_n)->required();
    du->add_option("--r", du_r);
    du->add_option("--out", du_out, "output path (default stdout)");

    // verify
    auto* ve = app.add_subcommand("verify", "randomized inequality sweeps");
    std::string ve_suite, ve_out, ve_format = "json";
    std::uint64_t ve_trials = 100, ve_seed = 42;
    SweepCaps ve_caps;
    ve->add_option("--suite", ve_suite, "dcd|main2|dcd2|fp|multidim")->required();
    ve->add_option("--trials", ve_trials, "trial count");
    ve->add_option("--seed", ve_seed, "base seed");
    ve->add_option("--json,--out", ve_out, "report path (default stdout)");
    ve->add_option("--format", ve_format, "json|csv");
    ve->add_option("--k", ve_caps.k, "max |A|");
    ve->add_option("--l", ve_caps.l, "max |B|");
    ve->add_option("--n", ve_caps.n, "max orbit length");
    ve->add_option("--tmax", ve_caps.t_max, "horizon cap");
    ve->add_option("--r", ve_caps.r, "max difference order");
    ve->add_option("--d", ve_caps.d, "max family count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*db) return cmd_debruijn(db_alphabet, db_r, db_out);
        if (*si) return cmd_sidon(si_n, si_out);
        if (*ex) return cmd_extremal(ex_size, ex_r, ex_out);
        if (*tg) {
            if (!tg_sweep && tg_alpha.empty())
                throw invalid_input("threegap: --alpha is required unless --sweep is given");
            return cmd_threegap(tg_alpha, tg_n, tg_r, tg_table, tg_sweep, tg_trials, tg_seed, tg_out);
        }
        if (*rt) return cmd_returning(rt_theta, rt_phi, rt_r, rt_tmax, rt_out);
        if (*du) return cmd_duality(du_p, du_q, du_n, du_r, du_out);
        if (*ve) return cmd_verify(ve_suite, ve_trials, ve_seed, ve_caps, ve_format, ve_out);
    } catch (const invalid_input& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const insufficient_precision& e) {
        std::cerr << "insufficient precision: " << e.what() << "\n";
        return 2;
    } catch (const degenerate_input& e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
