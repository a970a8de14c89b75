#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mistab/closure.hpp"
#include "mistab/decomposition.hpp"
#include "mistab/families.hpp"
#include "mistab/parse.hpp"
#include "mistab/report.hpp"
#include "mistab/resolution.hpp"
#include "mistab/stability.hpp"
#include "mistab/suite.hpp"
#include "mistab/version.hpp"

using nlohmann::json;
using namespace mistab;

namespace {

struct Options {
    std::string ring_text;
    std::string ideal_text;
    bool as_json = false;
    bool stable_output = false;
    Limits limits;
};

struct Input {
    Ring ring;
    MonomialIdeal ideal;
};

Input parse_input(const Options& opt) {
    if (opt.ring_text.empty())
        throw UsageError("--ring is required for this command");
    if (opt.ideal_text.empty())
        throw UsageError("--ideal is required for this command");
    Ring ring = parse_ring(opt.ring_text);
    MonomialIdeal ideal = parse_ideal(ring, opt.ideal_text);
    return Input{ring, ideal};
}

json base_doc(const Input& in) {
    json doc;
    doc["tool"] = json{{"name", kToolName}, {"version", kToolVersion}};
    doc["ring"] = json(in.ring.variables());
    doc["ideal"] = ideal_to_json(in.ideal);
    return doc;
}

void emit(const Options& opt, const json& doc, const std::string& text) {
    if (opt.as_json)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

std::string supports_text(const std::vector<PrimeSupport>& supports, const Ring& ring) {
    std::string out;
    for (const auto& p : supports)
        out += p.str(ring) + "\n";
    return out;
}

int run_ass(const Options& opt) {
    Input in = parse_input(opt);
    auto primes = associated_primes(in.ideal);
    json doc = base_doc(in);
    doc["ass"] = supports_to_json(primes, in.ring);
    emit(opt, doc, supports_text(primes, in.ring));
    return 0;
}

int run_min(const Options& opt) {
    Input in = parse_input(opt);
    auto primes = minimal_primes(in.ideal);
    int h = height(in.ideal);
    json doc = base_doc(in);
    doc["min"] = supports_to_json(primes, in.ring);
    doc["height"] = h;
    emit(opt, doc, supports_text(primes, in.ring) + "height: " + std::to_string(h) + "\n");
    return 0;
}

int run_decompose(const Options& opt) {
    Input in = parse_input(opt);
    auto comps = irreducible_decomposition(in.ideal);
    json arr = json::array();
    std::string text;
    for (const auto& c : comps) {
        MonomialIdeal ci = c.to_ideal(in.ring);
        arr.push_back(ideal_to_json(ci));
        text += ci.str() + "\n";
    }
    json doc = base_doc(in);
    doc["components"] = std::move(arr);
    emit(opt, doc, text);
    return 0;
}

int run_depth(const Options& opt) {
    Input in = parse_input(opt);
    int d = depth(in.ideal, opt.limits);
    int pd = projective_dimension(in.ideal, opt.limits);
    json doc = base_doc(in);
    doc["depth"] = d;
    doc["pd"] = pd;
    emit(opt, doc, "depth: " + std::to_string(d) + "\npd: " + std::to_string(pd) + "\n");
    return 0;
}

int run_betti(const Options& opt, std::uint32_t characteristic) {
    Input in = parse_input(opt);
    BettiTable table = characteristic ? betti_table_mod_p(in.ideal, characteristic, opt.limits)
                                      : betti_table(in.ideal, opt.limits);
    json doc = base_doc(in);
    doc["betti"] = betti_to_json(table, in.ring);
    doc["characteristic"] = characteristic;
    doc["depth"] = in.ring.nvars() - table.pd();
    std::string text;
    for (const auto& [key, rank] : table.entries())
        text += std::to_string(key.first) + "  " + key.second.str(in.ring) + "  " +
                std::to_string(rank) + "\n";
    text += "pd: " + std::to_string(table.pd()) + "\n";
    emit(opt, doc, text);
    return 0;
}

int run_closure(const Options& opt, std::int64_t k) {
    Input in = parse_input(opt);
    MonomialIdeal cl = integral_closure(in.ideal, k, opt.limits);
    json doc = base_doc(in);
    doc["power"] = k;
    doc["closure"] = ideal_to_json(cl);
    emit(opt, doc, cl.str() + "\n");
    return 0;
}

int run_colon(const Options& opt, const std::string& by) {
    Input in = parse_input(opt);
    MonomialIdeal divisor = parse_ideal(in.ring, by);
    MonomialIdeal result = divisor.ngens() == 1 ? colon(in.ideal, divisor.gens().front())
                                                : colon(in.ideal, divisor);
    json doc = base_doc(in);
    doc["by"] = ideal_to_json(divisor);
    doc["colon"] = ideal_to_json(result);
    emit(opt, doc, result.str() + "\n");
    return 0;
}

std::string record_text(const PowerRecord& r, const Ring& ring) {
    std::string text = "n=" + std::to_string(r.n) + " depth=" + std::to_string(r.depth) + " ass=";
    for (std::size_t i = 0; i < r.ass.size(); ++i)
        text += (i ? "," : "") + r.ass[i].str(ring);
    if (r.closure_ass) {
        text += " closure_ass=";
        for (std::size_t i = 0; i < r.closure_ass->size(); ++i)
            text += (i ? "," : "") + (*r.closure_ass)[i].str(ring);
        text += " closure_depth=" + std::to_string(*r.closure_depth);
    }
    if (r.strong_persistence)
        text += std::string(" persistence=") + (*r.strong_persistence ? "yes" : "no");
    return text + "\n";
}

std::string indices_text(const StabilityReport& rep) {
    auto idx = [](const std::optional<int>& v) {
        return v ? std::to_string(*v) : std::string("unsettled");
    };
    std::string text = "astab_observed: " + idx(rep.astab_observed) + "\n";
    text += "dstab_observed: " + idx(rep.dstab_observed) + "\n";
    if (rep.with_closure)
        text += "astabbar_observed: " + idx(rep.astabbar_observed) + "\n";
    for (const auto& [key, cert] : rep.certification)
        text += key + ": " + cert_level_name(cert.level) + " (" + cert.reason + ")\n";
    return text;
}

int run_profile(const Options& opt, int horizon, bool with_closure) {
    Input in = parse_input(opt);
    ProfileOptions popts;
    popts.with_closure = with_closure;
    popts.limits = opt.limits;

    // Records stream as each power finishes; a resource abort at a high power
    // still leaves the earlier lines on stdout (text) or in the error
    // document (JSON).
    std::vector<PowerRecord> partial;
    if (opt.as_json) {
        popts.on_record = [&partial](const PowerRecord& r) { partial.push_back(r); };
    } else {
        popts.on_record = [&in](const PowerRecord& r) {
            std::cout << record_text(r, in.ring) << std::flush;
        };
    }

    try {
        StabilityReport rep = profile(in.ideal, horizon, popts);
        if (opt.as_json)
            std::cout << report_to_json(rep, opt.stable_output).dump(2) << "\n";
        else
            std::cout << indices_text(rep);
    } catch (const ResourceLimitError& e) {
        if (opt.as_json) {
            StabilityReport stub{in.ideal, horizon, with_closure, partial, {}, {}, {}, {}};
            json doc = report_to_json(stub, opt.stable_output);
            doc["error"] = json{{"kind", "resource-limit"}, {"message", e.what()}};
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cerr << "resource limit: " << e.what() << "\n";
        }
        return 3;
    }
    return 0;
}

int run_check(const Options& opt, const std::string& kind, int horizon, bool with_closure) {
    Input in = parse_input(opt);
    json doc = base_doc(in);
    doc["check"] = kind;
    doc["horizon"] = horizon;
    if (kind == "dim2") {
        bool ok = dim2_check(in.ideal, horizon, opt.limits);
        doc["pass"] = ok;
        emit(opt, doc, std::string(ok ? "pass" : "fail") + "\n");
        return ok ? 0 : 1;
    }
    if (kind == "dim3") {
        Dim3Result res = dim3_astab_eq_dstab_check(in.ideal, horizon, opt.limits);
        std::string verdict = res.verdict == Dim3Verdict::Equal
                                  ? "equal"
                                  : (res.verdict == Dim3Verdict::Unequal ? "unequal"
                                                                         : "inconclusive");
        doc["verdict"] = verdict;
        doc["astab"] = res.astab ? json(*res.astab) : json(nullptr);
        doc["dstab"] = res.dstab ? json(*res.dstab) : json(nullptr);
        emit(opt, doc, verdict + "\n");
        return res.verdict == Dim3Verdict::Unequal ? 1 : 0;
    }
    if (kind == "monotone") {
        MonotonicityVerdict v = depth_monotonicity(in.ideal, horizon, with_closure, opt.limits);
        doc["non_increasing"] = v.non_increasing;
        doc["depths"] = json(v.depths);
        doc["violation_at"] = v.violation_at ? json(*v.violation_at) : json(nullptr);
        std::string text = v.non_increasing
                               ? "non-increasing\n"
                               : "violation at n=" + std::to_string(*v.violation_at) + "\n";
        emit(opt, doc, text);
        return v.non_increasing ? 0 : 1;
    }
    throw UsageError("unknown check '" + kind + "' (expected dim2, dim3 or monotone)");
}

int run_suite(const Options& opt, const std::vector<int>& c_values, int horizon, int random_count) {
    SuiteOptions sopts;
    if (!c_values.empty())
        sopts.c_values = c_values;
    sopts.horizon_override = horizon;
    sopts.random_count = random_count;
    sopts.limits = opt.limits;
    auto rows = reference_suite(sopts);
    bool ok = suite_passed(rows);

    if (opt.as_json) {
        json doc;
        doc["tool"] = json{{"name", kToolName}, {"version", kToolVersion}};
        doc["suite"] = suite_to_json(rows);
        doc["pass"] = ok;
        std::cout << doc.dump(2) << "\n";
    } else {
        int failed = 0;
        for (const auto& r : rows) {
            if (!r.pass)
                ++failed;
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.family << " " << r.parameter << " | "
                      << r.claim << " | expected " << r.expected << " | got " << r.computed
                      << "\n";
        }
        std::cout << rows.size() << " claims, " << failed << " failed\n";
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact stability engine for monomial ideals"};
    app.require_subcommand(1);

    Options opt;
    int jobs = 1;
    app.add_option("--ring", opt.ring_text, "comma-separated variable names");
    app.add_option("--ideal", opt.ideal_text, "comma-separated monomial generators");
    app.add_flag("--json", opt.as_json, "emit a JSON document");
    app.add_flag("--stable-output", opt.stable_output, "zero timing fields for diffable output");
    app.add_option("--jobs", jobs, "worker count hint; results do not depend on it");
    app.add_option("--limit-box", opt.limits.closure_box_cap, "closure enumeration box cap");
    app.add_option("--limit-gens", opt.limits.lattice_gen_cap, "lcm lattice generator cap");
    app.add_option("--limit-chains", opt.limits.chain_cap, "order complex chain cap");
    app.fallthrough();

    auto* ass_cmd = app.add_subcommand("ass", "associated primes");
    auto* min_cmd = app.add_subcommand("min", "minimal primes and height");
    auto* decompose_cmd = app.add_subcommand("decompose", "irreducible decomposition");
    auto* depth_cmd = app.add_subcommand("depth", "depth and projective dimension of R/I");
    std::uint32_t betti_char = 0;
    auto* betti_cmd = app.add_subcommand("betti", "multigraded Betti table of R/I");
    betti_cmd->add_option("--char", betti_char,
                          "diagnostic: compute ranks over Z/p instead of the rationals");

    std::int64_t closure_power = 1;
    auto* closure_cmd = app.add_subcommand("closure", "integral closure of a power");
    closure_cmd->add_option("--power", closure_power, "which power to close")->required();

    std::string colon_by;
    auto* colon_cmd = app.add_subcommand("colon", "ideal quotient");
    colon_cmd->add_option("--by", colon_by, "monomial or comma-separated ideal")->required();

    int horizon = 6;
    bool with_closure = false;
    auto* profile_cmd = app.add_subcommand("profile", "per-power stability profile");
    profile_cmd->add_option("--horizon", horizon, "largest power to inspect")->required();
    profile_cmd->add_flag("--closure", with_closure, "also profile integral closures");

    std::string check_kind;
    int check_horizon = 6;
    bool check_closure = false;
    auto* check_cmd = app.add_subcommand("check", "dimension and monotonicity checks");
    check_cmd->add_option("kind", check_kind, "dim2 | dim3 | monotone")->required();
    check_cmd->add_option("--horizon", check_horizon, "largest power to inspect");
    check_cmd->add_flag("--closure", check_closure, "run the check on integral closures");

    std::vector<int> c_values;
    int suite_horizon = 0;
    int suite_random = 50;
    auto* suite_cmd = app.add_subcommand("paper-suite", "reproduce the bundled family fixtures");
    suite_cmd->add_option("--c", c_values, "parameter list for the parameterized families")
        ->delimiter(',');
    suite_cmd->add_option("--horizon", suite_horizon, "override every family horizon");
    suite_cmd->add_option("--random", suite_random, "instances per randomized property block");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (jobs < 1)
            throw UsageError("--jobs must be at least 1");
        opt.limits.jobs = jobs;
        if (ass_cmd->parsed())
            return run_ass(opt);
        if (min_cmd->parsed())
            return run_min(opt);
        if (decompose_cmd->parsed())
            return run_decompose(opt);
        if (depth_cmd->parsed())
            return run_depth(opt);
        if (betti_cmd->parsed())
            return run_betti(opt, betti_char);
        if (closure_cmd->parsed())
            return run_closure(opt, closure_power);
        if (colon_cmd->parsed())
            return run_colon(opt, colon_by);
        if (profile_cmd->parsed())
            return run_profile(opt, horizon, with_closure);
        if (check_cmd->parsed())
            return run_check(opt, check_kind, check_horizon, check_closure);
        if (suite_cmd->parsed())
            return run_suite(opt, c_values, suite_horizon, suite_random);
        throw UsageError("no subcommand given");
    } catch (const ResourceLimitError& e) {
        if (opt.as_json)
            std::cout << json{{"error", {{"kind", "resource-limit"}, {"message", e.what()}}}}.dump(2)
                      << "\n";
        else
            std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const ExponentOverflow& e) {
        if (opt.as_json)
            std::cout << json{{"error", {{"kind", "overflow"}, {"message", e.what()}}}}.dump(2)
                      << "\n";
        else
            std::cerr << "overflow: " << e.what() << "\n";
        return 3;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
