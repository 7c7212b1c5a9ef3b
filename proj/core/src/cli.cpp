#include "mufold/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mufold/arith.hpp"
#include "mufold/milnor.hpp"
#include "mufold/normalform.hpp"
#include "mufold/parser.hpp"
#include "mufold/unfolding.hpp"

namespace mufold {

namespace {

long parse_long(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        fail(ErrorCode::SyntaxError, std::string("expected an integer for ") + what +
                                         ", got '" + s + "'");
    }
}

void require_vars(const Polynomial& p, std::initializer_list<Var> allowed,
                  const char* what) {
    for (int i = 0; i < kNumVars; ++i) {
        Var v = static_cast<Var>(i);
        bool ok = false;
        for (Var a : allowed)
            if (a == v) ok = true;
        if (!ok && p.uses(v))
            fail(ErrorCode::PreconditionViolated,
                 std::string(what) + " may only use the variable(s) " +
                     [&] {
                         std::string s;
                         for (Var a : allowed) {
                             if (!s.empty()) s += ", ";
                             s += kVarNames[static_cast<int>(a)];
                         }
                         return s;
                     }());
    }
}

nlohmann::json exponents_json(const CharExponents& ce) {
    nlohmann::json j;
    j["e"] = ce.e;
    j["b"] = ce.b;
    j["count"] = ce.count();
    return j;
}

std::string join_longs(const std::vector<long>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}

} // namespace

PuiseuxBranch parse_branch_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        fail(ErrorCode::SyntaxError,
             "branch spec must look like '<m>:<expression in u>'");
    long m = parse_long(spec.substr(0, colon), "the branch multiplicity");
    Polynomial y = parse_polynomial(spec.substr(colon + 1));
    require_vars(y, {Var::u}, "a branch y-coordinate");
    std::map<long, Rational> terms;
    for (const auto& [mono, c] : y.terms()) {
        if (mono.total_degree() == 0)
            fail(ErrorCode::PreconditionViolated,
                 "a branch must pass through the origin");
        terms[mono[Var::u]] = c;
    }
    return PuiseuxBranch(m, std::move(terms));
}

PlaneCurveGerm parse_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail(ErrorCode::PreconditionViolated, "cannot open curve file '" + path + "'");
    std::vector<PuiseuxBranch> branches;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;
        branches.push_back(parse_branch_spec(line));
    }
    return PlaneCurveGerm(std::move(branches));
}

CorankOneGerm parse_germ_spec(const std::string& spec) {
    auto bar = spec.find('|');
    if (bar == std::string::npos || spec.find('|', bar + 1) != std::string::npos)
        fail(ErrorCode::SyntaxError, "germ spec must look like '<p-expr>|<q-expr>'");
    Polynomial p = parse_polynomial(spec.substr(0, bar));
    Polynomial q = parse_polynomial(spec.substr(bar + 1));
    return CorankOneGerm(std::move(p), std::move(q));
}

namespace {

MinimalitySpec parse_multi_spec(const std::string& s) {
    std::vector<long> ms;
    std::vector<int> ks;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ';')) {
        auto comma = part.find(',');
        if (comma == std::string::npos)
            fail(ErrorCode::SyntaxError,
                 "--multi expects 'm1,k1;m2,k2;...' pairs");
        ms.push_back(parse_long(part.substr(0, comma), "a branch multiplicity"));
        ks.push_back(static_cast<int>(
            parse_long(part.substr(comma + 1), "a branch exponent count")));
    }
    return MinimalitySpec(std::move(ms), std::move(ks));
}

Polynomial implicitize_product(const PlaneCurveGerm& g) {
    Polynomial h(1);
    for (const auto& b : g.branches()) h = h * implicitize(b);
    return h;
}

// ---- subcommand handlers ----------------------------------------------

void cmd_exponents(Report& r, const std::string& branch) {
    PuiseuxBranch b = parse_branch_spec(branch);
    CharExponents ce = characteristic_exponents(b);
    r.result["branch"] = b.str();
    r.result["exponents"] = exponents_json(ce);
    r.text.push_back("branch: " + b.str());
    r.text.push_back("exponents: " + join_longs(ce.e));
    r.text.push_back("gcd sequence: " + join_longs(ce.b));
}

void cmd_milnor(Report& r, const std::string& branch, const std::string& curve,
                const std::string& implicit, bool oracle) {
    int given = (!branch.empty()) + (!curve.empty()) + (!implicit.empty());
    if (given != 1)
        fail(ErrorCode::SyntaxError,
             "give exactly one of --branch, --curve, --implicit");
    if (!implicit.empty()) {
        Polynomial h = parse_polynomial(implicit);
        require_vars(h, {Var::x, Var::y}, "an implicit curve equation");
        MilnorNumber mu = milnor_implicit_oracle(h);
        r.result["mu"] = mu;
        r.result["route"] = "oracle";
        r.text.push_back("mu: " + std::to_string(mu) + "  (resultant oracle)");
        return;
    }
    MilnorNumber mu = 0;
    Polynomial h;
    if (!branch.empty()) {
        PuiseuxBranch b = parse_branch_spec(branch);
        mu = milnor_from_exponents(characteristic_exponents(b));
        if (oracle) h = implicitize(b);
    } else {
        PlaneCurveGerm g = parse_curve_file(curve);
        mu = milnor_multibranch(g);
        if (oracle) h = implicitize_product(g);
    }
    r.result["mu"] = mu;
    r.result["route"] = "exponent-formula";
    r.text.push_back("mu: " + std::to_string(mu));
    if (oracle) {
        MilnorNumber check = milnor_implicit_oracle(h);
        r.result["mu_oracle"] = check;
        r.result["oracle_agrees"] = (check == mu);
        r.text.push_back("oracle: " + std::to_string(check) +
                         (check == mu ? "  (agrees)" : "  (MISMATCH)"));
        if (check != mu) r.exit_code = 5;
    }
}

void cmd_minimal_form(Report& r, long m, int k, const std::string& multi) {
    if (multi.empty() && (m < 1 || k < 1))
        fail(ErrorCode::SyntaxError, "give --m and --k, or --multi");
    if (!multi.empty()) {
        MinimalitySpec spec = parse_multi_spec(multi);
        PlaneCurveGerm g = minimal_normal_form_germ(spec);
        MilnorNumber mu = milnor_multibranch(g);
        r.result["normal_form"] = g.str();
        r.result["mu"] = mu;
        r.text.push_back("normal form: " + g.str());
        r.text.push_back("mu: " + std::to_string(mu));
        return;
    }
    PuiseuxBranch b = minimal_normal_form(m, k);
    CharExponents ce = characteristic_exponents(b);
    MilnorNumber mu = milnor_from_exponents(ce);
    r.result["normal_form"] = b.str();
    r.result["exponents"] = exponents_json(ce);
    r.result["mu"] = mu;
    r.text.push_back("normal form: " + b.str());
    r.text.push_back("exponents: " + join_longs(ce.e));
    r.text.push_back("mu: " + std::to_string(mu));
}

void cmd_check_minimal(Report& r, const std::string& branch,
                       const std::string& curve) {
    if (branch.empty() == curve.empty())
        fail(ErrorCode::SyntaxError, "give exactly one of --branch, --curve");
    bool minimal = false;
    std::string shown;
    if (!branch.empty()) {
        PuiseuxBranch b = parse_branch_spec(branch);
        minimal = is_minimal_branch(b);
        shown = b.str();
    } else {
        PlaneCurveGerm g = parse_curve_file(curve);
        minimal = is_minimal_germ(g);
        shown = g.str();
    }
    r.result["input"] = shown;
    r.result["minimal"] = minimal;
    r.text.push_back("input: " + shown);
    r.text.push_back(std::string("minimal: ") + (minimal ? "true" : "false"));
}

void cmd_deform_minimal(Report& r, const std::string& branch) {
    PuiseuxBranch b = parse_branch_spec(branch);
    DeformationFamily fam = deform_to_minimal(b);
    PlaneCurveGerm at_one = fam.specialize(Rational(1));
    CharExponents ce = characteristic_exponents(at_one.branches()[0]);
    std::vector<long> added;
    for (const auto& [a, c] : fam.added_terms[0]) added.push_back(a);
    r.result["family"] = fam.str();
    r.result["added_exponents"] = added;
    r.result["already_minimal"] = fam.is_trivial();
    r.result["exponents_at_t1"] = exponents_json(ce);
    r.text.push_back("family: " + fam.str());
    if (fam.is_trivial()) r.text.push_back("already minimal: identity family");
    r.text.push_back("exponents at t=1: " + join_longs(ce.e));
}

void cmd_dpoints(Report& r, const std::string& germ) {
    CorankOneGerm f = parse_germ_spec(germ);
    Polynomial d = double_point_curve(f);
    bool fd = is_finitely_determined(f, d);
    r.result["germ"] = f.str();
    r.result["double_point_curve"] = d.str();
    r.result["finitely_determined"] = fd;
    r.text.push_back("germ: " + f.str());
    r.text.push_back("double point curve: " + d.str());
    r.text.push_back(std::string("finitely determined: ") + (fd ? "true" : "false"));
}

void cmd_slice(Report& r, const std::string& germ) {
    CorankOneGerm f = parse_germ_spec(germ);
    auto type = detect_qh_type(f);
    if (!type)
        fail(ErrorCode::NotQuasihomogeneous,
             "slice formulas need a quasihomogeneous germ");
    SliceData sd = slice_exponents(f, *type);
    bool minimal = sd.exponents == minimal_char_exponents(
                                       sd.exponents.multiplicity(),
                                       sd.exponents.count());
    r.result["germ"] = f.str();
    r.result["type"] = type->str();
    r.result["exponents"] = exponents_json(sd.exponents);
    r.result["mu"] = sd.mu;
    r.result["case"] = slice_case_name(sd.case_tag);
    r.result["minimal"] = minimal;
    r.text.push_back("germ: " + f.str());
    r.text.push_back("type: " + type->str());
    r.text.push_back("slice exponents: " + join_longs(sd.exponents.e) +
                     "  [" + slice_case_name(sd.case_tag) + "]");
    r.text.push_back("slice mu: " + std::to_string(sd.mu));
    r.text.push_back(std::string("slice minimal: ") + (minimal ? "true" : "false"));
}

void cmd_crosscaps(Report& r, const std::string& germ) {
    CorankOneGerm f = parse_germ_spec(germ);
    long n = cross_cap_count(f);
    r.result["germ"] = f.str();
    r.result["cross_caps"] = n;
    r.text.push_back("germ: " + f.str());
    r.text.push_back("cross-caps: " + std::to_string(n));
}

Polynomial parse_delta(const std::string& s, const char* what) {
    if (s.empty()) return Polynomial();
    Polynomial d = parse_polynomial(s);
    require_vars(d, {Var::x, Var::y, Var::t}, what);
    return d;
}

void cmd_unfold(Report& r, const std::string& germ, const std::string& d1,
                const std::string& d2, const std::string& d3) {
    CorankOneGerm f = parse_germ_spec(germ);
    Unfolding F(f, parse_delta(d1, "--delta1"), parse_delta(d2, "--delta2"),
                parse_delta(d3, "--delta3"));
    UnfoldingVerdict v = whitney_verdict(F);
    r.result["unfolding"] = F.str();
    r.result["non_negative_degree"] = v.non_negative_degree;
    r.result["topologically_trivial"] = v.topologically_trivial;
    r.result["triviality_tag"] = v.triviality_tag;
    r.result["equimultiple"] = v.equimultiple;
    r.result["multiplicity"] = {{"base", v.multiplicity_base},
                                {"deformed", v.multiplicity_deformed}};
    r.result["whitney"] = whitney_status_name(v.whitney);
    r.result["whitney_tag"] = v.whitney_tag;
    if (v.slice_mu_base) r.result["slice_mu_base"] = *v.slice_mu_base;
    if (v.slice_mu_deformed) r.result["slice_mu_deformed"] = *v.slice_mu_deformed;
    r.text.push_back("unfolding: " + F.str());
    r.text.push_back(std::string("non-negative degree: ") +
                     (v.non_negative_degree ? "true" : "false"));
    r.text.push_back(std::string("topologically trivial: ") +
                     (v.topologically_trivial ? "true" : "false") + "  [" +
                     v.triviality_tag + "]");
    r.text.push_back("equimultiple: " +
                     std::string(v.equimultiple ? "true" : "false") +
                     " (multiplicity " + std::to_string(v.multiplicity_base) +
                     " -> " + std::to_string(v.multiplicity_deformed) + ")");
    r.text.push_back("whitney: " + std::string(whitney_status_name(v.whitney)) +
                     "  [" + v.whitney_tag + "]");
    if (v.slice_mu_base && v.slice_mu_deformed)
        r.text.push_back("slice mu: " + std::to_string(*v.slice_mu_base) + " -> " +
                         std::to_string(*v.slice_mu_deformed));
    else if (v.slice_mu_base)
        r.text.push_back("slice mu: " + std::to_string(*v.slice_mu_base));
}

void cmd_counterexample(Report& r, const std::string& germ) {
    CorankOneGerm f = parse_germ_spec(germ);
    auto type = detect_qh_type(f);
    if (!type)
        fail(ErrorCode::NotQuasihomogeneous,
             "the construction needs a quasihomogeneous germ");
    CounterexampleResult res = counterexample_unfolding(f, *type);
    r.result["unfolding"] = res.unfolding.str();
    r.result["delta1"] = res.unfolding.delta1().str();
    r.result["slice_mu_base"] = res.slice_mu_base;
    r.result["slice_mu_deformed"] = res.slice_mu_deformed;
    r.text.push_back("unfolding: " + res.unfolding.str());
    r.text.push_back("delta1: " + res.unfolding.delta1().str());
    r.text.push_back("predicted slice mu: " + std::to_string(res.slice_mu_base) +
                     " -> " + std::to_string(res.slice_mu_deformed));
}

struct TableOneRow {
    int k;
    const char* form;
    long mu;
};

struct TableTwoRow {
    const char* p;
    const char* q;
    long mu_base;
    long mu_deformed;
};

void cmd_verify_tables(Report& r) {
    static const TableOneRow table1[] = {
        {2, "(u^36, u^37)", 1260},
        {3, "(u^36, u^38+u^39)", 1296},
        {4, "(u^36, u^40+u^42+u^43)", 1372},
        {5, "(u^36, u^48+u^52+u^54+u^55)", 1696},
    };
    static const TableTwoRow table2[] = {
        {"y^16+x*y^15", "y^18+x*y^17+x^17*y", 270, 268},
        {"y^16+x*y^13", "y^22+x*y^19+x^7*y", 328, 326},
        {"y^16+x*y^11", "y^26+x*y^21+x^5*y", 386, 384},
        {"y^16+x*y^9", "y^22+x*y^15+x^3*y", 324, 322},
    };
    int matched = 0, total = 0;
    auto row_line = [&](bool ok, const std::string& line) {
        ++total;
        if (ok) ++matched;
        r.text.push_back(std::string(ok ? "  ok   " : "  FAIL ") + line);
    };

    r.text.push_back("normal forms and Milnor numbers, multiplicity 36:");
    nlohmann::json t1 = nlohmann::json::array();
    for (const auto& row : table1) {
        PuiseuxBranch b = minimal_normal_form(36, row.k);
        MilnorNumber mu = milnor_from_exponents(characteristic_exponents(b));
        MilnorNumber closed = milnor_minimal_closed_form(36, row.k);
        bool ok = b.str() == row.form && mu == row.mu && closed == row.mu;
        row_line(ok, "k=" + std::to_string(row.k) + ": " + b.str() +
                         ", mu=" + std::to_string(mu));
        t1.push_back({{"k", row.k},
                      {"normal_form", b.str()},
                      {"mu", mu},
                      {"expected_mu", row.mu},
                      {"match", ok}});
    }

    r.text.push_back("unfoldings with a dropping slice Milnor number:");
    nlohmann::json t2 = nlohmann::json::array();
    for (const auto& row : table2) {
        CorankOneGerm f(parse_polynomial(row.p), parse_polynomial(row.q));
        auto type = detect_qh_type(f);
        if (!type) {
            row_line(false, std::string(row.p) + " | " + row.q +
                                ": no quasihomogeneous type");
            continue;
        }
        CounterexampleResult res = counterexample_unfolding(f, *type);
        UnfoldingVerdict v = whitney_verdict(res.unfolding);
        bool ok = res.slice_mu_base == row.mu_base &&
                  res.slice_mu_deformed == row.mu_deformed &&
                  v.non_negative_degree && v.topologically_trivial &&
                  v.equimultiple &&
                  v.whitney == WhitneyStatus::NotEquisingular &&
                  v.slice_mu_base == row.mu_base &&
                  v.slice_mu_deformed == row.mu_deformed;
        row_line(ok, res.unfolding.str() + ": slice mu " +
                         std::to_string(res.slice_mu_base) + " -> " +
                         std::to_string(res.slice_mu_deformed) + ", whitney " +
                         whitney_status_name(v.whitney));
        t2.push_back({{"germ", f.str()},
                      {"slice_mu_base", res.slice_mu_base},
                      {"slice_mu_deformed", res.slice_mu_deformed},
                      {"whitney", whitney_status_name(v.whitney)},
                      {"match", ok}});
    }

    r.result["normal_form_table"] = t1;
    r.result["unfolding_table"] = t2;
    r.result["matched"] = matched;
    r.result["total"] = total;
    r.text.push_back(std::to_string(matched) + "/" + std::to_string(total) +
                     " table cells match");
    if (matched != total) r.exit_code = 1;
}

} // namespace

Report run_command(const std::vector<std::string>& args) {
    Report report;
    report.argv = args;
    CLI::App app{"exact invariants of plane curve germs and corank-1 map germs"};
    app.require_subcommand(1);
    bool json_flag = false;
    app.add_flag("--json", json_flag, "emit the deterministic JSON report");

    std::string branch, curve, implicit, germ, multi, d1, d2, d3;
    long m = 0;
    int k = 0;
    bool oracle = false;

    auto* c_exp = app.add_subcommand("exponents", "characteristic exponents of a branch");
    c_exp->add_option("--branch", branch)->required();

    auto* c_mil = app.add_subcommand("milnor", "Milnor number of a plane curve");
    c_mil->add_option("--branch", branch);
    c_mil->add_option("--curve", curve);
    c_mil->add_option("--implicit", implicit);
    c_mil->add_flag("--oracle", oracle, "cross-check with the resultant oracle");

    auto* c_min = app.add_subcommand("minimal-form", "mu-minimal normal form");
    c_min->add_option("--m", m);
    c_min->add_option("--k", k);
    c_min->add_option("--multi", multi, "per-branch pairs m1,k1;m2,k2;...");

    auto* c_chk = app.add_subcommand("check-minimal", "test mu-minimality");
    c_chk->add_option("--branch", branch);
    c_chk->add_option("--curve", curve);

    auto* c_def = app.add_subcommand("deform-minimal",
                                     "deformation onto a minimal normal form");
    c_def->add_option("--branch", branch)->required();

    auto* c_dp = app.add_subcommand("dpoints", "double point curve of a germ");
    c_dp->add_option("--germ", germ)->required();

    auto* c_sl = app.add_subcommand("slice", "transverse slice data");
    c_sl->add_option("--germ", germ)->required();

    auto* c_cc = app.add_subcommand("crosscaps", "cross-cap count");
    c_cc->add_option("--germ", germ)->required();

    auto* c_un = app.add_subcommand("unfold", "verdicts for a 1-parameter unfolding");
    c_un->add_option("--germ", germ)->required();
    c_un->add_option("--delta1", d1);
    c_un->add_option("--delta2", d2);
    c_un->add_option("--delta3", d3);

    auto* c_ce = app.add_subcommand("counterexample",
                                    "unfolding with a dropping slice Milnor number");
    c_ce->add_option("--germ", germ)->required();

    auto* c_vt = app.add_subcommand("verify-tables",
                                    "recompute the embedded normal-form and "
                                    "unfolding tables and diff them");

    // --json may appear anywhere, including after the subcommand
    for (CLI::App* sub : {c_exp, c_mil, c_min, c_chk, c_def, c_dp, c_sl, c_cc,
                          c_un, c_ce, c_vt})
        sub->fallthrough();

    std::vector<const char*> argv;
    argv.push_back("mufold");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        report.command = "usage";
        report.exit_code = 2;
        report.error = "UsageError";
        report.error_message = e.what();
        return report;
    }

    CLI::App* sub = app.get_subcommands().front();
    report.command = sub->get_name();
    try {
        if (sub == c_exp) cmd_exponents(report, branch);
        else if (sub == c_mil) cmd_milnor(report, branch, curve, implicit, oracle);
        else if (sub == c_min) cmd_minimal_form(report, m, k, multi);
        else if (sub == c_chk) cmd_check_minimal(report, branch, curve);
        else if (sub == c_def) cmd_deform_minimal(report, branch);
        else if (sub == c_dp) cmd_dpoints(report, germ);
        else if (sub == c_sl) cmd_slice(report, germ);
        else if (sub == c_cc) cmd_crosscaps(report, germ);
        else if (sub == c_un) cmd_unfold(report, germ, d1, d2, d3);
        else if (sub == c_ce) cmd_counterexample(report, germ);
        else if (sub == c_vt) cmd_verify_tables(report);
    } catch (const Error& e) {
        report.exit_code = exit_code_for(e.code());
        report.error = error_code_name(e.code());
        report.error_message = e.what();
    } catch (const std::exception& e) {
        report.exit_code = 5;
        report.error = "Internal";
        report.error_message = e.what();
    }
    return report;
}

int main_entry(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    bool json = false;
    for (const auto& a : args)
        if (a == "--json") json = true;
    Report report = run_command(args);
    std::cout << (json ? report.render_json() : report.render_text());
    return report.exit_code;
}

} // namespace mufold
