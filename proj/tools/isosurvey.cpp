// Command-line front end over the survey toolkit: bound arithmetic, subgroup
// scans, genus computations, local and global isogeny tests, class-number
// checks and the end-to-end survey pipeline.  Every subcommand prints JSON on
// standard output.  Exit codes: 0 completed, 1 a validation the subcommand
// performs failed, 2 input error.

#include "iso/bqf.hpp"
#include "iso/cusp5.hpp"
#include "iso/elkies.hpp"
#include "iso/genus.hpp"
#include "iso/scan.hpp"
#include "iso/survey.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::ordered_json;

namespace {

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

mpq_class parse_rational(const std::string& s) {
    mpq_class r;
    try {
        r = mpq_class(s);
    } catch (const std::invalid_argument&) {
        throw std::domain_error("not a rational: '" + s + "'");
    }
    r.canonicalize();
    return r;
}

iso::NumberFieldDesc field_from_sqrt(long long D) {
    return D == 1 ? iso::field_rationals() : iso::field_quadratic(D);
}

iso::ModPoly load_phi(const std::string& dir, int ell) {
    return iso::modpoly_load(dir + "/phi" + std::to_string(ell) + ".txt");
}

ordered_json verdict_json(const iso::SurveyVerdict& v) {
    ordered_json j;
    j["ell"] = v.ell;
    j["j"] = iso::qf_str(v.j);
    if (!v.error.empty()) {
        j["error"] = v.error;
        return j;
    }
    j["tested"] = v.tested;
    j["failing"] = v.failing;
    j["pass_fraction"] = v.pass_fraction;
    j["global_over_K"] = v.global_over_K;
    j["global_over_ext"] = v.global_over_ext;
    j["cm_guard"] = v.cm_guard_ok;
    j["classification"] = v.classification;
    return j;
}

ordered_json local_scan_json(const iso::LocalScanReport& rep) {
    ordered_json j;
    j["ell"] = rep.ell;
    j["bound"] = rep.bound;
    j["tested"] = (long long)rep.tested.size();
    auto failing = ordered_json::array();
    for (const auto& lp : rep.failing) {
        ordered_json f;
        f["p"] = lp.p;
        f["fdeg"] = lp.fdeg;
        f["emb"] = lp.emb;
        f["a"] = lp.a;
        failing.push_back(std::move(f));
    }
    j["failing"] = std::move(failing);
    j["pass_fraction"] = rep.pass_ratio();
    ordered_json sk;
    for (const auto& [why, ps] : rep.skipped) sk[why] = ps;
    j["skipped"] = std::move(sk);
    return j;
}

std::vector<iso::QuadFieldElem> read_j_file(const std::string& path,
                                            long long D) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");
    std::vector<iso::QuadFieldElem> js;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        std::string a, b;
        if (!(ss >> a) || a[0] == '#') continue;
        iso::QuadFieldElem j(parse_rational(a));
        if (ss >> b) {
            if (D == 1)
                throw std::domain_error(path +
                                        ": irrational j needs --field-sqrt");
            j = iso::QuadFieldElem(parse_rational(a), parse_rational(b), D);
        }
        js.push_back(j);
    }
    return js;
}

int run_bound(int d, long long disc) {
    iso::NumberFieldDesc K;
    if (d == 1) {
        if (disc != 1)
            throw std::domain_error("degree 1 forces discriminant 1");
        K = iso::field_rationals();
    } else if (d == 2) {
        long long r = ((disc % 4) + 4) % 4;
        long long D = r == 1 ? disc : disc % 4 == 0 ? disc / 4 : 0;
        if (D == 0)
            throw std::domain_error("not a quadratic field discriminant");
        K = iso::field_quadratic(D);
        if (K.Delta != disc)
            throw std::domain_error("not a quadratic field discriminant");
    } else {
        K = iso::field_general(d, disc);
    }
    ordered_json j;
    j["degree"] = d;
    j["disc"] = disc;
    j["bound"] = iso::exceptional_bound(K);
    emit(j);
    return 0;
}

int run_window(int d) {
    ordered_json j;
    j["degree"] = d;
    j["window"] = iso::theorem4_window(d);
    emit(j);
    return 0;
}

int run_group_scan(int ell, const std::string& mode, const std::string& out) {
    auto rep = iso::enumerate_exceptional(ell, iso::scan_mode_from_string(mode));
    if (ell <= 13) {
        for (auto& v : iso::verify_lemma_split(ell))
            rep.violations.push_back(std::move(v));
        for (auto& v : iso::verify_lemma_sl2(ell))
            rep.violations.push_back(std::move(v));
    }
    std::string text = iso::scan_report_json(rep);
    std::cout << text << "\n";
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw std::runtime_error(out + ": cannot write");
        f << text << "\n";
    }
    return rep.violations.empty() ? 0 : 1;
}

ordered_json closed_genus_json(int ell, const std::string& kind) {
    ordered_json c;
    if (kind == "split") {
        c["integral"] = true;
        c["genus"] = iso::genus_split_closed(ell);
    } else if (kind == "borel") {
        c["integral"] = true;
        c["genus"] = iso::genus_borel_closed(ell);
    } else {
        auto g = iso::genus_exceptional_closed(ell, kind);
        c["integral"] = g.integral;
        c["numerator"] = g.numerator;
        c["denominator"] = g.denominator;
        if (g.integral) c["genus"] = g.genus;
    }
    return c;
}

ordered_json coset_genus_json(int ell, const std::string& kind) {
    auto g = iso::genus_from_cosets(ell, kind);
    ordered_json c;
    c["mu"] = g.mu;
    c["nu2"] = g.nu2;
    c["nu3"] = g.nu3;
    c["nu_inf"] = g.nu_inf;
    c["genus"] = g.genus;
    return c;
}

int run_genus(int ell, const std::string& kind, const std::string& method) {
    ordered_json j;
    j["ell"] = ell;
    j["kind"] = kind;
    j["method"] = method;
    int rc = 0;
    if (method == "closed" || method == "both")
        j["closed"] = closed_genus_json(ell, kind);
    if (method == "cosets" || method == "both")
        j["cosets"] = coset_genus_json(ell, kind);
    if (method == "both") {
        bool match = j["closed"]["integral"].get<bool>() &&
                     j["closed"]["genus"] == j["cosets"]["genus"];
        j["match"] = match;
        if (!match) rc = 1;
    }
    emit(j);
    return rc;
}

int run_local_scan(int ell, const std::string& jstr, long long D,
                   long long bound) {
    iso::QuadFieldElem j(parse_rational(jstr), mpq_class(0), D);
    auto E = iso::curve_from_j(j);
    auto rep = iso::local_scan(E, ell, bound);
    ordered_json out = local_scan_json(rep);
    out["j"] = iso::qf_str(j);
    out["D"] = D;
    emit(out);
    return 0;
}

int run_global_test(int ell, const std::string& jstr, long long D,
                    const std::string& dir) {
    auto phi = load_phi(dir, ell);
    iso::QuadFieldElem j(parse_rational(jstr), mpq_class(0), D);
    auto rep = iso::global_isogeny_test(phi, j, D);
    ordered_json out;
    out["ell"] = ell;
    out["j"] = iso::qf_str(j);
    out["D"] = D;
    auto roots = ordered_json::array();
    for (const auto& r : rep.roots_in_K) roots.push_back(iso::qf_str(r));
    out["roots_in_K"] = std::move(roots);
    auto quads = ordered_json::array();
    for (const auto& q : rep.quad_factors) {
        ordered_json f;
        f["s"] = iso::qf_str(q.s);
        f["t"] = iso::qf_str(q.t);
        f["splits_minus_ell"] = q.splits_minus_ell;
        quads.push_back(std::move(f));
    }
    out["quad_factors"] = std::move(quads);
    out["isogenous_over_K"] = rep.isogenous_over_K;
    out["isogenous_over_ext"] = rep.isogenous_over_ext;
    emit(out);
    return 0;
}

int run_elkies7(long H, long long D, long long bound,
                const std::string& dir) {
    auto res = iso::elkies7_point_search(D, H);
    ordered_json out;
    out["height"] = H;
    out["D"] = D;
    auto pts = ordered_json::array();
    for (const auto& p : res.points) {
        ordered_json e;
        e["u"] = iso::qf_str(p.u);
        e["v"] = iso::qf_str(p.v);
        pts.push_back(std::move(e));
    }
    out["points"] = std::move(pts);
    auto js = ordered_json::array();
    for (const auto& j : res.j_values) js.push_back(iso::qf_str(j));
    out["j_values"] = std::move(js);

    auto phi7 = load_phi(dir, 7);
    auto verdicts =
        iso::survey(field_from_sqrt(D), 7, res.j_values, bound, phi7);
    auto vj = ordered_json::array();
    for (const auto& v : verdicts) vj.push_back(verdict_json(v));
    out["verdicts"] = std::move(vj);
    emit(out);
    return 0;
}

int run_cusp5() {
    auto rep = iso::cusp5_certificate();
    std::cout << iso::cusp5_json(rep) << "\n";
    return rep.verdict ? 0 : 1;
}

int run_classnum(long long D) {
    auto forms = iso::reduced_forms(D);
    ordered_json j;
    j["D"] = D;
    j["h"] = (long long)forms.size();
    auto fj = ordered_json::array();
    for (const auto& f : forms)
        fj.push_back(std::vector<long long>{f.a, f.b, f.c});
    j["forms"] = std::move(fj);
    emit(j);
    return 0;
}

int run_cm_check(long long D, int ell) {
    auto rep = iso::isogenous_order_ratio_check(D, ell);
    ordered_json j;
    j["D"] = rep.D;
    j["ell"] = rep.ell;
    j["h_base"] = rep.h_base;
    j["h_sub"] = rep.h_sub;
    j["unit_index"] = rep.unit_index;
    j["ratio_counted"] = rep.ratio_counted.get_str();
    j["ratio_formula"] = rep.ratio_formula.get_str();
    j["match"] = rep.match;
    j["lower_bound_ok"] = rep.lower_bound_ok;
    emit(j);
    return rep.match ? 0 : 1;
}

int run_survey(int ell, long long D, long long bound, const std::string& js,
               const std::string& dir) {
    auto K = field_from_sqrt(D);
    auto list = read_j_file(js, D);
    auto phi = load_phi(dir, ell);
    auto verdicts = iso::survey(K, ell, list, bound, phi);
    auto out = ordered_json::array();
    for (const auto& v : verdicts) out.push_back(verdict_json(v));
    emit(out);
    return 0;
}

int run_five_check(long long bound, const std::string& dir) {
    auto phi5 = load_phi(dir, 5);
    auto rep = iso::five_infinitude_check(bound, phi5);
    ordered_json j;
    j["bound"] = bound;
    j["cusp_certificate"] = rep.cusp_certificate;
    j["witness"] = verdict_json(rep.witness);
    j["witness_is_candidate"] = rep.witness_is_candidate;
    j["split_scan_empty"] = rep.split_scan_empty;
    j["sl2_lemma_clean"] = rep.sl2_lemma_clean;
    j["ok"] = rep.ok;
    emit(j);
    return rep.ok ? 0 : 1;
}

int run_dprime(const std::string& jclass, int ell) {
    iso::JClass cls;
    if (jclass == "generic")
        cls = iso::JClass::generic;
    else if (jclass == "1728")
        cls = iso::JClass::j1728;
    else if (jclass == "0")
        cls = iso::JClass::j0;
    else
        throw std::domain_error("jclass must be generic, 1728 or 0");
    ordered_json j;
    j["jclass"] = jclass;
    j["ell"] = ell;
    j["dprime"] = iso::semistable_degree(cls, ell);
    emit(j);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"local-global isogeny survey toolkit"};
    app.require_subcommand(1);

    int deg = 1, ell = 0;
    long long disc = 1, fsqrt = 1, bound = 10000;
    long height = 50;
    std::string mode = "all", kind, method = "both", jstr, out_file;
    std::string modpoly_dir = "data", js_file, jclass;

    auto* c_bound = app.add_subcommand("bound", "largest admissible level");
    c_bound->add_option("--degree", deg)->required();
    c_bound->add_option("--disc", disc)->required();

    auto* c_window = app.add_subcommand("window", "levels open in degree d");
    c_window->add_option("--degree", deg)->required();

    auto* c_scan = app.add_subcommand("group-scan", "exceptional subgroups");
    c_scan->add_option("--ell", ell)->required();
    c_scan->add_option("--mode", mode)->check(CLI::IsMember({"split", "sl2", "all"}));
    c_scan->add_option("--out", out_file);

    auto* c_genus = app.add_subcommand("genus", "modular curve genus");
    c_genus->add_option("--ell", ell)->required();
    c_genus->add_option("--kind", kind)
        ->required()
        ->check(CLI::IsMember({"split", "A4", "S4", "A5", "borel"}));
    c_genus->add_option("--method", method)
        ->check(CLI::IsMember({"closed", "cosets", "both"}));

    auto* c_local = app.add_subcommand("local-scan", "reducibility at primes");
    c_local->add_option("--ell", ell)->required();
    c_local->add_option("--j", jstr)->required();
    c_local->add_option("--field-sqrt", fsqrt);
    c_local->add_option("--bound", bound)->required();

    auto* c_global = app.add_subcommand("global-test", "isogeny over the field");
    c_global->add_option("--ell", ell)->required();
    c_global->add_option("--j", jstr)->required();
    c_global->add_option("--field-sqrt", fsqrt);
    c_global->add_option("--modpoly-dir", modpoly_dir)->required();

    auto* c_elkies = app.add_subcommand("elkies7", "point search and verdicts");
    c_elkies->add_option("--height", height)->required();
    c_elkies->add_option("--field-sqrt", fsqrt);
    c_elkies->add_option("--bound", bound)->capture_default_str();
    c_elkies->add_option("--modpoly-dir", modpoly_dir)->capture_default_str();

    auto* c_cusp = app.add_subcommand("cusp5", "cusp field certificate");

    auto* c_class = app.add_subcommand("classnum", "reduced form count");
    c_class->add_option("--disc", disc)->required();

    auto* c_cm = app.add_subcommand("cm-check", "class number ratio");
    c_cm->add_option("--disc", disc)->required();
    c_cm->add_option("--ell", ell)->required();

    auto* c_survey = app.add_subcommand("survey", "batch local-global pipeline");
    c_survey->add_option("--ell", ell)->required();
    c_survey->add_option("--field-sqrt", fsqrt)->required();
    c_survey->add_option("--bound", bound)->required();
    c_survey->add_option("--js", js_file)->required();
    c_survey->add_option("--modpoly-dir", modpoly_dir)->capture_default_str();

    auto* c_five = app.add_subcommand("five-check", "level 5 evidence bundle");
    c_five->add_option("--bound", bound)->capture_default_str();
    c_five->add_option("--modpoly-dir", modpoly_dir)->capture_default_str();

    auto* c_dprime = app.add_subcommand("dprime", "semistable reduction degree");
    c_dprime->add_option("--jclass", jclass)->required();
    c_dprime->add_option("--ell", ell)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (c_bound->parsed()) return run_bound(deg, disc);
        if (c_window->parsed()) return run_window(deg);
        if (c_scan->parsed()) return run_group_scan(ell, mode, out_file);
        if (c_genus->parsed()) return run_genus(ell, kind, method);
        if (c_local->parsed()) return run_local_scan(ell, jstr, fsqrt, bound);
        if (c_global->parsed())
            return run_global_test(ell, jstr, fsqrt, modpoly_dir);
        if (c_elkies->parsed())
            return run_elkies7(height, fsqrt, bound, modpoly_dir);
        if (c_cusp->parsed()) return run_cusp5();
        if (c_class->parsed()) return run_classnum(disc);
        if (c_cm->parsed()) return run_cm_check(disc, ell);
        if (c_survey->parsed())
            return run_survey(ell, fsqrt, bound, js_file, modpoly_dir);
        if (c_five->parsed()) return run_five_check(bound, modpoly_dir);
        if (c_dprime->parsed()) return run_dprime(jclass, ell);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
