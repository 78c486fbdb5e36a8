#include "cuspfol/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <sstream>

#include "cuspfol/first_integral.hpp"
#include "cuspfol/gluing.hpp"
#include "cuspfol/normal_form.hpp"
#include "cuspfol/parser.hpp"
#include "cuspfol/transversal.hpp"

namespace cuspfol::cli {

using nlohmann::ordered_json;

namespace {

class BadInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ordered_json jet_json(const Jet1 &j, const std::string &var = "z") {
    ordered_json c = ordered_json::array();
    for (int k = 0; k <= j.order(); ++k) c.push_back(j[k].str());
    return {{"order", j.order()}, {"series", j.str(var)}, {"coefficients", c}};
}

ordered_json jet2_json(const Jet2 &j, const std::string &xv = "x", const std::string &yv = "y") {
    return {{"order", j.order()}, {"series", j.str(xv, yv)}};
}

ordered_json form_json(const OneForm &w) {
    return {{"order", w.order()}, {"vars", {w.vars()[0], w.vars()[1]}}, {"form", w.str()}};
}

ordered_json homography_json(const Homography &h) {
    return {{"lambda", h.lambda().str()}, {"mu", h.mu().str()}, {"map", h.str()}};
}

std::vector<std::string> coeff_list(const std::vector<Coeff> &v) {
    std::vector<std::string> out;
    for (const auto &c : v) out.push_back(c.str());
    return out;
}

struct Report {
    std::string command;
    int order = kDefaultOrder;
    std::string verdict;
    ordered_json data = ordered_json::object();
    ordered_json certificates = ordered_json::array();
    std::vector<std::string> lines;
    int exit_code = Success;

    ordered_json json() const {
        return {{"command", command}, {"order", order}, {"verdict", verdict}, {"data", data}, {"certificates", certificates}};
    }
    std::string text() const {
        std::ostringstream os;
        os << command << " (order " << order << "): " << verdict << "\n";
        for (const auto &l : lines) os << "  " << l << "\n";
        return os.str();
    }
};

ParsedForm read_form(const std::string &s, int order) {
    if (s.empty()) throw BadInput("missing form argument");
    return parse_form(s, order);
}

GermDiff1 read_germ(const std::string &s, int order) {
    Jet1 j = parse_series1(s, "z", order);
    try {
        return GermDiff1(j);
    } catch (const std::exception &e) {
        throw BadInput("not a germ of diffeomorphism: " + s + " (" + e.what() + ")");
    }
}

ordered_json reduction_json(const ReductionReport &r) {
    ordered_json d;
    d["valuation"] = r.valuation;
    d["is_valuation_3"] = r.is_valuation_3;
    d["p2"] = r.p2 ? ordered_json(r.p2->str()) : ordered_json();
    d["p2_coefficient"] = r.p2_coefficient.str();
    d["linear_change"] = coeff_list({r.linear_change.begin(), r.linear_change.end()});
    d["radial_relations_hold"] = r.radial_relations_hold;
    d["first_chart_form"] = r.first_chart_form ? form_json(*r.first_chart_form) : ordered_json();
    d["exceptional_power_1"] = r.exceptional_power_1;
    if (r.d2_analysis) {
        const DivisorAnalysis &a = *r.d2_analysis;
        ordered_json pts = ordered_json::array();
        for (const auto &p : a.points)
            pts.push_back({{"factor", p.factor.str("t")},
                           {"multiplicity", p.multiplicity},
                           {"root", p.root ? ordered_json(p.root->str()) : ordered_json()}});
        d["singular_points_on_D2"] = pts;
        d["d2_invariant"] = a.invariant;
        d["d2_restricted"] = a.restricted.str("t");
        d["d2_infinity_multiplicity"] = a.infinity_multiplicity;
        d["d2_certified"] = a.certified;
    } else {
        d["singular_points_on_D2"] = ordered_json();
    }
    d["second_chart_form"] = r.second_chart_form ? form_json(*r.second_chart_form) : ordered_json();
    d["exceptional_power_2"] = r.exceptional_power_2;
    d["corner_regular"] = r.corner_regular;
    d["transverse_to_D1"] = r.transverse_to_D1;
    d["transverse_to_D2"] = r.transverse_to_D2;
    d["inconclusive_order"] = r.inconclusive_order;
    d["reason"] = r.reason;
    return d;
}

int verdict_exit(Verdict v) {
    switch (v) {
    case Verdict::CuspTypeAbsolutelyDicritical:
        return Success;
    case Verdict::Inconclusive:
        return Inconclusive;
    default:
        return Negative;
    }
}

void cmd_reduce(Report &rep, const std::string &input) {
    ParsedForm p = read_form(input, rep.order);
    ReductionReport r = reduce_cusp(p.form);
    rep.verdict = to_string(r.verdict);
    rep.exit_code = verdict_exit(r.verdict);
    rep.data = {{"input", p.print()}};
    rep.data.update(reduction_json(r));
    rep.lines.push_back("input: " + p.form.str());
    rep.lines.push_back("valuation " + std::to_string(r.valuation) + ", exceptional powers (" +
                        std::to_string(r.exceptional_power_1) + ", " + std::to_string(r.exceptional_power_2) + ")");
    if (r.first_chart_form) rep.lines.push_back("first chart: " + r.first_chart_form->str());
    if (r.second_chart_form) rep.lines.push_back("second chart: " + r.second_chart_form->str());
    rep.lines.push_back(r.reason);
}

// reduce, then extract sigma; returns nullopt (and fills the report) when the input is not of cusp type
struct SigmaData {
    ReductionReport reduction;
    GermDiff1 sigma;
};

std::optional<SigmaData> sigma_of(Report &rep, const ParsedForm &p) {
    ReductionReport r = reduce_cusp(p.form);
    if (r.verdict != Verdict::CuspTypeAbsolutelyDicritical) {
        rep.verdict = to_string(r.verdict);
        rep.exit_code = verdict_exit(r.verdict);
        rep.data["reduction"] = reduction_json(r);
        rep.lines.push_back("not of cusp type: " + r.reason);
        return std::nullopt;
    }
    CornerGerm c = corner_germ(r);
    return SigmaData{r, transversal_structure(c, c.order())};
}

void cmd_sigma(Report &rep, const std::string &input) {
    ParsedForm p = read_form(input, rep.order);
    auto sd = sigma_of(rep, p);
    if (!sd) return;
    const GermDiff1 &s = sd->sigma;
    rep.verdict = "TransversalStructure";
    rep.data["input"] = p.print();
    rep.data["sigma"] = jet_json(s.jet());
    rep.data["convention"] = "sigma maps D2 = {xi=0} (coordinate t) to D1 = {t=0} (coordinate xi)";
    rep.data["identity"] = s.jet() == Jet1::identity(s.order());
    if (s.order() >= 3) {
        Jet1 S = schwarzian(s);
        rep.data["schwarzian"] = jet_json(S);
        rep.data["homographic"] = S.is_zero();
    } else {
        rep.data["schwarzian"] = ordered_json();
        rep.data["homographic"] = ordered_json();
    }
    rep.data["canonical_alpha"] = canonical_alpha(s).str();
    rep.lines.push_back("sigma = " + s.jet().str() + " + O(z^" + std::to_string(s.order() + 1) + ")");
    if (s.order() >= 3) rep.lines.push_back("S(sigma) = " + schwarzian(s).str());
}

void cmd_schwarzian(Report &rep, const std::string &input) {
    GermDiff1 s = read_germ(input, rep.order);
    if (s.order() < 3) throw BadInput("order must be at least 3");
    Jet1 S = schwarzian(s);
    rep.verdict = S.is_zero() ? "Homographic" : "NonHomographic";
    rep.data = {{"sigma", jet_json(s.jet())}, {"schwarzian", jet_json(S)}, {"canonical_alpha", canonical_alpha(s).str()}};
    rep.lines.push_back("S(sigma) = " + S.str() + " + O(z^" + std::to_string(S.order() + 1) + ")");
}

ordered_json cstar_json(const CStarVerdict &v) {
    ordered_json cons = ordered_json::array();
    for (const auto &c : v.constraints) cons.push_back({{"exponent", c.exponent}, {"value", c.value.str()}});
    std::string kind = v.kind == CStarVerdict::Kind::Equivalent            ? "equivalent"
                       : v.kind == CStarVerdict::Kind::EquivalentExtension ? "equivalent over C, witness in an extension field"
                                                                           : "not equivalent";
    return {{"kind", kind},
            {"any_epsilon", v.any_epsilon},
            {"constraints", cons},
            {"gcd_exponent", v.gcd_exponent},
            {"reduced_value", v.reduced_value.str()},
            {"witnesses", coeff_list(v.witnesses)},
            {"reason", v.reason}};
}

void cmd_equiv_pairs(Report &rep, const std::array<std::string, 4> &pair) {
    NormalPair p0{read_germ(pair[0], rep.order), parse_coeff(pair[1])};
    NormalPair p1{read_germ(pair[2], rep.order), parse_coeff(pair[3])};
    PairVerdict v = normal_pair_equivalent(p0, p1);
    rep.verdict = v.equivalent ? "Equivalent" : "NotEquivalent";
    rep.exit_code = v.equivalent ? Success : Negative;
    auto canon = [](const CanonicalPair &c) {
        return ordered_json{{"h0", homography_json(c.h0)}, {"sigma", jet_json(c.sigma.jet())}, {"alpha", c.alpha.str()}};
    };
    rep.data = {{"mode", "normal-pairs"}, {"canonical0", canon(v.canonical0)}, {"canonical1", canon(v.canonical1)}, {"cstar", cstar_json(v.cstar)}};
    rep.certificates.push_back({{"kind", "cstar"}, {"constraints", rep.data["cstar"]["constraints"]}});
    rep.lines.push_back("C* orbit test on the Schwarzians: " + rep.data["cstar"]["kind"].get<std::string>());
    if (!v.cstar.reason.empty()) rep.lines.push_back(v.cstar.reason);
}

void cmd_equiv_forms(Report &rep, const std::string &a, const std::string &b) {
    ParsedForm p0 = read_form(a, rep.order), p1 = read_form(b, rep.order);
    rep.data["mode"] = "forms";
    if (p0.form == p1.form) {
        rep.verdict = "Equivalent";
        rep.data["reason"] = "identical forms";
        rep.lines.push_back("identical forms");
        return;
    }
    auto s0 = sigma_of(rep, p0);
    if (!s0) return;
    auto s1 = sigma_of(rep, p1);
    if (!s1) return;
    int n = std::min(s0->sigma.order(), s1->sigma.order());
    if (n < 3) throw BadInput("order too small to compare Schwarzians");
    Jet1 S0 = schwarzian(s0->sigma).truncate(n - 3), S1 = schwarzian(s1->sigma).truncate(n - 3);
    rep.data["sigma0"] = jet_json(s0->sigma.jet());
    rep.data["sigma1"] = jet_json(s1->sigma.jet());
    rep.data["schwarzian0"] = jet_json(S0);
    rep.data["schwarzian1"] = jet_json(S1);
    if (S0.is_zero() && S1.is_zero()) {
        rep.verdict = "Equivalent";
        rep.data["reason"] = "both transversal structures are homographic";
        rep.lines.push_back("both transversal structures are homographic");
        return;
    }
    HomographyRelation hr = homography_relation(S0, S1);
    ordered_json cands = ordered_json::array();
    for (const auto &h : hr.candidates) cands.push_back(homography_json(h));
    rep.data["homography_relation"] = {{"related", hr.related},
                                       {"lambda_poly", hr.lambda_poly.str("lambda")},
                                       {"mu_const", hr.mu_const.str()},
                                       {"mu_lin", hr.mu_lin.str()},
                                       {"candidates", cands},
                                       {"reason", hr.reason}};
    if (!hr.related) {
        rep.verdict = "NotEquivalent";
        rep.exit_code = Negative;
        rep.data["reason"] = "Schwarzians not related by any homography";
        rep.certificates.push_back({{"kind", "homography-elimination"}, {"reason", hr.reason}});
        rep.lines.push_back("Schwarzians not related by any homography: " + hr.reason);
    } else {
        rep.verdict = "Inconclusive";
        rep.exit_code = Inconclusive;
        rep.data["reason"] = "Schwarzians are homography-related; the gluing modulus is not recovered from a 1-form";
        rep.lines.push_back(rep.data["reason"].get<std::string>());
    }
}

void cmd_symmetries(Report &rep, const std::string &input) {
    Jet1 f = parse_series1(input, "z", rep.order);
    SymmetryReport s = homographic_symmetries(f);
    rep.verdict = s.infinite ? "Infinite" : "Finite";
    ordered_json cands = ordered_json::array();
    for (const auto &h : s.candidates) cands.push_back(homography_json(h));
    rep.data = {{"f", jet_json(f)},
                {"infinite", s.infinite},
                {"candidates", cands},
                {"lambda_constraint", s.lambda_constraint.str("lambda")},
                {"mu", "mu = " + s.mu_const.str() + " + (" + s.mu_lin.str() + ")*lambda"},
                {"nonrepresentable", s.nonrepresentable.str("lambda")}};
    if (s.infinite) {
        rep.lines.push_back("f vanishes to the working order: every homography is a symmetry");
    } else {
        rep.lines.push_back("lambda is a root of " + s.lambda_constraint.str("lambda"));
        for (const auto &h : s.candidates) rep.lines.push_back("candidate " + h.str());
        if (s.nonrepresentable.degree() > 0)
            rep.lines.push_back("roots outside Q(i): " + s.nonrepresentable.str("lambda"));
    }
}

void cmd_first_integral(Report &rep, const std::string &input, int degree) {
    GermDiff1 s = read_germ(input, rep.order);
    if (rep.order < 2 * degree + 2) throw BadInput("order must be at least 2*degree+2");
    WitnessReport w = no_first_integral_witness(s, degree, rep.order);
    rep.verdict = w.relation_found ? "RelationFound" : "NoRelationWithinBound";
    rep.exit_code = w.relation_found ? Success : Negative;
    rep.data = {{"sigma", jet_json(s.jet())},
                {"relation_found", w.relation_found},
                {"r1", w.r1 ? ordered_json(w.r1->str()) : ordered_json()},
                {"r2", w.r2 ? ordered_json(w.r2->str()) : ordered_json()},
                {"candidates_tested", w.candidates_tested},
                {"degree_bound", w.degree_bound},
                {"note", w.note}};
    HankelReport hk = hankel_rationality(s.jet(), degree, rep.order);
    rep.certificates.push_back({{"kind", "hankel-determinants of sigma"}, {"values", coeff_list(hk.determinants)}});
    if (w.relation_found) rep.lines.push_back("R1 = " + w.r1->str() + ", R2 = " + w.r2->str());
    rep.lines.push_back(w.note);
}

void cmd_cohomology(Report &rep, const std::string &sig, const std::string &alpha, const std::string &target) {
    int n = rep.order;
    GermDiff1 s = read_germ(sig, n + 1);
    Coeff a0 = parse_coeff(alpha);
    Jet2 T = parse_series2(target, "x", "y", n);
    CoboundaryResult r = coboundary_solve(s, a0, T, n);
    GluingCocycle c(s, Jet2::constant(n, 1) + a0 * Jet2::y(n));
    int corank = coboundary_corank(c, n);
    rep.verdict = r.feasible ? "Coboundary" : "NotCoboundary";
    rep.exit_code = r.feasible ? Success : Negative;
    rep.data = {{"sigma", jet_json(s.jet())},
                {"alpha0", a0.str()},
                {"target", jet2_json(T, "x1", "y1")},
                {"frame", "target * x1 d/dx1"},
                {"feasible", r.feasible},
                {"A2", r.A2 ? jet2_json(*r.A2, "x1", "y1") : ordered_json()},
                {"A1_tilde", r.A1_tilde ? jet2_json(*r.A1_tilde, "x3", "y3") : ordered_json()},
                {"obstructed_degree", r.obstructed_degree},
                {"corank", corank}};
    if (!r.feasible) {
        ordered_json rows = ordered_json::array();
        for (size_t k = 0; k < r.certificate.size(); ++k)
            if (!r.certificate[k].is_zero())
                rows.push_back({{"row", k < r.certificate_rows.size() ? r.certificate_rows[k] : std::to_string(k)},
                                {"weight", r.certificate[k].str()}});
        rep.certificates.push_back({{"kind", "infeasibility"}, {"obstructed_degree", r.obstructed_degree}, {"rows", rows}});
        rep.lines.push_back("no solution: first obstruction in degree " + std::to_string(r.obstructed_degree));
    } else {
        rep.lines.push_back("A2 = " + r.A2->str("x1", "y1"));
        rep.lines.push_back("A1~ = " + r.A1_tilde->str("x3", "y3"));
    }
    rep.lines.push_back("corank of the coboundary map: " + std::to_string(corank));
}

void cmd_glue(Report &rep, const std::string &sig, const std::string &alpha) {
    GermDiff1 s = read_germ(sig, rep.order);
    Coeff a = parse_coeff(alpha);
    GluingCocycle c = build_cocycle(s, a);
    auto [X3, Y3] = c.map();
    CornerGerm g = corner_germ_of_cocycle(c, c.order());
    GermDiff1 back = transversal_structure(g, g.order());
    bool ok = back.jet().agrees(s.jet(), back.order());
    GlobalityReport gl = globality_check(c.A(), Model::F2);
    rep.verdict = ok ? "RoundTripOk" : "RoundTripMismatch";
    rep.exit_code = ok ? Success : Negative;
    ordered_json viol = ordered_json::array();
    for (auto [i, j] : gl.violations) viol.push_back({i, j});
    rep.data = {{"sigma", jet_json(s.jet())},
                {"alpha", a.str()},
                {"cocycle", {{"x3", X3.str("x1", "y1")}, {"y3", Y3.str("x1", "y1")}}},
                {"A_global_in_F2", gl.global},
                {"A_violations_F2", viol},
                {"corner_form", form_json(g.form())},
                {"recovered_sigma", jet_json(back.jet())},
                {"round_trip_order", back.order()}};
    rep.lines.push_back("x3 = " + X3.str("x1", "y1"));
    rep.lines.push_back("y3 = " + Y3.str("x1", "y1"));
    rep.lines.push_back("recovered sigma = " + back.jet().str() + " + O(z^" + std::to_string(back.order() + 1) + ")");
}

void cmd_normal_form(Report &rep, const std::string &input) {
    ParsedForm p = read_form(input, rep.order);
    ReductionReport r = reduce_cusp(p.form);
    if (r.verdict != Verdict::CuspTypeAbsolutelyDicritical) {
        rep.verdict = to_string(r.verdict);
        rep.exit_code = verdict_exit(r.verdict);
        rep.data["reduction"] = reduction_json(r);
        rep.lines.push_back("not of cusp type: " + r.reason);
        return;
    }
    NormalFormData d = normalize(p.form, rep.order);
    rep.verdict = "NormalForm";
    ordered_json tail = ordered_json::object();
    for (const auto &[n, t] : d.tail) tail[std::to_string(n)] = {t.a.str(), t.b.str(), t.c.str(), t.d.str()};
    rep.data = {{"input", p.print()},
                {"alpha", d.alpha.str()},
                {"a", d.a.str()},
                {"tail", tail},
                {"tail_layout", "n: [a_n, b_n, c_n, d_n] for x^(n-1)((a_n x + b_n y) dx + (c_n x + d_n y) dy)"},
                {"e5", d.e5.str()},
                {"linear_part", coeff_list({d.linear_part.begin(), d.linear_part.end()})},
                {"transform", {{"X", jet2_json(d.X)}, {"Y", jet2_json(d.Y)}}},
                {"normal_form", reconstruct(d).str()}};
    rep.lines.push_back("alpha = " + d.alpha.str() + ", a = " + d.a.str() + ", e5 = " + d.e5.str());
    bool zero_tail = true;
    for (const auto &[n, t] : d.tail) {
        if (t == TailCoefficients{}) continue;
        zero_tail = false;
        rep.lines.push_back("n=" + std::to_string(n) + ": (" + t.a.str() + ", " + t.b.str() + ", " + t.c.str() + ", " + t.d.str() + ")");
    }
    if (zero_tail) rep.lines.push_back("tail is zero");
}

}  // namespace

Result run(const std::vector<std::string> &args) {
    CLI::App app{"Exact analysis of absolutely dicritical foliations of cusp type", "cuspfol"};
    app.require_subcommand(1);
    int order = kDefaultOrder;
    bool as_json = false;
    app.add_option("--order", order, "working order of the jets")->check(CLI::Range(1, 64));
    app.add_flag("--json", as_json, "print the structured report");
    app.set_help_all_flag("--help-all");

    std::string form, form2, series, sigma_s = "z", alpha_s = "0", target_s = "y";
    std::array<std::string, 4> pair;
    int degree = 3;

    auto opts = [&](CLI::App *sub) {
        sub->add_option("--order", order, "working order of the jets")->check(CLI::Range(1, 64));
        sub->add_flag("--json", as_json, "print the structured report");
    };
    auto *reduce = app.add_subcommand("reduce", "verify the two blow-up reduction");
    reduce->add_option("form", form, "1-form or mero: quotient")->required();
    auto *nf = app.add_subcommand("normal-form", "formal normal form");
    nf->add_option("form", form, "1-form or mero: quotient")->required();
    auto *sig = app.add_subcommand("sigma", "transversal structure at the corner");
    sig->add_option("form", form, "1-form or mero: quotient")->required();
    auto *sch = app.add_subcommand("schwarzian", "Schwarzian derivative of a germ in z");
    sch->add_option("sigma", series, "series in z")->required();
    auto *eq = app.add_subcommand("equiv", "equivalence of two forms or two normal pairs");
    eq->add_option("form0", form, "first 1-form");
    eq->add_option("form1", form2, "second 1-form");
    auto *s0 = eq->add_option("--sigma0", pair[0], "first normal pair: germ in z");
    eq->add_option("--alpha0", pair[1], "first normal pair: alpha")->needs(s0);
    auto *s1 = eq->add_option("--sigma1", pair[2], "second normal pair: germ in z");
    eq->add_option("--alpha1", pair[3], "second normal pair: alpha")->needs(s1);
    auto *sym = app.add_subcommand("symmetries", "homographic symmetries of f(z)");
    sym->add_option("f", series, "series in z")->required();
    auto *fi = app.add_subcommand("first-integral", "bounded search for R1∘sigma = R2");
    fi->add_option("sigma", series, "germ in z")->required();
    fi->add_option("--degree", degree, "degree bound")->check(CLI::Range(1, 16));
    auto *co = app.add_subcommand("cohomology", "solve the coboundary equation");
    co->add_option("--sigma", sigma_s, "germ in z");
    co->add_option("--alpha", alpha_s, "alpha0");
    co->add_option("--target", target_s, "coefficient T of T x1 d/dx1, series in x, y (x = x1, y = y1)");
    auto *gl = app.add_subcommand("glue", "build a cocycle and recover sigma at the corner");
    gl->add_option("--sigma", sigma_s, "germ in z");
    gl->add_option("--alpha", alpha_s, "alpha");
    for (auto *sub : {reduce, nf, sig, sch, eq, sym, fi, co, gl}) opts(sub);

    Result res;
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError &e) {
        std::ostringstream out, err;
        int code = app.exit(e, out, err);
        res.exit_code = code == 0 ? Success : InputError;
        res.text = out.str() + err.str();
        ordered_json j = {{"command", nullptr}, {"order", order}, {"verdict", code == 0 ? "Help" : "InputError"},
                          {"data", {{"message", res.text}}}, {"certificates", ordered_json::array()}};
        res.json = j.dump(2);
        return res;
    }

    Report rep;
    rep.order = order;
    CLI::App *used = app.get_subcommands().front();
    rep.command = used->get_name();
    try {
        if (used == reduce) cmd_reduce(rep, form);
        else if (used == nf) cmd_normal_form(rep, form);
        else if (used == sig) cmd_sigma(rep, form);
        else if (used == sch) cmd_schwarzian(rep, series);
        else if (used == eq) {
            bool pairs = !pair[0].empty() || !pair[2].empty();
            if (pairs) {
                if (pair[0].empty() || pair[2].empty()) throw BadInput("normal pairs need --sigma0 and --sigma1");
                if (pair[1].empty()) pair[1] = "0";
                if (pair[3].empty()) pair[3] = "0";
                cmd_equiv_pairs(rep, pair);
            } else {
                if (form.empty() || form2.empty()) throw BadInput("equiv needs two forms or --sigma0/--sigma1");
                cmd_equiv_forms(rep, form, form2);
            }
        } else if (used == sym) cmd_symmetries(rep, series);
        else if (used == fi) cmd_first_integral(rep, series, degree);
        else if (used == co) cmd_cohomology(rep, sigma_s, alpha_s, target_s);
        else if (used == gl) cmd_glue(rep, sigma_s, alpha_s);
    } catch (const ParseError &e) {
        rep.verdict = "InputError";
        rep.exit_code = InputError;
        rep.data = {{"message", e.what()}, {"line", e.line()}, {"column", e.column()}};
        rep.lines = {std::string("parse error: ") + e.what()};
    } catch (const SingularOperatorError &e) {
        rep.verdict = "Inconclusive";
        rep.exit_code = Inconclusive;
        rep.data = {{"message", e.what()}, {"degree", e.degree()}};
        rep.lines = {e.what()};
    } catch (const std::exception &e) {
        rep.verdict = "InputError";
        rep.exit_code = InputError;
        rep.data = {{"message", e.what()}};
        rep.lines = {std::string("error: ") + e.what()};
    }
    res.exit_code = rep.exit_code;
    res.json = rep.json().dump(2);
    res.text = as_json ? res.json + "\n" : rep.text();
    return res;
}

}  // namespace cuspfol::cli
