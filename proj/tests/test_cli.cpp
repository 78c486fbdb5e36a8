#include <doctest.h>
#include <json.hpp>

#include "cuspfol/cli.hpp"
#include "cuspfol/parser.hpp"
#include "oracles.hpp"

using namespace cuspfol;
using nlohmann::json;

namespace {
Jet2 P(const std::string &s, int n = kDefaultOrder) { return parse_series2(s, "x", "y", n); }

json run_json(std::vector<std::string> args, int *code = nullptr) {
    args.push_back("--json");
    cli::Result r = cli::run(args);
    if (code) *code = r.exit_code;
    return json::parse(r.json);
}
}  // namespace

TEST_CASE("parser examples") {
    ParsedForm a = parse_form("(2*x^3*y - y^3) dx + (x*y^2 - x^4) dy");
    CHECK_FALSE(a.meromorphic);
    CHECK(a.form.A() == P("2*x^3*y - y^3"));
    CHECK(a.form.B() == P("x*y^2 - x^4"));
    CHECK(a.degree == 4);
    ParsedForm m = parse_form("mero: (y^2 + x^3) / (x*y)");
    CHECK(m.meromorphic);
    CHECK(m.form == a.form);
    CHECK(*m.num == P("y^2 + x^3"));
    ParsedForm d = parse_form("dx + dx");
    CHECK(d.form == Coeff(2) * OneForm::dx(kDefaultOrder));
    CHECK(parse_form("x*(y dx - x dy)/2").form == OneForm(P("x*y/2"), P("-x^2/2")));
    CHECK(parse_form("(1+2*i) x dy").form.B() == P("(1+2*i)*x"));
}

TEST_CASE("series parsing") {
    Jet1 e = parse_series1("exp(z) - 1", "z", 8);
    CHECK(e == exp_series(8) - Jet1::constant(8, 1));
    CHECK(parse_series1("log(1 + z)", "z", 8) == log1p_series(8));
    CHECK(parse_series1("z/(1 - z)", "z", 6)[6] == Coeff(1));
    CHECK(parse_series1("2^-1 * z", "z", 3)[1] == Coeff(1, 2));
    CHECK(parse_series1("-z^2", "z", 3)[2] == Coeff(-1));
    CHECK(parse_coeff("1/2 - 1/3*i") == Coeff(mpq_class(1, 2), mpq_class(-1, 3)));
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_form("x^2 dx + w dy");
        FAIL("expected an error");
    } catch (const ParseError &e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 10);
        CHECK(std::string(e.what()).find("unknown variable") != std::string::npos);
    }
    try {
        parse_form("x dx +\n  (y dy");
        FAIL("expected an error");
    } catch (const ParseError &e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_form("mero: x/0"), ParseError);
    CHECK_THROWS_AS(parse_form("1.5 dx"), ParseError);
    CHECK_THROWS_AS(parse_form("x + dx"), ParseError);
    CHECK_THROWS_AS(parse_form("dx * dy"), ParseError);
    CHECK_THROWS_AS(parse_form("mero: x dx"), ParseError);
    CHECK_THROWS_AS(parse_form("x dx / y"), ParseError);
    CHECK_THROWS_AS(parse_series1("1/z", "z", 4), ParseError);
}

TEST_CASE("print then parse round-trips") {
    oracle::Rng rng(81);
    for (int t = 0; t < 20; ++t) {
        Jet2 a(6), b(6);
        for (int k = 0; k < 4; ++k) {
            int i = static_cast<int>(rng.integer(0, 3)), j = static_cast<int>(rng.integer(0, 3));
            a.add_term(i, j, t % 3 == 0 ? rng.gaussian() : rng.rational());
            b.add_term(j, i, rng.rational());
        }
        ParsedForm p = parse_form(OneForm(a, b).str(), 6);
        CHECK(p.form == OneForm(a, b));
        CHECK(parse_form(p.print(), 6).form == p.form);
    }
    ParsedForm m = parse_form("mero: (y^2 + x^3 + x^2*y)/(x*y)", 10);
    ParsedForm m2 = parse_form(m.print(), 10);
    CHECK(m2.meromorphic);
    CHECK(m2.form == m.form);
}

TEST_CASE("cli reduce and sigma") {
    int code = -1;
    json j = run_json({"reduce", "mero:(y^2+x^3)/(x*y)"}, &code);
    CHECK(code == 0);
    CHECK(j["verdict"] == "CuspTypeAbsolutelyDicritical");
    CHECK(j["command"] == "reduce");
    CHECK(j["order"] == 16);
    CHECK(j.contains("certificates"));
    CHECK(j["data"]["exceptional_power_1"] == 4);
    CHECK(j["data"]["singular_points_on_D2"].size() == 1);
    json s = run_json({"sigma", "mero:(y^2+x^3)/(x*y)", "--order", "12"}, &code);
    CHECK(code == 0);
    CHECK(s["order"] == 12);
    CHECK(s["data"]["identity"] == true);
    CHECK(s["data"]["homographic"] == true);
    json w = run_json({"reduce", "x dy - y dx"}, &code);
    CHECK(code == 1);
    CHECK(w["verdict"] == "WrongReductionTree");
}

TEST_CASE("cli exit codes") {
    int code = -1;
    run_json({"equiv", "mero:(y^2+x^3)/(x*y)", "mero:(y^2+x^3)/(x*y)"}, &code);
    CHECK(code == 0);
    run_json({"equiv", "--sigma0", "z", "--alpha0", "0", "--sigma1", "z", "--alpha1", "5"}, &code);
    CHECK(code == 0);
    run_json({"equiv", "--sigma0", "exp(z)-1", "--sigma1", "z+z^3"}, &code);
    CHECK(code == 1);
    json e = run_json({"reduce", "x dx + q dy"}, &code);
    CHECK(code == 3);
    CHECK(e["verdict"] == "InputError");
    CHECK(e["data"]["column"] == 8);
    run_json({"nonsense"}, &code);
    CHECK(code == 3);
    run_json({"reduce", "(2*x^3*y - y^3) dx + (x*y^2 - x^4) dy", "--order", "4"}, &code);
    CHECK(code == 2);
    run_json({"cohomology", "--order", "5"}, &code);
    CHECK(code == 1);
    run_json({"cohomology", "--order", "5", "--target", "x"}, &code);
    CHECK(code == 0);
    run_json({"first-integral", "exp(z)-1", "--degree", "3"}, &code);
    CHECK(code == 1);
    run_json({"first-integral", "z/(1-z)", "--degree", "2"}, &code);
    CHECK(code == 0);
    run_json({"glue", "--sigma", "z+z^2", "--alpha", "1", "--order", "10"}, &code);
    CHECK(code == 0);
    json nf = run_json({"normal-form", "(2*x^3*y - y^3) dx + (x*y^2 - x^4) dy", "--order", "10"}, &code);
    CHECK(code == 0);
    CHECK(nf["data"]["alpha"] == "-1");
    json sym = run_json({"symmetries", "z"}, &code);
    CHECK(code == 0);
    CHECK(sym["data"]["candidates"].size() == 1);
    json sch = run_json({"schwarzian", "exp(z)-1", "--order", "8"}, &code);
    CHECK(code == 0);
    CHECK(sch["data"]["schwarzian"]["series"] == "-1/2");
}

TEST_CASE("cli output is deterministic") {
    for (auto args : std::vector<std::vector<std::string>>{{"reduce", "mero:(y^2+x^3+x^2*y)/(x*y)", "--json"},
                                                          {"cohomology", "--sigma", "z+z^2", "--alpha", "1", "--order", "6", "--json"},
                                                          {"symmetries", "z^2", "--json"}}) {
        CHECK(cli::run(args).json == cli::run(args).json);
        CHECK(cli::run(args).text == cli::run(args).text);
    }
}
