#include <doctest.h>

#include "cuspfol/gluing.hpp"
#include "cuspfol/parser.hpp"
#include "oracles.hpp"

using namespace cuspfol;

namespace {
Jet2 P(const std::string &s, int n) { return parse_series2(s, "x", "y", n); }
GermDiff1 G(const std::string &s, int n) { return GermDiff1(parse_series1(s, "z", n)); }

// printed Step-2 factor on the F2 side: alpha + 2(alpha b/a) y + (alpha b/a^2) y^2
Jet2 printed_A2(const Coeff &alpha, const Coeff &a, const Coeff &b, int n) {
    return Jet2::constant(n, alpha) + Coeff(2) * alpha * b / a * Jet2::y(n) + alpha * b / (a * a) * Jet2::monomial(n, 0, 2);
}
}  // namespace

TEST_CASE("cocycle construction") {
    const int n = 8;
    auto [x3, y3] = build_cocycle(GermDiff1::identity(n), 0).map();
    CHECK(x3 == P("x + y", n));
    CHECK(y3 == P("y", n));
    GluingCocycle c = build_cocycle(GermDiff1::identity(n), Coeff(7, 3));
    CHECK(c.A() == P("1 + 7/3*y", n));
    auto [u, v] = build_cocycle(G("z + z^2", n), 1).map();
    CHECK(v == P("y + y^2", n));
    CHECK(u == P("x*(1 + y) + y + y^2", n));
    CHECK_THROWS(GluingCocycle(GermDiff1::identity(n), P("y", n)));
}

TEST_CASE("globality examples") {
    CHECK(globality_check(P("x*y", 4), Model::F2).global);
    GlobalityReport r = globality_check(P("y", 4), Model::F2);
    CHECK_FALSE(r.global);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0] == std::make_pair(0, 1));
    CHECK(globality_check(Jet2::constant(4, 1), Model::F2).global);
    CHECK(globality_check(Jet2::constant(4, 1), Model::F1).global);
    CHECK_FALSE(globality_check(P("x*y^2", 4), Model::F1).global);
}

TEST_CASE("support rules agree with transported exponents") {
    for (int d = 0; d <= 8; ++d)
        for (int j = 0; j <= d; ++j) {
            int i = d - j;
            auto [a2, b2] = transition_exponents(Model::F2, i, j);
            CHECK((a2 >= 0 && b2 >= 0) == (2 * i - j >= 0));
            auto [a1, b1] = transition_exponents(Model::F1, i, j);
            CHECK((a1 >= 0 && b1 >= 0) == (i >= j));
            Jet2 m = Jet2::monomial(8, i, j);
            CHECK(globality_check(m, Model::F2).global == (2 * i - j >= 0));
            CHECK(globality_check(m, Model::F1).global == (i >= j));
        }
}

TEST_CASE("model automorphisms") {
    const int n = 8;
    for (Model m : {Model::F2, Model::F1}) {
        ModelAutomorphism id = model_automorphism(Homography::identity(), m, n);
        CHECK(id.A == Jet2::constant(n, 1));
        CHECK(is_regular_automorphism(id));
    }
    Coeff b(3, 2);
    ModelAutomorphism f1 = model_automorphism(Homography(1, b), Model::F1, n);
    CHECK(f1.A == (Jet2::constant(n, 1) + b * Jet2::y(n)) / ((Jet2::constant(n, 1) + b * Jet2::x(n)) * (Jet2::constant(n, 1) + b * Jet2::x(n))));
    // r = d/dx of A at 0 is -2b
    CHECK(f1.A.coeff(1, 0) == Coeff(-2) * b);
    CHECK(f1.A.coeff(0, 1) == b);
    CHECK(is_regular_automorphism(f1));
    ModelAutomorphism lin = model_automorphism(Homography::from_affine(5, 0), Model::F2, n);
    CHECK(lin.A == Jet2::constant(n, 5));
    // z/(a + b z): corrected F2 factor is regular, the printed one is not
    Coeff a(2), bb(3);
    Homography h = Homography::from_affine(a, bb);
    CHECK(is_regular_automorphism(model_automorphism(h, Model::F2, n)));
    ModelAutomorphism printed{Model::F2, h, printed_A2(a, a, bb, n)};
    CHECK_FALSE(is_regular_automorphism(printed));
}

TEST_CASE("composition with model automorphisms") {
    const int n = 9;
    GluingCocycle c = build_cocycle(G("z + z^2 - 2*z^3", n), 3);
    GluingCocycle same = cocycle_compose_check(model_automorphism(Homography::identity(), Model::F1, n), c,
                                               model_automorphism(Homography::identity(), Model::F2, n));
    CHECK(same.sigma().jet().agrees(c.sigma().jet(), same.order()));
    CHECK(same.A().agrees(c.A(), same.A().order()));
    Coeff eps(5, 2);
    GluingCocycle scaled = cocycle_compose_check(model_automorphism(Homography::identity(), Model::F1, n), c,
                                                 model_automorphism(Homography::identity(), Model::F2, n, eps));
    CHECK(scaled.A().coeff(0, 0) == eps * c.A().coeff(0, 0));
    CHECK_THROWS(cocycle_compose_check(model_automorphism(Homography::identity(), Model::F2, n), c,
                                       model_automorphism(Homography::identity(), Model::F2, n)));
}

TEST_CASE("relation-fond from composed automorphisms") {
    oracle::Rng rng(61);
    const int n = 8;
    for (int t = 0; t < 6; ++t) {
        Homography h0(rng.nonzero(), rng.rational()), h1(rng.nonzero(), rng.rational());
        GermDiff1 gamma(rng.germ(n));
        Coeff ap = rng.rational();
        GluingCocycle c = build_cocycle(gamma, ap);
        ModelAutomorphism phi2 = model_automorphism(h0, Model::F2, n, h1.lambda().inverse());
        ModelAutomorphism phi1 = model_automorphism(h1, Model::F1, n);
        GluingCocycle out = cocycle_compose_check(phi1, c, phi2);
        CHECK(out.A().coeff(0, 0) == Coeff(1));
        Jet1 expect = compose(h1.to_jet(n), compose(gamma.jet(), h0.to_jet(n)));
        CHECK(out.sigma().jet().agrees(expect, out.order()));
        Coeff alpha = out.A().coeff(0, 1);
        GermDiff1 sig(out.sigma().jet());
        CHECK(relation_fond_lhs(alpha, sig) == relation_fond_rhs(ap, gamma, h0));
    }
}

TEST_CASE("coboundary solver examples") {
    const int n = 6;
    CoboundaryResult zero = coboundary_solve(GermDiff1::identity(n + 1), 0, Jet2(n), n);
    REQUIRE(zero.feasible);
    CHECK(zero.A2->is_zero());
    CHECK(zero.A1_tilde->is_zero());
    // the Kodaira-Spencer generator x1 y1 d/dx1 has coefficient y1 in the x1 d/dx1 frame
    for (const char *s : {"z", "z + z^2"})
        for (long a0 : {0L, 1L})
            for (int N = 3; N <= 10; ++N) {
                CoboundaryResult r = coboundary_solve(G(s, N + 1), a0, Jet2::y(N), N);
                CHECK_FALSE(r.feasible);
                CHECK(r.obstructed_degree >= 0);
                CHECK_FALSE(r.certificate.empty());
            }
}

TEST_CASE("constructed coboundaries are recovered") {
    oracle::Rng rng(62);
    const int n = 7;
    for (int t = 0; t < 6; ++t) {
        GluingCocycle c = build_cocycle(GermDiff1(rng.germ(n + 1)), rng.rational());
        Jet2 A2(n);
        rng.jet2(n).for_each([&](int i, int j, const Coeff &v) {
            if (2 * i - j >= 0) A2.set(i, j, v);
        });
        // A1 = (x3 - y3) A1~ must avoid monomials with i < j
        Jet2 A1t(n - 1);
        rng.jet2(n - 1).for_each([&](int i, int j, const Coeff &v) {
            if (i >= j + 1) A1t.set(i, j, v);
        });
        Jet2 target = coboundary_image(c, A2, A1t, n);
        CoboundaryResult r = coboundary_solve(c, target, n);
        REQUIRE(r.feasible);
        CHECK(coboundary_image(c, *r.A2, *r.A1_tilde, n) == target);
        CHECK(globality_check(*r.A2, Model::F2).global);
        Jet2 A1 = (Jet2::x(n) - Jet2::y(n)) * r.A1_tilde->with_order(n);
        CHECK(globality_check(A1, Model::F1).global);
    }
}

TEST_CASE("infeasibility is monotone in the order") {
    oracle::Rng rng(63);
    for (int t = 0; t < 4; ++t) {
        GermDiff1 s(rng.germ(12));
        Jet2 target = rng.jet2(11);
        bool seen = false;
        for (int N = 2; N <= 10; ++N) {
            bool f = coboundary_solve(s, 1, target.truncate(N), N).feasible;
            if (seen) CHECK_FALSE(f);
            seen = seen || !f;
        }
    }
}

TEST_CASE("the quotient is one-dimensional") {
    for (const char *s : {"z", "z + z^2"})
        for (long a0 : {0L, 1L})
            for (int N = 3; N <= 8; ++N) CHECK(coboundary_corank(build_cocycle(G(s, N + 1), a0), N) == 1);
}

TEST_CASE("unfolding triviality") {
    const int n = 6;
    GermDiff1 id = GermDiff1::identity(n + 1);
    TrivialityVerdict a = unfolding_triviality_check(id, {P("1 + 2*y", n), P("x", n)}, n);
    CHECK(a.hypothesis_holds);
    CHECK(a.trivial);
    REQUIRE(a.solution);
    CHECK(a.solution->feasible);
    TrivialityVerdict b = unfolding_triviality_check(id, {Jet2::constant(n, 1), P("y", n)}, n);
    CHECK_FALSE(b.hypothesis_holds);
    CHECK_FALSE(b.trivial);
    TrivialityVerdict c = unfolding_triviality_check(id, {P("1 + y", n)}, n);
    CHECK(c.trivial);
    CHECK(c.solution->A2->is_zero());
}

TEST_CASE("corner germ of a cocycle recovers sigma") {
    oracle::Rng rng(64);
    for (int t = 0; t < 5; ++t) {
        const int n = 10;
        GermDiff1 s(rng.germ(n));
        GluingCocycle c = build_cocycle(s, rng.rational());
        Jet2 unit = rng.jet2(n);
        unit.set(0, 0, 1);
        CornerGerm g = corner_germ_of_cocycle(c, c.order(), unit);
        GermDiff1 back = transversal_structure(g, g.order());
        CHECK(back.order() >= 7);
        CHECK(back.jet().agrees(s.jet(), back.order()));
    }
}
