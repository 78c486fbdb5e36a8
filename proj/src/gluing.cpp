#include "cuspfol/gluing.hpp"

#include <stdexcept>

#include "cuspfol/linalg.hpp"

namespace cuspfol {

GluingCocycle::GluingCocycle(GermDiff1 sigma, Jet2 A) : sigma_(std::move(sigma)), A_(std::move(A)) {
    if (A_.coeff(0, 0).is_zero()) throw std::invalid_argument("gluing cocycle needs A(0,0) != 0");
}

std::pair<Jet2, Jet2> GluingCocycle::map() const {
    int n = order();
    Jet2 s = lift(sigma_.jet().truncate(n), 1);
    Jet2 x3 = Jet2::x(n) * A_.with_order(n) + s;
    return {x3, s};
}

GluingCocycle build_cocycle(const GermDiff1 &sigma, const Coeff &alpha) {
    int n = sigma.order();
    Jet2 A = Jet2::constant(n, 1) + alpha * Jet2::y(n);
    return {sigma, A};
}

std::string to_string(Model m) { return m == Model::F2 ? "F2" : "F1"; }

std::pair<int, int> transition_exponents(Model m, int i, int j) {
    if (m == Model::F2) return {2 * i - j, i};
    return {i - j, i};
}

GlobalityReport globality_check(const Jet2 &f, Model m) {
    GlobalityReport r;
    f.for_each([&](int i, int j, const Coeff &) {
        auto [a, b] = transition_exponents(m, i, j);
        if (a < 0 || b < 0) {
            r.global = false;
            r.violations.emplace_back(i, j);
        }
    });
    return r;
}

std::pair<Jet2, Jet2> ModelAutomorphism::map() const {
    int n = A.order() + 1;
    return {Jet2::x(n) * A.with_order(n), lift(h.to_jet(n), 1)};
}

ModelAutomorphism model_automorphism(const Homography &h, Model m, int order, std::optional<Coeff> scale) {
    Jet2 one = Jet2::constant(order, 1);
    Jet2 ly = one + h.mu() * Jet2::y(order);
    if (m == Model::F2) {
        Coeff c = scale ? *scale : h.lambda().inverse();
        return {m, h, c * (ly * ly)};
    }
    Jet2 lx = one + h.mu() * Jet2::x(order);
    return {m, h, h.lambda() * ly / (lx * lx)};
}

bool is_regular_automorphism(const ModelAutomorphism &phi) {
    int n = phi.A.order();
    // h(y)/y = lambda / (1 + mu y)
    Jet2 q = Jet2::constant(n, phi.h.lambda()) / (Jet2::constant(n, 1) + phi.h.mu() * Jet2::y(n));
    Jet2 f = phi.A * q;
    if (phi.model == Model::F2) f = f * q;
    return !f.coeff(0, 0).is_zero() && globality_check(f, phi.model).global;
}

GluingCocycle cocycle_compose_check(const ModelAutomorphism &phi1, const GluingCocycle &c, const ModelAutomorphism &phi2) {
    if (phi1.model != Model::F1 || phi2.model != Model::F2)
        throw std::invalid_argument("cocycle_compose_check expects an F1 automorphism on the left and an F2 one on the right");
    if (!is_regular_automorphism(phi1) || !is_regular_automorphism(phi2))
        throw std::invalid_argument("cocycle_compose_check: input is not a regular model automorphism");
    int n = std::min({c.order(), phi1.A.order() + 1, phi2.A.order() + 1});
    auto [x1, y1] = phi2.map();
    auto [cx, cy] = c.map();
    Jet2 x3 = substitute(cx.truncate(n), x1.truncate(n), y1.truncate(n));
    Jet2 y3 = substitute(cy.truncate(n), x1.truncate(n), y1.truncate(n));
    auto [fx, fy] = phi1.map();
    Jet2 F = substitute(fx.truncate(n), x3, y3);
    Jet2 S = substitute(fy.truncate(n), x3, y3);
    bool shape = true;
    S.for_each([&](int i, int, const Coeff &) { shape = shape && i == 0; });
    if (!shape) throw std::domain_error("composed map is not of cocycle shape: second component depends on x");
    Jet1 sigma = S.restrict_x0();
    Jet2 rest = F - lift(sigma, 1);
    Jet2 A(n - 1);
    bool divisible = true;
    rest.for_each([&](int i, int j, const Coeff &v) {
        if (i == 0)
            divisible = false;
        else
            A.add_term(i - 1, j, v);
    });
    if (!divisible) throw std::domain_error("composed map is not of cocycle shape: first component minus sigma not divisible by x");
    return {GermDiff1(sigma), A};
}

// ---------------------------------------------------------------- cohomological equation

namespace {

struct CoboundarySystem {
    int n;
    std::vector<std::pair<int, int>> a2, a1t;  // unknown monomials
    std::vector<Jet2> images;                  // image of each a1t monomial
};

CoboundarySystem build_system(const GluingCocycle &c, int n) {
    if (n > c.order() || n > c.A().order()) throw std::invalid_argument("coboundary order exceeds cocycle order");
    CoboundarySystem s{n, {}, {}, {}};
    auto [X3, Y3] = c.map();
    X3 = X3.truncate(n);
    Y3 = Y3.truncate(n);
    Jet2 A = c.A().truncate(n);
    Jet2 D(n);
    A.for_each([&](int i, int j, const Coeff &v) { D.add_term(i, j, v * Coeff(1 + i)); });
    Jet2 rho = A / D;
    for (int d = 0; d <= n; ++d)
        for (int j = 0; j <= d; ++j)
            if (2 * (d - j) - j >= 0) s.a2.emplace_back(d - j, j);
    std::vector<Jet2> xp{Jet2::constant(n, 1)}, yp{Jet2::constant(n, 1)};
    for (int k = 1; k <= n + 1; ++k) {
        xp.push_back(xp.back() * X3);
        yp.push_back(yp.back() * Y3);
    }
    for (int d = 0; d <= n - 1; ++d)
        for (int q = 0; q <= d; ++q) {
            int p = d - q;
            s.a1t.emplace_back(p, q);
            s.images.push_back(xp[static_cast<size_t>(p + 1)] * yp[static_cast<size_t>(q)] * rho);
        }
    return s;
}

std::string mono(const std::string &x, const std::string &y, int i, int j) {
    return x + "^" + std::to_string(i) + "*" + y + "^" + std::to_string(j);
}

}  // namespace

Jet2 coboundary_image(const GluingCocycle &c, const Jet2 &A2, const Jet2 &A1_tilde, int n) {
    auto [X3, Y3] = c.map();
    Jet2 A = c.A().truncate(n);
    Jet2 D(n);
    A.for_each([&](int i, int j, const Coeff &v) { D.add_term(i, j, v * Coeff(1 + i)); });
    Jet2 rho = A / D;
    Jet2 pulled = substitute(A1_tilde.with_order(n), X3.truncate(n), Y3.truncate(n));
    return A2.with_order(n) - pulled * X3.truncate(n) * rho;
}

CoboundaryResult coboundary_solve(const GluingCocycle &c, const Jet2 &target, int n) {
    CoboundarySystem s = build_system(c, n);
    size_t na2 = s.a2.size(), nu = na2 + s.a1t.size();
    auto a1t_index = [&](int p, int q) -> long {
        if (p < 0 || q < 0 || p + q > n - 1) return -1;
        int d = p + q;
        return static_cast<long>(na2) + d * (d + 1) / 2 + q;
    };
    IncrementalSolver solver(nu);
    std::vector<std::string> labels;
    std::vector<int> degrees;
    CoboundaryResult out;
    out.order = n;
    for (int d = 0; d <= n && solver.consistent(); ++d) {
        // A1 = (x3 - y3) A1_tilde has no monomial x3^i y3^j with i < j
        for (int j = 0; j <= d && solver.consistent(); ++j) {
            int i = d - j;
            if (i >= j) continue;
            std::vector<Coeff> row(nu);
            long k1 = a1t_index(i - 1, j), k2 = a1t_index(i, j - 1);
            if (k1 >= 0) row[static_cast<size_t>(k1)] += 1;
            if (k2 >= 0) row[static_cast<size_t>(k2)] -= 1;
            labels.push_back("constraint " + mono("x3", "y3", i, j));
            degrees.push_back(d);
            solver.add_row(row, 0);
        }
        for (int j = 0; j <= d && solver.consistent(); ++j) {
            int i = d - j;
            std::vector<Coeff> row(nu);
            for (size_t k = 0; k < na2; ++k)
                if (s.a2[k] == std::make_pair(i, j)) row[k] = 1;
            for (size_t k = 0; k < s.a1t.size(); ++k) row[na2 + k] = -s.images[k].coeff(i, j);
            labels.push_back("equation " + mono("x1", "y1", i, j));
            degrees.push_back(d);
            solver.add_row(row, target.coeff(i, j));
        }
    }
    if (!solver.consistent()) {
        size_t bad = *solver.first_inconsistent_row();
        out.obstructed_degree = degrees[bad];
        out.certificate = *solver.certificate();
        for (size_t k = 0; k < out.certificate.size(); ++k)
            if (!out.certificate[k].is_zero()) out.certificate_rows.push_back(labels[k]);
        return out;
    }
    std::vector<Coeff> x = solver.solution();
    Jet2 A2(n), A1t(std::max(n - 1, 0));
    for (size_t k = 0; k < na2; ++k) A2.set(s.a2[k].first, s.a2[k].second, x[k]);
    for (size_t k = 0; k < s.a1t.size(); ++k) A1t.set(s.a1t[k].first, s.a1t[k].second, x[na2 + k]);
    out.feasible = true;
    out.A2 = A2;
    out.A1_tilde = A1t;
    return out;
}

CoboundaryResult coboundary_solve(const GermDiff1 &sigma, const Coeff &alpha0, const Jet2 &target, int n) {
    GermDiff1 s(sigma.jet().with_order(std::max(sigma.order(), n + 1)));
    return coboundary_solve(build_cocycle(s, alpha0), target, n);
}

int coboundary_corank(const GluingCocycle &c, int n) {
    CoboundarySystem s = build_system(c, n);
    size_t na2 = s.a2.size(), nu = na2 + s.a1t.size();
    std::vector<std::vector<Coeff>> eq, cons;
    for (int d = 0; d <= n; ++d)
        for (int j = 0; j <= d; ++j) {
            int i = d - j;
            std::vector<Coeff> row(nu);
            for (size_t k = 0; k < na2; ++k)
                if (s.a2[k] == std::make_pair(i, j)) row[k] = 1;
            for (size_t k = 0; k < s.a1t.size(); ++k) row[na2 + k] = -s.images[k].coeff(i, j);
            eq.push_back(std::move(row));
            if (i < j) {
                std::vector<Coeff> cr(nu);
                for (size_t k = 0; k < s.a1t.size(); ++k) {
                    auto [p, q] = s.a1t[k];
                    if (p == i - 1 && q == j) cr[na2 + k] += 1;
                    if (p == i && q == j - 1) cr[na2 + k] -= 1;
                }
                cons.push_back(std::move(cr));
            }
        }
    IncrementalSolver all(nu), con(nu);
    for (const auto &r : cons) {
        all.add_row(r, 0);
        con.add_row(r, 0);
    }
    for (const auto &r : eq) all.add_row(r, 0);
    long image_dim = static_cast<long>(all.rank()) - static_cast<long>(con.rank());
    return static_cast<int>(static_cast<long>(eq.size()) - image_dim);
}

TrivialityVerdict unfolding_triviality_check(const GermDiff1 &sigma, const std::vector<Jet2> &family, int n) {
    TrivialityVerdict v;
    if (family.empty()) throw std::invalid_argument("empty family");
    const Jet2 &A0 = family[0];
    v.hypothesis_holds = true;
    for (size_t k = 1; k < family.size(); ++k)
        if (!family[k].coeff(0, 1).is_zero()) v.hypothesis_holds = false;
    n = std::min(n, A0.order());
    bool constant = true;
    for (size_t k = 1; k < family.size(); ++k) constant = constant && family[k].is_zero();
    if (family.size() == 1 || constant) {
        v.trivial = true;
        v.target = Jet2(n);
        CoboundaryResult zero;
        zero.feasible = true;
        zero.order = n;
        zero.A2 = Jet2(n);
        zero.A1_tilde = Jet2(std::max(n - 1, 0));
        v.solution = zero;
        v.reason = "constant family";
        return v;
    }
    Jet2 D(A0.order());
    A0.for_each([&](int i, int j, const Coeff &c) { D.add_term(i, j, c * Coeff(1 + i)); });
    v.target = (family[1] / D).truncate(n);
    GermDiff1 s(sigma.jet().with_order(std::max(sigma.order(), n + 1)));
    GluingCocycle c(s, A0.with_order(std::max(A0.order(), n)));
    v.solution = coboundary_solve(c, v.target, n);
    v.trivial = v.solution->feasible;
    if (v.trivial)
        v.reason = "derivative of the cocycle is a coboundary to order " + std::to_string(n);
    else
        v.reason = "derivative of the cocycle is not a coboundary: nontrivial direction, obstructed at degree " +
                   std::to_string(v.solution->obstructed_degree);
    return v;
}

CornerGerm corner_germ_of_cocycle(const GluingCocycle &c, int n, const std::optional<Jet2> &unit) {
    n = std::min(n, c.order() - 1);
    Jet1 sinv = comp_inverse(c.sigma().jet().truncate(n));
    Jet1 v = Jet1::identity(n);
    Jet1 Y(n);
    Jet2 A = c.A().with_order(std::max(c.A().order(), n));
    // Y = sigma^{-1}(-v A(v, Y)), one more correct coefficient per pass
    for (int k = 0; k <= n; ++k) Y = compose(sinv, -(v * substitute_curve(A, v, Y)));
    Jet1 rho = compose(c.sigma().jet().truncate(n), Y);
    Jet2 P = Jet2::constant(n - 1, 1);
    Jet2 Q = lift(Y.derive(), 1);
    if (unit) {
        P = P * *unit;
        Q = Q * *unit;
    }
    return CornerGerm(OneForm(P, Q, {"u", "v"}), GermDiff1::identity(n), GermDiff1(rho));
}

}  // namespace cuspfol
