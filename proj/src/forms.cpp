#include "cuspfol/forms.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "cuspfol/linalg.hpp"

namespace cuspfol {

OneForm::OneForm(Jet2 a, Jet2 b, std::array<std::string, 2> vars)
    : a_(std::move(a)), b_(std::move(b)), vars_(std::move(vars)) {
    int n = std::min(a_.order(), b_.order());
    if (a_.order() != n) a_ = a_.truncate(n);
    if (b_.order() != n) b_ = b_.truncate(n);
}

std::string OneForm::str() const {
    std::string out;
    auto part = [&](const Jet2 &c, const std::string &d) {
        if (c.is_zero()) return;
        std::string s = c.str(vars_[0], vars_[1]);
        std::string t;
        if (s == "1")
            t = d;
        else if (s == "-1")
            t = "-" + d;
        else if (s.find(" + ") == std::string::npos && s.find(" - ") == std::string::npos)
            t = s + " " + d;
        else
            t = "(" + s + ") " + d;
        if (out.empty())
            out = t;
        else if (t[0] == '-')
            out += " - " + t.substr(1);
        else
            out += " + " + t;
    };
    part(a_, "d" + vars_[0]);
    part(b_, "d" + vars_[1]);
    return out.empty() ? "0" : out;
}

OneForm operator+(const OneForm &p, const OneForm &q) { return {p.A() + q.A(), p.B() + q.B(), p.vars()}; }
OneForm operator-(const OneForm &p, const OneForm &q) { return {p.A() - q.A(), p.B() - q.B(), p.vars()}; }
OneForm operator*(const Jet2 &f, const OneForm &p) { return {f * p.A(), f * p.B(), p.vars()}; }
OneForm operator*(const Coeff &c, const OneForm &p) { return {c * p.A(), c * p.B(), p.vars()}; }

OneForm differential(const Jet2 &f) { return {f.derive(0), f.derive(1)}; }

OneForm form_of_meromorphic(const Jet2 &num, const Jet2 &den) {
    if (num.is_zero() || den.is_zero()) throw std::invalid_argument("form_of_meromorphic: zero numerator or denominator");
    int n = std::min(num.order(), den.order());
    Jet2 a = num.with_order(n + 1), b = den.with_order(n + 1);
    // exact when num, den are polynomials of degree <= n; certified to order n-1 otherwise
    return (b * differential(a)) - (a * differential(b));
}

int valuation(const OneForm &w) {
    if (w.is_zero()) throw std::domain_error("valuation of the zero form at working order");
    int va = w.A().valuation(), vb = w.B().valuation();
    if (va < 0) return vb;
    if (vb < 0) return va;
    return std::min(va, vb);
}

std::optional<Jet2> radial_tangency(const OneForm &w, int d) {
    Jet2 ad = w.A().homogeneous_part(d), bd = w.B().homogeneous_part(d);
    int n = w.order();
    if (ad.is_zero() && bd.is_zero()) return Jet2(n);
    if (d + 1 > n + 1) return std::nullopt;
    // x A_d + y B_d = 0 means B_d = x P and A_d = -y P
    Jet2 big(n + 1);
    ad.for_each([&](int i, int j, const Coeff &c) { big.add_term(i + 1, j, c); });
    bd.for_each([&](int i, int j, const Coeff &c) { big.add_term(i, j + 1, c); });
    if (!big.is_zero()) return std::nullopt;
    Jet2 p(n);
    bool ok = true;
    bd.for_each([&](int i, int j, const Coeff &c) {
        if (i == 0)
            ok = false;
        else
            p.set(i - 1, j, c);
    });
    if (!ok) return std::nullopt;
    return p;
}

Jet2 wedge(const OneForm &p, const OneForm &q) { return p.A() * q.B() - p.B() * q.A(); }

OneForm pullback(const OneForm &w, const Jet2 &X, const Jet2 &Y, std::array<std::string, 2> vars) {
    Jet2 a = substitute(w.A(), X, Y);
    Jet2 b = substitute(w.B(), X, Y);
    Jet2 xu = X.derive(0), xv = X.derive(1), yu = Y.derive(0), yv = Y.derive(1);
    return {a * xu + b * yu, a * xv + b * yv, std::move(vars)};
}

OneForm linear_change(const OneForm &w, const std::array<Coeff, 4> &m) {
    int n = w.order() + 1;
    Jet2 X = m[0] * Jet2::x(n) + m[1] * Jet2::y(n);
    Jet2 Y = m[2] * Jet2::x(n) + m[3] * Jet2::y(n);
    return pullback(w, X, Y, w.vars());
}

OneForm pullback_blowup(const OneForm &w, Chart chart) {
    int n = w.order() + 1;
    if (chart == Chart::XChart)
        return pullback(w, Jet2::x(n), Jet2::x(n) * Jet2::y(n), {w.vars()[0], "t"});
    return pullback(w, Jet2::x(n) * Jet2::y(n), Jet2::y(n), {"s", w.vars()[1]});
}

namespace {

int min_exponent(const Jet2 &f, int var) {
    int k = std::numeric_limits<int>::max();
    f.for_each([&](int i, int j, const Coeff &) { k = std::min(k, var == 0 ? i : j); });
    return k;
}

Jet2 shift_down(const Jet2 &f, int var, int k) {
    Jet2 r(f.order() - k);
    f.for_each([&](int i, int j, const Coeff &c) {
        if (var == 0)
            r.add_term(i - k, j, c);
        else
            r.add_term(i, j - k, c);
    });
    return r;
}

}  // namespace

std::pair<OneForm, int> exceptional_divide(const OneForm &w, int var) {
    if (w.is_zero()) return {w, 0};
    int k = std::min(min_exponent(w.A(), var), min_exponent(w.B(), var));
    k = std::min(k, w.order());
    if (k == 0) return {w, 0};
    return {OneForm(shift_down(w.A(), var, k), shift_down(w.B(), var, k), w.vars()), k};
}

int DivisorAnalysis::point_count() const {
    return static_cast<int>(points.size()) + (infinity_multiplicity > 0 ? 1 : 0);
}

DivisorAnalysis divisor_analysis(const OneForm &w, int var, std::optional<int> expected_degree) {
    DivisorAnalysis d;
    d.restricted = var == 0 ? w.B().restrict_x0() : w.A().restrict_y0();
    if (d.restricted.is_zero()) {
        d.invariant = true;
        return d;
    }
    UPoly p = from_jet(d.restricted);
    if (expected_degree && *expected_degree <= d.restricted.order() && p.degree() <= *expected_degree) {
        d.certified = true;
        d.infinity_multiplicity = *expected_degree - p.degree();
    }
    for (const auto &f : squarefree_factorization(p)) {
        if (f.factor.degree() == 1) {
            d.points.push_back({f.factor, f.multiplicity, -f.factor.coeff(0)});
        } else {
            d.points.push_back({f.factor, f.multiplicity, std::nullopt});
        }
    }
    // linear factors first, then by multiplicity
    std::stable_sort(d.points.begin(), d.points.end(), [](const TangencyLocus &a, const TangencyLocus &b) {
        return a.factor.degree() < b.factor.degree();
    });
    return d;
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::CuspTypeAbsolutelyDicritical:
        return "CuspTypeAbsolutelyDicritical";
    case Verdict::NotDicritical:
        return "NotDicritical";
    case Verdict::WrongReductionTree:
        return "WrongReductionTree";
    case Verdict::Inconclusive:
        return "Inconclusive";
    }
    return "?";
}

ReductionReport reduce_cusp(const OneForm &w) {
    ReductionReport r;
    r.order = w.order();
    auto inconclusive = [&](const std::string &why, int order) {
        r.verdict = Verdict::Inconclusive;
        r.inconclusive_order = order;
        r.reason = why;
        return r;
    };
    if (w.is_zero()) return inconclusive("form vanishes at the working order", w.order());
    r.valuation = valuation(w);
    r.is_valuation_3 = r.valuation == 3;
    r.p2 = radial_tangency(w, r.valuation);
    if (!r.p2) {
        r.verdict = Verdict::NotDicritical;
        r.reason = "lowest homogeneous part is not tangent to the radial form";
        return r;
    }
    if (!r.is_valuation_3) {
        r.verdict = Verdict::WrongReductionTree;
        r.reason = "valuation " + std::to_string(r.valuation) + " instead of 3";
        return r;
    }
    if (w.order() < 6) return inconclusive("order below 6 cannot certify the corner", w.order());
    Coeff p20 = r.p2->coeff(2, 0), p11 = r.p2->coeff(1, 1), p02 = r.p2->coeff(0, 2);
    if (!(p11 * p11 - Coeff(4) * p20 * p02).is_zero()) {
        r.verdict = Verdict::WrongReductionTree;
        r.reason = "P2 has two distinct tangent directions";
        return r;
    }
    if (!p02.is_zero()) {
        Coeff t0 = -p11 / (Coeff(2) * p02);
        r.linear_change = {1, 0, t0, 1};
        r.p2_coefficient = p02;
    } else {
        r.linear_change = {0, 1, 1, 0};
        r.p2_coefficient = -p20;
    }
    OneForm w0 = linear_change(w, r.linear_change);
    r.normalized_input = w0;
    r.radial_relations_hold = w0.A().coeff(4, 0).is_zero() && w0.A().coeff(5, 0).is_zero() &&
                              (w0.A().coeff(3, 1) + Coeff(2) * w0.B().coeff(4, 0)).is_zero();

    auto [w1, k1] = exceptional_divide(pullback_blowup(w0, Chart::XChart), 0);
    r.first_chart_form = w1;
    r.exceptional_power_1 = k1;
    if (k1 != r.valuation + 1) {
        r.verdict = Verdict::WrongReductionTree;
        r.reason = "first exceptional power " + std::to_string(k1) + " is not valuation+1";
        return r;
    }
    r.d2_analysis = divisor_analysis(w1, 0, r.valuation - 1);
    const auto &da = *r.d2_analysis;
    if (da.invariant) {
        r.verdict = Verdict::NotDicritical;
        r.reason = "first exceptional curve is invariant";
        return r;
    }
    bool one_double_point = da.certified && da.infinity_multiplicity == 0 && da.points.size() == 1 &&
                            da.points[0].root && da.points[0].root->is_zero() && da.points[0].multiplicity == 2;
    if (!one_double_point) {
        r.verdict = Verdict::WrongReductionTree;
        r.reason = "first exceptional curve does not carry exactly one double tangency point at t=0";
        return r;
    }
    if (w1.is_zero()) return inconclusive("first chart form vanishes at its order", w1.order());
    int v1 = valuation(w1);
    if (v1 == 0) {
        r.verdict = Verdict::WrongReductionTree;
        r.reason = "tangency point is regular: foliation tangent to the divisor";
        return r;
    }
    auto p1 = radial_tangency(w1, 1);
    if (v1 == 1 && !p1) {
        r.verdict = Verdict::NotDicritical;
        r.reason = "linear part at the tangency point is not radial";
        return r;
    }
    if (v1 > 1) {
        if (w1.order() <= v1) return inconclusive("linear part at the tangency point not certified", w1.order());
        r.verdict = Verdict::WrongReductionTree;
        r.reason = "tangency point has valuation " + std::to_string(v1);
        return r;
    }

    OneForm w1b = w1.renamed({"x", "t"});
    OneForm pulled = pullback(w1b, Jet2::x(w1b.order() + 1) * Jet2::y(w1b.order() + 1), Jet2::y(w1b.order() + 1), {"xi", "t"});
    auto [w2, k2] = exceptional_divide(pulled, 1);
    r.second_chart_form = w2;
    r.exceptional_power_2 = k2;
    if (k2 != 2) {
        r.verdict = Verdict::WrongReductionTree;
        r.reason = "second exceptional power " + std::to_string(k2) + " is not 2";
        return r;
    }
    // D2 = {xi = 0} (coordinate t), D1 = {t = 0} (coordinate xi)
    Coeff a00 = w2.A().coeff(0, 0), b00 = w2.B().coeff(0, 0);
    r.corner_regular = !a00.is_zero() || !b00.is_zero();
    Jet1 along_d1 = w2.A().restrict_y0();
    r.transverse_to_D1 = !a00.is_zero() && along_d1.valuation() == 0 && along_d1.truncate(0).with_order(along_d1.order()) == along_d1;
    r.transverse_to_D2 = !b00.is_zero();
    if (r.corner_regular && r.transverse_to_D1 && r.transverse_to_D2) {
        r.verdict = Verdict::CuspTypeAbsolutelyDicritical;
        r.reason = "two blow-ups give a regular foliation transverse to both divisor components";
    } else {
        r.verdict = Verdict::NotDicritical;
        r.reason = "corner point not regular and transverse";
    }
    return r;
}

ExactnessResult relative_exactness_solve(const OneForm &eta, const OneForm &w, int n) {
    n = std::min({n, eta.order(), w.order()});
    // unknowns: g monomials of degree 0..n, then f monomials of degree 1..n+1
    std::vector<std::pair<int, int>> gm, fm;
    for (int d = 0; d <= n; ++d)
        for (int j = 0; j <= d; ++j) gm.emplace_back(d - j, j);
    for (int d = 1; d <= n + 1; ++d)
        for (int j = 0; j <= d; ++j) fm.emplace_back(d - j, j);
    size_t nu = gm.size() + fm.size();
    IncrementalSolver s(nu);
    ExactnessResult out;
    std::vector<int> row_degree;
    for (int d = 0; d <= n && s.consistent(); ++d) {
        for (int comp = 0; comp < 2; ++comp) {
            const Jet2 &wc = comp == 0 ? w.A() : w.B();
            const Jet2 &ec = comp == 0 ? eta.A() : eta.B();
            for (int j = 0; j <= d; ++j) {
                int i = d - j;
                std::vector<Coeff> row(nu);
                for (size_t k = 0; k < gm.size(); ++k) {
                    auto [a, b] = gm[k];
                    if (a <= i && b <= j) row[k] = wc.coeff(i - a, j - b);
                }
                for (size_t k = 0; k < fm.size(); ++k) {
                    auto [p, q] = fm[k];
                    if (comp == 0 && p == i + 1 && q == j) row[gm.size() + k] = Coeff(p);
                    if (comp == 1 && p == i && q == j + 1) row[gm.size() + k] = Coeff(q);
                }
                row_degree.push_back(d);
                if (!s.add_row(row, ec.coeff(i, j))) break;
            }
            if (!s.consistent()) break;
        }
    }
    if (!s.consistent()) {
        out.obstructed_degree = row_degree[*s.first_inconsistent_row()];
        out.certificate = *s.certificate();
        return out;
    }
    std::vector<Coeff> x = s.solution();
    Jet2 f(n + 1), g(n);
    for (size_t k = 0; k < gm.size(); ++k) g.set(gm[k].first, gm[k].second, x[k]);
    for (size_t k = 0; k < fm.size(); ++k) f.set(fm[k].first, fm[k].second, x[gm.size() + k]);
    out.feasible = true;
    out.f = f;
    out.g = g;
    return out;
}

// ---------------------------------------------------------------- three-variable polynomial forms

PolyForm3::Poly poly3_add(const PolyForm3::Poly &a, const PolyForm3::Poly &b) {
    PolyForm3::Poly r = a;
    for (const auto &[m, c] : b) {
        Coeff &t = r[m];
        t += c;
        if (t.is_zero()) r.erase(m);
    }
    return r;
}

PolyForm3::Poly poly3_mul(const PolyForm3::Poly &a, const PolyForm3::Poly &b) {
    PolyForm3::Poly r;
    for (const auto &[ma, ca] : a)
        for (const auto &[mb, cb] : b) {
            PolyForm3::Mono m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]};
            Coeff &t = r[m];
            t += ca * cb;
            if (t.is_zero()) r.erase(m);
        }
    return r;
}

PolyForm3::Poly poly3_derive(const PolyForm3::Poly &a, int var) {
    PolyForm3::Poly r;
    for (const auto &[m, c] : a) {
        int e = m[static_cast<size_t>(var)];
        if (e == 0) continue;
        PolyForm3::Mono mm = m;
        mm[static_cast<size_t>(var)] -= 1;
        r[mm] += c * Coeff(e);
    }
    return r;
}

std::string poly3_str(const PolyForm3::Poly &a, const std::array<std::string, 3> &vars) {
    // deterministic: total degree, then lexicographic exponent order
    std::vector<std::pair<PolyForm3::Mono, Coeff>> terms(a.begin(), a.end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto &p, const auto &q) {
        int dp = p.first[0] + p.first[1] + p.first[2], dq = q.first[0] + q.first[1] + q.first[2];
        if (dp != dq) return dp < dq;
        return p.first > q.first;
    });
    std::string out;
    for (const auto &[m, c] : terms) {
        std::string mono;
        for (size_t k = 0; k < 3; ++k) {
            if (m[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars[k];
            if (m[k] > 1) mono += "^" + std::to_string(m[k]);
        }
        std::string cs = c.is_compound() ? "(" + c.str() + ")" : c.str();
        std::string t;
        if (mono.empty())
            t = cs;
        else if (c.is_one())
            t = mono;
        else if (c == Coeff(-1))
            t = "-" + mono;
        else
            t = cs + "*" + mono;
        if (out.empty())
            out = t;
        else if (t[0] == '-')
            out += " - " + t.substr(1);
        else
            out += " + " + t;
    }
    return out.empty() ? "0" : out;
}

PolyForm3 PolyForm3::blowup(int a, int b, const std::string &new_name) const {
    auto remap = [&](const Poly &p) {
        Poly r;
        for (const auto &[m, c] : p) {
            Mono mm = m;
            mm[static_cast<size_t>(b)] += m[static_cast<size_t>(a)];
            r[mm] = c;
        }
        return r;
    };
    std::array<Poly, 3> n;
    for (size_t k = 0; k < 3; ++k) n[k] = remap(c_[k]);
    Mono vb{0, 0, 0}, va{0, 0, 0};
    vb[static_cast<size_t>(b)] = 1;
    va[static_cast<size_t>(a)] = 1;
    Poly ca = n[static_cast<size_t>(a)];
    // d(v_a) = v_b d(v_a') + v_a' d(v_b)
    n[static_cast<size_t>(a)] = poly3_mul(ca, Poly{{vb, Coeff(1)}});
    n[static_cast<size_t>(b)] = poly3_add(n[static_cast<size_t>(b)], poly3_mul(ca, Poly{{va, Coeff(1)}}));
    auto vars = vars_;
    vars[static_cast<size_t>(a)] = new_name;
    return {n, vars};
}

std::pair<PolyForm3, int> PolyForm3::divide(int b) const {
    int k = std::numeric_limits<int>::max();
    for (const auto &p : c_)
        for (const auto &[m, c] : p) k = std::min(k, m[static_cast<size_t>(b)]);
    if (k == std::numeric_limits<int>::max() || k == 0) return {*this, 0};
    std::array<Poly, 3> n;
    for (size_t q = 0; q < 3; ++q)
        for (const auto &[m, c] : c_[q]) {
            Mono mm = m;
            mm[static_cast<size_t>(b)] -= k;
            n[q][mm] = c;
        }
    return {PolyForm3(n, vars_), k};
}

OneForm PolyForm3::specialize(const Coeff &value, int order) const {
    Jet2 a(order), b(order);
    for (int k = 0; k < 2; ++k) {
        Jet2 &t = k == 0 ? a : b;
        for (const auto &[m, c] : c_[static_cast<size_t>(k)]) t.add_term(m[0], m[1], c * value.pow(m[2]));
    }
    return {a, b, {vars_[0], vars_[1]}};
}

std::string PolyForm3::str() const {
    std::string out;
    for (size_t k = 0; k < 3; ++k) {
        if (c_[k].empty()) continue;
        std::string s = poly3_str(c_[k], vars_);
        std::string t = (s == "1" ? "" : "(" + s + ") ") + "d" + vars_[k];
        out += out.empty() ? t : " + " + t;
    }
    return out.empty() ? "0" : out;
}

PolyForm3 form_of_meromorphic3(const PolyForm3::Poly &num, const PolyForm3::Poly &den, std::array<std::string, 3> vars) {
    std::array<PolyForm3::Poly, 3> c;
    for (int k = 0; k < 3; ++k) {
        PolyForm3::Poly a = poly3_mul(den, poly3_derive(num, k));
        PolyForm3::Poly b = poly3_mul(num, poly3_derive(den, k));
        for (auto &[m, v] : b) v = -v;
        c[static_cast<size_t>(k)] = poly3_add(a, b);
    }
    return {c, std::move(vars)};
}

}  // namespace cuspfol
