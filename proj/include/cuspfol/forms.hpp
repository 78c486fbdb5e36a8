#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cuspfol/coeff.hpp"
#include "cuspfol/jets.hpp"
#include "cuspfol/upoly.hpp"

namespace cuspfol {

// A dx + B dy
class OneForm {
public:
    OneForm(Jet2 a, Jet2 b, std::array<std::string, 2> vars = {"x", "y"});

    static OneForm dx(int order) { return {Jet2::constant(order, 1), Jet2(order)}; }
    static OneForm dy(int order) { return {Jet2(order), Jet2::constant(order, 1)}; }
    // x dy - y dx
    static OneForm radial(int order) { return {-Jet2::y(order), Jet2::x(order)}; }

    const Jet2 &A() const { return a_; }
    const Jet2 &B() const { return b_; }
    const std::array<std::string, 2> &vars() const { return vars_; }
    int order() const { return a_.order(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    OneForm truncate(int n) const { return {a_.truncate(n), b_.truncate(n), vars_}; }
    OneForm with_order(int n) const { return {a_.with_order(n), b_.with_order(n), vars_}; }
    OneForm homogeneous_part(int d) const { return {a_.homogeneous_part(d), b_.homogeneous_part(d), vars_}; }
    OneForm renamed(std::array<std::string, 2> v) const { return {a_, b_, std::move(v)}; }
    // (u,v) -> (v,u)
    OneForm swap_vars() const { return {b_.swap_vars(), a_.swap_vars(), {vars_[1], vars_[0]}}; }
    bool agrees(const OneForm &o, int n) const { return a_.agrees(o.a_, n) && b_.agrees(o.b_, n); }

    std::string str() const;

    friend bool operator==(const OneForm &p, const OneForm &q) { return p.a_ == q.a_ && p.b_ == q.b_; }
    friend bool operator!=(const OneForm &p, const OneForm &q) { return !(p == q); }

private:
    Jet2 a_, b_;
    std::array<std::string, 2> vars_;
};

OneForm operator+(const OneForm &p, const OneForm &q);
OneForm operator-(const OneForm &p, const OneForm &q);
OneForm operator*(const Jet2 &f, const OneForm &p);
OneForm operator*(const Coeff &c, const OneForm &p);

// df, order drops by one
OneForm differential(const Jet2 &f);
// den d(num) - num d(den)
OneForm form_of_meromorphic(const Jet2 &num, const Jet2 &den);
// throws on the zero form
int valuation(const OneForm &w);
// P with (A_d dx + B_d dy) = P (x dy - y dx), if the degree-d part is radial
std::optional<Jet2> radial_tangency(const OneForm &w, int d);
// coefficient of dx ∧ dy in p ∧ q
Jet2 wedge(const OneForm &p, const OneForm &q);

// pullback under (x,y) = (X(u,v), Y(u,v)); X, Y without constant term
OneForm pullback(const OneForm &w, const Jet2 &X, const Jet2 &Y, std::array<std::string, 2> vars = {"u", "v"});
// pullback under the linear map (x,y) -> (m[0] x + m[1] y, m[2] x + m[3] y)
OneForm linear_change(const OneForm &w, const std::array<Coeff, 4> &m);

enum class Chart { XChart, YChart };  // y = t x, resp. x = s y
OneForm pullback_blowup(const OneForm &w, Chart chart);
// (w / var^k, k) with k maximal; var 0 or 1
std::pair<OneForm, int> exceptional_divide(const OneForm &w, int var);

struct TangencyLocus {
    UPoly factor;  // monic squarefree
    int multiplicity = 0;
    std::optional<Coeff> root;  // when the factor is linear
};

struct DivisorAnalysis {
    bool invariant = false;
    Jet1 restricted;  // coefficient of the transverse differential on the divisor
    std::vector<TangencyLocus> points;
    int infinity_multiplicity = 0;
    // true when the restricted coefficient is provably a polynomial (degree bound within the jet order)
    bool certified = false;
    int point_count() const;
};

// divisor {var = 0}; expected_degree bounds the restricted polynomial when known
DivisorAnalysis divisor_analysis(const OneForm &w, int var, std::optional<int> expected_degree = std::nullopt);

enum class Verdict { CuspTypeAbsolutelyDicritical, NotDicritical, WrongReductionTree, Inconclusive };
std::string to_string(Verdict v);

struct ReductionReport {
    int order = 0;
    int valuation = -1;
    bool is_valuation_3 = false;
    std::optional<Jet2> p2;  // P with lowest part = P ω_R
    Coeff p2_coefficient;    // a in P2 = a y^2 after the linear change
    std::array<Coeff, 4> linear_change{1, 0, 0, 1};
    std::optional<OneForm> normalized_input;
    bool radial_relations_hold = false;  // the degree 4/5 relations on the normalized input
    std::optional<OneForm> first_chart_form;  // (x,t), divided
    int exceptional_power_1 = 0;
    std::optional<DivisorAnalysis> d2_analysis;
    std::optional<OneForm> second_chart_form;  // (ξ,t), divided
    int exceptional_power_2 = 0;
    bool corner_regular = false;
    bool transverse_to_D1 = false;
    bool transverse_to_D2 = false;
    Verdict verdict = Verdict::Inconclusive;
    int inconclusive_order = -1;
    std::string reason;
};

ReductionReport reduce_cusp(const OneForm &w);

struct ExactnessResult {
    bool feasible = false;
    std::optional<Jet2> f, g;
    int obstructed_degree = -1;
    std::vector<Coeff> certificate;  // over the rows up to the obstructed one
};

// eta - df - g w = 0 to order n
ExactnessResult relative_exactness_solve(const OneForm &eta, const OneForm &w, int n);

// Polynomial 1-form in three variables c0 dv0 + c1 dv1 + c2 dv2, exact.
class PolyForm3 {
public:
    using Mono = std::array<int, 3>;
    using Poly = std::map<Mono, Coeff>;

    PolyForm3() = default;
    PolyForm3(std::array<Poly, 3> c, std::array<std::string, 3> vars) : c_(std::move(c)), vars_(std::move(vars)) {}

    const Poly &coeff(int k) const { return c_[static_cast<size_t>(k)]; }
    const std::array<std::string, 3> &vars() const { return vars_; }

    // v_a <- v_a * v_b (then v_a renamed)
    PolyForm3 blowup(int a, int b, const std::string &new_name) const;
    // (form / v_b^k, k), k maximal
    std::pair<PolyForm3, int> divide(int b) const;
    // drop terms of the third differential and set v2 = value
    OneForm specialize(const Coeff &value, int order) const;

    std::string str() const;
    friend bool operator==(const PolyForm3 &p, const PolyForm3 &q) { return p.c_ == q.c_; }

private:
    std::array<Poly, 3> c_;
    std::array<std::string, 3> vars_;
};

PolyForm3::Poly poly3_add(const PolyForm3::Poly &a, const PolyForm3::Poly &b);
PolyForm3::Poly poly3_mul(const PolyForm3::Poly &a, const PolyForm3::Poly &b);
PolyForm3::Poly poly3_derive(const PolyForm3::Poly &a, int var);
std::string poly3_str(const PolyForm3::Poly &a, const std::array<std::string, 3> &vars);
PolyForm3 form_of_meromorphic3(const PolyForm3::Poly &num, const PolyForm3::Poly &den,
                               std::array<std::string, 3> vars = {"x", "y", "z"});

}  // namespace cuspfol
