#include "cuspfol/transversal.hpp"

#include <stdexcept>

namespace cuspfol {

namespace {

void validate(const OneForm &w) {
    if (w.A().coeff(0, 0).is_zero())
        throw std::invalid_argument("corner germ not transverse to D2 = {v=0}: du coefficient vanishes at p");
    if (w.B().coeff(0, 0).is_zero())
        throw std::invalid_argument("corner germ not transverse to D1 = {u=0}: dv coefficient vanishes at p");
}

}  // namespace

CornerGerm::CornerGerm(OneForm form)
    : form_(std::move(form)), d2_(GermDiff1::identity(std::max(form_.order(), 1))),
      d1_(GermDiff1::identity(std::max(form_.order(), 1))) {
    validate(form_);
}

CornerGerm::CornerGerm(OneForm form, GermDiff1 d2_coordinate, GermDiff1 d1_coordinate)
    : form_(std::move(form)), d2_(std::move(d2_coordinate)), d1_(std::move(d1_coordinate)) {
    validate(form_);
}

CornerGerm corner_germ(const ReductionReport &r) {
    if (!r.second_chart_form) throw std::invalid_argument("reduction report has no corner chart");
    // second chart form is A dxi + B dt with variables (xi, t); swap to (t, xi) = (u, v)
    return CornerGerm(r.second_chart_form->swap_vars().renamed({"u", "v"}));
}

Jet2 regular_first_integral(const CornerGerm &c, int n) {
    n = std::min(n, c.order());
    // H_v = H_u * R with R = Q/P, solved coefficient of v^k by coefficient of v^k
    Jet2 R = c.form().B().truncate(n) / c.form().A().truncate(n);
    Jet2 H(n + 1);
    H.set(1, 0, 1);
    for (int k = 0; k < n; ++k) {
        Jet2 rhs = H.derive(0) * R;
        // (k+1) h_{k+1}(u) = [v^k](H_u R)
        for (int i = 0; i + k + 1 <= n + 1; ++i) {
            if (i + k > rhs.order()) break;
            H.set(i, k + 1, rhs.coeff(i, k) / Coeff(k + 1));
        }
    }
    return H.truncate(n);
}

GermDiff1 transversal_structure_from_integral(const Jet2 &H) {
    GermDiff1 on_d2(H.restrict_y0());
    GermDiff1 on_d1(H.restrict_x0());
    return compose(on_d1.inverse(), on_d2);
}

GermDiff1 transversal_structure(const CornerGerm &c, int n) {
    GermDiff1 chart = transversal_structure_from_integral(regular_first_integral(c, n));
    // sigma_std = d1 ∘ sigma_chart ∘ d2^{-1}
    return compose(c.d1_coordinate(), compose(chart, c.d2_coordinate().inverse()));
}

}  // namespace cuspfol
