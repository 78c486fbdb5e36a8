#pragma once

#include "cuspfol/forms.hpp"
#include "cuspfol/germs.hpp"

namespace cuspfol {

// Regular foliation germ at the corner p = D2 ∩ D1, written P du + Q dv.
// D2 = {v = 0} with coordinate u, D1 = {u = 0} with coordinate v.
// The axis coordinates can be composed with maps to the standard coordinates of D2 and D1.
class CornerGerm {
public:
    explicit CornerGerm(OneForm form);
    CornerGerm(OneForm form, GermDiff1 d2_coordinate, GermDiff1 d1_coordinate);

    const OneForm &form() const { return form_; }
    const GermDiff1 &d2_coordinate() const { return d2_; }
    const GermDiff1 &d1_coordinate() const { return d1_; }
    int order() const { return form_.order(); }

private:
    OneForm form_;
    GermDiff1 d2_, d1_;
};

// u = t, v = xi of the second chart of reduce_cusp
CornerGerm corner_germ(const ReductionReport &r);

// H(0,0)=0, dH ∧ form = 0 to order n, H(u,0) = u
Jet2 regular_first_integral(const CornerGerm &c, int n);
// (v -> H(0,v))^{-1} ∘ (u -> H(u,0)); H is any first integral with H(u,0), H(0,v) invertible
GermDiff1 transversal_structure_from_integral(const Jet2 &H);
// in the standard coordinates of the corner germ
GermDiff1 transversal_structure(const CornerGerm &c, int n);

}  // namespace cuspfol
