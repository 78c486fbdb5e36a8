#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cuspfol/germs.hpp"
#include "cuspfol/transversal.hpp"

namespace cuspfol {

// (x1, y1) -> (x1 A(x1,y1) + sigma(y1), sigma(y1))
class GluingCocycle {
public:
    GluingCocycle(GermDiff1 sigma, Jet2 A);

    const GermDiff1 &sigma() const { return sigma_; }
    const Jet2 &A() const { return A_; }
    int order() const { return std::min(sigma_.order(), A_.order() + 1); }
    // (x3, y3) as jets in (x1, y1)
    std::pair<Jet2, Jet2> map() const;

private:
    GermDiff1 sigma_;
    Jet2 A_;
};

// A = 1 + alpha y1
GluingCocycle build_cocycle(const GermDiff1 &sigma, const Coeff &alpha);

enum class Model { F2, F1 };
std::string to_string(Model m);

// F2: x1^i y1^j -> x2^{2i-j} y2^i; F1: x3^i y3^j -> x4^{i-j} y4^i
std::pair<int, int> transition_exponents(Model m, int i, int j);

struct GlobalityReport {
    bool global = true;
    std::vector<std::pair<int, int>> violations;
};
GlobalityReport globality_check(const Jet2 &f, Model m);

// (x, y) -> (x A(x,y), h(y)) in the chart of the model
struct ModelAutomorphism {
    Model model;
    Homography h;
    Jet2 A;
    std::pair<Jet2, Jet2> map() const;
};

// F2: A = c (1 + mu y)^2 with c = 1/lambda unless given; F1: A = lambda (1 + mu y)/(1 + mu x)^2
ModelAutomorphism model_automorphism(const Homography &h, Model m, int order, std::optional<Coeff> scale = std::nullopt);
// the factor A (h(y)/y)^k (k = 2 for F2, 1 for F1) must be global and nonvanishing at 0
bool is_regular_automorphism(const ModelAutomorphism &phi);

// phi1 ∘ c ∘ phi2 with phi1 on the F1 side and phi2 on the F2 side
GluingCocycle cocycle_compose_check(const ModelAutomorphism &phi1, const GluingCocycle &c, const ModelAutomorphism &phi2);

struct CoboundaryResult {
    bool feasible = false;
    int order = 0;
    std::optional<Jet2> A2;       // coefficient of X2 = A2 x1 d/dx1
    std::optional<Jet2> A1_tilde; // X1 = (x3 - y3) A1_tilde x3 d/dx3
    int obstructed_degree = -1;
    std::vector<Coeff> certificate;  // y with y^T M = 0, y^T b != 0, over rows in degree order
    std::vector<std::string> certificate_rows;
};

// target T is the coefficient of x1 d/dx1; solves T = A2 - pullback of X1 to order n
CoboundaryResult coboundary_solve(const GluingCocycle &c, const Jet2 &target, int n);
CoboundaryResult coboundary_solve(const GermDiff1 &sigma, const Coeff &alpha0, const Jet2 &target, int n);
// forward map (A2, A1_tilde) -> target coefficient
Jet2 coboundary_image(const GluingCocycle &c, const Jet2 &A2, const Jet2 &A1_tilde, int n);
// dim of the target space modulo the image of admissible (A2, A1_tilde)
int coboundary_corank(const GluingCocycle &c, int n);

struct TrivialityVerdict {
    bool hypothesis_holds = false;
    bool trivial = false;
    Jet2 target;
    std::optional<CoboundaryResult> solution;
    std::string reason;
};

// family[k] is the coefficient of eps^k in A_eps
TrivialityVerdict unfolding_triviality_check(const GermDiff1 &sigma, const std::vector<Jet2> &family, int n);

// Corner germ of F_{sigma, A}: chart (u, v) -> (x1, y1) = (v, u + Y(v)), D1 = {x1 A + sigma(y1) = 0}
CornerGerm corner_germ_of_cocycle(const GluingCocycle &c, int n, const std::optional<Jet2> &unit = std::nullopt);

}  // namespace cuspfol
