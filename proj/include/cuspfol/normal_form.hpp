#pragma once

#include <array>
#include <map>
#include <stdexcept>

#include "cuspfol/forms.hpp"
#include "cuspfol/linalg.hpp"

namespace cuspfol {

struct HomogeneousPair {
    Jet2 P, Q;
    int degree;
};

// validates homogeneity of degree n
HomogeneousPair homogeneous_pair(const Jet2 &P, const Jet2 &Q, int n);

class SingularOperatorError : public std::runtime_error {
public:
    SingularOperatorError(int degree, size_t rank);
    int degree() const { return degree_; }
    size_t rank() const { return rank_; }

private:
    int degree_;
    size_t rank_;
};

// (x Q_x - y P_x + Q, x Q_y - x P_x + P)
HomogeneousPair L_apply(const HomogeneousPair &p);
// preimage under L_apply; throws SingularOperatorError when L is not invertible in that degree
HomogeneousPair L_solve(const HomogeneousPair &target);
// columns: coefficients of P then Q (x-exponent ascending); rows: first then second component
Matrix L_matrix(int n);

// (x Q_x - y P_x - Q, x Q_y - y P_y + P), the operator matching the per-coefficient kernel computation
HomogeneousPair L_prime_apply(const HomogeneousPair &p);
Matrix L_prime_matrix(int n);

// first-order change of y^2 ω_R under (x,y) -> (x+P, y+Q):
// (y^2 (x Q_x - y P_x - 3Q), y^2 (x Q_y - y P_y + P) + 2 x y Q), homogeneous of degree n+2
std::pair<Jet2, Jet2> homological_apply(const HomogeneousPair &p);
Matrix homological_matrix(int n);

struct TailCoefficients {
    Coeff a, b, c, d;  // x^{n-1}((a x + b y) dx + (c x + d y) dy)
    friend bool operator==(const TailCoefficients &p, const TailCoefficients &q) {
        return p.a == q.a && p.b == q.b && p.c == q.c && p.d == q.d;
    }
};

struct NormalFormData {
    int order = 0;
    Coeff alpha;
    Coeff a;
    std::map<int, TailCoefficients> tail;  // 5 <= n <= order
    Coeff e5;                               // coefficient of x^3 y^2 dx, not reached by the homological operator
    std::array<Coeff, 4> linear_part{1, 0, 0, 1};
    Jet2 X, Y;  // tangent-to-identity part of the transform

    // same normal form (the transform is not compared)
    bool same_form(const NormalFormData &o) const;
};

// coefficient-degree-m residual basis as (component, x-exponent, y-exponent)
std::array<std::array<int, 3>, 4> residual_basis(int m);

// requires reduce_cusp verdict CuspTypeAbsolutelyDicritical
NormalFormData normalize(const OneForm &w, int order);
OneForm reconstruct(const NormalFormData &data);
// pullback of w by linear_part ∘ (X, Y)
OneForm apply_transform(const OneForm &w, const NormalFormData &data);

}  // namespace cuspfol
