#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cuspfol/coeff.hpp"
#include "cuspfol/jets.hpp"
#include "cuspfol/upoly.hpp"

namespace cuspfol {

// Germ of diffeomorphism of (C,0).
class GermDiff1 {
public:
    explicit GermDiff1(Jet1 jet);
    static GermDiff1 identity(int order) { return GermDiff1(Jet1::identity(order)); }

    const Jet1 &jet() const { return jet_; }
    int order() const { return jet_.order(); }
    GermDiff1 inverse() const { return GermDiff1(comp_inverse(jet_)); }

private:
    Jet1 jet_;
};

GermDiff1 compose(const GermDiff1 &f, const GermDiff1 &g);

// z -> lambda z / (1 + mu z)
class Homography {
public:
    Homography(Coeff lambda, Coeff mu);
    static Homography identity() { return {1, 0}; }
    // z / (a + b z)
    static Homography from_affine(const Coeff &a, const Coeff &b);

    const Coeff &lambda() const { return lambda_; }
    const Coeff &mu() const { return mu_; }
    Coeff derivative0() const { return lambda_; }
    Coeff second_derivative0() const { return Coeff(-2) * lambda_ * mu_; }

    Jet1 to_jet(int order) const;
    GermDiff1 to_germ(int order) const { return GermDiff1(to_jet(order)); }
    Homography inverse() const;
    std::string str() const;

    friend bool operator==(const Homography &a, const Homography &b) {
        return a.lambda_ == b.lambda_ && a.mu_ == b.mu_;
    }

private:
    Coeff lambda_, mu_;
};

// (this ∘ other)
Homography compose(const Homography &a, const Homography &b);

// S(f) = f'''/f' - (3/2)(f''/f')^2, order N-3
Jet1 schwarzian(const GermDiff1 &s);

// eps . f = eps^2 f(eps z)
Jet1 cstar_act(const Jet1 &f, const Coeff &eps);

struct CStarConstraint {
    int exponent;  // m = k + 2
    Coeff value;   // eps^m = value
};

struct CStarVerdict {
    enum class Kind { Equivalent, EquivalentExtension, NotEquivalent };
    Kind kind = Kind::NotEquivalent;
    bool equivalent() const { return kind != Kind::NotEquivalent; }
    bool any_epsilon = false;  // both zero
    std::vector<CStarConstraint> constraints;
    long gcd_exponent = 0;  // eps^g = reduced_value
    Coeff reduced_value;
    std::optional<Coeff> witness;  // a Q(i) solution
    std::vector<Coeff> witnesses;  // all Q(i) solutions
    std::string reason;
};

CStarVerdict cstar_equivalent(const Jet1 &f0, const Jet1 &f1);

// one g-th root of r in Q(i), if any
std::optional<Coeff> gaussian_root(const Coeff &r, long g);
// units u of Z[i] with u^g = 1
std::vector<Coeff> unit_roots(long g);

// Exact elimination of f0(z) = f1(h(z)) h'(z)^2 over homographies h = lambda z/(1+mu z).
struct HomographyRelation {
    bool related = false;  // over C
    bool infinite = false; // both zero: every homography
    int valuation = -1;
    UPoly lambda_poly;     // lambda is a root of this polynomial (gcd of all constraints)
    Coeff mu_const, mu_lin;  // mu = mu_const + mu_lin * lambda
    std::vector<Homography> candidates;  // solutions with lambda in Q(i)
    UPoly residual_factor;  // lambda_poly with the representable roots removed
    std::string reason;
};

HomographyRelation homography_relation(const Jet1 &f0, const Jet1 &f1);

struct SymmetryReport {
    bool infinite = false;
    std::vector<Homography> candidates;
    UPoly lambda_constraint;  // symbolic constraint on lambda
    Coeff mu_const, mu_lin;
    UPoly nonrepresentable;   // factor whose roots leave Q(i)
};

SymmetryReport homographic_symmetries(const Jet1 &f);

struct ModuliClass {
    Jet1 schwarzian;
    Coeff canonical_alpha;
};

// (3/2) sigma''(0)/sigma'(0), with sigma''(0) = 2 [z^2]sigma
Coeff canonical_alpha(const GermDiff1 &s);
ModuliClass moduli_class(const GermDiff1 &s);

struct NormalPair {
    GermDiff1 sigma;
    Coeff alpha;
};

struct CanonicalPair {
    Homography h0;     // the homography making the relation-fond left side vanish
    GermDiff1 sigma;   // sigma ∘ h0
    Coeff alpha;       // canonical alpha of sigma ∘ h0
};

CanonicalPair canonical_form(const NormalPair &p);

// (2/5)(alpha - (3/2) sigma''/sigma') for the pair
Coeff relation_fond_lhs(const Coeff &alpha, const GermDiff1 &sigma);
// right side: (2/5)(alpha' - (3/2) gamma''/gamma') h0'(0) - h0''(0)/h0'(0)
Coeff relation_fond_rhs(const Coeff &alpha_prime, const GermDiff1 &gamma, const Homography &h0);

struct PairVerdict {
    bool equivalent = false;
    CanonicalPair canonical0, canonical1;
    CStarVerdict cstar;
};

PairVerdict normal_pair_equivalent(const NormalPair &p0, const NormalPair &p1);

}  // namespace cuspfol
