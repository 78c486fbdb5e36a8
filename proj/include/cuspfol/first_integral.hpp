#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cuspfol/germs.hpp"
#include "cuspfol/upoly.hpp"

namespace cuspfol {

// num/den, reduced, den monic
class Rational1 {
public:
    Rational1(UPoly num, UPoly den);
    const UPoly &num() const { return num_; }
    const UPoly &den() const { return den_; }
    int degree() const { return std::max(num_.degree(), den_.degree()); }
    // R∘g as a jet; requires den(g(0)) != 0
    Jet1 compose(const Jet1 &g) const;
    std::string str(const std::string &var = "z") const;

    friend bool operator==(const Rational1 &a, const Rational1 &b) { return a.num_ == b.num_ && a.den_ == b.den_; }

private:
    UPoly num_, den_;
};

// P1(sigma) Q2 - P2 Q1(sigma) = 0 to order n
bool verify_rational_relation(const Rational1 &r1, const Rational1 &r2, const GermDiff1 &sigma, int n);

struct HankelReport {
    std::vector<Coeff> determinants;  // det [g_{i+j+1}]_{0<=i,j<=k} for k = 0..d
    std::optional<Rational1> rational;
};

// degree <= d rational function matching g to order n; requires n >= 2d+2
HankelReport hankel_rationality(const Jet1 &g, int d, int n);

struct MeromorphicPair {
    std::string name;
    Jet2 num, den;
};

// (y^2+x^3)/(xy) and (y^2+x^3)/(xy) + x, as polynomial jets of the given order
std::pair<MeromorphicPair, MeromorphicPair> homographic_case_first_integrals(int order = kDefaultOrder);

struct WitnessReport {
    bool relation_found = false;
    std::optional<Rational1> r1, r2;
    int candidates_tested = 0;
    int degree_bound = 0;
    int order = 0;
    std::string note;
};

// bounded search: R1 in a sample basis of degree <= d, test rationality of R1∘sigma
WitnessReport no_first_integral_witness(const GermDiff1 &sigma, int d, int n);

}  // namespace cuspfol
