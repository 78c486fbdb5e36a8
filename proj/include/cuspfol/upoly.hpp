#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cuspfol/coeff.hpp"
#include "cuspfol/jets.hpp"

namespace cuspfol {

// Dense univariate polynomial over Q(i); no trailing zeros.
class UPoly {
public:
    UPoly() = default;
    UPoly(const Coeff &c);  // NOLINT(google-explicit-constructor)
    explicit UPoly(std::vector<Coeff> c);

    static UPoly x() { return UPoly(std::vector<Coeff>{0, 1}); }
    static UPoly monomial(int k, const Coeff &c = 1);
    // x - r
    static UPoly linear_root(const Coeff &r);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Coeff coeff(int k) const;
    const Coeff &lead() const { return c_.back(); }
    const std::vector<Coeff> &coeffs() const { return c_; }

    Coeff eval(const Coeff &x) const;
    UPoly derive() const;
    UPoly monic() const;
    Jet1 to_jet(int order) const;
    // p(g) as a jet; g(0) may be nonzero only if p is a polynomial (always the case here)
    Jet1 compose(const Jet1 &g) const;

    friend UPoly operator+(const UPoly &a, const UPoly &b);
    friend UPoly operator-(const UPoly &a, const UPoly &b);
    friend UPoly operator*(const UPoly &a, const UPoly &b);
    friend bool operator==(const UPoly &a, const UPoly &b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly &a, const UPoly &b) { return !(a == b); }

    std::string str(const std::string &var = "z") const;

private:
    void trim();
    std::vector<Coeff> c_;
};

// quotient and remainder
std::pair<UPoly, UPoly> divmod(const UPoly &a, const UPoly &b);
// monic gcd (zero if both zero)
UPoly gcd(const UPoly &a, const UPoly &b);

struct SquarefreeFactor {
    UPoly factor;  // monic, squarefree
    int multiplicity;
};
// Yun's algorithm; the constant factor is dropped
std::vector<SquarefreeFactor> squarefree_factorization(const UPoly &p);

// polynomial from a jet, dropping nothing (all coefficients up to the order)
UPoly from_jet(const Jet1 &j);

}  // namespace cuspfol
