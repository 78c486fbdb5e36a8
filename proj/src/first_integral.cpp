#include "cuspfol/first_integral.hpp"

#include <stdexcept>

#include "cuspfol/linalg.hpp"

namespace cuspfol {

Rational1::Rational1(UPoly num, UPoly den) {
    if (den.is_zero()) throw std::invalid_argument("rational function with zero denominator");
    UPoly g = gcd(num, den);
    if (!num.is_zero() && g.degree() > 0) {
        num = divmod(num, g).first;
        den = divmod(den, g).first;
    }
    if (num.is_zero()) den = UPoly(Coeff(1));
    Coeff l = den.lead().inverse();
    num_ = num * UPoly(l);
    den_ = den * UPoly(l);
}

Jet1 Rational1::compose(const Jet1 &g) const { return num_.compose(g) / den_.compose(g); }

std::string Rational1::str(const std::string &var) const {
    if (den_.degree() == 0) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

bool verify_rational_relation(const Rational1 &r1, const Rational1 &r2, const GermDiff1 &sigma, int n) {
    Jet1 s = sigma.jet().truncate(std::min(n, sigma.order()));
    Jet1 z = Jet1::identity(s.order());
    Jet1 lhs = r1.num().compose(s) * r2.den().compose(z) - r2.num().compose(z) * r1.den().compose(s);
    return lhs.is_zero();
}

HankelReport hankel_rationality(const Jet1 &g, int d, int n) {
    if (d < 0) throw std::invalid_argument("negative degree bound");
    n = std::min(n, g.order());
    if (n < 2 * d + 2) throw std::invalid_argument("hankel_rationality needs order >= 2d+2");
    HankelReport rep;
    for (int k = 0; k <= d; ++k) {
        Matrix H(static_cast<size_t>(k) + 1, static_cast<size_t>(k) + 1);
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j) H(static_cast<size_t>(i), static_cast<size_t>(j)) = g[i + j + 1];
        rep.determinants.push_back(determinant(H));
    }
    // denominators q of degree <= d with [z^k](q g) = 0 for d < k <= n
    Matrix T(static_cast<size_t>(n - d), static_cast<size_t>(d) + 1);
    for (int k = d + 1; k <= n; ++k)
        for (int j = 0; j <= d; ++j)
            T(static_cast<size_t>(k - d - 1), static_cast<size_t>(j)) = g.coeff(k - j);
    auto ker = nullspace(T);
    for (const auto &q : ker) {
        UPoly den(q);
        if (den.coeff(0).is_zero()) continue;
        Jet1 prod = g.truncate(n) * den.to_jet(n);
        std::vector<Coeff> num(static_cast<size_t>(d) + 1);
        for (int k = 0; k <= d; ++k) num[static_cast<size_t>(k)] = prod[k];
        Rational1 r(UPoly(num), den);
        if ((r.num().to_jet(n) - g.truncate(n) * r.den().to_jet(n)).is_zero()) {
            rep.rational = r;
            break;
        }
    }
    return rep;
}

std::pair<MeromorphicPair, MeromorphicPair> homographic_case_first_integrals(int order) {
    Jet2 x = Jet2::x(order), y = Jet2::y(order);
    Jet2 num1 = y * y + x * x * x;
    Jet2 den = x * y;
    Jet2 num2 = num1 + x * x * y;
    return {{"(y^2+x^3)/(x*y)", num1, den}, {"(y^2+x^3)/(x*y) + x", num2, den}};
}

WitnessReport no_first_integral_witness(const GermDiff1 &sigma, int d, int n) {
    WitnessReport rep;
    rep.degree_bound = d;
    rep.order = n = std::min(n, sigma.order());
    std::vector<Rational1> basis;
    for (int k = 1; k <= d; ++k) basis.emplace_back(UPoly::monomial(k), UPoly(Coeff(1)));
    // a few non-polynomial samples: z^k/(1+z)^k and z + z^2 when the bound allows
    for (int k = 1; k <= d; ++k) {
        UPoly den(Coeff(1));
        for (int t = 0; t < k; ++t) den = den * UPoly(std::vector<Coeff>{1, 1});
        basis.emplace_back(UPoly::monomial(k), den);
    }
    if (d >= 2) basis.emplace_back(UPoly(std::vector<Coeff>{0, 1, 1}), UPoly(Coeff(1)));
    int hd = std::min(d, (n - 2) / 2);
    for (const auto &r1 : basis) {
        ++rep.candidates_tested;
        if (r1.den().eval(0).is_zero()) continue;
        Jet1 g = r1.compose(sigma.jet().truncate(n));
        HankelReport h = hankel_rationality(g, hd, n);
        if (h.rational && h.rational->degree() > 0 && verify_rational_relation(r1, *h.rational, sigma, n)) {
            rep.relation_found = true;
            rep.r1 = r1;
            rep.r2 = h.rational;
            rep.note = "relation R1∘sigma = R2 holds to order " + std::to_string(n);
            return rep;
        }
    }
    rep.note = "bounded search: no relation with deg R1 <= " + std::to_string(d) + " and deg R2 <= " + std::to_string(hd) +
               " at order " + std::to_string(n) + "; not a proof of non-existence";
    return rep;
}

}  // namespace cuspfol
