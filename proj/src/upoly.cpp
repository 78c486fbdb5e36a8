#include "cuspfol/upoly.hpp"

#include <stdexcept>

namespace cuspfol {

UPoly::UPoly(const Coeff &c) {
    if (!c.is_zero()) c_.push_back(c);
}

UPoly::UPoly(std::vector<Coeff> c) : c_(std::move(c)) { trim(); }

UPoly UPoly::monomial(int k, const Coeff &c) {
    std::vector<Coeff> v(static_cast<size_t>(k) + 1);
    v[static_cast<size_t>(k)] = c;
    return UPoly(std::move(v));
}

UPoly UPoly::linear_root(const Coeff &r) { return UPoly(std::vector<Coeff>{-r, 1}); }

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Coeff UPoly::coeff(int k) const {
    if (k < 0 || k > degree()) return Coeff();
    return c_[static_cast<size_t>(k)];
}

Coeff UPoly::eval(const Coeff &x) const {
    Coeff r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

UPoly UPoly::derive() const {
    std::vector<Coeff> v;
    for (size_t k = 1; k < c_.size(); ++k) v.push_back(c_[k] * Coeff(static_cast<long>(k)));
    return UPoly(std::move(v));
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    Coeff inv = lead().inverse();
    std::vector<Coeff> v = c_;
    for (auto &c : v) c *= inv;
    return UPoly(std::move(v));
}

Jet1 UPoly::to_jet(int order) const { return Jet1(order, c_); }

Jet1 UPoly::compose(const Jet1 &g) const {
    Jet1 r(g.order());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r = r * g;
        r.set(0, r[0] + *it);
    }
    return r;
}

UPoly operator+(const UPoly &a, const UPoly &b) {
    std::vector<Coeff> v(std::max(a.c_.size(), b.c_.size()));
    for (size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    return UPoly(std::move(v));
}

UPoly operator-(const UPoly &a, const UPoly &b) {
    std::vector<Coeff> v(std::max(a.c_.size(), b.c_.size()));
    for (size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
    return UPoly(std::move(v));
}

UPoly operator*(const UPoly &a, const UPoly &b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Coeff> v(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(v));
}

std::string UPoly::str(const std::string &var) const {
    if (is_zero()) return "0";
    return to_jet(degree()).str(var);
}

std::pair<UPoly, UPoly> divmod(const UPoly &a, const UPoly &b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Coeff> r = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {UPoly(), a};
    std::vector<Coeff> q(static_cast<size_t>(a.degree() - db) + 1);
    Coeff inv = b.lead().inverse();
    for (int k = a.degree(); k >= db; --k) {
        Coeff f = r[static_cast<size_t>(k)] * inv;
        if (f.is_zero()) continue;
        q[static_cast<size_t>(k - db)] = f;
        for (int t = 0; t <= db; ++t) r[static_cast<size_t>(k - db + t)] -= f * b.coeff(t);
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(const UPoly &a, const UPoly &b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = divmod(x, y).second;
        x = y;
        y = r;
    }
    return x.monic();
}

std::vector<SquarefreeFactor> squarefree_factorization(const UPoly &p) {
    std::vector<SquarefreeFactor> out;
    if (p.degree() <= 0) return out;
    UPoly f = p.monic();
    UPoly a = gcd(f, f.derive());
    UPoly b = divmod(f, a).first;
    UPoly c = divmod(f.derive(), a).first;
    UPoly d = c - b.derive();
    int i = 1;
    while (b.degree() > 0) {
        UPoly g = gcd(b, d);
        if (g.degree() > 0) out.push_back({g, i});
        b = divmod(b, g).first;
        c = divmod(d, g).first;
        d = c - b.derive();
        ++i;
    }
    return out;
}

UPoly from_jet(const Jet1 &j) { return UPoly(j.coeffs()); }

}  // namespace cuspfol
