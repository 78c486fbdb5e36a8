#include "cuspfol/coeff.hpp"

#include <stdexcept>

namespace cuspfol {

Coeff::Coeff(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

Coeff::Coeff(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    re_ = mpq_class(num, den);
    re_.canonicalize();
}

Coeff Coeff::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero coefficient");
    mpq_class n = norm();
    return Coeff(re_ / n, -im_ / n);
}

Coeff Coeff::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Coeff base = *this, acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Coeff &Coeff::operator+=(const Coeff &o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Coeff &Coeff::operator-=(const Coeff &o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Coeff &Coeff::operator*=(const Coeff &o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

Coeff &Coeff::operator/=(const Coeff &o) {
    if (o.is_zero()) throw std::domain_error("division by zero coefficient");
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::string Coeff::str() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string ims;
    if (im_ == 1)
        ims = "i";
    else if (im_ == -1)
        ims = "-i";
    else
        ims = im_.get_str() + "*i";
    if (sgn(re_) == 0) return ims;
    std::string s = re_.get_str();
    if (sgn(im_) > 0) s += "+";
    return s + ims;
}

std::ostream &operator<<(std::ostream &os, const Coeff &c) { return os << c.str(); }

bool coeff_less(const Coeff &a, const Coeff &b) {
    if (a.re() != b.re()) return a.re() < b.re();
    return a.im() < b.im();
}

}  // namespace cuspfol
