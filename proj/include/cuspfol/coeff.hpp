#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>

namespace cuspfol {

// Exact element of Q(i).
class Coeff {
public:
    Coeff() = default;
    Coeff(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    Coeff(mpq_class re, mpq_class im = 0);
    Coeff(long num, long den);

    static Coeff i() { return Coeff(mpq_class(0), mpq_class(1)); }

    const mpq_class &re() const { return re_; }
    const mpq_class &im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    Coeff conj() const { return Coeff(re_, -im_); }
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    Coeff inverse() const;
    Coeff pow(long e) const;

    Coeff &operator+=(const Coeff &o);
    Coeff &operator-=(const Coeff &o);
    Coeff &operator*=(const Coeff &o);
    Coeff &operator/=(const Coeff &o);

    friend Coeff operator+(Coeff a, const Coeff &b) { return a += b; }
    friend Coeff operator-(Coeff a, const Coeff &b) { return a -= b; }
    friend Coeff operator*(Coeff a, const Coeff &b) { return a *= b; }
    friend Coeff operator/(Coeff a, const Coeff &b) { return a /= b; }
    Coeff operator-() const { return Coeff(-re_, -im_); }

    friend bool operator==(const Coeff &a, const Coeff &b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Coeff &a, const Coeff &b) { return !(a == b); }

    // "3/2", "-i", "1+2*i", "1/2-1/3*i" (re-parses with the expression grammar)
    std::string str() const;
    // true when str() needs parentheses as a factor
    bool is_compound() const { return sgn(re_) != 0 && sgn(im_) != 0; }

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::ostream &operator<<(std::ostream &os, const Coeff &c);

// total order used only for deterministic output (re first, then im)
bool coeff_less(const Coeff &a, const Coeff &b);

}  // namespace cuspfol
