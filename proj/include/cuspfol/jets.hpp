#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cuspfol/coeff.hpp"

namespace cuspfol {

inline constexpr int kDefaultOrder = 16;

// Truncated power series in one variable: coefficients of z^0..z^order.
class Jet1 {
public:
    explicit Jet1(int order = 0);
    Jet1(int order, const std::vector<Coeff> &coeffs);

    static Jet1 constant(int order, const Coeff &c);
    static Jet1 identity(int order);
    static Jet1 monomial(int order, int k, const Coeff &c = 1);

    int order() const { return order_; }
    Coeff coeff(int k) const;
    const Coeff &operator[](int k) const { return c_.at(static_cast<size_t>(k)); }
    void set(int k, const Coeff &c);
    const std::vector<Coeff> &coeffs() const { return c_; }

    bool is_zero() const;
    // -1 for the zero jet
    int valuation() const;

    Jet1 truncate(int n) const;
    // reinterpret as an exact polynomial known to order n (pads with zeros)
    Jet1 with_order(int n) const;
    bool agrees(const Jet1 &o, int n) const;

    Jet1 derive() const;
    Jet1 operator-() const;
    Jet1 &operator*=(const Coeff &c);

    std::string str(const std::string &var = "z") const;

    friend bool operator==(const Jet1 &a, const Jet1 &b) { return a.order_ == b.order_ && a.c_ == b.c_; }
    friend bool operator!=(const Jet1 &a, const Jet1 &b) { return !(a == b); }

private:
    int order_;
    std::vector<Coeff> c_;
};

Jet1 operator+(const Jet1 &a, const Jet1 &b);
Jet1 operator-(const Jet1 &a, const Jet1 &b);
Jet1 operator*(const Jet1 &a, const Jet1 &b);
Jet1 operator*(const Coeff &c, Jet1 a);
// unit divisor, or exact division by a power of z times a unit
Jet1 operator/(const Jet1 &a, const Jet1 &b);
Jet1 pow(const Jet1 &a, int e);

// f∘g, requires g(0)=0
Jet1 compose(const Jet1 &f, const Jet1 &g);
// compositional inverse, requires f(0)=0, f'(0)≠0
Jet1 comp_inverse(const Jet1 &f);

Jet1 exp_series(int order);
Jet1 log1p_series(int order);

// Truncated power series in two variables with total-degree truncation.
class Jet2 {
public:
    explicit Jet2(int order = 0);

    static Jet2 constant(int order, const Coeff &c);
    static Jet2 x(int order);
    static Jet2 y(int order);
    static Jet2 monomial(int order, int i, int j, const Coeff &c = 1);

    int order() const { return order_; }
    Coeff coeff(int i, int j) const;
    void set(int i, int j, const Coeff &c);
    // silently dropped when i+j > order
    void add_term(int i, int j, const Coeff &c);

    bool is_zero() const;
    int valuation() const;
    Jet2 homogeneous_part(int d) const;

    Jet2 truncate(int n) const;
    Jet2 with_order(int n) const;
    bool agrees(const Jet2 &o, int n) const;

    // var 0 = x, 1 = y
    Jet2 derive(int var) const;
    Jet2 swap_vars() const;
    Jet2 operator-() const;
    Jet2 &operator*=(const Coeff &c);

    Jet1 restrict_x0() const;  // f(0,y)
    Jet1 restrict_y0() const;  // f(x,0)

    // visit nonzero terms in degree order
    void for_each(const std::function<void(int, int, const Coeff &)> &fn) const;

    std::string str(const std::string &xv = "x", const std::string &yv = "y") const;

    friend bool operator==(const Jet2 &a, const Jet2 &b) { return a.order_ == b.order_ && a.c_ == b.c_; }
    friend bool operator!=(const Jet2 &a, const Jet2 &b) { return !(a == b); }

private:
    static size_t idx(int i, int j) {
        size_t d = static_cast<size_t>(i + j);
        return d * (d + 1) / 2 + static_cast<size_t>(j);
    }
    int order_;
    std::vector<Coeff> c_;
};

Jet2 operator+(const Jet2 &a, const Jet2 &b);
Jet2 operator-(const Jet2 &a, const Jet2 &b);
Jet2 operator*(const Jet2 &a, const Jet2 &b);
Jet2 operator*(const Coeff &c, Jet2 a);
// unit divisor, or exact division whose lowest homogeneous part divides degree by degree
Jet2 operator/(const Jet2 &a, const Jet2 &b);
Jet2 pow(const Jet2 &a, int e);

// f(u,v); u and v must have zero constant term
Jet2 substitute(const Jet2 &f, const Jet2 &u, const Jet2 &v);
// f(x(t), y(t)); x and y must have zero constant term
Jet1 substitute_curve(const Jet2 &f, const Jet1 &x, const Jet1 &y);
// g(f(x,y)) for univariate g, f(0,0)=0
Jet2 compose(const Jet1 &g, const Jet2 &f);
// the jet f(x) viewed as a function of x (var 0) or y (var 1)
Jet2 lift(const Jet1 &f, int var);

}  // namespace cuspfol
