#include "cuspfol/jets.hpp"

#include <algorithm>
#include <stdexcept>

namespace cuspfol {

namespace {

std::string monomial_str(const std::string &v, int e) {
    if (e == 0) return "";
    if (e == 1) return v;
    return v + "^" + std::to_string(e);
}

std::string term_str(const Coeff &c, const std::string &mono) {
    if (mono.empty()) return c.is_compound() ? "(" + c.str() + ")" : c.str();
    if (c.is_one()) return mono;
    if (c == Coeff(-1)) return "-" + mono;
    std::string cs = c.is_compound() ? "(" + c.str() + ")" : c.str();
    return cs + "*" + mono;
}

void append_term(std::string &out, const std::string &t) {
    if (out.empty()) {
        out = t;
    } else if (t[0] == '-') {
        out += " - " + t.substr(1);
    } else {
        out += " + " + t;
    }
}

void check_order(int n) {
    if (n < 0) throw std::invalid_argument("negative jet order");
}

}  // namespace

// ---------------------------------------------------------------- Jet1

Jet1::Jet1(int order) : order_(order) {
    check_order(order);
    c_.assign(static_cast<size_t>(order) + 1, Coeff());
}

Jet1::Jet1(int order, const std::vector<Coeff> &coeffs) : Jet1(order) {
    for (size_t k = 0; k < coeffs.size() && k < c_.size(); ++k) c_[k] = coeffs[k];
}

Jet1 Jet1::constant(int order, const Coeff &c) {
    Jet1 r(order);
    r.c_[0] = c;
    return r;
}

Jet1 Jet1::identity(int order) { return monomial(order, 1); }

Jet1 Jet1::monomial(int order, int k, const Coeff &c) {
    Jet1 r(order);
    if (k <= order) r.c_[static_cast<size_t>(k)] = c;
    return r;
}

Coeff Jet1::coeff(int k) const {
    if (k < 0 || k > order_) return Coeff();
    return c_[static_cast<size_t>(k)];
}

void Jet1::set(int k, const Coeff &c) {
    if (k < 0 || k > order_) throw std::out_of_range("Jet1::set beyond order");
    c_[static_cast<size_t>(k)] = c;
}

bool Jet1::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Coeff &c) { return c.is_zero(); });
}

int Jet1::valuation() const {
    for (int k = 0; k <= order_; ++k)
        if (!c_[static_cast<size_t>(k)].is_zero()) return k;
    return -1;
}

Jet1 Jet1::truncate(int n) const {
    if (n > order_) throw std::invalid_argument("cannot truncate a jet to a higher order");
    return Jet1(n, c_);
}

Jet1 Jet1::with_order(int n) const { return Jet1(n, c_); }

bool Jet1::agrees(const Jet1 &o, int n) const {
    for (int k = 0; k <= n; ++k)
        if (coeff(k) != o.coeff(k)) return false;
    return true;
}

Jet1 Jet1::derive() const {
    if (order_ == 0) throw std::invalid_argument("derivative of an order-0 jet");
    Jet1 r(order_ - 1);
    for (int k = 1; k <= order_; ++k) r.c_[static_cast<size_t>(k - 1)] = c_[static_cast<size_t>(k)] * Coeff(k);
    return r;
}

Jet1 Jet1::operator-() const {
    Jet1 r(*this);
    for (auto &c : r.c_) c = -c;
    return r;
}

Jet1 &Jet1::operator*=(const Coeff &c) {
    for (auto &x : c_) x *= c;
    return *this;
}

std::string Jet1::str(const std::string &var) const {
    std::string out;
    for (int k = 0; k <= order_; ++k) {
        const Coeff &c = c_[static_cast<size_t>(k)];
        if (c.is_zero()) continue;
        append_term(out, term_str(c, monomial_str(var, k)));
    }
    return out.empty() ? "0" : out;
}

Jet1 operator+(const Jet1 &a, const Jet1 &b) {
    int n = std::min(a.order(), b.order());
    Jet1 r(n);
    for (int k = 0; k <= n; ++k) r.set(k, a[k] + b[k]);
    return r;
}

Jet1 operator-(const Jet1 &a, const Jet1 &b) {
    int n = std::min(a.order(), b.order());
    Jet1 r(n);
    for (int k = 0; k <= n; ++k) r.set(k, a[k] - b[k]);
    return r;
}

Jet1 operator*(const Jet1 &a, const Jet1 &b) {
    int n = std::min(a.order(), b.order());
    std::vector<Coeff> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b[j].is_zero()) continue;
            c[static_cast<size_t>(i + j)] += a[i] * b[j];
        }
    }
    return Jet1(n, c);
}

Jet1 operator*(const Coeff &c, Jet1 a) { return a *= c; }

namespace {

Jet1 unit_inverse(const Jet1 &b) {
    int n = b.order();
    Coeff inv0 = b[0].inverse();
    Jet1 r(n);
    r.set(0, inv0);
    for (int k = 1; k <= n; ++k) {
        Coeff s;
        for (int j = 1; j <= k; ++j)
            if (!b[j].is_zero()) s += b[j] * r[k - j];
        r.set(k, -s * inv0);
    }
    return r;
}

}  // namespace

Jet1 operator/(const Jet1 &a, const Jet1 &b) {
    if (!b[0].is_zero()) {
        int n = std::min(a.order(), b.order());
        return a.truncate(n) * unit_inverse(b.truncate(n));
    }
    int v = b.valuation();
    if (v < 0) throw std::domain_error("division by the zero jet");
    for (int k = 0; k < v; ++k)
        if (!a.coeff(k).is_zero()) throw std::domain_error("jet is not divisible by z^" + std::to_string(v));
    int n = std::min(a.order(), b.order()) - v;
    Jet1 as(n), bs(n);
    for (int k = 0; k <= n; ++k) {
        as.set(k, a.coeff(k + v));
        bs.set(k, b.coeff(k + v));
    }
    return as * unit_inverse(bs);
}

Jet1 pow(const Jet1 &a, int e) {
    if (e < 0) return Jet1::constant(a.order(), 1) / pow(a, -e);
    Jet1 r = Jet1::constant(a.order(), 1);
    for (int k = 0; k < e; ++k) r = r * a;
    return r;
}

Jet1 compose(const Jet1 &f, const Jet1 &g) {
    if (!g[0].is_zero()) throw std::domain_error("compose: inner series has nonzero constant term");
    int n = std::min(f.order(), g.order());
    Jet1 r = Jet1::constant(n, f[n]);
    Jet1 gn = g.truncate(n);
    for (int k = n - 1; k >= 0; --k) {
        r = r * gn;
        r.set(0, r[0] + f[k]);
    }
    return r;
}

Jet1 comp_inverse(const Jet1 &f) {
    if (f.order() < 1 || !f[0].is_zero() || f[1].is_zero())
        throw std::domain_error("comp_inverse: germ is not invertible");
    int n = f.order();
    Coeff inv1 = f[1].inverse();
    Jet1 g(n);
    g.set(1, inv1);
    for (int k = 2; k <= n; ++k) {
        Coeff err = compose(f, g.truncate(k))[k];
        g.set(k, -err * inv1);
    }
    return g;
}

Jet1 exp_series(int order) {
    Jet1 r(order);
    mpq_class f(1);
    for (int k = 0; k <= order; ++k) {
        if (k > 0) f /= k;
        r.set(k, Coeff(f));
    }
    return r;
}

Jet1 log1p_series(int order) {
    Jet1 r(order);
    for (int k = 1; k <= order; ++k) r.set(k, Coeff(k % 2 ? 1 : -1, k));
    return r;
}

// ---------------------------------------------------------------- Jet2

Jet2::Jet2(int order) : order_(order) {
    check_order(order);
    c_.assign(idx(0, order) + 1, Coeff());
}

Jet2 Jet2::constant(int order, const Coeff &c) { return monomial(order, 0, 0, c); }
Jet2 Jet2::x(int order) { return monomial(order, 1, 0); }
Jet2 Jet2::y(int order) { return monomial(order, 0, 1); }

Jet2 Jet2::monomial(int order, int i, int j, const Coeff &c) {
    Jet2 r(order);
    r.add_term(i, j, c);
    return r;
}

Coeff Jet2::coeff(int i, int j) const {
    if (i < 0 || j < 0 || i + j > order_) return Coeff();
    return c_[idx(i, j)];
}

void Jet2::set(int i, int j, const Coeff &c) {
    if (i < 0 || j < 0 || i + j > order_) throw std::out_of_range("Jet2::set beyond order");
    c_[idx(i, j)] = c;
}

void Jet2::add_term(int i, int j, const Coeff &c) {
    if (i < 0 || j < 0) throw std::out_of_range("negative exponent");
    if (i + j > order_) return;
    c_[idx(i, j)] += c;
}

bool Jet2::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Coeff &c) { return c.is_zero(); });
}

int Jet2::valuation() const {
    for (int d = 0; d <= order_; ++d)
        for (int j = 0; j <= d; ++j)
            if (!c_[idx(d - j, j)].is_zero()) return d;
    return -1;
}

Jet2 Jet2::homogeneous_part(int d) const {
    Jet2 r(order_);
    if (d < 0 || d > order_) return r;
    for (int j = 0; j <= d; ++j) r.c_[idx(d - j, j)] = c_[idx(d - j, j)];
    return r;
}

Jet2 Jet2::truncate(int n) const {
    if (n > order_) throw std::invalid_argument("cannot truncate a jet to a higher order");
    return with_order(n);
}

Jet2 Jet2::with_order(int n) const {
    Jet2 r(n);
    int m = std::min(n, order_);
    for (int d = 0; d <= m; ++d)
        for (int j = 0; j <= d; ++j) r.c_[idx(d - j, j)] = c_[idx(d - j, j)];
    return r;
}

bool Jet2::agrees(const Jet2 &o, int n) const {
    for (int d = 0; d <= n; ++d)
        for (int j = 0; j <= d; ++j)
            if (coeff(d - j, j) != o.coeff(d - j, j)) return false;
    return true;
}

Jet2 Jet2::derive(int var) const {
    if (order_ == 0) throw std::invalid_argument("derivative of an order-0 jet");
    Jet2 r(order_ - 1);
    for (int d = 1; d <= order_; ++d)
        for (int j = 0; j <= d; ++j) {
            int i = d - j;
            const Coeff &c = c_[idx(i, j)];
            if (c.is_zero()) continue;
            if (var == 0 && i > 0) r.c_[idx(i - 1, j)] = c * Coeff(i);
            if (var == 1 && j > 0) r.c_[idx(i, j - 1)] = c * Coeff(j);
        }
    return r;
}

Jet2 Jet2::swap_vars() const {
    Jet2 r(order_);
    for (int d = 0; d <= order_; ++d)
        for (int j = 0; j <= d; ++j) r.c_[idx(j, d - j)] = c_[idx(d - j, j)];
    return r;
}

Jet2 Jet2::operator-() const {
    Jet2 r(*this);
    for (auto &c : r.c_) c = -c;
    return r;
}

Jet2 &Jet2::operator*=(const Coeff &c) {
    for (auto &x : c_) x *= c;
    return *this;
}

Jet1 Jet2::restrict_x0() const {
    Jet1 r(order_);
    for (int j = 0; j <= order_; ++j) r.set(j, c_[idx(0, j)]);
    return r;
}

Jet1 Jet2::restrict_y0() const {
    Jet1 r(order_);
    for (int i = 0; i <= order_; ++i) r.set(i, c_[idx(i, 0)]);
    return r;
}

void Jet2::for_each(const std::function<void(int, int, const Coeff &)> &fn) const {
    for (int d = 0; d <= order_; ++d)
        for (int j = 0; j <= d; ++j) {
            const Coeff &c = c_[idx(d - j, j)];
            if (!c.is_zero()) fn(d - j, j, c);
        }
}

std::string Jet2::str(const std::string &xv, const std::string &yv) const {
    std::string out;
    for_each([&](int i, int j, const Coeff &c) {
        std::string m = monomial_str(xv, i);
        std::string my = monomial_str(yv, j);
        if (!m.empty() && !my.empty())
            m += "*" + my;
        else if (m.empty())
            m = my;
        append_term(out, term_str(c, m));
    });
    return out.empty() ? "0" : out;
}

Jet2 operator+(const Jet2 &a, const Jet2 &b) {
    int n = std::min(a.order(), b.order());
    Jet2 r = a.with_order(n);
    b.for_each([&](int i, int j, const Coeff &c) { r.add_term(i, j, c); });
    return r;
}

Jet2 operator-(const Jet2 &a, const Jet2 &b) {
    int n = std::min(a.order(), b.order());
    Jet2 r = a.with_order(n);
    b.for_each([&](int i, int j, const Coeff &c) { r.add_term(i, j, -c); });
    return r;
}

Jet2 operator*(const Jet2 &a, const Jet2 &b) {
    int n = std::min(a.order(), b.order());
    struct T {
        int i, j;
        Coeff c;
    };
    std::vector<T> ta, tb;
    a.for_each([&](int i, int j, const Coeff &c) {
        if (i + j <= n) ta.push_back({i, j, c});
    });
    b.for_each([&](int i, int j, const Coeff &c) {
        if (i + j <= n) tb.push_back({i, j, c});
    });
    Jet2 r(n);
    for (const auto &p : ta)
        for (const auto &q : tb) {
            if (p.i + p.j + q.i + q.j > n) break;  // tb is sorted by degree
            r.add_term(p.i + q.i, p.j + q.j, p.c * q.c);
        }
    return r;
}

Jet2 operator*(const Coeff &c, Jet2 a) { return a *= c; }

namespace {

// exact division of homogeneous parts: h (degree m) by b (degree k); coefficient arrays indexed by x-exponent
bool divide_homogeneous(const std::vector<Coeff> &h, int m, const std::vector<Coeff> &b, int k, std::vector<Coeff> &q) {
    q.assign(static_cast<size_t>(m - k) + 1, Coeff());
    std::vector<Coeff> rem = h;
    int db = k;
    while (db >= 0 && b[static_cast<size_t>(db)].is_zero()) --db;
    if (db < 0) return false;
    for (int dr = m; dr >= db; --dr) {
        const Coeff &lead = rem[static_cast<size_t>(dr)];
        if (lead.is_zero()) continue;
        int s = dr - db;
        if (s > m - k) return false;
        Coeff f = lead / b[static_cast<size_t>(db)];
        q[static_cast<size_t>(s)] = f;
        for (int t = 0; t <= db; ++t) rem[static_cast<size_t>(s + t)] -= f * b[static_cast<size_t>(t)];
    }
    return std::all_of(rem.begin(), rem.end(), [](const Coeff &c) { return c.is_zero(); });
}

}  // namespace

Jet2 operator/(const Jet2 &a, const Jet2 &b) {
    int k = b.valuation();
    if (k < 0) throw std::domain_error("division by the zero jet");
    int n = std::min(a.order(), b.order()) - k;
    if (n < 0) throw std::domain_error("division leaves no certified order");
    for (int d = 0; d < k; ++d)
        for (int j = 0; j <= d; ++j)
            if (!a.coeff(d - j, j).is_zero()) throw std::domain_error("jet is not divisible");
    std::vector<Coeff> bk(static_cast<size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) bk[static_cast<size_t>(i)] = b.coeff(i, k - i);
    Jet2 q(n);
    // remainder, updated degree by degree: rem = a - q*b
    Jet2 rem = a.with_order(n + k);
    for (int d = 0; d <= n; ++d) {
        int m = d + k;
        std::vector<Coeff> h(static_cast<size_t>(m) + 1), qd;
        for (int i = 0; i <= m; ++i) h[static_cast<size_t>(i)] = rem.coeff(i, m - i);
        if (!divide_homogeneous(h, m, bk, k, qd)) throw std::domain_error("jet is not divisible");
        Jet2 qh(n + k);
        for (int i = 0; i <= d; ++i) {
            q.set(i, d - i, qd[static_cast<size_t>(i)]);
            qh.set(i, d - i, qd[static_cast<size_t>(i)]);
        }
        if (!qh.is_zero()) rem = rem - qh * b.with_order(n + k);
    }
    return q;
}

Jet2 pow(const Jet2 &a, int e) {
    if (e < 0) return Jet2::constant(a.order(), 1) / pow(a, -e);
    Jet2 r = Jet2::constant(a.order(), 1);
    for (int k = 0; k < e; ++k) r = r * a;
    return r;
}

Jet2 substitute(const Jet2 &f, const Jet2 &u, const Jet2 &v) {
    if (!u.coeff(0, 0).is_zero() || !v.coeff(0, 0).is_zero())
        throw std::domain_error("substitute: substituted series has nonzero constant term");
    int n = std::min({f.order(), u.order(), v.order()});
    Jet2 un = u.truncate(n), vn = v.truncate(n);
    std::vector<Jet2> vp{Jet2::constant(n, 1)};
    for (int j = 1; j <= n; ++j) vp.push_back(vp.back() * vn);
    // Horner in u over rows g_i(v) = sum_j f_ij v^j
    Jet2 r(n);
    for (int i = n; i >= 0; --i) {
        Jet2 gi(n);
        for (int j = 0; i + j <= n; ++j) {
            const Coeff c = f.coeff(i, j);
            if (!c.is_zero()) gi = gi + c * vp[static_cast<size_t>(j)];
        }
        r = r * un + gi;
    }
    return r;
}

Jet1 substitute_curve(const Jet2 &f, const Jet1 &x, const Jet1 &y) {
    if (!x[0].is_zero() || !y[0].is_zero())
        throw std::domain_error("substitute_curve: curve does not pass through the origin");
    int n = std::min({f.order(), x.order(), y.order()});
    Jet1 xn = x.truncate(n), yn = y.truncate(n);
    std::vector<Jet1> yp{Jet1::constant(n, 1)};
    for (int j = 1; j <= n; ++j) yp.push_back(yp.back() * yn);
    Jet1 r(n);
    for (int i = n; i >= 0; --i) {
        Jet1 gi(n);
        for (int j = 0; i + j <= n; ++j) {
            const Coeff c = f.coeff(i, j);
            if (!c.is_zero()) gi = gi + c * yp[static_cast<size_t>(j)];
        }
        r = r * xn + gi;
    }
    return r;
}

Jet2 compose(const Jet1 &g, const Jet2 &f) {
    if (!f.coeff(0, 0).is_zero()) throw std::domain_error("compose: inner series has nonzero constant term");
    int n = std::min(g.order(), f.order());
    Jet2 fn = f.truncate(n);
    Jet2 r = Jet2::constant(n, g[n]);
    for (int k = n - 1; k >= 0; --k) r = r * fn + Jet2::constant(n, g[k]);
    return r;
}

Jet2 lift(const Jet1 &f, int var) {
    Jet2 r(f.order());
    for (int k = 0; k <= f.order(); ++k) {
        if (var == 0)
            r.set(k, 0, f[k]);
        else
            r.set(0, k, f[k]);
    }
    return r;
}

}  // namespace cuspfol
