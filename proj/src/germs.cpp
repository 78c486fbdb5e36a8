#include "cuspfol/germs.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace cuspfol {

GermDiff1::GermDiff1(Jet1 jet) : jet_(std::move(jet)) {
    if (jet_.order() < 1 || !jet_[0].is_zero() || jet_[1].is_zero())
        throw std::invalid_argument("not an invertible germ: need jet(0)=0 and jet'(0)!=0");
}

GermDiff1 compose(const GermDiff1 &f, const GermDiff1 &g) { return GermDiff1(compose(f.jet(), g.jet())); }

Homography::Homography(Coeff lambda, Coeff mu) : lambda_(std::move(lambda)), mu_(std::move(mu)) {
    if (lambda_.is_zero()) throw std::invalid_argument("degenerate homography: lambda = 0");
}

Homography Homography::from_affine(const Coeff &a, const Coeff &b) {
    if (a.is_zero()) throw std::invalid_argument("degenerate homography: a = 0");
    return {a.inverse(), b / a};
}

Jet1 Homography::to_jet(int order) const {
    // lambda z sum (-mu z)^k
    Jet1 r(order);
    Coeff p = lambda_;
    for (int k = 1; k <= order; ++k) {
        r.set(k, p);
        p *= -mu_;
    }
    return r;
}

Homography Homography::inverse() const { return {lambda_.inverse(), -mu_ / lambda_}; }

std::string Homography::str() const {
    auto times_z = [](const Coeff &c) -> std::string {
        if (c.is_one()) return "z";
        if (c == Coeff(-1)) return "-z";
        return (c.is_compound() ? "(" + c.str() + ")" : c.str()) + "*z";
    };
    if (mu_.is_zero()) return times_z(lambda_);
    return times_z(lambda_) + "/(1 + " + times_z(mu_) + ")";
}

Homography compose(const Homography &a, const Homography &b) {
    return {a.lambda() * b.lambda(), b.mu() + a.mu() * b.lambda()};
}

Jet1 schwarzian(const GermDiff1 &s) {
    if (s.order() < 3) throw std::invalid_argument("schwarzian needs jet order >= 3");
    Jet1 d1 = s.jet().derive();
    Jet1 d2 = d1.derive();
    Jet1 d3 = d2.derive();
    Jet1 r = d2 / d1;
    return d3 / d1 - Coeff(3, 2) * (r * r);
}

Jet1 cstar_act(const Jet1 &f, const Coeff &eps) {
    Jet1 r(f.order());
    Coeff p = eps * eps;
    for (int k = 0; k <= f.order(); ++k) {
        r.set(k, p * f[k]);
        p *= eps;
    }
    return r;
}

// ---------------------------------------------------------------- roots in Q(i)

std::vector<Coeff> unit_roots(long g) {
    std::vector<Coeff> out;
    for (const Coeff &u : {Coeff(1), Coeff::i(), Coeff(-1), -Coeff::i()})
        if (u.pow(g).is_one()) out.push_back(u);
    return out;
}

namespace {

struct CF {
    mpf_class re, im;
};

CF cmul(const CF &a, const CF &b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

CF cdiv(const CF &a, const CF &b) {
    mpf_class n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

CF cpow(CF a, long e) {
    CF r{mpf_class(1, a.re.get_prec()), mpf_class(0, a.re.get_prec())};
    while (e > 0) {
        if (e & 1) r = cmul(r, a);
        a = cmul(a, a);
        e >>= 1;
    }
    return r;
}

mpz_class round_mpf(const mpf_class &x) {
    mpf_class y = x + 0.5;
    return mpz_class(floor(y));
}

long double mpf_log(const mpf_class &x) {
    // |x| = m 2^e
    long e = 0;
    double m = mpf_get_d_2exp(&e, x.get_mpf_t());
    return std::log(std::fabs(static_cast<long double>(m))) + static_cast<long double>(e) * std::log(2.0L);
}

// beta in Z[i] with beta^g = t
std::optional<std::pair<mpz_class, mpz_class>> gaussian_integer_root(const mpz_class &tr, const mpz_class &ti, long g) {
    if (tr == 0 && ti == 0) return std::make_pair(mpz_class(0), mpz_class(0));
    size_t bits = std::max(mpz_sizeinbase(tr.get_mpz_t(), 2), mpz_sizeinbase(ti.get_mpz_t(), 2));
    mp_bitcnt_t prec = static_cast<mp_bitcnt_t>(bits / static_cast<size_t>(g) + 128);
    mpf_class fr(tr, prec), fi(ti, prec);
    mpf_class mag2 = fr * fr + fi * fi;
    long double logmag = 0.5L * mpf_log(mag2);
    // argument from scaled values
    long e1 = 0, e2 = 0;
    double mr = mpf_get_d_2exp(&e1, fr.get_mpf_t());
    double mi = mpf_get_d_2exp(&e2, fi.get_mpf_t());
    long emax = std::max(e1, e2);
    long double xr = std::ldexp(static_cast<long double>(mr), static_cast<int>(std::max(e1 - emax, -16000L)));
    long double xi = std::ldexp(static_cast<long double>(mi), static_cast<int>(std::max(e2 - emax, -16000L)));
    if (tr == 0) xr = 0;
    if (ti == 0) xi = 0;
    long double arg = std::atan2(xi, xr);
    long double rad = logmag / static_cast<long double>(g);
    CF target{fr, fi};
    for (long k = 0; k < g; ++k) {
        long double th = (arg + 2.0L * 3.14159265358979323846264338327950288L * static_cast<long double>(k)) /
                         static_cast<long double>(g);
        // initial guess exp(rad) e^{i th}, built as mantissa * 2^shift to avoid overflow
        long double shift2 = rad / std::log(2.0L);
        long sh = static_cast<long>(std::floor(shift2));
        long double mant = std::exp2(shift2 - static_cast<long double>(sh));
        CF b{mpf_class(static_cast<double>(mant * std::cos(th)), prec), mpf_class(static_cast<double>(mant * std::sin(th)), prec)};
        if (sh > 0) {
            mpf_mul_2exp(b.re.get_mpf_t(), b.re.get_mpf_t(), static_cast<mp_bitcnt_t>(sh));
            mpf_mul_2exp(b.im.get_mpf_t(), b.im.get_mpf_t(), static_cast<mp_bitcnt_t>(sh));
        } else if (sh < 0) {
            mpf_div_2exp(b.re.get_mpf_t(), b.re.get_mpf_t(), static_cast<mp_bitcnt_t>(-sh));
            mpf_div_2exp(b.im.get_mpf_t(), b.im.get_mpf_t(), static_cast<mp_bitcnt_t>(-sh));
        }
        for (int it = 0; it < 200; ++it) {
            CF bp = cpow(b, g - 1);
            CF num = cmul(bp, b);
            num.re -= target.re;
            num.im -= target.im;
            CF den{bp.re * g, bp.im * g};
            if (den.re == 0 && den.im == 0) break;
            CF step = cdiv(num, den);
            b.re -= step.re;
            b.im -= step.im;
            mpf_class s2 = step.re * step.re + step.im * step.im;
            if (s2 < mpf_class(1e-30, prec)) break;
        }
        mpz_class br = round_mpf(b.re), bi = round_mpf(b.im);
        Coeff beta{mpq_class(br), mpq_class(bi)};
        if (beta.pow(g) == Coeff(mpq_class(tr), mpq_class(ti))) return std::make_pair(br, bi);
    }
    return std::nullopt;
}

}  // namespace

std::optional<Coeff> gaussian_root(const Coeff &r, long g) {
    if (g <= 0) throw std::invalid_argument("root index must be positive");
    if (r.is_zero()) return Coeff();
    if (g == 1) return r;
    // r = p / q with p in Z[i], q a positive integer
    mpz_class q;
    mpz_lcm(q.get_mpz_t(), r.re().get_den_mpz_t(), r.im().get_den_mpz_t());
    mpz_class pr = r.re().get_num() * (q / r.re().get_den());
    mpz_class pi = r.im().get_num() * (q / r.im().get_den());
    // t = p q^{g-1}; eps = beta / q
    mpz_class qg;
    mpz_pow_ui(qg.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(g - 1));
    auto beta = gaussian_integer_root(pr * qg, pi * qg, g);
    if (!beta) return std::nullopt;
    Coeff eps{mpq_class(beta->first, q), mpq_class(beta->second, q)};
    if (eps.pow(g) != r) return std::nullopt;
    return eps;
}

// ---------------------------------------------------------------- C* orbits

namespace {

struct Lattice {
    mpz_class g;
    std::vector<mpz_class> bezout;
    std::vector<std::vector<mpz_class>> kernel;
};

Lattice relation_lattice(const std::vector<int> &m) {
    size_t n = m.size();
    std::vector<mpz_class> a(m.begin(), m.end());
    std::vector<std::vector<mpz_class>> u(n, std::vector<mpz_class>(n));  // columns
    for (size_t k = 0; k < n; ++k) u[k][k] = 1;
    while (true) {
        size_t p = n;
        for (size_t k = 0; k < n; ++k)
            if (a[k] != 0 && (p == n || abs(a[k]) < abs(a[p]))) p = k;
        bool done = true;
        for (size_t q = 0; q < n; ++q) {
            if (q == p || a[q] == 0) continue;
            mpz_class t;
            mpz_fdiv_q(t.get_mpz_t(), a[q].get_mpz_t(), a[p].get_mpz_t());
            a[q] -= t * a[p];
            for (size_t k = 0; k < n; ++k) u[q][k] -= t * u[p][k];
            if (a[q] != 0) done = false;
        }
        if (done) {
            Lattice l;
            if (a[p] < 0) {
                a[p] = -a[p];
                for (auto &v : u[p]) v = -v;
            }
            l.g = a[p];
            l.bezout = u[p];
            for (size_t q = 0; q < n; ++q)
                if (q != p) l.kernel.push_back(u[q]);
            return l;
        }
    }
}

Coeff power_product(const std::vector<CStarConstraint> &c, const std::vector<mpz_class> &e) {
    Coeff r(1);
    for (size_t k = 0; k < c.size(); ++k) r *= c[k].value.pow(e[k].get_si());
    return r;
}

}  // namespace

CStarVerdict cstar_equivalent(const Jet1 &f0, const Jet1 &f1) {
    CStarVerdict v;
    int n = std::min(f0.order(), f1.order());
    for (int k = 0; k <= n; ++k) {
        bool z0 = f0[k].is_zero(), z1 = f1[k].is_zero();
        if (z0 != z1) {
            v.kind = CStarVerdict::Kind::NotEquivalent;
            v.reason = "support mismatch at k=" + std::to_string(k);
            return v;
        }
        if (!z0) v.constraints.push_back({k + 2, f0[k] / f1[k]});
    }
    if (v.constraints.empty()) {
        v.kind = CStarVerdict::Kind::Equivalent;
        v.any_epsilon = true;
        v.witness = Coeff(1);
        v.reason = "both jets vanish; every epsilon works";
        return v;
    }
    std::vector<int> m;
    for (const auto &c : v.constraints) m.push_back(c.exponent);
    Lattice l = relation_lattice(m);
    for (const auto &rel : l.kernel) {
        if (!power_product(v.constraints, rel).is_one()) {
            v.kind = CStarVerdict::Kind::NotEquivalent;
            v.reason = "multiplicative relation among coefficient ratios fails";
            return v;
        }
    }
    v.gcd_exponent = l.g.get_si();
    v.reduced_value = power_product(v.constraints, l.bezout);
    auto root = gaussian_root(v.reduced_value, v.gcd_exponent);
    if (root) {
        v.kind = CStarVerdict::Kind::Equivalent;
        for (const Coeff &u : unit_roots(v.gcd_exponent)) v.witnesses.push_back(*root * u);
        v.witness = v.witnesses.front();
        v.reason = "epsilon^" + std::to_string(v.gcd_exponent) + " = " + v.reduced_value.str() + " solvable in Q(i)";
    } else {
        v.kind = CStarVerdict::Kind::EquivalentExtension;
        v.reason = "equivalent over C, witness in an extension field: epsilon^" + std::to_string(v.gcd_exponent) +
                   " - (" + v.reduced_value.str() + ") = 0";
    }
    return v;
}

// ---------------------------------------------------------------- homography elimination

namespace {

// arithmetic in Q(i)[lambda]/(m)
struct QuotRing {
    UPoly m;
    UPoly red(const UPoly &p) const { return divmod(p, m).second; }
    UPoly mul(const UPoly &a, const UPoly &b) const { return red(a * b); }
};

Coeff binom_neg(int k, int j) {
    // binomial(-k, j)
    mpq_class r(1);
    for (int t = 0; t < j; ++t) r = r * mpq_class(-k - t) / mpq_class(t + 1);
    return Coeff(r);
}

}  // namespace

HomographyRelation homography_relation(const Jet1 &f0, const Jet1 &f1) {
    HomographyRelation out;
    int n = std::min(f0.order(), f1.order());
    Jet1 a0 = f0.truncate(n), a1 = f1.truncate(n);
    bool z0 = a0.is_zero(), z1 = a1.is_zero();
    if (z0 && z1) {
        out.related = out.infinite = true;
        out.reason = "both jets vanish: every homography relates them";
        return out;
    }
    if (z0 != z1) {
        out.reason = "exactly one jet vanishes";
        return out;
    }
    int v0 = a0.valuation(), v1 = a1.valuation();
    if (v0 != v1) {
        out.reason = "valuations differ";
        return out;
    }
    out.valuation = v0;
    Coeff r = a0[v0] / a1[v0];
    UPoly m = UPoly::monomial(v0 + 2) - UPoly(r);
    QuotRing q{m};
    // mu = mu_const + mu_lin * lambda from the z^{v+1} coefficient
    Coeff den = Coeff(v0 + 4) * a0[v0];
    out.mu_lin = a1.coeff(v0 + 1) * r / den;
    out.mu_const = -a0.coeff(v0 + 1) / den;
    UPoly mu(std::vector<Coeff>{out.mu_const, out.mu_lin});
    std::vector<UPoly> mup{UPoly(Coeff(1))};
    for (int j = 1; j <= n + 4; ++j) mup.push_back(q.mul(mup.back(), mu));
    std::vector<UPoly> lp{UPoly(Coeff(1))};
    for (int j = 1; j <= n + 2; ++j) lp.push_back(q.mul(lp.back(), UPoly::x()));
    UPoly g = m;
    for (int kk = v0; kk <= n && g.degree() > 0; ++kk) {
        UPoly e;
        // f1(lambda z/(1+mu z)) lambda^2
        for (int k = v0; k <= kk; ++k) {
            if (a1[k].is_zero()) continue;
            int j = kk - k;
            e = e + UPoly(a1[k] * binom_neg(k, j)) * q.mul(lp[static_cast<size_t>(k + 2)], mup[static_cast<size_t>(j)]);
        }
        // (1+mu z)^4 f0
        static const int b4[5] = {1, 4, 6, 4, 1};
        for (int j = 0; j <= 4 && j <= kk; ++j) {
            const Coeff c = a0.coeff(kk - j);
            if (c.is_zero()) continue;
            e = e - UPoly(c * Coeff(b4[j])) * mup[static_cast<size_t>(j)];
        }
        e = q.red(e);
        if (!e.is_zero()) g = gcd(g, e);
    }
    out.lambda_poly = g;
    out.related = g.degree() > 0;
    if (!out.related) {
        out.reason = "constraints on lambda have no common root";
        return out;
    }
    UPoly rest = g;
    auto root = gaussian_root(r, v0 + 2);
    if (root) {
        for (const Coeff &u : {Coeff(1), Coeff::i(), Coeff(-1), -Coeff::i()}) {
            Coeff lam = *root * u;
            if (!g.eval(lam).is_zero()) continue;
            out.candidates.emplace_back(lam, out.mu_const + out.mu_lin * lam);
            rest = divmod(rest, UPoly::linear_root(lam)).first;
        }
    }
    out.residual_factor = rest.monic();
    out.reason = "lambda constrained by " + g.str("lambda") + " = 0";
    return out;
}

SymmetryReport homographic_symmetries(const Jet1 &f) {
    HomographyRelation rel = homography_relation(f, f);
    SymmetryReport s;
    s.infinite = rel.infinite;
    s.candidates = rel.candidates;
    s.lambda_constraint = rel.lambda_poly;
    s.mu_const = rel.mu_const;
    s.mu_lin = rel.mu_lin;
    s.nonrepresentable = rel.residual_factor;
    return s;
}

// ---------------------------------------------------------------- normal pairs

Coeff canonical_alpha(const GermDiff1 &s) {
    if (s.order() < 2) throw std::invalid_argument("canonical_alpha needs jet order >= 2");
    // sigma''(0) = 2 [z^2]sigma
    Coeff d2 = Coeff(2) * s.jet()[2];
    return Coeff(3, 2) * d2 / s.jet()[1];
}

ModuliClass moduli_class(const GermDiff1 &s) { return {schwarzian(s), canonical_alpha(s)}; }

Coeff relation_fond_lhs(const Coeff &alpha, const GermDiff1 &sigma) {
    return Coeff(2, 5) * (alpha - canonical_alpha(sigma));
}

Coeff relation_fond_rhs(const Coeff &alpha_prime, const GermDiff1 &gamma, const Homography &h0) {
    return Coeff(2, 5) * (alpha_prime - canonical_alpha(gamma)) * h0.derivative0() -
           h0.second_derivative0() / h0.derivative0();
}

CanonicalPair canonical_form(const NormalPair &p) {
    Coeff kappa = p.alpha - canonical_alpha(p.sigma);
    // (2/5) kappa + 2 mu = 0 with h0'(0) = 1
    Homography h0(1, -kappa / Coeff(5));
    GermDiff1 s = compose(p.sigma, h0.to_germ(p.sigma.order()));
    return {h0, s, canonical_alpha(s)};
}

PairVerdict normal_pair_equivalent(const NormalPair &p0, const NormalPair &p1) {
    PairVerdict v{false, canonical_form(p0), canonical_form(p1), {}};
    v.cstar = cstar_equivalent(schwarzian(v.canonical0.sigma), schwarzian(v.canonical1.sigma));
    v.equivalent = v.cstar.equivalent();
    return v;
}

}  // namespace cuspfol
