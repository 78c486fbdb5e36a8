#include "cuspfol/normal_form.hpp"

#include <string>

namespace cuspfol {

HomogeneousPair homogeneous_pair(const Jet2 &P, const Jet2 &Q, int n) {
    if (n < 0) throw std::invalid_argument("negative degree");
    bool ok = true;
    auto check = [&](int i, int j, const Coeff &) { ok = ok && (i + j == n); };
    P.for_each(check);
    Q.for_each(check);
    if (!ok) throw std::invalid_argument("pair is not homogeneous of degree " + std::to_string(n));
    return {P.with_order(n + 1), Q.with_order(n + 1), n};
}

SingularOperatorError::SingularOperatorError(int degree, size_t rank)
    : std::runtime_error("operator is singular in degree " + std::to_string(degree) + " (rank " + std::to_string(rank) + ")"),
      degree_(degree), rank_(rank) {}

namespace {

Jet2 xmul(const Jet2 &f) { return Jet2::x(f.order()) * f; }
Jet2 ymul(const Jet2 &f) { return Jet2::y(f.order()) * f; }

// differentiate at an order high enough to stay exact
Jet2 dx(const Jet2 &f) { return f.with_order(f.order() + 1).derive(0); }
Jet2 dy(const Jet2 &f) { return f.with_order(f.order() + 1).derive(1); }

using PairOp = HomogeneousPair (*)(const HomogeneousPair &);

Matrix matrix_of(PairOp op, int n) {
    size_t m = static_cast<size_t>(n) + 1;
    Matrix M(2 * m, 2 * m);
    for (size_t col = 0; col < 2 * m; ++col) {
        Jet2 P(n + 1), Q(n + 1);
        int i = static_cast<int>(col % m);
        (col < m ? P : Q).set(i, n - i, 1);
        HomogeneousPair img = op({P, Q, n});
        for (size_t r = 0; r < m; ++r) {
            int k = static_cast<int>(r);
            M(r, col) = img.P.coeff(k, n - k);
            M(m + r, col) = img.Q.coeff(k, n - k);
        }
    }
    return M;
}

}  // namespace

HomogeneousPair L_apply(const HomogeneousPair &p) {
    const Jet2 &P = p.P, &Q = p.Q;
    Jet2 first = xmul(dx(Q)) - ymul(dx(P)) + Q;
    Jet2 second = xmul(dy(Q)) - xmul(dx(P)) + P;
    return {first, second, p.degree};
}

HomogeneousPair L_prime_apply(const HomogeneousPair &p) {
    const Jet2 &P = p.P, &Q = p.Q;
    Jet2 first = xmul(dx(Q)) - ymul(dx(P)) - Q;
    Jet2 second = xmul(dy(Q)) - ymul(dy(P)) + P;
    return {first, second, p.degree};
}

Matrix L_matrix(int n) { return matrix_of(&L_apply, n); }
Matrix L_prime_matrix(int n) { return matrix_of(&L_prime_apply, n); }

HomogeneousPair L_solve(const HomogeneousPair &target) {
    int n = target.degree;
    if (n < 2) throw std::invalid_argument("L_solve needs degree >= 2");
    Matrix M = L_matrix(n);
    size_t r = rank(M);
    if (r != M.cols()) throw SingularOperatorError(n, r);
    size_t m = static_cast<size_t>(n) + 1;
    std::vector<Coeff> b(2 * m);
    for (size_t k = 0; k < m; ++k) {
        int i = static_cast<int>(k);
        b[k] = target.P.coeff(i, n - i);
        b[m + k] = target.Q.coeff(i, n - i);
    }
    SolveResult s = solve(M, b);
    Jet2 P(n + 1), Q(n + 1);
    for (size_t k = 0; k < m; ++k) {
        int i = static_cast<int>(k);
        P.set(i, n - i, s.x[k]);
        Q.set(i, n - i, s.x[m + k]);
    }
    return {P, Q, n};
}

std::pair<Jet2, Jet2> homological_apply(const HomogeneousPair &p) {
    int o = p.degree + 3;
    Jet2 P = p.P.with_order(o), Q = p.Q.with_order(o);
    Jet2 y2 = Jet2::monomial(o, 0, 2);
    Jet2 first = y2 * (xmul(dx(Q)) - ymul(dx(P)) - Coeff(3) * Q);
    Jet2 second = y2 * (xmul(dy(Q)) - ymul(dy(P)) + P) + Coeff(2) * Jet2::monomial(o, 1, 1) * Q;
    return {first, second};
}

Matrix homological_matrix(int n) {
    size_t m = static_cast<size_t>(n) + 1;
    size_t rows = static_cast<size_t>(n) + 3;
    Matrix M(2 * rows, 2 * m);
    for (size_t col = 0; col < 2 * m; ++col) {
        Jet2 P(n + 1), Q(n + 1);
        int i = static_cast<int>(col % m);
        (col < m ? P : Q).set(i, n - i, 1);
        auto [a, b] = homological_apply({P, Q, n});
        for (size_t r = 0; r < rows; ++r) {
            int k = static_cast<int>(r);
            M(r, col) = a.coeff(k, n + 2 - k);
            M(rows + r, col) = b.coeff(k, n + 2 - k);
        }
    }
    return M;
}

std::array<std::array<int, 3>, 4> residual_basis(int m) {
    if (m == 5) return {{{0, 5, 0}, {0, 4, 1}, {1, 5, 0}, {0, 3, 2}}};
    return {{{0, m, 0}, {0, m - 1, 1}, {1, m, 0}, {1, m - 1, 1}}};
}

bool NormalFormData::same_form(const NormalFormData &o) const {
    return order == o.order && alpha == o.alpha && a == o.a && tail == o.tail && e5 == o.e5;
}

OneForm apply_transform(const OneForm &w, const NormalFormData &data) {
    const auto &m = data.linear_part;
    Jet2 X = m[0] * data.X + m[1] * data.Y;
    Jet2 Y = m[2] * data.X + m[3] * data.Y;
    return pullback(w, X, Y, w.vars());
}

NormalFormData normalize(const OneForm &w, int order) {
    int N = std::min(order, w.order());
    OneForm cur = w.truncate(N);
    ReductionReport rep = reduce_cusp(cur);
    if (rep.verdict != Verdict::CuspTypeAbsolutelyDicritical)
        throw std::invalid_argument("normalize: input is not of cusp type (" + to_string(rep.verdict) + ": " + rep.reason + ")");
    NormalFormData data;
    data.order = N;
    // linear change, then (x,y) -> (x/a, y) so that the cubic part is y^2 ω_R
    Coeff s = rep.p2_coefficient.inverse();
    const auto &lc = rep.linear_change;
    data.linear_part = {lc[0] * s, lc[1], lc[2] * s, lc[3]};
    data.X = Jet2::x(N + 1);
    data.Y = Jet2::y(N + 1);
    cur = apply_transform(cur, data);

    for (int m = 4; m <= N; ++m) {
        int n = m - 2;
        Matrix V = homological_matrix(n);
        size_t rows = V.rows(), half = rows / 2, nv = V.cols();
        Matrix M(rows, nv + 4);
        for (size_t r = 0; r < rows; ++r)
            for (size_t c = 0; c < nv; ++c) M(r, c) = V(r, c);
        auto basis = residual_basis(m);
        for (size_t k = 0; k < 4; ++k) {
            auto [comp, i, j] = basis[k];
            (void)j;
            M(static_cast<size_t>(comp) * half + static_cast<size_t>(i), nv + k) = 1;
        }
        std::vector<Coeff> b(rows);
        for (size_t r = 0; r < half; ++r) {
            int i = static_cast<int>(r);
            b[r] = cur.A().coeff(i, m - i);
            b[half + r] = cur.B().coeff(i, m - i);
        }
        size_t rk = rank(M);
        if (rk != M.cols()) throw SingularOperatorError(m, rk);
        SolveResult sol = solve(M, b);
        Jet2 P(N + 1), Q(N + 1);
        size_t np = static_cast<size_t>(n) + 1;
        for (size_t k = 0; k < np; ++k) {
            int i = static_cast<int>(k);
            P.set(i, n - i, -sol.x[k]);
            Q.set(i, n - i, -sol.x[np + k]);
        }
        if (P.is_zero() && Q.is_zero()) continue;
        Jet2 phx = Jet2::x(N + 1) + P, phy = Jet2::y(N + 1) + Q;
        cur = pullback(cur, phx, phy, cur.vars());
        data.X = substitute(data.X, phx, phy);
        data.Y = substitute(data.Y, phx, phy);
    }

    const Jet2 &A = cur.A(), &B = cur.B();
    data.alpha = B.coeff(4, 0);
    data.a = B.coeff(3, 1);
    if (!A.coeff(4, 0).is_zero() || A.coeff(3, 1) != Coeff(-2) * data.alpha)
        throw std::logic_error("normalize: degree-4 relations fail on a cusp-type input");
    if (data.alpha.is_zero()) throw std::logic_error("normalize: alpha vanishes on a cusp-type input");
    for (int n = 5; n <= N; ++n)
        data.tail[n] = {A.coeff(n, 0), A.coeff(n - 1, 1), B.coeff(n, 0), B.coeff(n - 1, 1)};
    if (N >= 5) data.e5 = A.coeff(3, 2);
    return data;
}

OneForm reconstruct(const NormalFormData &d) {
    int N = d.order;
    Jet2 A(N), B(N);
    // y^2 ω_R
    A.add_term(0, 3, -1);
    B.add_term(1, 2, 1);
    // alpha x^3 (x dy - 2 y dx) + a x^3 y dy
    A.add_term(3, 1, Coeff(-2) * d.alpha);
    B.add_term(4, 0, d.alpha);
    B.add_term(3, 1, d.a);
    for (const auto &[n, t] : d.tail) {
        A.add_term(n, 0, t.a);
        A.add_term(n - 1, 1, t.b);
        B.add_term(n, 0, t.c);
        B.add_term(n - 1, 1, t.d);
    }
    A.add_term(3, 2, d.e5);
    return {A, B};
}

}  // namespace cuspfol
