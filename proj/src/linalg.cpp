#include "cuspfol/linalg.hpp"

#include <stdexcept>

namespace cuspfol {

std::vector<Coeff> Matrix::row(size_t r) const {
    return std::vector<Coeff>(a_.begin() + static_cast<long>(r * cols_), a_.begin() + static_cast<long>((r + 1) * cols_));
}

std::vector<Coeff> Matrix::apply(const std::vector<Coeff> &x) const {
    if (x.size() != cols_) throw std::invalid_argument("dimension mismatch");
    std::vector<Coeff> y(rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) {
            const Coeff &v = (*this)(r, c);
            if (!v.is_zero() && !x[c].is_zero()) y[r] += v * x[c];
        }
    return y;
}

bool IncrementalSolver::add_row(const std::vector<Coeff> &coeffs, const Coeff &rhs) {
    if (coeffs.size() != n_) throw std::invalid_argument("row length mismatch");
    size_t id = added_++;
    std::vector<Coeff> row = coeffs;
    Coeff b = rhs;
    std::vector<Coeff> combo(id + 1);
    combo[id] = 1;
    for (const auto &p : pivots_) {
        const Coeff f = row[p.col];
        if (f.is_zero()) continue;
        for (size_t c = 0; c < n_; ++c)
            if (!p.row[c].is_zero()) row[c] -= f * p.row[c];
        b -= f * p.rhs;
        for (size_t k = 0; k < p.combo.size(); ++k)
            if (!p.combo[k].is_zero()) combo[k] -= f * p.combo[k];
    }
    size_t col = n_;
    for (size_t c = 0; c < n_; ++c)
        if (!row[c].is_zero()) {
            col = c;
            break;
        }
    if (col == n_) {
        if (!b.is_zero() && !certificate_) {
            certificate_ = combo;
            bad_row_ = id;
        }
        return b.is_zero();
    }
    Coeff inv = row[col].inverse();
    for (auto &v : row) v *= inv;
    b *= inv;
    for (auto &v : combo) v *= inv;
    pivots_.push_back({col, std::move(row), std::move(b), std::move(combo)});
    return true;
}

std::vector<Coeff> IncrementalSolver::solution() const {
    if (certificate_) throw std::logic_error("system is inconsistent");
    std::vector<Coeff> x(n_);
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
        Coeff v = it->rhs;
        for (size_t c = 0; c < n_; ++c)
            if (c != it->col && !it->row[c].is_zero() && !x[c].is_zero()) v -= it->row[c] * x[c];
        x[it->col] = v;
    }
    return x;
}

SolveResult solve(const Matrix &m, const std::vector<Coeff> &b) {
    if (b.size() != m.rows()) throw std::invalid_argument("rhs length mismatch");
    IncrementalSolver s(m.cols());
    for (size_t r = 0; r < m.rows(); ++r) s.add_row(m.row(r), b[r]);
    SolveResult out;
    out.feasible = s.consistent();
    if (out.feasible) {
        out.x = s.solution();
    } else {
        out.certificate = *s.certificate();
        out.certificate.resize(m.rows());
        out.obstructed_row = *s.first_inconsistent_row();
    }
    return out;
}

size_t rank(const Matrix &m) {
    IncrementalSolver s(m.cols());
    for (size_t r = 0; r < m.rows(); ++r) s.add_row(m.row(r), 0);
    return s.rank();
}

std::vector<std::vector<Coeff>> nullspace(const Matrix &m) {
    // reduced row echelon form
    Matrix a = m;
    std::vector<size_t> pivcols;
    size_t r = 0;
    for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        size_t p = r;
        while (p < a.rows() && a(p, c).is_zero()) ++p;
        if (p == a.rows()) continue;
        for (size_t k = 0; k < a.cols(); ++k) std::swap(a(p, k), a(r, k));
        Coeff inv = a(r, c).inverse();
        for (size_t k = 0; k < a.cols(); ++k) a(r, k) *= inv;
        for (size_t q = 0; q < a.rows(); ++q) {
            if (q == r || a(q, c).is_zero()) continue;
            Coeff f = a(q, c);
            for (size_t k = 0; k < a.cols(); ++k) a(q, k) -= f * a(r, k);
        }
        pivcols.push_back(c);
        ++r;
    }
    std::vector<bool> is_piv(a.cols(), false);
    for (size_t c : pivcols) is_piv[c] = true;
    std::vector<std::vector<Coeff>> basis;
    for (size_t f = 0; f < a.cols(); ++f) {
        if (is_piv[f]) continue;
        std::vector<Coeff> v(a.cols());
        v[f] = 1;
        for (size_t i = 0; i < pivcols.size(); ++i) v[pivcols[i]] = -a(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Coeff determinant(Matrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    size_t n = m.rows();
    Coeff det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return Coeff();
        if (p != c) {
            for (size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
            det = -det;
        }
        det *= m(c, c);
        Coeff inv = m(c, c).inverse();
        for (size_t q = c + 1; q < n; ++q) {
            if (m(q, c).is_zero()) continue;
            Coeff f = m(q, c) * inv;
            for (size_t k = c; k < n; ++k) m(q, k) -= f * m(c, k);
        }
    }
    return det;
}

}  // namespace cuspfol
