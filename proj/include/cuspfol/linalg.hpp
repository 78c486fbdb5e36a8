#pragma once

#include <optional>
#include <vector>

#include "cuspfol/coeff.hpp"

namespace cuspfol {

class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Coeff &operator()(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Coeff &operator()(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    std::vector<Coeff> row(size_t r) const;
    std::vector<Coeff> apply(const std::vector<Coeff> &x) const;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Coeff> a_;
};

// Gaussian elimination that accepts rows one at a time. Each stored row keeps the
// combination of original rows it came from, so inconsistencies come with a certificate.
class IncrementalSolver {
public:
    explicit IncrementalSolver(size_t unknowns) : n_(unknowns) {}

    // returns false when the row (with its right-hand side) is inconsistent with the rows so far
    bool add_row(const std::vector<Coeff> &coeffs, const Coeff &rhs);

    size_t unknowns() const { return n_; }
    size_t rows_added() const { return added_; }
    size_t rank() const { return pivots_.size(); }
    bool consistent() const { return !certificate_; }
    // index of the first inconsistent row
    std::optional<size_t> first_inconsistent_row() const { return bad_row_; }
    // y with y^T M = 0 and y^T b != 0 (over all rows added before and including the bad one)
    const std::optional<std::vector<Coeff>> &certificate() const { return certificate_; }
    // particular solution with free variables set to zero; requires consistency
    std::vector<Coeff> solution() const;

private:
    struct Pivot {
        size_t col;
        std::vector<Coeff> row;
        Coeff rhs;
        std::vector<Coeff> combo;
    };
    size_t n_;
    size_t added_ = 0;
    std::vector<Pivot> pivots_;
    std::optional<std::vector<Coeff>> certificate_;
    std::optional<size_t> bad_row_;
};

struct SolveResult {
    bool feasible = false;
    std::vector<Coeff> x;            // when feasible
    std::vector<Coeff> certificate;  // when infeasible: y^T M = 0, y^T b != 0
    size_t obstructed_row = 0;
};

SolveResult solve(const Matrix &m, const std::vector<Coeff> &b);
size_t rank(const Matrix &m);
std::vector<std::vector<Coeff>> nullspace(const Matrix &m);
Coeff determinant(Matrix m);

}  // namespace cuspfol
