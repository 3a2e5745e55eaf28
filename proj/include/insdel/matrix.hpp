#pragma once

#include <optional>
#include <vector>

#include "insdel/galois.hpp"

namespace insdel {

/// Dense row-major matrix over F_q. All reductions pivot on the first
/// nonzero entry scanning columns left to right and rows top to bottom, so
/// echelon forms, null-space bases and solutions are canonical.
class Matrix {
public:
    Matrix(Field f, int rows, int cols);  // zero-filled
    static Matrix from_rows(const Field& f, const std::vector<Word>& rows);
    static Matrix identity(const Field& f, int n);

    const Field& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int at(int r, int c) const { return a_[(size_t)r * cols_ + c]; }
    void set(int r, int c, int v);
    Word row(int r) const;
    bool is_zero() const;

    Matrix transpose() const;
    Matrix times(const Matrix& rhs) const;
    Matrix vstack(const Matrix& below) const;

    /// Reduced row echelon form; pivot column indices are appended to
    /// *pivot_cols when given.
    Matrix rref(std::vector<int>* pivot_cols = nullptr) const;
    int rank() const;

    /// Basis rows of {x : M x^T = 0}; rows() == cols - rank.
    Matrix null_space() const;

    /// Canonical solution x of M x^T = b^T (free variables set to zero), or
    /// nullopt when the system is inconsistent.
    std::optional<Word> solve(const Word& b) const;

    /// Column submatrix; idx must be strictly increasing, 0-based.
    Matrix columns(const std::vector<int>& idx) const;

    bool operator==(const Matrix& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    Field field_;
    int rows_;
    int cols_;
    std::vector<int> a_;
};

/// Row vector times matrix: v (length M.rows()) -> v * M (length M.cols()).
Word vec_times(const Field& f, const Word& v, const Matrix& M);

/// Parity-check matrix of a rank-k generator G: the (n-k) x n matrix H with
/// G H^T = 0 and rank n-k. Throws input_error when G is rank-deficient.
Matrix parity_check(const Matrix& G);

}  // namespace insdel
