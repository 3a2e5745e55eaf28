#include "insdel/matrix.hpp"

#include <algorithm>

namespace insdel {

Matrix::Matrix(Field f, int rows, int cols)
    : field_(std::move(f)), rows_(rows), cols_(cols), a_((size_t)rows * cols, 0) {
    if (rows < 0 || cols < 0) throw input_error("negative matrix dimension");
}

Matrix Matrix::from_rows(const Field& f, const std::vector<Word>& rows) {
    const int r = (int)rows.size();
    const int c = r == 0 ? 0 : (int)rows[0].size();
    Matrix M(f, r, c);
    for (int i = 0; i < r; ++i) {
        if ((int)rows[i].size() != c) throw input_error("ragged rows");
        for (int j = 0; j < c; ++j) M.set(i, j, rows[i][j]);
    }
    return M;
}

Matrix Matrix::identity(const Field& f, int n) {
    Matrix M(f, n, n);
    for (int i = 0; i < n; ++i) M.set(i, i, 1);
    return M;
}

void Matrix::set(int r, int c, int v) {
    if (v < 0 || v >= field_.q()) throw input_error("matrix entry out of field range");
    a_[(size_t)r * cols_ + c] = v;
}

Word Matrix::row(int r) const {
    return Word(a_.begin() + (size_t)r * cols_, a_.begin() + (size_t)(r + 1) * cols_);
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](int v) { return v == 0; });
}

Matrix Matrix::transpose() const {
    Matrix T(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) T.set(j, i, at(i, j));
    return T;
}

Matrix Matrix::times(const Matrix& rhs) const {
    if (field_ != rhs.field_) throw input_error("field mismatch in matrix product");
    if (cols_ != rhs.rows_) throw input_error("dimension mismatch in matrix product");
    Matrix R(field_, rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int t = 0; t < cols_; ++t) {
            const int v = at(i, t);
            if (v == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                const int w = rhs.at(t, j);
                if (w != 0) R.set(i, j, field_.add(R.at(i, j), field_.mul(v, w)));
            }
        }
    return R;
}

Matrix Matrix::vstack(const Matrix& below) const {
    if (field_ != below.field_ || cols_ != below.cols_)
        throw input_error("vstack shape mismatch");
    Matrix R(field_, rows_ + below.rows_, cols_);
    R.a_ = a_;
    R.a_.insert(R.a_.end(), below.a_.begin(), below.a_.end());
    return R;
}

Matrix Matrix::rref(std::vector<int>* pivot_cols) const {
    Matrix R = *this;
    const Field& F = field_;
    if (pivot_cols) pivot_cols->clear();
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int piv = -1;
        for (int i = r; i < rows_; ++i)
            if (R.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols_; ++j) {
                int t = R.at(r, j);
                R.set(r, j, R.at(piv, j));
                R.set(piv, j, t);
            }
        const int iv = F.inv(R.at(r, c));
        if (iv != 1)
            for (int j = 0; j < cols_; ++j) R.set(r, j, F.mul(iv, R.at(r, j)));
        for (int i = 0; i < rows_; ++i) {
            if (i == r) continue;
            const int f = R.at(i, c);
            if (f == 0) continue;
            for (int j = 0; j < cols_; ++j)
                R.set(i, j, F.sub(R.at(i, j), F.mul(f, R.at(r, j))));
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return R;
}

int Matrix::rank() const {
    std::vector<int> pivots;
    rref(&pivots);
    return (int)pivots.size();
}

Matrix Matrix::null_space() const {
    std::vector<int> pivots;
    Matrix R = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    Matrix B(field_, cols_ - (int)pivots.size(), cols_);
    int bi = 0;
    for (int j = 0; j < cols_; ++j) {
        if (is_pivot[j]) continue;
        B.set(bi, j, 1);
        for (size_t i = 0; i < pivots.size(); ++i)
            B.set(bi, pivots[i], field_.neg(R.at((int)i, j)));
        ++bi;
    }
    return B;
}

std::optional<Word> Matrix::solve(const Word& b) const {
    if ((int)b.size() != rows_) throw input_error("right-hand side length mismatch");
    Matrix aug(field_, rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.set(i, j, at(i, j));
        aug.set(i, cols_, b[i]);
    }
    std::vector<int> pivots;
    Matrix R = aug.rref(&pivots);
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    Word x(cols_, 0);
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = R.at((int)i, cols_);
    return x;
}

Matrix Matrix::columns(const std::vector<int>& idx) const {
    for (size_t t = 0; t < idx.size(); ++t) {
        if (idx[t] < 0 || idx[t] >= cols_) throw input_error("column index out of range");
        if (t > 0 && idx[t] <= idx[t - 1])
            throw input_error("column indices must be strictly increasing");
    }
    Matrix R(field_, rows_, (int)idx.size());
    for (int i = 0; i < rows_; ++i)
        for (size_t t = 0; t < idx.size(); ++t) R.set(i, (int)t, at(i, idx[t]));
    return R;
}

Word vec_times(const Field& f, const Word& v, const Matrix& M) {
    if ((int)v.size() != M.rows()) throw input_error("vector/matrix dimension mismatch");
    Word out(M.cols(), 0);
    for (int i = 0; i < M.rows(); ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < M.cols(); ++j) {
            const int w = M.at(i, j);
            if (w != 0) out[j] = f.add(out[j], f.mul(v[i], w));
        }
    }
    return out;
}

Matrix parity_check(const Matrix& G) {
    if (G.rank() != G.rows()) throw input_error("generator matrix is rank-deficient");
    return G.null_space();
}

}  // namespace insdel
