#ifndef CHARVAR_MATRIX_HPP
#define CHARVAR_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace charvar {

// Dense matrix over a commutative ring R. R needs R(0), R(1), +, -, *, ==.
// Division is only required by the ops that say so (inverse).
template <class R>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, R(0)) {}
    Matrix(std::initializer_list<std::initializer_list<R>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            for (const auto& v : r) data_.push_back(v);
        }
    }

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = R(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    R& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const R& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const R& aik = a.at(i, k);
                if (aik == R(0)) continue;
                for (size_t j = 0; j < b.cols_; ++j)
                    c.at(i, j) += aik * b.at(k, j);
            }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix sum shape mismatch");
        Matrix c(a);
        for (size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix difference shape mismatch");
        Matrix c(a);
        for (size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
        return c;
    }

    friend Matrix operator*(const R& s, const Matrix& m) {
        Matrix c(m);
        for (auto& v : c.data_) v = s * v;
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    R trace() const {
        if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
        R t(0);
        for (size_t i = 0; i < rows_; ++i) t += at(i, i);
        return t;
    }

    Matrix submatrix(size_t skip_row, size_t skip_col) const {
        Matrix s(rows_ - 1, cols_ - 1);
        for (size_t i = 0, si = 0; i < rows_; ++i) {
            if (i == skip_row) continue;
            for (size_t j = 0, sj = 0; j < cols_; ++j) {
                if (j == skip_col) continue;
                s.at(si, sj++) = at(i, j);
            }
            ++si;
        }
        return s;
    }

    // Cofactor expansion; fine for the small square matrices used here.
    R det() const {
        if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
        if (rows_ == 0) return R(1);
        if (rows_ == 1) return at(0, 0);
        if (rows_ == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
        R d(0);
        for (size_t j = 0; j < cols_; ++j) {
            if (at(0, j) == R(0)) continue;
            R minor = submatrix(0, j).det();
            R term = at(0, j) * minor;
            d = (j % 2 == 0) ? d + term : d - term;
        }
        return d;
    }

    // Adjugate-based inverse; requires R to be a field (uses division).
    Matrix inverse() const {
        R d = det();
        if (d == R(0)) throw std::domain_error("inverse of singular matrix");
        Matrix adj(rows_, cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) {
                R minor = submatrix(i, j).det();
                adj.at(j, i) = ((i + j) % 2 == 0) ? minor : R(0) - minor;
            }
        Matrix inv(rows_, cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) inv.at(i, j) = adj.at(i, j) / d;
        return inv;
    }

private:
    size_t rows_, cols_;
    std::vector<R> data_;
};

}  // namespace charvar

#endif
