#include "charvar/smith.hpp"

#include <algorithm>
#include <stdexcept>

namespace charvar {

namespace {

struct SnfWork {
    IntMatrix d, u, v;

    void row_swap(size_t i, size_t j) {
        if (i == j) return;
        for (size_t c = 0; c < d.cols(); ++c) std::swap(d.at(i, c), d.at(j, c));
        for (size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void col_swap(size_t i, size_t j) {
        if (i == j) return;
        for (size_t r = 0; r < d.rows(); ++r) std::swap(d.at(r, i), d.at(r, j));
        for (size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    // row_i -= q * row_j
    void row_sub(size_t i, size_t j, const mpz_class& q) {
        if (q == 0) return;
        for (size_t c = 0; c < d.cols(); ++c) d.at(i, c) -= q * d.at(j, c);
        for (size_t c = 0; c < u.cols(); ++c) u.at(i, c) -= q * u.at(j, c);
    }
    // col_i -= q * col_j
    void col_sub(size_t i, size_t j, const mpz_class& q) {
        if (q == 0) return;
        for (size_t r = 0; r < d.rows(); ++r) d.at(r, i) -= q * d.at(r, j);
        for (size_t r = 0; r < v.rows(); ++r) v.at(r, i) -= q * v.at(r, j);
    }
    void row_add(size_t i, size_t j) {  // row_i += row_j
        for (size_t c = 0; c < d.cols(); ++c) d.at(i, c) += d.at(j, c);
        for (size_t c = 0; c < u.cols(); ++c) u.at(i, c) += u.at(j, c);
    }
    void row_negate(size_t i) {
        for (size_t c = 0; c < d.cols(); ++c) d.at(i, c) = -d.at(i, c);
        for (size_t c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
    }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& a) {
    size_t m = a.rows(), n = a.cols();
    SnfWork w{a, IntMatrix::identity(m), IntMatrix::identity(n)};
    size_t steps = std::min(m, n);

    for (size_t t = 0; t < steps; ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            bool found = false;
            size_t pi = t, pj = t;
            mpz_class best;
            for (size_t i = t; i < m; ++i)
                for (size_t j = t; j < n; ++j) {
                    if (w.d.at(i, j) == 0) continue;
                    mpz_class a_ = abs(w.d.at(i, j));
                    if (!found || a_ < best) {
                        found = true;
                        best = a_;
                        pi = i;
                        pj = j;
                    }
                }
            if (!found) return [&] {
                SmithResult r{w.u, w.d, w.v, {}, 0};
                for (size_t i = 0; i < steps; ++i)
                    if (w.d.at(i, i) != 0) {
                        r.invariant_factors.push_back(w.d.at(i, i));
                        ++r.rank;
                    }
                return r;
            }();
            w.row_swap(t, pi);
            w.col_swap(t, pj);

            // Euclidean clearing of row t and column t. Each pass either
            // finishes or strictly shrinks |pivot|, so this terminates.
            bool clean = false;
            while (!clean) {
                clean = true;
                for (size_t i = t + 1; i < m; ++i) {
                    while (w.d.at(i, t) != 0) {
                        mpz_class q = w.d.at(i, t) / w.d.at(t, t);
                        w.row_sub(i, t, q);
                        if (w.d.at(i, t) != 0) {
                            w.row_swap(t, i);
                            clean = false;
                        }
                    }
                }
                for (size_t j = t + 1; j < n; ++j) {
                    while (w.d.at(t, j) != 0) {
                        mpz_class q = w.d.at(t, j) / w.d.at(t, t);
                        w.col_sub(j, t, q);
                        if (w.d.at(t, j) != 0) {
                            w.col_swap(t, j);
                            clean = false;
                        }
                    }
                }
            }

            // Pivot must divide the whole trailing block; this is what makes
            // the diagonal a divisibility chain.
            bool bad = false;
            for (size_t i = t + 1; i < m && !bad; ++i)
                for (size_t j = t + 1; j < n && !bad; ++j)
                    if (w.d.at(i, j) % w.d.at(t, t) != 0) {
                        w.row_add(t, i);
                        bad = true;
                    }
            if (!bad) break;
        }
        if (w.d.at(t, t) < 0) w.row_negate(t);
    }

    SmithResult r{w.u, w.d, w.v, {}, 0};
    for (size_t i = 0; i < steps; ++i)
        if (w.d.at(i, i) != 0) {
            r.invariant_factors.push_back(w.d.at(i, i));
            ++r.rank;
        }
    return r;
}

mpz_class int_det(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
    size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    mpz_class prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            size_t p = k + 1;
            while (p < n && m.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (size_t c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(p, c));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                mpz_class num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                m.at(i, j) = q;
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

bool linear_solve_unique(const Matrix<Rational>& a, const std::vector<Rational>& b,
                         std::vector<Rational>& x) {
    size_t m = a.rows(), n = a.cols();
    if (b.size() != m) throw std::invalid_argument("rhs size mismatch");
    Matrix<Rational> w(m, n + 1);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) w.at(i, j) = a.at(i, j);
        w.at(i, n) = b[i];
    }
    size_t rank = 0;
    std::vector<size_t> piv_col;
    for (size_t c = 0; c < n && rank < m; ++c) {
        size_t p = rank;
        while (p < m && w.at(p, c).is_zero()) ++p;
        if (p == m) continue;
        for (size_t j = 0; j <= n; ++j) std::swap(w.at(rank, j), w.at(p, j));
        Rational inv = w.at(rank, c).inverse();
        for (size_t j = c; j <= n; ++j) w.at(rank, j) *= inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == rank || w.at(i, c).is_zero()) continue;
            Rational f = w.at(i, c);
            for (size_t j = c; j <= n; ++j) w.at(i, j) -= f * w.at(rank, j);
        }
        piv_col.push_back(c);
        ++rank;
    }
    if (rank < n) return false;
    for (size_t i = rank; i < m; ++i)
        if (!w.at(i, n).is_zero()) return false;
    x.assign(n, Rational(0));
    for (size_t k = 0; k < rank; ++k) x[piv_col[k]] = w.at(k, n);
    return true;
}

}  // namespace charvar
