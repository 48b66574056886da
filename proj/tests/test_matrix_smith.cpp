#include <doctest.h>

#include <algorithm>
#include <functional>
#include <vector>

#include "charvar/matrix.hpp"
#include "charvar/rng.hpp"
#include "charvar/smith.hpp"

using namespace charvar;

namespace {

// gcd of all k x k minors; 0 when every minor vanishes.
mpz_class minor_gcd(const IntMatrix& a, size_t k) {
    mpz_class g = 0;
    std::vector<std::vector<size_t>> row_sets, col_sets;
    auto collect = [&](size_t n, auto& out) {
        out.clear();
        std::vector<size_t> pick;
        std::function<void(size_t)> rec = [&](size_t start) {
            if (pick.size() == k) {
                out.push_back(pick);
                return;
            }
            for (size_t i = start; i + (k - pick.size()) <= n; ++i) {
                pick.push_back(i);
                rec(i + 1);
                pick.pop_back();
            }
        };
        rec(0);
    };
    collect(a.rows(), row_sets);
    collect(a.cols(), col_sets);
    for (const auto& rs : row_sets)
        for (const auto& cs : col_sets) {
            IntMatrix sub(k, k);
            for (size_t i = 0; i < k; ++i)
                for (size_t j = 0; j < k; ++j) sub.at(i, j) = a.at(rs[i], cs[j]);
            mpz_class d = int_det(sub);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        }
    return g;
}

IntMatrix random_int_matrix(Rng& rng, size_t r, size_t c, long bound) {
    IntMatrix m(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m.at(i, j) = rng.uniform(-bound, bound);
    return m;
}

}  // namespace

TEST_CASE("matrix ring operations over the rationals") {
    const Matrix<Rational> a{{Rational(1), Rational(2)}, {Rational(3), Rational(4)}};
    const Matrix<Rational> b{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    CHECK((a * b).at(0, 0) == Rational(2));
    CHECK((a * b).at(0, 1) == Rational(1));
    CHECK(a.trace() == Rational(5));
    CHECK(a.det() == Rational(-2));
    CHECK(a.transpose().at(0, 1) == Rational(3));
    CHECK((a + b - b) == a);
    CHECK(Matrix<Rational>::identity(2) * a == a);

    const auto inv = a.inverse();
    CHECK(a * inv == Matrix<Rational>::identity(2));
    CHECK(inv * a == Matrix<Rational>::identity(2));
    const Matrix<Rational> singular{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK_THROWS(singular.inverse());
}

TEST_CASE("smith normal form on fixed matrices") {
    // diag(2, 6) is already in Smith form up to the chain 2 | 6.
    const IntMatrix a{{2, 0}, {0, 6}};
    const auto s = smith_normal_form(a);
    CHECK(s.rank == 2);
    CHECK(s.invariant_factors == std::vector<mpz_class>{2, 6});

    // A unimodular matrix has all invariant factors 1.
    const IntMatrix u{{1, 2}, {0, 1}};
    CHECK(smith_normal_form(u).invariant_factors == std::vector<mpz_class>{1, 1});

    // Rank-deficient example.
    const IntMatrix r{{1, 2}, {2, 4}};
    const auto sr = smith_normal_form(r);
    CHECK(sr.rank == 1);
    CHECK(sr.invariant_factors == std::vector<mpz_class>{1});

    // The classic 2-torsion source: multiplication by 2.
    const IntMatrix t{{2}};
    CHECK(smith_normal_form(t).invariant_factors == std::vector<mpz_class>{2});
}

TEST_CASE("smith normal form properties on random matrices") {
    Rng rng(sample_seed(91, 0));
    for (int iter = 0; iter < 60; ++iter) {
        const size_t rows = static_cast<size_t>(rng.uniform(1, 5));
        const size_t cols = static_cast<size_t>(rng.uniform(1, 5));
        const IntMatrix a = random_int_matrix(rng, rows, cols, 9);
        const auto s = smith_normal_form(a);

        // U A V = D exactly.
        const IntMatrix lhs = s.u * a * s.v;
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) {
                CHECK(lhs.at(i, j) == s.d.at(i, j));
                if (i != j) CHECK(s.d.at(i, j) == 0);
            }

        // U and V are unimodular.
        mpz_class du = int_det(s.u), dv = int_det(s.v);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));

        // Nonnegative diagonal with the divisibility chain.
        for (size_t i = 0; i + 1 < s.invariant_factors.size(); ++i) {
            CHECK(s.invariant_factors[i] > 0);
            CHECK(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
        }

        // Products of invariant factors equal gcds of k x k minors.
        mpz_class prod = 1;
        for (size_t k = 1; k <= s.rank; ++k) {
            prod *= s.invariant_factors[k - 1];
            CHECK(prod == minor_gcd(a, k));
        }
        if (s.rank < std::min(rows, cols)) CHECK(minor_gcd(a, s.rank + 1) == 0);
    }
}

TEST_CASE("exact linear solve") {
    const Matrix<Rational> a{{Rational(2), Rational(1)}, {Rational(1), Rational(3)}};
    std::vector<Rational> x;
    CHECK(linear_solve_unique(a, {Rational(5), Rational(10)}, x));
    CHECK(x[0] == Rational(1));
    CHECK(x[1] == Rational(3));

    const Matrix<Rational> sing{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK(!linear_solve_unique(sing, {Rational(1), Rational(1)}, x));
}

TEST_CASE("random unimodular matrices have determinant one") {
    Rng rng(sample_seed(92, 0));
    for (int i = 0; i < 50; ++i) {
        CHECK(random_unimodular2(rng).det() == Rational(1));
        CHECK(random_conjugator2(rng).det() == Rational(1));
    }
}
