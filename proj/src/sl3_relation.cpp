#include "charvar/sl3_relation.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

#include "charvar/smith.hpp"

namespace charvar {

namespace {

void require_sl3(const Matrix<Rational>& m) {
    if (m.rows() != 3 || m.cols() != 3)
        throw std::invalid_argument("expected a 3x3 matrix");
    if (!(m.det() == Rational(1)))
        throw std::invalid_argument("matrix is not unimodular");
}

// Exponent pairs (i, j) meaning x1^i * x2^j, graded order.
const std::pair<unsigned, unsigned> kFMonomials[] = {
    {0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
const std::pair<unsigned, unsigned> kGMonomials[] = {
    {0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {3, 0}, {2, 1}, {1, 2}, {0, 3}};
constexpr size_t kFCount = 6;
constexpr size_t kGCount = 10;
constexpr size_t kUnknowns = kFCount + kGCount;

Rational monomial_value(const Rational& x1, const Rational& x2,
                        std::pair<unsigned, unsigned> e) {
    Rational v(1);
    for (unsigned i = 0; i < e.first; ++i) v *= x1;
    for (unsigned j = 0; j < e.second; ++j) v *= x2;
    return v;
}

bool same_boundary(const Sl3Invariants& a, const Sl3Invariants& b) {
    return a.a1 == b.a1 && a.a2 == b.a2 && a.b1 == b.b1 && a.b2 == b.b2 &&
           a.c1 == b.c1 && a.c2 == b.c2;
}

}  // namespace

Sl3Invariants sl3_invariants(const Matrix<Rational>& m1, const Matrix<Rational>& m2) {
    require_sl3(m1);
    require_sl3(m2);
    Matrix<Rational> i1 = m1.inverse();
    Matrix<Rational> i2 = m2.inverse();
    Sl3Invariants v;
    v.a1 = m1.trace();
    v.a2 = i1.trace();
    v.b1 = m2.trace();
    v.b2 = i2.trace();
    v.c1 = (i1 * i2).trace();
    v.c2 = (m1 * m2).trace();
    v.x1 = (m1 * i2).trace();
    v.x2 = (i1 * m2).trace();
    v.x3 = (m1 * m2 * i1 * i2).trace();
    return v;
}

Sl3Relation fit_sl3_relation(const std::vector<Sl3Invariants>& samples) {
    if (samples.size() < kUnknowns)
        throw std::runtime_error("insufficient or degenerate samples");
    for (size_t i = 1; i < samples.size(); ++i)
        if (!same_boundary(samples[0], samples[i]))
            throw std::invalid_argument("samples do not share boundary traces");

    // One row per sample: x3^2 = f(x1,x2) * x3 - g(x1,x2), so the unknown
    // coefficient vector (f | g) satisfies
    //   sum_m f_m * (-m(x1,x2) * x3) + sum_m' g_m' * m'(x1,x2) = -x3^2.
    // Rows are cleared to integers, then reduced fraction-free.
    std::vector<std::vector<mpz_class>> rows;
    rows.reserve(samples.size());
    for (const auto& s : samples) {
        std::vector<Rational> row(kUnknowns + 1);
        for (size_t c = 0; c < kFCount; ++c)
            row[c] = -(monomial_value(s.x1, s.x2, kFMonomials[c]) * s.x3);
        for (size_t c = 0; c < kGCount; ++c)
            row[kFCount + c] = monomial_value(s.x1, s.x2, kGMonomials[c]);
        row[kUnknowns] = -(s.x3 * s.x3);

        mpz_class scale(1);
        for (const auto& r : row) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), r.den().get_mpz_t());
        std::vector<mpz_class> irow(kUnknowns + 1);
        for (size_t c = 0; c <= kUnknowns; ++c)
            irow[c] = row[c].num() * (scale / row[c].den());
        rows.push_back(std::move(irow));
    }

    // Fraction-free (Bareiss) row echelon with partial pivoting.
    mpz_class prev(1);
    size_t rank = 0;
    for (size_t col = 0; col < kUnknowns; ++col) {
        size_t pivot = rows.size();
        for (size_t i = rank; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            if (pivot == rows.size() ||
                mpz_cmpabs(rows[i][col].get_mpz_t(), rows[pivot][col].get_mpz_t()) < 0)
                pivot = i;
        }
        if (pivot == rows.size())
            throw std::runtime_error("insufficient or degenerate samples");
        std::swap(rows[rank], rows[pivot]);
        for (size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            for (size_t j = col + 1; j <= kUnknowns; ++j) {
                mpz_class t = rows[rank][col] * rows[i][j] - rows[i][col] * rows[rank][j];
                mpz_divexact(rows[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            rows[i][col] = 0;
        }
        prev = rows[rank][col];
        ++rank;
    }
    for (size_t i = rank; i < rows.size(); ++i)
        if (rows[i][kUnknowns] != 0)
            throw std::runtime_error("samples admit no monic quadratic relation");

    std::vector<Rational> x(kUnknowns);
    for (size_t i = kUnknowns; i-- > 0;) {
        Rational acc(rows[i][kUnknowns], mpz_class(1));
        for (size_t j = i + 1; j < kUnknowns; ++j)
            acc -= Rational(rows[i][j], mpz_class(1)) * x[j];
        x[i] = acc / Rational(rows[i][i], mpz_class(1));
    }

    Polynomial x1 = Polynomial::var("x1");
    Polynomial x2 = Polynomial::var("x2");
    Sl3Relation rel;
    for (size_t c = 0; c < kFCount; ++c)
        rel.f += x[c] * (x1.pow(kFMonomials[c].first) * x2.pow(kFMonomials[c].second));
    for (size_t c = 0; c < kGCount; ++c)
        rel.g += x[kFCount + c] * (x1.pow(kGMonomials[c].first) * x2.pow(kGMonomials[c].second));
    return rel;
}

Sl3FixedBoundarySampler::Sl3FixedBoundarySampler(int setting, std::uint64_t seed)
    : rng_(seed) {
    switch (setting) {
        case 0:
            a_ = Matrix<Rational>{{Rational(2), Rational(1)}, {Rational(1), Rational(1)}};
            b0_ = Matrix<Rational>{{Rational(1), Rational(2)}, {Rational(1), Rational(3)}};
            c2_target_ = Rational(1);
            c1_target_ = Rational(2);
            break;
        case 1:
            a_ = Matrix<Rational>{{Rational(3), Rational(1)}, {Rational(2), Rational(1)}};
            b0_ = Matrix<Rational>{{Rational(2), Rational(-1)}, {Rational(1), Rational(1)}};
            c2_target_ = Rational(-1);
            c1_target_ = Rational(3);
            break;
        case 2:
            a_ = Matrix<Rational>{{Rational(1), Rational(-2)}, {Rational(1), Rational(5)}};
            b0_ = Matrix<Rational>{{Rational(4), Rational(1)}, {Rational(3), Rational(1)}};
            c2_target_ = Rational(2);
            c1_target_ = Rational(-1);
            break;
        default:
            throw std::invalid_argument("unknown sampler setting");
    }
}

Sl3Invariants Sl3FixedBoundarySampler::next() {
    // Bottom-right entries make both 3x3 determinants exactly 1.
    const Rational a = a_.det().inverse();
    const Rational b = b0_.det().inverse();
    const Matrix<Rational> ainv = a_.inverse();

    for (int attempt = 0; attempt < 64; ++attempt) {
        long t1 = rng_.uniform(-4, 4);
        long t2 = rng_.uniform(-4, 4);
        Matrix<Rational> k{{Rational(1), Rational(t1)},
                           {Rational(t2), Rational(1 + t1 * t2)}};
        Matrix<Rational> bb = k * b0_ * k.inverse();

        Matrix<Rational> w(1, 2);
        w.at(0, 0) = Rational(rng_.uniform(-9, 9));
        w.at(0, 1) = Rational(rng_.uniform(-9, 9));
        Matrix<Rational> r2 = w * (bb.inverse() * ainv);

        // Corner u is pinned by the two cross traces:
        //   c2 = tr(A B) + w.u + a b        =>  w.u = gamma
        //   c1 = tr(A^-1 B^-1) + (w B^-1 A^-1 u + 1)/(a b)
        //                                    =>  (w B^-1 A^-1).u = gamma'
        Rational gamma = c2_target_ - (a_ * bb).trace() - a * b;
        Rational gammap = (c1_target_ - (ainv * bb.inverse()).trace()) * a * b - Rational(1);

        Matrix<Rational> sys(2, 2);
        sys.at(0, 0) = w.at(0, 0);
        sys.at(0, 1) = w.at(0, 1);
        sys.at(1, 0) = r2.at(0, 0);
        sys.at(1, 1) = r2.at(0, 1);
        std::vector<Rational> u;
        if (!linear_solve_unique(sys, {gamma, gammap}, u)) continue;

        Matrix<Rational> m1(3, 3), m2(3, 3);
        for (size_t i = 0; i < 2; ++i)
            for (size_t j = 0; j < 2; ++j) {
                m1.at(i, j) = a_.at(i, j);
                m2.at(i, j) = bb.at(i, j);
            }
        m1.at(0, 2) = u[0];
        m1.at(1, 2) = u[1];
        m1.at(2, 2) = a;
        m2.at(2, 0) = w.at(0, 0);
        m2.at(2, 1) = w.at(0, 1);
        m2.at(2, 2) = b;
        return sl3_invariants(m1, m2);
    }
    throw std::runtime_error("sampler failed to find a nonsingular draw");
}

std::vector<Sl3Invariants> Sl3FixedBoundarySampler::take(size_t count) {
    std::vector<Sl3Invariants> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i) out.push_back(next());
    return out;
}

}  // namespace charvar
