#include "charvar/compactified.hpp"

#include <stdexcept>
#include <string>

namespace charvar {

EigenvalueData::EigenvalueData(const Rational& a) : alpha(a) {
    if (a.is_zero() || a == Rational(1) || a == Rational(-1))
        throw std::invalid_argument("eigenvalue must avoid 0, 1, -1");
    alpha_inv = a.inverse();
    k = alpha + alpha_inv;
    delta = alpha - alpha_inv;
}

CompactifiedMatrix::CompactifiedMatrix(const Rational& a, const Rational& b,
                                       const Rational& c, const Rational& d,
                                       const Rational& e) {
    const std::array<Rational, 5> r{a, b, c, d, e};
    mpz_class lcm = 1;
    for (const auto& x : r) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.den().get_mpz_t());
    for (size_t i = 0; i < 5; ++i) t_[i] = r[i].num() * (lcm / r[i].den());

    mpz_class g = 0;
    for (const auto& z : t_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    if (g == 0) throw std::invalid_argument("all-zero tuple");
    for (auto& z : t_) z /= g;

    for (const auto& z : t_) {
        if (z == 0) continue;
        if (z < 0)
            for (auto& w : t_) w = -w;
        break;
    }
}

CompactifiedMatrix CompactifiedMatrix::from_sl2(const Matrix<Rational>& m) {
    if (m.rows() != 2 || m.cols() != 2 || m.det() != Rational(1))
        throw std::invalid_argument("matrix is not unimodular");
    return CompactifiedMatrix(m.at(0, 0), m.at(0, 1), m.at(1, 0), m.at(1, 1), Rational(1));
}

Matrix<Rational> CompactifiedMatrix::block() const {
    return Matrix<Rational>{{Rational(t_[0]), Rational(t_[1])},
                            {Rational(t_[2]), Rational(t_[3])}};
}

CompactifiedMatrix standard_nilpotent() {
    return CompactifiedMatrix(Rational(0), Rational(1), Rational(0), Rational(0), Rational(0));
}

CompactifiedMatrix standard_nilpotent_transpose() {
    return CompactifiedMatrix(Rational(0), Rational(0), Rational(1), Rational(0), Rational(0));
}

bool closure_membership(const Rational& a, const Rational& b, const Rational& c,
                        const Rational& d, const Rational& e, const Rational& k) {
    if (a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero() && e.is_zero())
        throw std::invalid_argument("all-zero tuple");
    return a * d - b * c == e * e && a + d == k * e;
}

bool closure_membership(const CompactifiedMatrix& m, const Rational& k) {
    return closure_membership(Rational(m.a()), Rational(m.b()), Rational(m.c()),
                              Rational(m.d()), Rational(m.e()), k);
}

P1P1Point::P1P1Point(const Rational& s_, const Rational& t_, const Rational& u_,
                     const Rational& v_, int cls_)
    : s(s_), t(t_), u(u_), v(v_), cls(cls_) {
    if (s.is_zero() && t.is_zero()) throw std::invalid_argument("degenerate projective pair (S, T)");
    if (u.is_zero() && v.is_zero()) throw std::invalid_argument("degenerate projective pair (U, V)");
}

CompactifiedMatrix p1p1_to_matrix(const P1P1Point& p, const EigenvalueData& ev) {
    const Rational su = p.s * p.u, tv = p.t * p.v;
    return CompactifiedMatrix((ev.alpha_inv * su + ev.alpha * tv) / ev.delta,
                              p.s * p.v, p.t * p.u,
                              (ev.alpha * su + ev.alpha_inv * tv) / ev.delta,
                              (su + tv) / ev.delta);
}

P1P1Point matrix_to_p1p1(const CompactifiedMatrix& m, const EigenvalueData& ev, int cls) {
    if (!closure_membership(m, ev.k))
        throw std::invalid_argument("matrix does not lie on the class");
    const Rational a(m.a()), b(m.b()), c(m.c()), e(m.e());
    const Rational s00 = ev.alpha * e - a;
    const Rational s11 = a - ev.alpha_inv * e;
    // Rank-one matrix [[SU, SV], [TU, TV]]: any nonzero column is (S:T), any
    // nonzero row is (U:V). On the class the matrix is never zero.
    Rational s, t, u, v;
    if (!s00.is_zero() || !c.is_zero()) {
        s = s00;
        t = c;
    } else {
        s = b;
        t = s11;
    }
    if (!s00.is_zero() || !b.is_zero()) {
        u = s00;
        v = b;
    } else {
        u = c;
        v = s11;
    }
    return P1P1Point(s, t, u, v, cls);
}

CompactifiedMatrix star_product(const CompactifiedMatrix& m, const CompactifiedMatrix& mp) {
    const Matrix<Rational> prod = m.block() * mp.block();
    const Rational e = Rational(m.e()) * Rational(mp.e());
    if (prod.at(0, 0).is_zero() && prod.at(0, 1).is_zero() && prod.at(1, 0).is_zero() &&
        prod.at(1, 1).is_zero() && e.is_zero())
        throw std::runtime_error("undefined * product (all-zero)");
    return CompactifiedMatrix(prod.at(0, 0), prod.at(0, 1), prod.at(1, 0), prod.at(1, 1), e);
}

CompactifiedMatrix conjugate(const Matrix<Rational>& g, const CompactifiedMatrix& m) {
    const Matrix<Rational> a = g * m.block() * g.inverse();
    return CompactifiedMatrix(a.at(0, 0), a.at(0, 1), a.at(1, 0), a.at(1, 1), Rational(m.e()));
}

Configuration Configuration::make(std::vector<EigenvalueData> eigen,
                                  std::vector<CompactifiedMatrix> mats, bool check_trace) {
    if (eigen.size() != mats.size() + 1)
        throw std::invalid_argument("eigenvalue count must be matrix count plus one");
    if (mats.empty()) throw std::invalid_argument("configuration needs at least one matrix");
    for (size_t i = 0; i < mats.size(); ++i)
        if (!closure_membership(mats[i], eigen[i].k))
            throw std::invalid_argument("matrix " + std::to_string(i + 1) +
                                        " does not satisfy its class equations");
    Configuration cfg(std::move(eigen), std::move(mats));
    if (check_trace && !trace_condition(cfg))
        throw std::invalid_argument("trace condition violated");
    return cfg;
}

bool trace_condition(const Configuration& cfg) {
    Matrix<Rational> prod = cfg.mats()[0].block();
    Rational eprod(cfg.mats()[0].e());
    for (size_t i = 1; i < cfg.mats().size(); ++i) {
        prod = prod * cfg.mats()[i].block();
        eprod = eprod * Rational(cfg.mats()[i].e());
    }
    return prod.trace() == cfg.eigen().back().k * eprod;
}

bool is_generic(const std::vector<EigenvalueData>& eigen) {
    const size_t n = eigen.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        Rational prod(1);
        for (size_t i = 0; i < n; ++i)
            prod = prod * ((mask >> i) & 1 ? eigen[i].alpha : eigen[i].alpha_inv);
        if (prod == Rational(1)) return false;
    }
    return true;
}

Configuration conjugate(const Matrix<Rational>& g, const Configuration& cfg) {
    std::vector<CompactifiedMatrix> mats;
    mats.reserve(cfg.mats().size());
    for (const auto& m : cfg.mats()) mats.push_back(conjugate(g, m));
    // Conjugation preserves the trace condition, so re-checking it here would
    // only reject inputs that were already built without the check.
    return Configuration::make(cfg.eigen(), std::move(mats), false);
}

Configuration random_sl2_configuration(const std::vector<EigenvalueData>& eigen,
                                       std::uint64_t seed) {
    if (eigen.size() < 3) throw std::invalid_argument("need at least three classes");
    const size_t count = eigen.size() - 1;
    Rng rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Matrix<Rational>> mats;
        mats.reserve(count);
        for (size_t i = 0; i + 1 < count; ++i) {
            const Matrix<Rational> seed_matrix{{eigen[i].alpha, Rational(0)},
                                               {Rational(1), eigen[i].alpha_inv}};
            if (i == 0) {
                mats.push_back(seed_matrix);
            } else {
                const Matrix<Rational> g = random_conjugator2(rng);
                mats.push_back(g * seed_matrix * g.inverse());
            }
        }
        Matrix<Rational> w = mats[0];
        for (size_t i = 1; i < mats.size(); ++i) w = w * mats[i];
        if (w.at(1, 0).is_zero()) continue;
        // Last matrix upper triangular with the right eigenvalues; its corner
        // solves Tr(W * M_last) = k_n exactly.
        const EigenvalueData& last = eigen[count - 1];
        const Rational y = (eigen.back().k - last.alpha * w.at(0, 0) -
                            last.alpha_inv * w.at(1, 1)) /
                           w.at(1, 0);
        mats.push_back(Matrix<Rational>{{last.alpha, y}, {Rational(0), last.alpha_inv}});

        const Matrix<Rational> g = random_conjugator2(rng);
        std::vector<CompactifiedMatrix> lifted;
        lifted.reserve(count);
        for (const auto& m : mats) lifted.push_back(CompactifiedMatrix::from_sl2(g * m * g.inverse()));
        return Configuration::make(eigen, std::move(lifted));
    }
    throw std::runtime_error("failed to draw a configuration");
}

Configuration random_boundary_configuration(const std::vector<EigenvalueData>& eigen,
                                            const std::vector<size_t>& nilpotent_positions,
                                            std::uint64_t seed) {
    if (eigen.size() < 3) throw std::invalid_argument("need at least three classes");
    const size_t count = eigen.size() - 1;
    std::vector<bool> nil(count, false);
    for (size_t p : nilpotent_positions) {
        if (p >= count) throw std::invalid_argument("nilpotent position out of range");
        nil[p] = true;
    }
    size_t solved = count;
    for (size_t i = count; i-- > 0;)
        if (!nil[i]) {
            solved = i;
            break;
        }
    if (solved == count)
        throw std::invalid_argument("at least one matrix must stay non-nilpotent");

    Rng rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        // Raw rational tuples (block, e); the solved coordinate stays linear.
        std::vector<Matrix<Rational>> blocks(count);
        std::vector<Rational> scalars(count);
        bool degenerate_draw = false;
        for (size_t i = 0; i < count; ++i) {
            if (i == solved) continue;
            if (nil[i]) {
                Matrix<Rational> g = random_unimodular2(rng);
                const Matrix<Rational> a =
                    g * Matrix<Rational>{{Rational(0), Rational(1)}, {Rational(0), Rational(0)}} *
                    g.inverse();
                blocks[i] = a;
                scalars[i] = Rational(0);
            } else {
                auto draw_pair = [&rng](Rational& x0, Rational& x1) {
                    if (rng.uniform(0, 1) == 0) {
                        x0 = Rational(1);
                        x1 = Rational(rng.uniform(-4, 4));
                    } else {
                        x0 = Rational(rng.uniform(-4, 4));
                        x1 = Rational(1);
                    }
                };
                Rational s, t, u, v;
                int guard = 0;
                do {
                    draw_pair(s, t);
                    draw_pair(u, v);
                } while ((s * u + t * v).is_zero() && ++guard < 16);
                const Rational su = s * u, tv = t * v;
                if ((su + tv).is_zero()) {
                    degenerate_draw = true;
                    break;
                }
                blocks[i] = Matrix<Rational>{
                    {(eigen[i].alpha_inv * su + eigen[i].alpha * tv) / eigen[i].delta, s * v},
                    {t * u, (eigen[i].alpha * su + eigen[i].alpha_inv * tv) / eigen[i].delta}};
                scalars[i] = (su + tv) / eigen[i].delta;
            }
        }
        if (degenerate_draw) continue;

        const Rational tau(rng.uniform(-4, 4));
        auto solved_tuple = [&](const Rational& u) {
            // ([1 : tau], [u : 1]) on class `solved`.
            const Rational su = u, tv = tau;
            Matrix<Rational> blk{
                {(eigen[solved].alpha_inv * su + eigen[solved].alpha * tv) / eigen[solved].delta,
                 Rational(1)},
                {tau * u,
                 (eigen[solved].alpha * su + eigen[solved].alpha_inv * tv) / eigen[solved].delta}};
            return std::make_pair(blk, (su + tv) / eigen[solved].delta);
        };
        auto condition_value = [&](const Rational& u) {
            auto [blk, sc] = solved_tuple(u);
            Matrix<Rational> prod = Matrix<Rational>::identity(2);
            Rational eprod(1);
            for (size_t i = 0; i < count; ++i) {
                prod = prod * (i == solved ? blk : blocks[i]);
                eprod = eprod * (i == solved ? sc : scalars[i]);
            }
            return prod.trace() - eigen.back().k * eprod;
        };
        const Rational at0 = condition_value(Rational(0));
        const Rational slope = condition_value(Rational(1)) - at0;
        if (slope.is_zero()) continue;
        const Rational u = -at0 / slope;
        auto [blk, sc] = solved_tuple(u);
        // The solved point must stay off the boundary: only the listed
        // positions are nilpotent.
        if (sc.is_zero()) continue;

        std::vector<CompactifiedMatrix> mats;
        mats.reserve(count);
        for (size_t i = 0; i < count; ++i) {
            const Matrix<Rational>& a = (i == solved) ? blk : blocks[i];
            const Rational& e = (i == solved) ? sc : scalars[i];
            mats.emplace_back(a.at(0, 0), a.at(0, 1), a.at(1, 0), a.at(1, 1), e);
        }
        return Configuration::make(eigen, std::move(mats));
    }
    throw std::runtime_error("failed to draw a configuration");
}

std::vector<EigenvalueData> random_generic_eigenvalues(size_t n, Rng& rng) {
    for (int attempt = 0; attempt < 256; ++attempt) {
        std::vector<EigenvalueData> out;
        out.reserve(n);
        for (size_t i = 0; i < n; ++i) {
            for (;;) {
                const long p = rng.nonzero(9);
                const long q = rng.uniform(1, 9);
                if (p == q || p == -q) continue;
                out.emplace_back(Rational(p, q));
                break;
            }
        }
        if (is_generic(out)) return out;
    }
    throw std::runtime_error("failed to draw generic eigenvalues");
}

}  // namespace charvar
