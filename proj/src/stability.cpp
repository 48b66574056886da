#include "charvar/stability.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace charvar {

namespace {

using Line = std::array<mpz_class, 2>;

Line normalize_line(mpz_class x, mpz_class y) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    if (g == 0) throw std::logic_error("zero vector is not a line");
    x /= g;
    y /= g;
    if (x < 0 || (x == 0 && y < 0)) {
        x = -x;
        y = -y;
    }
    return {x, y};
}

// Kernel (= image) line of a nonzero nilpotent block.
Line nilpotent_line(const CompactifiedMatrix& m) {
    if (m.a() != 0 || m.b() != 0) return normalize_line(m.b(), -m.a());
    return normalize_line(m.d(), -m.c());
}

// Fixed lines of the block: the two eigenlines (e != 0, distinct rational
// eigenvalues alpha e and e / alpha) or the kernel line (e = 0).
std::vector<Line> fixed_lines(const CompactifiedMatrix& m, const EigenvalueData& ev) {
    if (m.nilpotent()) return {nilpotent_line(m)};
    std::vector<Line> out;
    const Rational e(m.e());
    for (const Rational& lambda : {ev.alpha * e, ev.alpha_inv * e}) {
        // (A - lambda) v = 0 with rows (a - lambda, b), (c, d - lambda).
        const Rational r0 = Rational(m.a()) - lambda;
        Rational vx, vy;
        if (!r0.is_zero() || m.b() != 0) {
            vx = Rational(m.b());
            vy = lambda - Rational(m.a());
        } else {
            vx = lambda - Rational(m.d());
            vy = Rational(m.c());
        }
        const mpz_class den_lcm = vx.den() * vy.den();
        out.push_back(normalize_line(vx.num() * (den_lcm / vx.den()),
                                     vy.num() * (den_lcm / vy.den())));
    }
    if (out[0] == out[1]) out.pop_back();
    return out;
}

// det 1 matrix sending the primitive vector v to e_1.
Matrix<Rational> line_to_first_basis(const Line& v) {
    mpz_class g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), v[0].get_mpz_t(), v[1].get_mpz_t());
    // s v0 + t v1 = 1 for primitive v.
    return Matrix<Rational>{{Rational(s), Rational(t)}, {Rational(mpz_class(-v[1])), Rational(v[0])}};
}

}  // namespace

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::stable: return "stable";
        case Verdict::strictly_semistable: return "strictly_semistable";
        default: return "unstable";
    }
}

NilpotentGrouping nilpotent_grouping(const Configuration& cfg) {
    NilpotentGrouping out;
    const auto& mats = cfg.mats();
    for (size_t i = 0; i < mats.size(); ++i)
        if (mats[i].nilpotent()) out.i_nil.push_back(i);

    for (size_t i : out.i_nil) {
        bool placed = false;
        for (auto& grp : out.groups)
            if (mats[grp.front()] == mats[i]) {
                grp.push_back(i);
                placed = true;
                break;
            }
        if (!placed) out.groups.push_back({i});
    }

    for (const auto& grp : out.groups) {
        const CompactifiedMatrix& rep = mats[grp.front()];
        std::vector<size_t> j;
        for (size_t idx = 0; idx < mats.size(); ++idx) {
            if (mats[idx].nilpotent()) continue;
            if (star_product(mats[idx], rep) == rep && star_product(rep, mats[idx]) == rep)
                j.push_back(idx);
        }
        out.j_sets.push_back(std::move(j));
    }
    return out;
}

StabilityReport classify_stability(const Configuration& cfg) {
    StabilityReport rep;
    rep.grouping = nilpotent_grouping(cfg);
    for (size_t l = 0; l < rep.grouping.groups.size(); ++l)
        rep.m1 = std::max(rep.m1, static_cast<int>(rep.grouping.groups[l].size()));
    if (rep.m1 > 0)
        for (size_t l = 0; l < rep.grouping.groups.size(); ++l)
            if (static_cast<int>(rep.grouping.groups[l].size()) == rep.m1)
                rep.m2 = std::max(rep.m2, static_cast<int>(rep.grouping.j_sets[l].size()));
    const long lhs = static_cast<long>(cfg.n()) - 1;
    const long rhs = 2L * rep.m1 + rep.m2;
    rep.verdict = lhs > rhs   ? Verdict::stable
                  : lhs == rhs ? Verdict::strictly_semistable
                               : Verdict::unstable;
    return rep;
}

long hm_mu(const Configuration& cfg) {
    long mu = 0;
    const CompactifiedMatrix n0 = standard_nilpotent();
    for (const auto& m : cfg.mats()) {
        if (m.c() != 0) ++mu;
        if (m == n0) --mu;
    }
    return mu;
}

long hm_mu_weighted(const Configuration& cfg, long r) {
    if (r <= 0) throw std::invalid_argument("subgroup exponent must be positive");
    return 2 * r * hm_mu(cfg);
}

long hm_mu_max_form(const Configuration& cfg, long r) {
    if (r <= 0) throw std::invalid_argument("subgroup exponent must be positive");
    // Coordinate weights of diag(t^r, t^-r) on (a, b, c, d, e).
    const std::array<long, 5> w{0, 2 * r, -2 * r, 0, 0};
    long best = 0;
    bool first = true;
    std::vector<size_t> pick(cfg.mats().size(), 0);
    for (;;) {
        bool valid = true;
        long total = 0;
        for (size_t i = 0; i < pick.size(); ++i) {
            if (cfg.mats()[i].tuple()[pick[i]] == 0) {
                valid = false;
                break;
            }
            total += w[pick[i]];
        }
        if (valid && (first || -total > best)) {
            best = -total;
            first = false;
        }
        size_t i = 0;
        while (i < pick.size() && ++pick[i] == 5) pick[i++] = 0;
        if (i == pick.size()) break;
    }
    if (first) throw std::logic_error("no nonzero coordinate pick");
    return best;
}

StabilityReport stability_oracle(const Configuration& cfg) {
    std::vector<Line> lines;
    for (size_t i = 0; i < cfg.mats().size(); ++i)
        for (const auto& l : fixed_lines(cfg.mats()[i], cfg.eigen()[i]))
            if (std::find(lines.begin(), lines.end(), l) == lines.end()) lines.push_back(l);

    long best = hm_mu(cfg);
    for (const auto& l : lines)
        best = std::min(best, hm_mu(conjugate(line_to_first_basis(l), cfg)));

    StabilityReport rep = classify_stability(cfg);
    rep.mu_min = best;
    rep.verdict = best > 0    ? Verdict::stable
                  : best == 0 ? Verdict::strictly_semistable
                              : Verdict::unstable;
    return rep;
}

Configuration one_ps_limit(const Configuration& cfg, int direction) {
    if (direction != 1 && direction != -1)
        throw std::invalid_argument("direction must be +1 or -1");
    const std::array<int, 5> w{0, 2, -2, 0, 0};
    std::vector<CompactifiedMatrix> out;
    out.reserve(cfg.mats().size());
    for (const auto& m : cfg.mats()) {
        bool seen = false;
        int extremal = 0;
        for (size_t i = 0; i < 5; ++i) {
            if (m.tuple()[i] == 0) continue;
            const int score = direction * w[i];
            if (!seen || score < extremal) extremal = score;
            seen = true;
        }
        if (!seen) throw std::runtime_error("indeterminate limit");
        std::array<Rational, 5> kept{};
        for (size_t i = 0; i < 5; ++i)
            if (m.tuple()[i] != 0 && direction * w[i] == extremal)
                kept[i] = Rational(m.tuple()[i]);
        out.emplace_back(kept[0], kept[1], kept[2], kept[3], kept[4]);
    }
    return Configuration::make(cfg.eigen(), std::move(out));
}

Configuration s1_configuration(const std::vector<EigenvalueData>& eigen) {
    if (eigen.size() != 5) throw std::invalid_argument("requires n = 5");
    const CompactifiedMatrix n = standard_nilpotent();
    const CompactifiedMatrix nt = standard_nilpotent_transpose();
    return Configuration::make(eigen, {n, n, nt, nt});
}

Configuration s2_configuration(const std::vector<EigenvalueData>& eigen) {
    if (eigen.size() != 5) throw std::invalid_argument("requires n = 5");
    const CompactifiedMatrix n = standard_nilpotent();
    const CompactifiedMatrix nt = standard_nilpotent_transpose();
    return Configuration::make(eigen, {n, nt, nt, n});
}

SpecialOrbit classify_special_orbit(const Configuration& cfg) {
    if (cfg.n() != 5) return SpecialOrbit::other;
    for (const auto& m : cfg.mats())
        if (!m.nilpotent()) return SpecialOrbit::other;
    std::array<Line, 4> lines;
    for (size_t i = 0; i < 4; ++i) lines[i] = nilpotent_line(cfg.mats()[i]);
    if (lines[0] == lines[1] && lines[2] == lines[3] && lines[0] != lines[2])
        return SpecialOrbit::s1;
    if (lines[0] == lines[3] && lines[1] == lines[2] && lines[0] != lines[1])
        return SpecialOrbit::s2;
    return SpecialOrbit::other;
}

Configuration semistable_pair_family(const std::vector<EigenvalueData>& eigen, size_t i1,
                                     size_t i2, std::uint64_t seed) {
    if (eigen.size() != 5) throw std::invalid_argument("requires n = 5");
    if (i1 + 1 != i2 || i1 < 1 || i2 > 4)
        throw std::invalid_argument("positions must be adjacent within 1..4");
    Rng rng(seed);
    const CompactifiedMatrix n = standard_nilpotent();
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<CompactifiedMatrix> mats;
        bool ok = true;
        for (size_t pos = 1; pos <= 4 && ok; ++pos) {
            if (pos == i1 || pos == i2) {
                mats.push_back(n);
                continue;
            }
            // Class point with c = TU != 0 and e != 0.
            const Rational s(rng.uniform(-4, 4)), t(rng.nonzero(4));
            const Rational u(rng.nonzero(4)), v(rng.uniform(-4, 4));
            if ((s * u + t * v).is_zero()) {
                ok = false;
                break;
            }
            mats.push_back(p1p1_to_matrix(P1P1Point(s, t, u, v, static_cast<int>(pos)),
                                          eigen[pos - 1]));
        }
        if (!ok) continue;
        // Adjacent equal nilpotents kill the ordered block product, so the
        // trace condition holds with both sides zero.
        return Configuration::make(eigen, std::move(mats));
    }
    throw std::runtime_error("failed to draw a configuration");
}

std::vector<Polynomial> n4_semistable_obstructions() {
    using P = Polynomial;
    const P zero(0), one(1);
    const Matrix<P> n{{zero, one}, {zero, zero}};
    const Matrix<P> nt{{zero, zero}, {one, zero}};
    const Matrix<P> general{{P::var("a2"), P::var("b2")}, {P::var("c2"), P::var("d2")}};
    const Matrix<P> upper{{P::var("a3"), P::var("b3")}, {zero, P::var("d3")}};

    // Shape one: standard nilpotent, a matrix with c2 != 0, an upper
    // triangular matrix. Shape two: both standard nilpotent lines present.
    // Cyclic rotations leave the trace unchanged, so two orders each suffice.
    std::vector<Polynomial> out;
    out.push_back((n * general * upper).trace());
    out.push_back((n * upper * general).trace());
    out.push_back((n * nt * upper).trace());
    out.push_back((n * upper * nt).trace());
    return out;
}

}  // namespace charvar
