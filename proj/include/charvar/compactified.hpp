#ifndef CHARVAR_COMPACTIFIED_HPP
#define CHARVAR_COMPACTIFIED_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "charvar/matrix.hpp"
#include "charvar/rational.hpp"
#include "charvar/rng.hpp"

namespace charvar {

// Class datum for one puncture: eigenvalue alpha with trace k = alpha + 1/alpha
// and discriminant delta = alpha - 1/alpha. Requires alpha outside {0, 1, -1},
// so k != +-2 and delta != 0.
struct EigenvalueData {
    Rational alpha;      // alpha^+
    Rational alpha_inv;  // alpha^-
    Rational k;
    Rational delta;

    explicit EigenvalueData(const Rational& a);
};

// Point of the degeneration quadric: projective tuple (a, b, c, d, e) with
// ad - bc = e^2. Scalar part e = 0 marks boundary points (2-step nilpotent
// blocks); e != 0 rescales to an honest SL2 matrix.
//
// Storage is canonical: coprime integers, first nonzero entry positive.
// operator== is therefore projective equality.
class CompactifiedMatrix {
public:
    CompactifiedMatrix(const Rational& a, const Rational& b, const Rational& c,
                       const Rational& d, const Rational& e);

    // Lift of an SL2 matrix with scalar part 1. Throws unless det = 1.
    static CompactifiedMatrix from_sl2(const Matrix<Rational>& m);

    const mpz_class& a() const { return t_[0]; }
    const mpz_class& b() const { return t_[1]; }
    const mpz_class& c() const { return t_[2]; }
    const mpz_class& d() const { return t_[3]; }
    const mpz_class& e() const { return t_[4]; }
    const std::array<mpz_class, 5>& tuple() const { return t_; }

    // The 2x2 block (a b; c d) over the canonical integer representative.
    Matrix<Rational> block() const;

    bool nilpotent() const { return t_[4] == 0; }

    friend bool operator==(const CompactifiedMatrix& x, const CompactifiedMatrix& y) {
        return x.t_ == y.t_;
    }
    friend bool operator!=(const CompactifiedMatrix& x, const CompactifiedMatrix& y) {
        return !(x == y);
    }

private:
    std::array<mpz_class, 5> t_;
};

// (0,1,0,0 | 0) and its transpose (0,0,1,0 | 0).
CompactifiedMatrix standard_nilpotent();
CompactifiedMatrix standard_nilpotent_transpose();

// Both defining equations of the compactified class with trace datum k:
// ad - bc = e^2 and a + d = k e. Throws on the all-zero tuple.
bool closure_membership(const Rational& a, const Rational& b, const Rational& c,
                        const Rational& d, const Rational& e, const Rational& k);
bool closure_membership(const CompactifiedMatrix& m, const Rational& k);

// Point of P1 x P1 attached to class number cls (informational).
struct P1P1Point {
    Rational s, t;  // [S : T]
    Rational u, v;  // [U : V]
    int cls = 0;

    P1P1Point(const Rational& s_, const Rational& t_, const Rational& u_,
              const Rational& v_, int cls_ = 0);
};

// The isomorphism P1 x P1 -> {a + d = k e} inside the quadric:
//   a = (alpha^- SU + alpha^+ TV) / delta,  b = SV,  c = TU,
//   d = (alpha^+ SU + alpha^- TV) / delta,  e = (SU + TV) / delta.
CompactifiedMatrix p1p1_to_matrix(const P1P1Point& p, const EigenvalueData& ev);

// Inverse via the rank-one Segre matrix
//   [[SU, SV], [TU, TV]] = [[alpha^+ e - a, b], [c, a - alpha^- e]]:
// (S:T) is any nonzero column, (U:V) any nonzero row. Requires m on the class.
P1P1Point matrix_to_p1p1(const CompactifiedMatrix& m, const EigenvalueData& ev,
                         int cls = 0);

// Degenerate product (AA' | ee'). Defined whenever the result is not the
// all-zero tuple; agrees with the matrix product projectively when e, e' != 0.
CompactifiedMatrix star_product(const CompactifiedMatrix& m, const CompactifiedMatrix& mp);

// g (A | e) g^{-1} = (g A g^{-1} | e) for invertible g.
CompactifiedMatrix conjugate(const Matrix<Rational>& g, const CompactifiedMatrix& m);

// Tuple of n class data and n-1 compactified matrices; the n-th class enters
// only through the trace condition Tr(A_1 ... A_{n-1}) = k_n e_1 ... e_{n-1}.
class Configuration {
public:
    static Configuration make(std::vector<EigenvalueData> eigen,
                              std::vector<CompactifiedMatrix> mats,
                              bool check_trace = true);

    size_t n() const { return eigen_.size(); }
    const std::vector<EigenvalueData>& eigen() const { return eigen_; }
    const std::vector<CompactifiedMatrix>& mats() const { return mats_; }

private:
    Configuration(std::vector<EigenvalueData> e, std::vector<CompactifiedMatrix> m)
        : eigen_(std::move(e)), mats_(std::move(m)) {}

    std::vector<EigenvalueData> eigen_;
    std::vector<CompactifiedMatrix> mats_;
};

// Exact test of Tr(A_1 ... A_{n-1}) = k_n e_1 ... e_{n-1}. Both sides are
// multihomogeneous of degree one per matrix, so the canonical representatives
// give the projective answer.
bool trace_condition(const Configuration& cfg);

// No multiplicative relation prod_i alpha_i^{eps_i} = 1 over sign vectors
// eps in {+1,-1}^n.
bool is_generic(const std::vector<EigenvalueData>& eigen);

Configuration conjugate(const Matrix<Rational>& g, const Configuration& cfg);

// Interior sample: honest SL2 matrices in the given classes whose ordered
// product satisfies the trace condition, in general position.
Configuration random_sl2_configuration(const std::vector<EigenvalueData>& eigen,
                                       std::uint64_t seed);

// Boundary sample: standard-conjugate nilpotents at the listed positions,
// random class points elsewhere; the trace condition is solved exactly as a
// linear equation in one remaining coordinate. At least one position must
// stay non-nilpotent.
Configuration random_boundary_configuration(const std::vector<EigenvalueData>& eigen,
                                            const std::vector<size_t>& nilpotent_positions,
                                            std::uint64_t seed);

// n class data with generic eigenvalues, entries p/q with small p, q.
std::vector<EigenvalueData> random_generic_eigenvalues(size_t n, Rng& rng);

}  // namespace charvar

#endif
