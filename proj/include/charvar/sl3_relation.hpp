#ifndef CHARVAR_SL3_RELATION_HPP
#define CHARVAR_SL3_RELATION_HPP

#include <vector>

#include "charvar/matrix.hpp"
#include "charvar/polynomial.hpp"
#include "charvar/rational.hpp"
#include "charvar/rng.hpp"

namespace charvar {

// The nine trace generators of a pair (M1, M2) in SL3:
// a1 = Tr M1, a2 = Tr M1^-1, b1 = Tr M2, b2 = Tr M2^-1,
// c1 = Tr(M1^-1 M2^-1), c2 = Tr(M1 M2),
// x1 = Tr(M1 M2^-1), x2 = Tr(M1^-1 M2), x3 = Tr(M1 M2 M1^-1 M2^-1).
struct Sl3Invariants {
    Rational a1, a2, b1, b2, c1, c2;
    Rational x1, x2, x3;
};

Sl3Invariants sl3_invariants(const Matrix<Rational>& m1, const Matrix<Rational>& m2);

struct Sl3Relation {
    Polynomial f;  // degree <= 2 in x1, x2
    Polynomial g;  // degree <= 3 in x1, x2
};

// Interpolates the monic relation x3^2 - f*x3 + g = 0 from samples that all
// share the same boundary values (a1, a2, b1, b2, c1, c2). Exact solve; throws
// "insufficient or degenerate samples" when the linear system is not of full
// rank or the boundary values differ.
Sl3Relation fit_sl3_relation(const std::vector<Sl3Invariants>& samples);

// Sample generator with fixed boundary traces. Pairs have the split shape
// M1 = [[A, u],[0, 1/det A]], M2 = [[B, 0],[w^T, 1/det B]] with A fixed, B
// moving in its 2x2 conjugacy orbit, and the corner u solved linearly from w
// so that c1 and c2 stay at the chosen target values. The x-coordinates sweep
// a two-parameter family while all six boundary traces stay constant.
class Sl3FixedBoundarySampler {
public:
    // setting selects one of three built-in boundary-trace targets (0, 1, 2).
    Sl3FixedBoundarySampler(int setting, std::uint64_t seed);

    // Next sample; also returns the underlying pair if wanted.
    Sl3Invariants next();
    std::vector<Sl3Invariants> take(size_t count);

private:
    Matrix<Rational> a_;   // fixed 2x2 block of M1
    Matrix<Rational> b0_;  // base 2x2 block of M2
    Rational c2_target_, c1_target_;
    Rng rng_;
};

}  // namespace charvar

#endif
