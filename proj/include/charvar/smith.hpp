#ifndef CHARVAR_SMITH_HPP
#define CHARVAR_SMITH_HPP

#include <gmpxx.h>

#include <vector>

#include "charvar/matrix.hpp"
#include "charvar/rational.hpp"

namespace charvar {

using IntMatrix = Matrix<mpz_class>;

// U * A * V = D with U, V unimodular and D diagonal with the divisibility
// chain d_1 | d_2 | ... (all d_i >= 0). invariant_factors lists the nonzero
// d_i; rank is their count.
struct SmithResult {
    IntMatrix u, d, v;
    std::vector<mpz_class> invariant_factors;
    size_t rank = 0;
};

SmithResult smith_normal_form(const IntMatrix& a);

// Exact determinant by fraction-free (Bareiss) elimination.
mpz_class int_det(const IntMatrix& a);

// Unique exact solution of A x = b over the rationals.
// Returns false if the system is rank-deficient or inconsistent.
bool linear_solve_unique(const Matrix<Rational>& a, const std::vector<Rational>& b,
                         std::vector<Rational>& x);

}  // namespace charvar

#endif
