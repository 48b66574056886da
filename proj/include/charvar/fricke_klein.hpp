#ifndef CHARVAR_FRICKE_KLEIN_HPP
#define CHARVAR_FRICKE_KLEIN_HPP

#include <array>
#include <vector>

#include "charvar/matrix.hpp"
#include "charvar/polynomial.hpp"
#include "charvar/rational.hpp"

namespace charvar {

// The seven trace coordinates of a triple (M1, M2, M3) in SL2:
// x_i = Tr(M_k M_j) for (i,j,k) cyclic, a_i = Tr(M_i), a4 = Tr(M3 M2 M1).
struct TraceCoordinates4 {
    Rational x1, x2, x3;
    Rational a1, a2, a3, a4;
};

// True iff the ordered product of the matrices is the identity.
// Throws if any input fails det = 1.
bool verify_relation(const std::vector<Matrix<Rational>>& mats);

TraceCoordinates4 fk_coordinates(const Matrix<Rational>& m1, const Matrix<Rational>& m2,
                                 const Matrix<Rational>& m3);

// theta_i = a_i a_4 + a_j a_k for (i,j,k) cyclic;
// theta_4 = a1 a2 a3 a4 + a1^2 + a2^2 + a3^2 + a4^2 - 4.
std::array<Rational, 4> theta(const Rational& a1, const Rational& a2, const Rational& a3,
                              const Rational& a4);

// f_a(x) = x1 x2 x3 + x1^2 + x2^2 + x3^2 - th1 x1 - th2 x2 - th3 x3 + th4.
Rational fk_cubic(const std::array<Rational, 3>& x, const std::array<Rational, 4>& a);

// The same cubic as a polynomial in x1, x2, x3 for fixed a.
Polynomial fk_cubic_poly(const std::array<Rational, 4>& a);

// Homogenizes a cubic with a fourth variable and restricts to the plane at
// infinity: the degree-3 part, renamed to X, Y, Z (input variables in sorted
// order). Throws if the total degree exceeds 3 or there are more than 3
// variables.
Polynomial leading_form_at_infinity(const Polynomial& cubic);

}  // namespace charvar

#endif
