#ifndef CHARVAR_IDENTITIES_HPP
#define CHARVAR_IDENTITIES_HPP

#include <functional>
#include <string>
#include <vector>

#include "charvar/polynomial.hpp"

namespace charvar {

// Named symbolic identity; check() runs the exact polynomial comparison.
struct Identity {
    std::string name;
    std::string statement;
    std::function<bool()> check;
};

// The fixed registry of the seven identities behind the construction.
const std::vector<Identity>& identity_registry();

// Building blocks, exposed so the negative tests can perturb them.

// c2 (am SU + ap TV) + k2 (ap - am) e2 TU: the boundary equation of the
// n = 4 divisor in the P1 x P1 coordinates of the third class.
Polynomial n4_boundary_equation();

// Third equation of the n = 4 elimination system, c2 a3 + k2 e2 c3 = 0,
// pulled back along a3 = (am SU + ap TV)/(ap - am), c3 = TU and cleared of
// the denominator.
Polynomial n4_third_equation_pulled_back();

// am s1 + ap s2 + k2 (ap - am) s3 with the three invariant sections
// s1 = b1 c2^2 SU, s2 = b1 c2^2 TV, s3 = b1 c2 e2 TU.
// Returns true iff this combination equals b1 c2 times the boundary
// equation and the pulled-back third equation agrees with it as well.
bool verify_n4_section_relation();

// Fifth equation of the n = 5 elimination system evaluated at a boundary
// third matrix (a3, b3; c3, -a3) with e3 = 0:
//   c2 a3 a4 + k2 e2 c3 a4 + c2 b3 c4 + k2 e2 d3 c4.
Polynomial n5_fifth_equation(const Polynomial& a3, const Polynomial& b3,
                             const Polynomial& c3, const Polynomial& d3);

// (t a4 + s c4)(c2 s - k2 e2 t).
Polynomial n5_expected_factorization();

// Substitutes the rank-one parametrization a3 = st, b3 = s^2, c3 = -t^2,
// d3 = -st and checks exact equality with the displayed factorization.
bool verify_n5_factorization();

}  // namespace charvar

#endif
