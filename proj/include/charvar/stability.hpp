#ifndef CHARVAR_STABILITY_HPP
#define CHARVAR_STABILITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charvar/compactified.hpp"
#include "charvar/polynomial.hpp"

namespace charvar {

// Partition of the nilpotent members (e_i = 0) into classes of projectively
// equal matrices, together with, per class l, the set J_l of non-nilpotent
// indices j absorbed under the degenerate product:
//   M_j * M_i = M_i * M_j = M_i for the class representative M_i.
struct NilpotentGrouping {
    std::vector<size_t> i_nil;
    std::vector<std::vector<size_t>> groups;
    std::vector<std::vector<size_t>> j_sets;
};

enum class Verdict { stable, strictly_semistable, unstable };
std::string verdict_name(Verdict v);

struct StabilityReport {
    NilpotentGrouping grouping;
    int m1 = 0;  // largest nilpotent class, 0 when none
    int m2 = 0;  // largest #J_l among classes of size m1, 0 when m1 = 0
    Verdict verdict = Verdict::stable;
    std::optional<long> mu_min;  // filled by the one-parameter-subgroup search
};

NilpotentGrouping nilpotent_grouping(const Configuration& cfg);

// Closed-form verdict: n-1 > 2 m1 + m2 stable, = strictly semistable,
// < unstable.
StabilityReport classify_stability(const Configuration& cfg);

// mu for the standard one-parameter subgroup diag(t, 1/t) in count form:
//   #{ i : c_i != 0 } - #{ i : M_i is the standard nilpotent (0,1,0,0|0) }.
long hm_mu(const Configuration& cfg);

// Weight form for diag(t^r, t^-r); equals 2 r * hm_mu.
long hm_mu_weighted(const Configuration& cfg, long r);

// Same weight computed directly from the definition: maximum of -(sum of
// coordinate weights) over all choices of one nonzero coordinate per factor.
// Exponential in the number of matrices; used as a cross-check.
long hm_mu_max_form(const Configuration& cfg, long r);

// Numerical-criterion verdict: minimizes mu over all one-parameter subgroups.
// Every subgroup of SL2 is a conjugate of diag(t^r, 1/t^r), and mu depends on
// the conjugator only through the line sent to span(e_1); any line fixed by
// no matrix gives the maximal value n-1, so the minimum is attained on the
// finitely many per-matrix fixed lines (eigenlines when e != 0, the kernel
// line when nilpotent), plus the identity baseline.
StabilityReport stability_oracle(const Configuration& cfg);

// Coordinatewise projective limit under diag(t, 1/t) as t -> 0 (direction +1)
// or t -> infinity (direction -1): per matrix, only the extremal-weight
// nonzero entries survive, with weights b: +2, c: -2, a, d, e: 0.
Configuration one_ps_limit(const Configuration& cfg, int direction);

// The two special all-nilpotent configurations for n = 5:
//   s1 = (N, N, N^T, N^T), s2 = (N, N^T, N^T, N), N = (0,1;0,0).
Configuration s1_configuration(const std::vector<EigenvalueData>& eigen);
Configuration s2_configuration(const std::vector<EigenvalueData>& eigen);

enum class SpecialOrbit { s1, s2, other };

// Detects membership in the conjugation orbit of s1 or s2: all four matrices
// nilpotent, kernel lines equal in the pattern {1,2}/{3,4} (s1) or
// {1,4}/{2,3} (s2) with the two lines distinct.
SpecialOrbit classify_special_orbit(const Configuration& cfg);

// n = 5 family with m1 = 2, m2 = 0: equal standard nilpotents at positions
// i1 < i2 (1-based, adjacent), the other two matrices sampled with c != 0.
Configuration semistable_pair_family(const std::vector<EigenvalueData>& eigen,
                                     size_t i1, size_t i2, std::uint64_t seed);

// Trace obstructions for n = 4: the distinct cyclic orders of the two
// normalized candidate shapes with 2 m1 + m2 = 3 yield these trace
// polynomials; each is a single monomial in parameters that are invertible
// on the shape, so the trace condition fails identically.
std::vector<Polynomial> n4_semistable_obstructions();

}  // namespace charvar

#endif
