#ifndef CHARVAR_RNG_HPP
#define CHARVAR_RNG_HPP

#include <cstdint>

#include "charvar/matrix.hpp"
#include "charvar/rational.hpp"

namespace charvar {

// splitmix64 finalizer; the single fixed hash used everywhere.
std::uint64_t mix64(std::uint64_t z);

// Per-sample seed: mix64(seed + (index+1) * golden gamma). Independent of
// evaluation order, so sampling stays reproducible under any scheduling.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

// Deterministic generator (splitmix64 stream).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    // Uniform-ish integer in [lo, hi]; deterministic, unbiased enough for sampling.
    long uniform(long lo, long hi);
    // Nonzero integer in [-bound, bound].
    long nonzero(long bound);
    // Rational p/q with p in [-bound, bound], q in [1, qbound].
    Rational rational(long bound, long qbound);

private:
    std::uint64_t state_;
};

// Random SL2(Z) matrix: word of elementary matrices [[1,u],[0,1]], [[1,0],[v,1]]
// with small nonzero u, v; word length in [4, 8]. Determinant is exactly 1.
Matrix<Rational> random_unimodular2(Rng& rng);

// Random SL2(Q) conjugator with an extra rational scaling twist mixed in,
// still determinant 1.
Matrix<Rational> random_conjugator2(Rng& rng);

}  // namespace charvar

#endif
