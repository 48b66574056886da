#include "charvar/rng.hpp"

namespace charvar {

namespace {
constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed + (index + 1) * kGamma);
}

std::uint64_t Rng::next() {
    state_ += kGamma;
    return mix64(state_);
}

long Rng::uniform(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
}

long Rng::nonzero(long bound) {
    for (;;) {
        long v = uniform(-bound, bound);
        if (v != 0) return v;
    }
}

Rational Rng::rational(long bound, long qbound) {
    return Rational(uniform(-bound, bound), uniform(1, qbound));
}

Matrix<Rational> random_unimodular2(Rng& rng) {
    Matrix<Rational> m = Matrix<Rational>::identity(2);
    long len = rng.uniform(4, 8);
    for (long i = 0; i < len; ++i) {
        long t = rng.nonzero(3);
        Matrix<Rational> e = Matrix<Rational>::identity(2);
        if (rng.uniform(0, 1) == 0)
            e.at(0, 1) = Rational(t);
        else
            e.at(1, 0) = Rational(t);
        m = m * e;
    }
    return m;
}

Matrix<Rational> random_conjugator2(Rng& rng) {
    Matrix<Rational> m = random_unimodular2(rng);
    // diag(s, 1/s) twist keeps det 1 but leaves SL2(Z).
    Rational s(rng.nonzero(4), rng.uniform(1, 3));
    Matrix<Rational> d{{s, Rational(0)}, {Rational(0), s.inverse()}};
    return m * d;
}

}  // namespace charvar
