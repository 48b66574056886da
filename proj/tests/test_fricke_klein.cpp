#include <doctest.h>

#include <array>

#include "charvar/fricke_klein.hpp"
#include "charvar/rng.hpp"

using namespace charvar;

TEST_CASE("verify_relation detects identity products") {
    const Matrix<Rational> s{{Rational(1), Rational(1)}, {Rational(0), Rational(1)}};
    const auto s_inv = s.inverse();
    CHECK(verify_relation({s, s_inv}));
    CHECK(verify_relation({s, s, s_inv, s_inv}));
    CHECK(!verify_relation({s, s}));
    const Matrix<Rational> bad{{Rational(2), Rational(0)}, {Rational(0), Rational(1)}};
    CHECK_THROWS(verify_relation({bad}));
}

TEST_CASE("the trace cubic vanishes on unimodular triples") {
    for (std::uint64_t idx = 0; idx < 200; ++idx) {
        Rng rng(sample_seed(5, idx));
        const auto m1 = random_unimodular2(rng);
        const auto m2 = random_unimodular2(rng);
        const auto m3 = random_unimodular2(rng);
        const auto tc = fk_coordinates(m1, m2, m3);
        const Rational value =
            fk_cubic({tc.x1, tc.x2, tc.x3}, {tc.a1, tc.a2, tc.a3, tc.a4});
        CAPTURE(idx);
        CHECK(value.is_zero());
    }
}

TEST_CASE("trace coordinates are conjugation invariants") {
    Rng rng(sample_seed(6, 0));
    for (int iter = 0; iter < 25; ++iter) {
        const auto m1 = random_unimodular2(rng);
        const auto m2 = random_unimodular2(rng);
        const auto m3 = random_unimodular2(rng);
        const auto g = random_conjugator2(rng);
        const auto gi = g.inverse();
        const auto tc = fk_coordinates(m1, m2, m3);
        const auto td = fk_coordinates(g * m1 * gi, g * m2 * gi, g * m3 * gi);
        CHECK(tc.x1 == td.x1);
        CHECK(tc.x2 == td.x2);
        CHECK(tc.x3 == td.x3);
        CHECK(tc.a1 == td.a1);
        CHECK(tc.a2 == td.a2);
        CHECK(tc.a3 == td.a3);
        CHECK(tc.a4 == td.a4);
    }
}

TEST_CASE("theta values for the identity representation") {
    // a = (2,2,2,2): th_i = a_i a_4 + a_j a_k = 4 + 4 = 8 and
    // th4 = a1 a2 a3 a4 + sum a_i^2 - 4 = 16 + 16 - 4 = 28.
    const auto th = theta(Rational(2), Rational(2), Rational(2), Rational(2));
    CHECK(th[0] == Rational(8));
    CHECK(th[1] == Rational(8));
    CHECK(th[2] == Rational(8));
    CHECK(th[3] == Rational(28));
    // x = (2,2,2): f = 8 + 12 - 48 + 28 = 0 (the identity point lies on the surface).
    CHECK(fk_cubic({Rational(2), Rational(2), Rational(2)},
                   {Rational(2), Rational(2), Rational(2), Rational(2)})
              .is_zero());
}

TEST_CASE("cubic polynomial form agrees with the direct evaluation") {
    Rng rng(sample_seed(7, 0));
    for (int iter = 0; iter < 10; ++iter) {
        const std::array<Rational, 4> a{rng.rational(5, 3), rng.rational(5, 3),
                                        rng.rational(5, 3), rng.rational(5, 3)};
        const Polynomial p = fk_cubic_poly(a);
        for (int pt = 0; pt < 5; ++pt) {
            const std::array<Rational, 3> x{rng.rational(5, 3), rng.rational(5, 3),
                                            rng.rational(5, 3)};
            CHECK(p.eval({{"x1", x[0]}, {"x2", x[1]}, {"x3", x[2]}}) == fk_cubic(x, a));
        }
    }
}

TEST_CASE("leading form at infinity of the trace cubic is XYZ") {
    const Polynomial X = Polynomial::var("X");
    const Polynomial Y = Polynomial::var("Y");
    const Polynomial Z = Polynomial::var("Z");
    Rng rng(sample_seed(8, 0));
    for (int iter = 0; iter < 20; ++iter) {
        const std::array<Rational, 4> a{rng.rational(7, 4), rng.rational(7, 4),
                                        rng.rational(7, 4), rng.rational(7, 4)};
        CHECK(leading_form_at_infinity(fk_cubic_poly(a)) == X * Y * Z);
    }
    // Quartic input is rejected.
    const Polynomial x1 = Polynomial::var("x1");
    CHECK_THROWS(leading_form_at_infinity(x1.pow(4)));
}
