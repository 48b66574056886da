#include <doctest.h>

#include <set>

#include "charvar/identities.hpp"

using namespace charvar;

TEST_CASE("the registry holds exactly seven identities and they all pass") {
    const auto& registry = identity_registry();
    REQUIRE(registry.size() == 7);
    std::set<std::string> names;
    for (const auto& id : registry) {
        CAPTURE(id.name);
        CHECK(!id.statement.empty());
        CHECK(id.check());
        names.insert(id.name);
    }
    CHECK(names.size() == 7);  // distinct names
    CHECK(names.count("n4-section-relation") == 1);
    CHECK(names.count("n5-quintic-factorization") == 1);
}

TEST_CASE("n4 section relation and its failure modes") {
    CHECK(verify_n4_section_relation());

    // The exact combination is am s1 + ap s2 + k2 (ap - am) s3; flipping the
    // sign of the third section must break it.
    const Polynomial boundary = n4_boundary_equation();
    const Polynomial pulled = n4_third_equation_pulled_back();
    CHECK(pulled == boundary);

    const Polynomial b1 = Polynomial::var("b1");
    const Polynomial c2 = Polynomial::var("c2");
    const Polynomial e2 = Polynomial::var("e2");
    const Polynomial k2 = Polynomial::var("k2");
    const Polynomial ap = Polynomial::var("ap");
    const Polynomial am = Polynomial::var("am");
    const Polynomial su = Polynomial::var("S") * Polynomial::var("U");
    const Polynomial tv = Polynomial::var("T") * Polynomial::var("V");
    const Polynomial tu = Polynomial::var("T") * Polynomial::var("U");
    const Polynomial s1 = b1 * c2 * c2 * su;
    const Polynomial s2 = b1 * c2 * c2 * tv;
    const Polynomial s3 = b1 * c2 * e2 * tu;

    CHECK(am * s1 + ap * s2 + k2 * (ap - am) * s3 == b1 * c2 * boundary);
    CHECK_FALSE(am * s1 + ap * s2 - k2 * (ap - am) * s3 == b1 * c2 * boundary);
    CHECK_FALSE(ap * s1 + am * s2 + k2 * (ap - am) * s3 == b1 * c2 * boundary);
}

TEST_CASE("n5 quintic factorization and its failure modes") {
    CHECK(verify_n5_factorization());

    const Polynomial s = Polynomial::var("s");
    const Polynomial t = Polynomial::var("t");
    const Polynomial good = n5_fifth_equation(s * t, s * s, -(t * t), -(s * t));
    CHECK(good == n5_expected_factorization());

    // Perturbing the rank-one parametrization kills the factorization.
    CHECK_FALSE(n5_fifth_equation(s * t, s * s + Polynomial(1), -(t * t), -(s * t)) ==
                n5_expected_factorization());
    CHECK_FALSE(n5_fifth_equation(s * t, s * s, t * t, -(s * t)) ==
                n5_expected_factorization());

    // The identity is uniform in k2: specializing k2 to numbers keeps it.
    for (long k : {2L, 3L, 5L}) {
        const auto lhs = good.substitute({{"k2", Polynomial(Rational(k))}});
        const auto rhs = n5_expected_factorization().substitute({{"k2", Polynomial(Rational(k))}});
        CHECK(lhs == rhs);
    }
}
