#include "charvar/identities.hpp"

#include "charvar/matrix.hpp"

namespace charvar {

namespace {

using P = Polynomial;

P v(const char* name) { return P::var(name); }

// Delta-cleared quadric parametrization: a' = am SU + ap TV, b' = d b,
// c' = d c, d' = ap SU + am TV, e' = SU + TV with d = ap - am; the actual
// point is (a'/d, b, c, d'/d, e'/d).
struct Param {
    P su, tv, sv, tu, ap, am, delta, a, d, e;
    Param() {
        const P s = v("S"), t = v("T"), u = v("U"), w = v("V");
        ap = v("ap");
        am = v("am");
        delta = ap - am;
        su = s * u;
        tv = t * w;
        sv = s * w;
        tu = t * u;
        a = am * su + ap * tv;
        d = ap * su + am * tv;
        e = su + tv;
    }
};

bool closure_trace_identity() {
    // (a' + d') - (ap + am) e' vanishes identically.
    const Param p;
    return poly_equal(p.a + p.d - (p.ap + p.am) * p.e, P(0));
}

bool closure_det_identity() {
    // a'd' - delta^2 bc - e'^2 vanishes modulo ap am = 1.
    const Param p;
    const P expr = p.a * p.d - p.delta * p.delta * p.sv * p.tu - p.e * p.e;
    return poly_equal(expr.reduce_unit_pair("ap", "am"), P(0));
}

bool segre_quadric_identity() {
    // det [[ap e - a, b], [c, a - am e]] equals a(k e - a) - bc - e^2 modulo
    // ap am = 1, i.e. the Segre matrix is singular exactly on the class.
    const P a = v("a"), b = v("b"), c = v("c"), e = v("e"), ap = v("ap"), am = v("am");
    const P lhs = (ap * e - a) * (a - am * e) - b * c;
    const P rhs = a * ((ap + am) * e - a) - b * c - e * e;
    return poly_equal((lhs - rhs).reduce_unit_pair("ap", "am"), P(0));
}

bool nilpotent_square_identity() {
    // A trace-zero block squares to (a^2 + bc) I; with ad - bc = e^2 and
    // e = 0 this is -det A times the identity, i.e. zero on the boundary.
    const P a = v("a"), b = v("b"), c = v("c");
    const Matrix<P> m{{a, b}, {c, -a}};
    const Matrix<P> sq = m * m;
    const P scalar = a * a + b * c;
    return poly_equal(sq.at(0, 0), scalar) && poly_equal(sq.at(1, 1), scalar) &&
           poly_equal(sq.at(0, 1), P(0)) && poly_equal(sq.at(1, 0), P(0));
}

bool star_det_identity() {
    // det(AA') - (ee')^2 = det A' (det A - e^2) + e^2 (det A' - e'^2):
    // the degenerate product stays on the quadric.
    const P a = v("a"), b = v("b"), c = v("c"), d = v("d"), e = v("e");
    const P a2 = v("a'"), b2 = v("b'"), c2 = v("c'"), d2 = v("d'"), e2 = v("e'");
    const Matrix<P> m{{a, b}, {c, d}};
    const Matrix<P> mp{{a2, b2}, {c2, d2}};
    const Matrix<P> prod = m * mp;
    const P det_prod = prod.at(0, 0) * prod.at(1, 1) - prod.at(0, 1) * prod.at(1, 0);
    const P det_m = a * d - b * c;
    const P det_mp = a2 * d2 - b2 * c2;
    const P lhs = det_prod - (e * e2).pow(2);
    const P rhs = det_mp * (det_m - e * e) + e * e * (det_mp - e2 * e2);
    return poly_equal(lhs, rhs);
}

}  // namespace

Polynomial n4_boundary_equation() {
    const P s = v("S"), t = v("T"), u = v("U"), w = v("V");
    const P ap = v("ap"), am = v("am"), c2 = v("c2"), e2 = v("e2"), k2 = v("k2");
    return c2 * (am * s * u + ap * t * w) + k2 * (ap - am) * e2 * (t * u);
}

Polynomial n4_third_equation_pulled_back() {
    // c2 a3 + k2 e2 c3 with a3, c3 taken from the parametrization of the
    // third class and multiplied through by delta = ap - am.
    const P c2 = v("c2"), e2 = v("e2"), k2 = v("k2");
    const P eq3 = c2 * v("a3") + k2 * e2 * v("c3");
    const Param p;
    std::map<std::string, Polynomial> sub{{"a3", p.a}, {"c3", p.delta * p.tu}};
    return eq3.substitute(sub);
}

bool verify_n4_section_relation() {
    const P pulled = n4_third_equation_pulled_back();
    const P boundary = n4_boundary_equation();
    if (!poly_equal(pulled, boundary)) return false;

    const P s = v("S"), t = v("T"), u = v("U"), w = v("V");
    const P ap = v("ap"), am = v("am"), b1 = v("b1"), c2 = v("c2"), e2 = v("e2"), k2 = v("k2");
    const P s1 = b1 * c2 * c2 * (s * u);
    const P s2 = b1 * c2 * c2 * (t * w);
    const P s3 = b1 * c2 * e2 * (t * u);
    return poly_equal(am * s1 + ap * s2 + k2 * (ap - am) * s3, b1 * c2 * boundary);
}

Polynomial n5_fifth_equation(const Polynomial& a3, const Polynomial& b3,
                             const Polynomial& c3, const Polynomial& d3) {
    const P c2 = v("c2"), e2 = v("e2"), k2 = v("k2"), a4 = v("a4"), c4 = v("c4");
    return c2 * a3 * a4 + k2 * e2 * c3 * a4 + c2 * b3 * c4 + k2 * e2 * d3 * c4;
}

Polynomial n5_expected_factorization() {
    const P s = v("s"), t = v("t"), c2 = v("c2"), e2 = v("e2"), k2 = v("k2");
    const P a4 = v("a4"), c4 = v("c4");
    return (t * a4 + s * c4) * (c2 * s - k2 * e2 * t);
}

bool verify_n5_factorization() {
    const P s = v("s"), t = v("t");
    return poly_equal(n5_fifth_equation(s * t, s * s, P(0) - t * t, P(0) - s * t),
                      n5_expected_factorization());
}

const std::vector<Identity>& identity_registry() {
    static const std::vector<Identity> registry{
        {"closure-trace", "the quadric parametrization satisfies a + d = k e",
         closure_trace_identity},
        {"closure-det", "the quadric parametrization satisfies ad - bc = e^2",
         closure_det_identity},
        {"segre-quadric", "the Segre matrix is singular exactly on the class quadric",
         segre_quadric_identity},
        {"nilpotent-square", "scalar part zero forces a two-step nilpotent block",
         nilpotent_square_identity},
        {"n4-section-relation",
         "the three invariant sections of the n = 4 boundary satisfy the linear relation",
         verify_n4_section_relation},
        {"n5-quintic-factorization",
         "the fifth n = 5 boundary equation factors as (t a4 + s c4)(c2 s - k2 e2 t)",
         verify_n5_factorization},
        {"star-det", "the degenerate product preserves the quadric equation",
         star_det_identity},
    };
    return registry;
}

}  // namespace charvar
