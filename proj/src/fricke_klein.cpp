#include "charvar/fricke_klein.hpp"

#include <stdexcept>

namespace charvar {

namespace {
void require_sl2(const Matrix<Rational>& m) {
    if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("expected a 2x2 matrix");
    if (m.det() != Rational(1)) throw std::invalid_argument("matrix is not unimodular");
}
}  // namespace

bool verify_relation(const std::vector<Matrix<Rational>>& mats) {
    Matrix<Rational> p = Matrix<Rational>::identity(2);
    for (const auto& m : mats) {
        require_sl2(m);
        p = p * m;
    }
    return p == Matrix<Rational>::identity(2);
}

TraceCoordinates4 fk_coordinates(const Matrix<Rational>& m1, const Matrix<Rational>& m2,
                                 const Matrix<Rational>& m3) {
    require_sl2(m1);
    require_sl2(m2);
    require_sl2(m3);
    TraceCoordinates4 t;
    t.x1 = (m3 * m2).trace();
    t.x2 = (m1 * m3).trace();
    t.x3 = (m2 * m1).trace();
    t.a1 = m1.trace();
    t.a2 = m2.trace();
    t.a3 = m3.trace();
    t.a4 = (m3 * m2 * m1).trace();
    return t;
}

std::array<Rational, 4> theta(const Rational& a1, const Rational& a2, const Rational& a3,
                              const Rational& a4) {
    return {
        a1 * a4 + a2 * a3,
        a2 * a4 + a3 * a1,
        a3 * a4 + a1 * a2,
        a1 * a2 * a3 * a4 + a1 * a1 + a2 * a2 + a3 * a3 + a4 * a4 - Rational(4),
    };
}

Rational fk_cubic(const std::array<Rational, 3>& x, const std::array<Rational, 4>& a) {
    auto th = theta(a[0], a[1], a[2], a[3]);
    return x[0] * x[1] * x[2] + x[0] * x[0] + x[1] * x[1] + x[2] * x[2] - th[0] * x[0] -
           th[1] * x[1] - th[2] * x[2] + th[3];
}

Polynomial fk_cubic_poly(const std::array<Rational, 4>& a) {
    auto th = theta(a[0], a[1], a[2], a[3]);
    Polynomial x1 = Polynomial::var("x1");
    Polynomial x2 = Polynomial::var("x2");
    Polynomial x3 = Polynomial::var("x3");
    return x1 * x2 * x3 + x1 * x1 + x2 * x2 + x3 * x3 - th[0] * x1 - th[1] * x2 - th[2] * x3 +
           Polynomial(th[3]);
}

Polynomial leading_form_at_infinity(const Polynomial& cubic) {
    if (cubic.degree() > 3) throw std::invalid_argument("polynomial degree exceeds 3");
    if (cubic.variables().size() > 3)
        throw std::invalid_argument("polynomial has more than 3 variables");
    Polynomial top = cubic.homogeneous_part(3);
    static const char* kTargets[3] = {"X", "Y", "Z"};
    // Positions follow the sorted variables of the input, so x1, x2, x3 land
    // on X, Y, Z even if some of them drop out of the top form.
    std::map<std::string, std::string> table;
    const auto& vars = cubic.variables();
    for (size_t i = 0; i < vars.size(); ++i) table.emplace(vars[i], kTargets[i]);
    return top.rename(table);
}

}  // namespace charvar
