#ifndef CHARVAR_POLYNOMIAL_HPP
#define CHARVAR_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "charvar/rational.hpp"

namespace charvar {

// Sparse multivariate polynomial over Rational.
//
// Canonical form: the variable list is sorted and contains only variables
// that actually occur; terms are keyed by exponent vectors (aligned with the
// variable list) under graded lexicographic order; no zero coefficients are
// stored. Two polynomials are equal iff their canonical forms coincide.
class Polynomial {
public:
    using Exponents = std::vector<unsigned>;

    // Graded lex: lower total degree first, ties broken lexicographically.
    struct GrlexLess {
        bool operator()(const Exponents& a, const Exponents& b) const;
    };
    using TermMap = std::map<Exponents, Rational, GrlexLess>;

    Polynomial() = default;
    Polynomial(const Rational& c);
    Polynomial(int c) : Polynomial(Rational(c)) {}
    static Polynomial var(const std::string& name);

    bool is_zero() const { return terms_.empty(); }
    // Total degree; -1 for the zero polynomial.
    int degree() const;
    const std::vector<std::string>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    Polynomial pow(unsigned k) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Coefficient of the monomial given by name -> exponent (absent names
    // mean exponent 0). Returns 0 if the monomial is not present.
    Rational coeff(const std::map<std::string, unsigned>& mono) const;

    // Full evaluation; the assignment must cover every variable.
    Rational eval(const std::map<std::string, Rational>& assignment) const;

    // Substitutes polynomials for the listed variables; others stay symbolic.
    Polynomial substitute(const std::map<std::string, Polynomial>& sub) const;

    // Sum of the terms of total degree d.
    Polynomial homogeneous_part(unsigned d) const;

    // Renames variables; target names must keep the terms well formed.
    Polynomial rename(const std::map<std::string, std::string>& table) const;

    // Normal form modulo (u*v - 1): each monomial's exponents of u and v are
    // reduced by their minimum. Exact on the Laurent ring Q[u,v]/(uv-1).
    Polynomial reduce_unit_pair(const std::string& u, const std::string& v) const;

    std::string str() const;

private:
    std::vector<std::string> vars_;
    TermMap terms_;

    void add_term(const Exponents& e, const Rational& c);
    void prune();
    static void align(const Polynomial& a, const Polynomial& b,
                      std::vector<std::string>& vars,
                      std::vector<size_t>& map_a, std::vector<size_t>& map_b);
    Polynomial remap(const std::vector<std::string>& vars,
                     const std::vector<size_t>& map) const;
};

// Equality of canonical forms (the variable universes are aligned by
// construction since both sides are pruned).
inline bool poly_equal(const Polynomial& a, const Polynomial& b) { return a == b; }

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace charvar

#endif
