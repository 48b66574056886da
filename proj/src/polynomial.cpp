#include "charvar/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace charvar {

bool Polynomial::GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da < db;
    // Same degree: lexicographically larger exponent vector is the larger monomial.
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial::Polynomial(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

Polynomial Polynomial::var(const std::string& name) {
    if (name.empty()) throw std::invalid_argument("empty variable name");
    Polynomial p;
    p.vars_ = {name};
    p.terms_.emplace(Exponents{1}, Rational(1));
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
        d = std::max(d, t);
    }
    return d;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::prune() {
    size_t nv = vars_.size();
    std::vector<bool> used(nv, false);
    for (const auto& [e, c] : terms_)
        for (size_t i = 0; i < nv; ++i)
            if (e[i] > 0) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;

    std::vector<std::string> nvars;
    std::vector<size_t> keep;
    for (size_t i = 0; i < nv; ++i)
        if (used[i]) {
            keep.push_back(i);
            nvars.push_back(vars_[i]);
        }
    TermMap nterms;
    for (const auto& [e, c] : terms_) {
        Exponents ne(keep.size());
        for (size_t i = 0; i < keep.size(); ++i) ne[i] = e[keep[i]];
        nterms.emplace(std::move(ne), c);
    }
    vars_ = std::move(nvars);
    terms_ = std::move(nterms);
}

void Polynomial::align(const Polynomial& a, const Polynomial& b,
                       std::vector<std::string>& vars,
                       std::vector<size_t>& map_a, std::vector<size_t>& map_b) {
    vars.clear();
    std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                   std::back_inserter(vars));
    auto build = [&vars](const std::vector<std::string>& own, std::vector<size_t>& map) {
        map.resize(own.size());
        for (size_t i = 0; i < own.size(); ++i)
            map[i] = std::lower_bound(vars.begin(), vars.end(), own[i]) - vars.begin();
    };
    build(a.vars_, map_a);
    build(b.vars_, map_b);
}

Polynomial Polynomial::remap(const std::vector<std::string>& vars,
                             const std::vector<size_t>& map) const {
    Polynomial r;
    r.vars_ = vars;
    for (const auto& [e, c] : terms_) {
        Exponents ne(vars.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) ne[map[i]] = e[i];
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<std::string> vars;
    std::vector<size_t> ma, mb;
    Polynomial::align(a, b, vars, ma, mb);
    Polynomial ra = a.remap(vars, ma);
    Polynomial rb = b.remap(vars, mb);
    for (const auto& [e, c] : rb.terms_) ra.add_term(e, c);
    ra.prune();
    return ra;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::vector<std::string> vars;
    std::vector<size_t> ma, mb;
    Polynomial::align(a, b, vars, ma, mb);
    Polynomial ra = a.remap(vars, ma);
    Polynomial rb = b.remap(vars, mb);
    Polynomial r;
    r.vars_ = vars;
    for (const auto& [ea, ca] : ra.terms_)
        for (const auto& [eb, cb] : rb.terms_) {
            Polynomial::Exponents e(vars.size());
            for (size_t i = 0; i < vars.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    r.prune();
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    if (c.is_zero()) return Polynomial();
    Polynomial r(p);
    for (auto& [e, v] : r.terms_) v *= c;
    return r;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial r(Rational(1));
    Polynomial base(*this);
    while (k > 0) {
        if (k & 1u) r = r * base;
        base = base * base;
        k >>= 1u;
    }
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

Rational Polynomial::coeff(const std::map<std::string, unsigned>& mono) const {
    for (const auto& [name, k] : mono)
        if (k > 0 && !std::binary_search(vars_.begin(), vars_.end(), name)) return Rational(0);
    Exponents e(vars_.size(), 0);
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = mono.find(vars_[i]);
        if (it != mono.end()) e[i] = it->second;
    }
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::eval(const std::map<std::string, Rational>& assignment) const {
    std::vector<Rational> vals(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = assignment.find(vars_[i]);
        if (it == assignment.end())
            throw std::invalid_argument("missing variable: " + vars_[i]);
        vals[i] = it->second;
    }
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) t *= vals[i];
        total += t;
    }
    return total;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& sub) const {
    Polynomial total;
    for (const auto& [e, c] : terms_) {
        Polynomial term(c);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = sub.find(vars_[i]);
            Polynomial base = (it != sub.end()) ? it->second : var(vars_[i]);
            term = term * base.pow(e[i]);
        }
        total += term;
    }
    return total;
}

Polynomial Polynomial::homogeneous_part(unsigned d) const {
    Polynomial r;
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0u) == d) r.terms_.emplace(e, c);
    r.prune();
    return r;
}

Polynomial Polynomial::rename(const std::map<std::string, std::string>& table) const {
    std::map<std::string, Polynomial> sub;
    for (const auto& [from, to] : table) sub.emplace(from, var(to));
    return substitute(sub);
}

Polynomial Polynomial::reduce_unit_pair(const std::string& u, const std::string& v) const {
    auto iu = std::lower_bound(vars_.begin(), vars_.end(), u);
    auto iv = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (iu == vars_.end() || *iu != u || iv == vars_.end() || *iv != v) return *this;
    size_t pu = iu - vars_.begin(), pv = iv - vars_.begin();
    Polynomial r;
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        Exponents ne(e);
        unsigned m = std::min(ne[pu], ne[pv]);
        ne[pu] -= m;
        ne[pv] -= m;
        r.add_term(ne, c);
    }
    r.prune();
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Display in descending graded lex order.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        bool has_vars = std::any_of(e.begin(), e.end(), [](unsigned k) { return k > 0; });
        if (!has_vars || a != Rational(1)) {
            os << a.str();
            if (has_vars) os << "*";
        }
        bool fv = true;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!fv) os << "*";
            fv = false;
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

}  // namespace charvar
