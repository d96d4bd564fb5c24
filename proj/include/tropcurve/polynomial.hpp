#pragma once

#include "tropcurve/common.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace tropcurve {

// Exponent vector over a fixed variable set plus a rational exponent for the
// homogenizing variable h (Puiseux exponents are rationals).
struct Monomial {
    std::vector<int> x;
    Rat h = Rat(0);

    bool operator==(const Monomial& o) const { return x == o.x && h == o.h; }
    bool operator<(const Monomial& o) const {
        if (x != o.x) return x < o.x;
        return h < o.h;
    }
    int total_x_degree() const {
        int d = 0;
        for (int e : x) d += e;
        return d;
    }
};

inline bool coeff_is_zero(const Rat& r) { return r == Rat(0); }

template <typename Coeff>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Coeff>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Coeff& c) {
        if (coeff_is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second = it->second + c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    static Polynomial variable(int nvars, int var, const Coeff& one) {
        Polynomial p(nvars);
        Monomial m;
        m.x.assign(nvars, 0);
        m.x[var] = 1;
        p.add_term(m, one);
        return p;
    }

    Polynomial operator+(const Polynomial& o) const {
        Polynomial out = *this;
        for (const auto& [m, c] : o.terms_) out.add_term(m, c);
        return out;
    }

    Polynomial operator-() const {
        Polynomial out(nvars_);
        for (const auto& [m, c] : terms_) out.add_term(m, -c);
        return out;
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const {
        Polynomial out(nvars_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) {
                Monomial m;
                m.x.resize(nvars_);
                for (int i = 0; i < nvars_; ++i) m.x[i] = ma.x[i] + mb.x[i];
                m.h = ma.h + mb.h;
                out.add_term(m, ca * cb);
            }
        return out;
    }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    // var := 0
    Polynomial substitute_zero(int var) const {
        Polynomial out(nvars_);
        for (const auto& [m, c] : terms_)
            if (m.x[var] == 0) out.add_term(m, c);
        return out;
    }

    // var := replacement (a polynomial over the same variables)
    Polynomial substitute(int var, const Polynomial& replacement) const {
        Polynomial out(nvars_);
        for (const auto& [m, c] : terms_) {
            Polynomial term(nvars_);
            Monomial base = m;
            int e = base.x[var];
            base.x[var] = 0;
            term.add_term(base, c);
            for (int i = 0; i < e; ++i) term = term * replacement;
            out = out + term;
        }
        return out;
    }

private:
    int nvars_ = 0;
    std::map<Monomial, Coeff> terms_;
};

using PolyQ = Polynomial<Rat>;

// Flips the sign so the lexicographically least monomial has a positive
// coefficient (golden-test stability).
inline PolyQ normalize_sign(const PolyQ& p) {
    if (p.is_zero()) return p;
    if (p.terms().begin()->second < Rat(0)) return -p;
    return p;
}

inline std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
    std::ostringstream out;
    bool any = false;
    for (size_t i = 0; i < m.x.size(); ++i) {
        if (m.x[i] == 0) continue;
        any = true;
        out << names[i];
        if (m.x[i] > 1) out << "^" << m.x[i];
    }
    if (m.h != Rat(0)) {
        any = true;
        out << "h";
        if (m.h != Rat(1)) out << "^" << rat_to_string(m.h);
    }
    if (!any) out << "1";
    return out.str();
}

// Terms printed in descending monomial order, e.g.
// "x_{F1}^2 + x_{F1}x_{F2} + ... "
inline std::string poly_to_string(const PolyQ& p, const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Rat c = it->second;
        bool neg = c < Rat(0);
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        Rat mag = neg ? -c : c;
        bool constant = it->first.total_x_degree() == 0 && it->first.h == Rat(0);
        if (mag != Rat(1) || constant) {
            bool frac = mag.denominator() != 1;
            if (frac) out << "(" << rat_to_string(mag) << ")";
            else out << rat_to_string(mag);
        }
        if (!constant) out << monomial_to_string(it->first, names);
    }
    return out.str();
}

}  // namespace tropcurve
