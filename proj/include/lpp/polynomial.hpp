#pragma once

// Sparse multivariate polynomials over the rationals and the rational
// functions built from them. Rational-function equality is decided by
// cross-multiplication; quotients stay unreduced apart from scalar and
// monomial content, which keeps a full multivariate gcd out of the picture.

#include "lpp/matrix.hpp"
#include "lpp/rational.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace lpp {

class Polynomial {
  public:
    using Expo = std::vector<unsigned>;  // one exponent per variable

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rat& c) {
        Polynomial p(nvars);
        if (c != 0) p.terms_[Expo(nvars, 0)] = c;
        return p;
    }

    /// The coordinate monomial x_var (0-based).
    static Polynomial variable(std::size_t nvars, std::size_t var) {
        assert(var < nvars);
        Polynomial p(nvars);
        Expo e(nvars, 0);
        e[var] = 1;
        p.terms_[e] = 1;
        return p;
    }

    /// c0 + sum_i lin[i] * x_i.
    static Polynomial affine(const Rat& c0, const Vec& lin) {
        Polynomial p(lin.size());
        if (c0 != 0) p.terms_[Expo(lin.size(), 0)] = c0;
        for (std::size_t i = 0; i < lin.size(); ++i) {
            if (lin[i] == 0) continue;
            Expo e(lin.size(), 0);
            e[i] = 1;
            p.terms_[e] = lin[i];
        }
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Expo, Rat>& terms() const { return terms_; }

    int degree() const {
        int d = -1;
        for (auto& [e, c] : terms_) {
            int t = 0;
            for (auto x : e) t += static_cast<int>(x);
            d = std::max(d, t);
        }
        return d;
    }

    bool is_affine() const { return degree() <= 1; }

    Rat coefficient(const Expo& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    Rat constant_term() const { return coefficient(Expo(nvars_, 0)); }

    Rat linear_coefficient(std::size_t var) const {
        Expo e(nvars_, 0);
        e[var] = 1;
        return coefficient(e);
    }

    void add_term(const Expo& e, const Rat& c) {
        assert(e.size() == nvars_);
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial operator+(const Polynomial& o) const {
        assert(nvars_ == o.nvars_);
        Polynomial r = *this;
        for (auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const {
        assert(nvars_ == o.nvars_);
        Polynomial r = *this;
        for (auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        assert(nvars_ == o.nvars_);
        Polynomial r(nvars_);
        for (auto& [e1, c1] : terms_)
            for (auto& [e2, c2] : o.terms_) {
                Expo e(nvars_);
                for (std::size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
                r.add_term(e, c1 * c2);
            }
        return r;
    }

    Polynomial operator*(const Rat& s) const {
        Polynomial r(nvars_);
        if (s == 0) return r;
        r.terms_ = terms_;
        for (auto& [e, c] : r.terms_) c *= s;
        return r;
    }

    bool operator==(const Polynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    Polynomial derivative(std::size_t var) const {
        Polynomial r(nvars_);
        for (auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Expo d = e;
            --d[var];
            r.add_term(d, c * Rat(e[var]));
        }
        return r;
    }

    Rat eval(const Vec& x) const {
        assert(x.size() == nvars_);
        Rat acc(0);
        for (auto& [e, c] : terms_) {
            Rat t = c;
            for (std::size_t i = 0; i < nvars_; ++i)
                for (unsigned k = 0; k < e[i]; ++k) t *= x[i];
            acc += t;
        }
        return acc;
    }

    /// Substitutes x_i -> sum_j m(i,j) x_j (linear change of coordinates).
    Polynomial compose_linear(const Matrix& m) const {
        assert(m.rows() == nvars_ && m.cols() == nvars_);
        Polynomial r(nvars_);
        for (auto& [e, c] : terms_) {
            Polynomial t = Polynomial::constant(nvars_, c);
            for (std::size_t i = 0; i < nvars_; ++i)
                for (unsigned k = 0; k < e[i]; ++k)
                    t = t * Polynomial::affine(Rat(0), m.row(i));
            r = r + t;
        }
        return r;
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [e, c] : terms_) {
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            Rat a = lpp::abs(c);
            bool has_var = false;
            for (auto x : e) has_var |= x > 0;
            if (a != 1 || !has_var) os << lpp::to_string(a);
            bool star = a != 1 || !has_var;
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                if (star) os << "*";
                star = true;
                if (i < names.size()) os << names[i];
                else os << "x" << i + 1;
                if (e[i] > 1) os << "^" << e[i];
            }
        }
        return os.str();
    }

  private:
    std::size_t nvars_ = 0;
    std::map<Expo, Rat> terms_;
};

inline Polynomial operator*(const Rat& s, const Polynomial& p) { return p * s; }

/// Quotient of polynomials with a not-identically-zero denominator.
class RationalFunction {
  public:
    RationalFunction() = default;
    explicit RationalFunction(std::size_t nvars)
        : num_(nvars), den_(Polynomial::constant(nvars, Rat(1))) {}
    RationalFunction(Polynomial num, Polynomial den)
        : num_(std::move(num)), den_(std::move(den)) {
        assert(num_.nvars() == den_.nvars());
        if (den_.is_zero())
            throw std::invalid_argument("rational function: zero denominator");
        normalize();
    }
    /* implicit */ RationalFunction(const Polynomial& p)
        : num_(p), den_(Polynomial::constant(p.nvars(), Rat(1))) {}

    static RationalFunction constant(std::size_t nvars, const Rat& c) {
        return RationalFunction(Polynomial::constant(nvars, c));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    std::size_t nvars() const { return num_.nvars(); }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator+(const RationalFunction& o) const {
        return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RationalFunction operator-(const RationalFunction& o) const {
        return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RationalFunction operator*(const RationalFunction& o) const {
        return RationalFunction(num_ * o.num_, den_ * o.den_);
    }
    RationalFunction operator*(const Rat& s) const {
        return RationalFunction(num_ * s, den_);
    }
    RationalFunction operator/(const RationalFunction& o) const {
        if (o.num_.is_zero())
            throw std::invalid_argument("rational function: division by zero");
        return RationalFunction(num_ * o.den_, den_ * o.num_);
    }

    /// Equality by cross-multiplication.
    bool operator==(const RationalFunction& o) const {
        return (num_ * o.den_ - o.num_ * den_).is_zero();
    }

    /// Quotient rule; denominators accumulate unreduced.
    RationalFunction derivative(std::size_t var) const {
        return RationalFunction(
            num_.derivative(var) * den_ - num_ * den_.derivative(var),
            den_ * den_);
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        Polynomial one = Polynomial::constant(nvars(), Rat(1));
        if (den_ == one) return num_.str(names);
        return "(" + num_.str(names) + ")/(" + den_.str(names) + ")";
    }

  private:
    // strips common scalar content and the common monomial factor
    void normalize() {
        if (num_.is_zero()) {
            den_ = Polynomial::constant(den_.nvars(), Rat(1));
            return;
        }
        std::size_t n = num_.nvars();
        Polynomial::Expo common(n, ~0u);
        for (auto* p : {&num_, &den_})
            for (auto& [e, c] : p->terms())
                for (std::size_t i = 0; i < n; ++i)
                    common[i] = std::min(common[i], e[i]);
        bool any = false;
        for (auto x : common) any |= x > 0;
        auto strip = [&](const Polynomial& p) {
            Polynomial q(n);
            for (auto& [e, c] : p.terms()) {
                Polynomial::Expo d(n);
                for (std::size_t i = 0; i < n; ++i) d[i] = e[i] - common[i];
                q.add_term(d, c);
            }
            return q;
        };
        if (any) {
            num_ = strip(num_);
            den_ = strip(den_);
        }
        // make the denominator's leading (lex-first) coefficient positive
        // and the numerator's content integral-free of common factors
        Rat lead = den_.terms().begin()->second;
        num_ = num_ * (Rat(1) / lead);
        den_ = den_ * (Rat(1) / lead);
    }

    Polynomial num_, den_;
};

inline RationalFunction operator*(const Rat& s, const RationalFunction& f) {
    return f * s;
}

}  // namespace lpp
