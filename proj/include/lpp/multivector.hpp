#pragma once

// Multivector fields and differential forms on R^n with coefficients in a
// commutative ring R (polynomials, or rational functions for leaf-level
// work). Provides the volume-form isomorphism phi, the divergence operator
// induced by it, and the Schouten bracket computed through that operator.
//
// Sign convention, fixed once for the whole library: phi(u) contracts the
// canonical volume form dx1^...^dxn with u's factors applied left to right.
// Under this convention
//     phi(pi_f) = df,   div(A-hat) = tr A,   div(1/2 I^k-hat on R^3) = k-hat,
// all three of which are pinned by tests.

#include "lpp/matrix.hpp"
#include "lpp/polynomial.hpp"
#include "lpp/rational.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace lpp {

using IndexTuple = std::vector<unsigned>;  // strictly increasing, 0-based

namespace detail {

/// Sorts an index tuple, tracking the permutation sign; returns 0 for a
/// repeated index, else +-1.
inline int normalize_tuple(IndexTuple& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
        for (std::size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
            std::swap(idx[j], idx[j - 1]);
            sign = -sign;
        }
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (idx[i] == idx[i - 1]) return 0;
    return sign;
}

inline void enumerate_tuples(unsigned n, unsigned p,
                             const std::function<void(const IndexTuple&)>& fn) {
    IndexTuple t(p);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned pos,
                                                      unsigned start) {
        if (pos == p) {
            fn(t);
            return;
        }
        for (unsigned v = start; v < n; ++v) {
            t[pos] = v;
            rec(pos + 1, v + 1);
        }
    };
    rec(0, 0);
}

}  // namespace detail

/// Graded antisymmetric object: common storage for multivectors and forms.
template <class R>
class Graded {
  public:
    Graded() = default;
    Graded(unsigned n, unsigned degree) : n_(n), degree_(degree) {
        assert(degree <= n);
    }

    unsigned dimension() const { return n_; }
    unsigned degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<IndexTuple, R>& terms() const { return terms_; }

    R coefficient(IndexTuple idx) const {
        int s = detail::normalize_tuple(idx);
        if (s == 0) return R(n_);
        auto it = terms_.find(idx);
        if (it == terms_.end()) return R(n_);
        return s == 1 ? it->second : -it->second;
    }

    /// Adds c on the (possibly unsorted) basis tuple idx, with sign tracking.
    void add_term(IndexTuple idx, const R& c) {
        assert(idx.size() == degree_);
        if (c.is_zero()) return;
        int s = detail::normalize_tuple(idx);
        if (s == 0) return;
        R signed_c = s == 1 ? c : -c;
        auto [it, fresh] = terms_.try_emplace(std::move(idx), signed_c);
        if (!fresh) {
            it->second = it->second + signed_c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool operator==(const Graded& o) const {
        if (n_ != o.n_ || degree_ != o.degree_) return false;
        // R equality may be semantic (rational functions), compare termwise
        for (auto& [e, c] : terms_)
            if (!(o.coefficient(e) == c)) return false;
        for (auto& [e, c] : o.terms_)
            if (!(coefficient(e) == c)) return false;
        return true;
    }

  protected:
    unsigned n_ = 0, degree_ = 0;
    std::map<IndexTuple, R> terms_;
};

template <class R>
class Form;

/// Multivector field of fixed degree with coefficients in R.
template <class R>
class Multivector : public Graded<R> {
  public:
    using Graded<R>::Graded;

    Multivector operator+(const Multivector& o) const {
        assert(this->n_ == o.n_ && this->degree_ == o.degree_);
        Multivector r = *this;
        for (auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    Multivector operator-(const Multivector& o) const {
        assert(this->n_ == o.n_ && this->degree_ == o.degree_);
        Multivector r = *this;
        for (auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }
    Multivector operator-() const {
        Multivector r(this->n_, this->degree_);
        for (auto& [e, c] : this->terms_) r.add_term(e, -c);
        return r;
    }
    Multivector operator*(const Rat& s) const {
        Multivector r(this->n_, this->degree_);
        for (auto& [e, c] : this->terms_) r.add_term(e, c * s);
        return r;
    }

    /// Wedge product; returns the zero multivector when degrees overflow n.
    Multivector wedge(const Multivector& o) const {
        assert(this->n_ == o.n_);
        unsigned d = this->degree_ + o.degree_;
        if (d > this->n_) return Multivector(this->n_, this->n_);  // zero
        Multivector r(this->n_, d);
        for (auto& [e1, c1] : this->terms_)
            for (auto& [e2, c2] : o.terms_) {
                IndexTuple e = e1;
                e.insert(e.end(), e2.begin(), e2.end());
                r.add_term(std::move(e), c1 * c2);
            }
        return r;
    }
};

/// Differential form of fixed degree with coefficients in R.
template <class R>
class Form : public Graded<R> {
  public:
    using Graded<R>::Graded;

    Form operator+(const Form& o) const {
        assert(this->n_ == o.n_ && this->degree_ == o.degree_);
        Form r = *this;
        for (auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    Form operator-(const Form& o) const {
        assert(this->n_ == o.n_ && this->degree_ == o.degree_);
        Form r = *this;
        for (auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }
    Form operator-() const {
        Form r(this->n_, this->degree_);
        for (auto& [e, c] : this->terms_) r.add_term(e, -c);
        return r;
    }
    Form operator*(const Rat& s) const {
        Form r(this->n_, this->degree_);
        for (auto& [e, c] : this->terms_) r.add_term(e, c * s);
        return r;
    }

    Form wedge(const Form& o) const {
        assert(this->n_ == o.n_);
        unsigned d = this->degree_ + o.degree_;
        if (d > this->n_) throw std::invalid_argument("wedge: degree overflow");
        Form r(this->n_, d);
        for (auto& [e1, c1] : this->terms_)
            for (auto& [e2, c2] : o.terms_) {
                IndexTuple e = e1;
                e.insert(e.end(), e2.begin(), e2.end());
                r.add_term(std::move(e), c1 * c2);
            }
        return r;
    }
};

// ---------------------------------------------------------------------------
// Interior products.

namespace detail {

/// i_{d/dx_j} applied to a single increasing form tuple: position sign.
inline bool contract_index(const IndexTuple& idx, unsigned j, IndexTuple& out,
                           int& sign) {
    auto it = std::find(idx.begin(), idx.end(), j);
    if (it == idx.end()) return false;
    sign = (it - idx.begin()) % 2 == 0 ? 1 : -1;
    out.clear();
    for (auto v : idx)
        if (v != j) out.push_back(v);
    return true;
}

}  // namespace detail

/// Interior product of the coordinate field d/dx_j into a form.
template <class R>
Form<R> contract_basis(unsigned j, const Form<R>& w) {
    assert(w.degree() >= 1);
    Form<R> r(w.dimension(), w.degree() - 1);
    for (auto& [e, c] : w.terms()) {
        IndexTuple out;
        int s;
        if (!detail::contract_index(e, j, out, s)) continue;
        r.add_term(out, s == 1 ? c : -c);
    }
    return r;
}

/// Interior product of a vector field (degree-1 multivector) into a form.
template <class R>
Form<R> contract(const Multivector<R>& x, const Form<R>& w) {
    assert(x.degree() == 1 && x.dimension() == w.dimension());
    Form<R> r(w.dimension(), w.degree() - 1);
    for (auto& [e, c] : x.terms()) {
        Form<R> part = contract_basis(e[0], w);
        for (auto& [fe, fc] : part.terms()) r.add_term(fe, c * fc);
    }
    return r;
}

// ---------------------------------------------------------------------------
// The volume-form isomorphism and the divergence operator.

/// phi(u) = i_u Omega, contracting factors left to right.
template <class R>
Form<R> phi(const Multivector<R>& u) {
    unsigned n = u.dimension();
    Form<R> r(n, n - u.degree());
    for (auto& [e, c] : u.terms()) {
        // start from Omega = dx1^...^dxn
        IndexTuple cur(n);
        for (unsigned i = 0; i < n; ++i) cur[i] = i;
        int sign = 1;
        for (auto j : e) {
            IndexTuple next;
            int s;
            bool hit = detail::contract_index(cur, j, next, s);
            assert(hit);
            (void)hit;
            sign *= s;
            cur = next;
        }
        r.add_term(cur, sign == 1 ? c : -c);
    }
    return r;
}

/// Inverse of phi.
template <class R>
Multivector<R> phi_inverse(const Form<R>& w) {
    unsigned n = w.dimension();
    unsigned p = n - w.degree();
    Multivector<R> r(n, p);
    for (auto& [e, c] : w.terms()) {
        // complement tuple and the sign phi assigns to it
        IndexTuple comp;
        std::vector<bool> used(n, false);
        for (auto v : e) used[v] = true;
        for (unsigned i = 0; i < n; ++i)
            if (!used[i]) comp.push_back(i);
        IndexTuple cur(n);
        for (unsigned i = 0; i < n; ++i) cur[i] = i;
        int sign = 1;
        for (auto j : comp) {
            IndexTuple next;
            int s;
            detail::contract_index(cur, j, next, s);
            sign *= s;
            cur = next;
        }
        assert(cur == e);
        r.add_term(comp, sign == 1 ? c : -c);
    }
    return r;
}

/// Exterior derivative; R must provide derivative(var).
template <class R>
Form<R> exterior_d(const Form<R>& w) {
    unsigned n = w.dimension();
    if (w.degree() == n) return Form<R>(n, n);  // top forms are closed... and
                                                // their d has no home; zero
    Form<R> r(n, w.degree() + 1);
    for (auto& [e, c] : w.terms())
        for (unsigned i = 0; i < n; ++i) {
            R dc = c.derivative(i);
            if (dc.is_zero()) continue;
            IndexTuple idx{i};
            idx.insert(idx.end(), e.begin(), e.end());
            r.add_term(std::move(idx), dc);
        }
    return r;
}

/// The operator D = (-1)^{p+1} phi^{-1} o d o phi on degree-p multivectors.
/// Rejects degree 0.
template <class R>
Multivector<R> divergence(const Multivector<R>& u) {
    if (u.degree() == 0)
        throw std::invalid_argument("divergence: degree-0 input");
    Multivector<R> r = phi_inverse(exterior_d(phi(u)));
    return u.degree() % 2 == 0 ? -r : r;  // (-1)^{p+1}
}

/// Schouten bracket via [u,v] = D(u^v) - D(u)^v - (-1)^i u^D(v).
/// Rejects degree overflow (i + j - 1 > n).
template <class R>
Multivector<R> schouten(const Multivector<R>& u, const Multivector<R>& v) {
    unsigned i = u.degree(), j = v.degree();
    unsigned n = u.dimension();
    if (i + j < 1 || i + j - 1 > n)
        throw std::invalid_argument("schouten: degree overflow");
    Multivector<R> uv = u.wedge(v);
    Multivector<R> r(n, i + j - 1);
    if (!uv.is_zero() && uv.degree() >= 1) r = divergence(uv);
    if (i >= 1) r = r - divergence(u).wedge(v);
    if (j >= 1) {
        Multivector<R> t = u.wedge(divergence(v));
        r = i % 2 == 0 ? r - t : r + t;  // - (-1)^i u ^ D(v)
    }
    return r;
}

// ---------------------------------------------------------------------------
// Polynomial-coefficient conveniences.

using PolyMultivector = Multivector<Polynomial>;
using PolyForm = Form<Polynomial>;
using RatFnForm = Form<RationalFunction>;

/// Linear vector field A-hat = sum a_ij x_j d/dx_i.
inline PolyMultivector linear_field(const Matrix& a) {
    unsigned n = static_cast<unsigned>(a.rows());
    PolyMultivector v(n, 1);
    for (unsigned i = 0; i < n; ++i) {
        Polynomial c = Polynomial::affine(Rat(0), a.row(i));
        if (!c.is_zero()) v.add_term({i}, c);
    }
    return v;
}

/// Constant vector field k-hat.
inline PolyMultivector constant_field(const Vec& k) {
    unsigned n = static_cast<unsigned>(k.size());
    PolyMultivector v(n, 1);
    for (unsigned i = 0; i < n; ++i)
        if (k[i] != 0) v.add_term({i}, Polynomial::constant(n, k[i]));
    return v;
}

/// The Euler field I-hat = sum x_i d/dx_i.
inline PolyMultivector euler_field(unsigned n) {
    return linear_field(Matrix::identity(n));
}

/// True when every coefficient is affine (degree <= 1).
template <class G>
bool is_affine(const G& g) {
    for (auto& [e, c] : g.terms())
        if (!c.is_affine()) return false;
    return true;
}

/// Pushes a multivector forward along the invertible linear map y = T x.
inline PolyMultivector transform(const PolyMultivector& u, const Matrix& t) {
    unsigned n = u.dimension();
    assert(t.rows() == n && t.cols() == n);
    auto tinv = inverse(t);
    if (!tinv) throw std::invalid_argument("transform: singular matrix");
    PolyMultivector r(n, u.degree());
    for (auto& [e, c] : u.terms()) {
        // coefficients move by substitution x = T^{-1} y
        Polynomial nc = c.compose_linear(*tinv);
        // each d/dx_i becomes sum_j T(j,i) d/dy_j
        std::vector<std::pair<IndexTuple, Rat>> expansion{{{}, Rat(1)}};
        for (auto i : e) {
            std::vector<std::pair<IndexTuple, Rat>> next;
            for (auto& [idx, coef] : expansion)
                for (unsigned jj = 0; jj < n; ++jj) {
                    if (t(jj, i) == 0) continue;
                    IndexTuple ext = idx;
                    ext.push_back(jj);
                    next.push_back({std::move(ext), coef * t(jj, i)});
                }
            expansion = std::move(next);
        }
        for (auto& [idx, coef] : expansion)
            r.add_term(idx, nc * coef);
    }
    return r;
}

}  // namespace lpp
