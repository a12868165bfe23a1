#pragma once

// Dense exact-rational matrices: echelon reduction, rank/kernel, linear
// solves, determinants, characteristic polynomials and their factorization
// over Q, and Sylvester signatures. Everything is exact; results such as
// kernel bases come back in reduced echelon form so downstream comparisons
// are canonical.

#include "lpp/rational.hpp"

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <map>
#include <optional>
#include <vector>

namespace lpp {

using Vec = std::vector<Rat>;

class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rat>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (auto& r : rows) {
            assert(r.size() == cols_);
            for (auto& x : r) a_.push_back(x);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix diag(const Vec& d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    static Matrix from_columns(const std::vector<Vec>& cols) {
        Matrix m(cols.empty() ? 0 : cols[0].size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = cols[j][i];
        return m;
    }

    static Matrix from_rows(const std::vector<Vec>& rows) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), Rat(0));
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    bool is_zero() const {
        for (auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    bool is_skew() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i; j < cols_; ++j)
                if ((*this)(i, j) != -(*this)(j, i)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator+(const Matrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
        return r;
    }

    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.a_) x = -x;
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        assert(cols_ == o.rows_);
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rat& x = (*this)(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r(i, j) += x * o(k, j);
            }
        return r;
    }

    Matrix operator*(const Rat& s) const {
        Matrix r = *this;
        for (auto& x : r.a_) x *= s;
        return r;
    }

    Vec operator*(const Vec& v) const {
        assert(cols_ == v.size());
        Vec r(rows_, Rat(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    Vec row(std::size_t i) const {
        Vec r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }

    Vec column(std::size_t j) const {
        Vec c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    Matrix block(std::size_t i0, std::size_t j0, std::size_t r,
                 std::size_t c) const {
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = (*this)(i0 + i, j0 + j);
        return m;
    }

    Rat trace() const {
        assert(rows_ == cols_);
        Rat t(0);
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

  private:
    Matrix(std::size_t rows, std::size_t cols, Rat fill)
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

inline Matrix operator*(const Rat& s, const Matrix& m) { return m * s; }

// ---------------------------------------------------------------------------
// Echelon reduction.

/// In-place Gauss-Jordan to reduced row echelon form. Returns pivot columns.
inline std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(r, j));
        Rat inv = Rat(1) / m(r, c);
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rat f = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(Matrix m) { return rref(m).size(); }

/// Reduced-echelon basis of the span of the given vectors (zero rows dropped).
inline std::vector<Vec> echelon_basis(const std::vector<Vec>& vectors) {
    if (vectors.empty()) return {};
    Matrix m = Matrix::from_rows(vectors);
    auto pivots = rref(m);
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis.push_back(m.row(i));
    return basis;
}

/// Canonical coset representative of v modulo the span of a *reduced
/// echelon* basis: subtracts each basis vector times v's entry at its pivot.
inline Vec reduce_mod_span(const std::vector<Vec>& echelon, Vec v) {
    for (auto& b : echelon) {
        std::size_t pivot = 0;
        while (pivot < b.size() && b[pivot] == 0) ++pivot;
        if (pivot == b.size()) continue;
        Rat c = v[pivot] / b[pivot];
        if (c == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= c * b[j];
    }
    return v;
}

struct RankKernel {
    std::size_t rank;
    std::vector<Vec> kernel;  // reduced echelon form, canonical
};

/// Rank and an exact nullspace basis; rank + |kernel| = cols.
inline RankKernel rank_kernel(const Matrix& m) {
    Matrix r = m;
    auto pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> kernel;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vec v(m.cols(), Rat(0));
        v[c] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, c);
        kernel.push_back(std::move(v));
    }
    return {pivots.size(), echelon_basis(kernel)};
}

/// Solves m x = b exactly; nullopt when inconsistent.
inline std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    assert(b.size() == m.rows());
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vec x(m.cols(), Rat(0));
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = aug(i, m.cols());
    return x;
}

inline Rat det(Matrix m) {
    assert(m.rows() == m.cols());
    Rat d(1);
    std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return Rat(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        Rat inv = Rat(1) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            Rat f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
    assert(m.rows() == m.cols());
    std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    return aug.block(0, n, n, n);
}

// ---------------------------------------------------------------------------
// Signature of a symmetric matrix.

struct Signature {
    std::size_t n_plus, n_minus, n_zero;
};

/// Sylvester signature by exact congruence diagonalization.
/// Throws std::invalid_argument on a non-symmetric input.
inline Signature signature(const Matrix& sym) {
    if (!sym.is_symmetric())
        throw std::invalid_argument("signature: matrix is not symmetric");
    Matrix a = sym;
    std::size_t n = a.rows();
    auto add_rowcol = [&](std::size_t dst, std::size_t src, const Rat& f) {
        for (std::size_t j = 0; j < n; ++j) a(dst, j) += f * a(src, j);
        for (std::size_t i = 0; i < n; ++i) a(i, dst) += f * a(i, src);
    };
    auto swap_rowcol = [&](std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
        for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
    };
    Signature s{0, 0, 0};
    for (std::size_t i = 0; i < n; ++i) {
        if (a(i, i) == 0) {
            std::size_t p = i + 1;
            while (p < n && a(p, p) == 0) ++p;
            if (p < n) {
                swap_rowcol(i, p);
            } else {
                // all remaining diagonal entries vanish; create one
                std::size_t q = n;
                for (std::size_t j = i + 1; j < n && q == n; ++j)
                    if (a(i, j) != 0) q = j;
                if (q == n) {
                    ++s.n_zero;
                    continue;
                }
                add_rowcol(i, q, Rat(1));
            }
        }
        Rat piv = a(i, i);
        for (std::size_t j = i + 1; j < n; ++j)
            if (a(i, j) != 0) add_rowcol(j, i, -a(i, j) / piv);
        piv > 0 ? ++s.n_plus : ++s.n_minus;
    }
    return s;
}

struct CongruenceDiag {
    Matrix p;  // invertible, with p^T * a * p diagonal
    Vec diag;  // the diagonal entries of p^T * a * p
};

/// Exact congruence diagonalization: returns P with P^T A P diagonal.
inline CongruenceDiag congruence_diagonalize(const Matrix& sym) {
    if (!sym.is_symmetric())
        throw std::invalid_argument(
            "congruence_diagonalize: matrix is not symmetric");
    Matrix a = sym;
    std::size_t n = a.rows();
    Matrix p = Matrix::identity(n);
    auto add_rowcol = [&](std::size_t dst, std::size_t src, const Rat& f) {
        for (std::size_t j = 0; j < n; ++j) a(dst, j) += f * a(src, j);
        for (std::size_t i = 0; i < n; ++i) a(i, dst) += f * a(i, src);
        for (std::size_t i = 0; i < n; ++i) p(i, dst) += f * p(i, src);
    };
    auto swap_rowcol = [&](std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
        for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
        for (std::size_t r = 0; r < n; ++r) std::swap(p(r, i), p(r, j));
    };
    for (std::size_t i = 0; i < n; ++i) {
        if (a(i, i) == 0) {
            std::size_t q = i + 1;
            while (q < n && a(q, q) == 0) ++q;
            if (q < n) {
                swap_rowcol(i, q);
            } else {
                q = n;
                for (std::size_t j = i + 1; j < n && q == n; ++j)
                    if (a(i, j) != 0) q = j;
                if (q == n) continue;  // row and column already zero
                add_rowcol(i, q, Rat(1));
            }
        }
        Rat piv = a(i, i);
        for (std::size_t j = i + 1; j < n; ++j)
            if (a(i, j) != 0) add_rowcol(j, i, -a(i, j) / piv);
    }
    Vec d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i);
    return {std::move(p), std::move(d)};
}

// ---------------------------------------------------------------------------
// Characteristic polynomial and rational factorization.

/// Monic characteristic polynomial det(xI - m), coefficients low to high,
/// computed by the Faddeev-LeVerrier recursion.
inline std::vector<Rat> char_poly(const Matrix& m) {
    assert(m.rows() == m.cols());
    std::size_t n = m.rows();
    std::vector<Rat> c(n + 1, Rat(0));
    c[n] = 1;
    Matrix M = Matrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        M = m * M;
        Rat ck = -M.trace() / Rat(k);
        c[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) M(i, i) += ck;
    }
    return c;
}

namespace detail {

inline Int poly_eval_int(const std::vector<Int>& p, const Int& num,
                         const Int& den) {
    // p(num/den) * den^deg
    Int acc = 0, pw = 1;
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * num + p[i] * pw;
        if (i) pw *= den;
    }
    return acc;
}

inline void factor_int(Int n, std::map<Int, int>& out) {
    n = boost::multiprecision::abs(n);
    for (Int p = 2; p * p <= n && p < 100000; ++p) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n > 1) ++out[n];  // treated as prime; candidates past 1e10 do not
                          // occur in the intended input range
}

inline std::vector<Int> divisors(const Int& n) {
    std::map<Int, int> f;
    factor_int(n, f);
    std::vector<Int> divs{1};
    for (auto& [p, e] : f) {
        std::size_t sz = divs.size();
        Int pw = 1;
        for (int i = 0; i < e; ++i) {
            pw *= p;
            for (std::size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pw);
        }
    }
    return divs;
}

}  // namespace detail

struct QuadraticFactor {
    Rat trace, det;  // x^2 - trace*x + det, irreducible over Q
    bool operator==(const QuadraticFactor& o) const {
        return trace == o.trace && det == o.det;
    }
};

struct CharRoots {
    struct RationalRoot {
        Rat value;
        int multiplicity;
        std::size_t geometric;  // dim ker(m - value I)
        bool diagonalizable() const {
            return geometric == static_cast<std::size_t>(multiplicity);
        }
    };
    std::vector<RationalRoot> rational;
    std::vector<std::pair<QuadraticFactor, int>> quadratic;
    std::vector<Rat> residual;  // leftover factor, low-to-high, monic; empty
                                // when fully split into the above
};

namespace detail {

/// Rational roots of a rational polynomial (low-to-high coeffs), with
/// multiplicity; deflates the polynomial in place.
inline std::vector<std::pair<Rat, int>> extract_rational_roots(
    std::vector<Rat>& p) {
    std::vector<std::pair<Rat, int>> roots;
    auto degree = [&] {
        std::size_t d = p.size();
        while (d > 1 && p[d - 1] == 0) --d;
        p.resize(d);
        return d - 1;
    };
    auto deflate = [&](const Rat& r) {
        // synthetic division by (x - r); exact when r is a root
        std::size_t d = degree();
        std::vector<Rat> q(d, Rat(0));
        Rat carry = p[d];
        for (std::size_t i = d; i-- > 0;) {
            q[i] = carry;
            carry = p[i] + r * carry;
        }
        assert(carry == 0);
        p = q;
    };
    while (degree() >= 1) {
        std::size_t d = degree();
        // roots at zero
        if (p[0] == 0) {
            int mult = 0;
            while (p[0] == 0 && degree() >= 1) {
                deflate(Rat(0));
                ++mult;
            }
            roots.push_back({Rat(0), mult});
            continue;
        }
        if (d == 1) {
            roots.push_back({-p[0] / p[1], 1});
            p = {Rat(1)};
            break;
        }
        if (d == 2) {
            Rat disc = p[1] * p[1] - 4 * p[2] * p[0];
            auto s = rat_sqrt_exact(disc);
            if (!s) break;  // irreducible quadratic
            Rat r1 = (-p[1] + *s) / (2 * p[2]);
            Rat r2 = (-p[1] - *s) / (2 * p[2]);
            deflate(r1);
            deflate(r2);
            roots.push_back({r1, 1});
            if (r2 == r1)
                roots.back().second = 2;
            else
                roots.push_back({r2, 1});
            continue;
        }
        // clear denominators, search p/q candidates
        Int lcm = 1;
        for (auto& c : p) lcm = boost::multiprecision::lcm(lcm, rat_den(c));
        std::vector<Int> ip(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) {
            Rat c = p[i] * Rat(lcm);
            assert(rat_den(c) == 1);
            ip[i] = rat_num(c);
        }
        auto nds = divisors(ip.front());
        auto dds = divisors(ip.back());
        std::optional<Rat> found;
        for (auto& nd : nds) {
            for (auto& dd : dds) {
                for (int s = 1; s >= -1 && !found; s -= 2) {
                    Int num = s * nd;
                    if (gcd(boost::multiprecision::abs(num), dd) != 1) continue;
                    if (poly_eval_int(ip, num, dd) == 0) found = Rat(num, dd);
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
        int mult = 0;
        std::vector<Rat> probe = p;
        while (true) {
            // test whether *found still divides
            Rat val(0), pw(1);
            for (auto& c : p) {
                val += c * pw;
                pw *= *found;
            }
            if (val != 0) break;
            deflate(*found);
            ++mult;
            if (degree() == 0) break;
        }
        roots.push_back({*found, mult});
    }
    // merge duplicate root records
    std::vector<std::pair<Rat, int>> merged;
    for (auto& r : roots) {
        bool hit = false;
        for (auto& m : merged)
            if (m.first == r.first) {
                m.second += r.second;
                hit = true;
            }
        if (!hit) merged.push_back(r);
    }
    return merged;
}

/// Attempts to split a monic rational quartic (no rational roots) into two
/// monic rational quadratics. Returns the two (trace, det) pairs on success.
inline std::optional<std::pair<QuadraticFactor, QuadraticFactor>>
split_quartic(const std::vector<Rat>& p) {
    assert(p.size() == 5 && p[4] == 1);
    // depress: x = y - a/4
    Rat a = p[3], b = p[2], c = p[1], d = p[0];
    Rat sh = -a / 4;
    Rat P = b - Rat(3) * a * a / 8;
    Rat Q = c + a * a * a / 8 - a * b / 2;
    Rat R = d - Rat(3) * rat_pow(a, 4) / 256 + a * a * b / 16 - a * c / 4;
    auto lift = [&](const Rat& t, const Rat& q) {
        // (y^2 + t y + q) with y = x - sh
        return QuadraticFactor{-(t - 2 * sh), q - t * sh + sh * sh};
    };
    if (Q == 0) {  // biquadratic: y^4 + P y^2 + R = (y^2+q)(y^2+s)
        Rat disc = P * P - 4 * R;
        auto sq = rat_sqrt_exact(disc);
        if (!sq) return std::nullopt;
        Rat q = (P + *sq) / 2, s = (P - *sq) / 2;
        return std::make_pair(lift(Rat(0), q), lift(Rat(0), s));
    }
    // resolvent cubic in z = t^2: z^3 + 2P z^2 + (P^2-4R) z - Q^2 = 0
    std::vector<Rat> res{-Q * Q, P * P - 4 * R, 2 * P, Rat(1)};
    auto zroots = extract_rational_roots(res);
    for (auto& [z, mult] : zroots) {
        if (z <= 0) continue;
        auto t = rat_sqrt_exact(z);
        if (!t) continue;
        Rat q = (P + z - Q / *t) / 2;
        Rat s = (P + z + Q / *t) / 2;
        return std::make_pair(lift(*t, q), lift(-*t, s));
    }
    return std::nullopt;
}

}  // namespace detail

/// Factors the characteristic polynomial of m over the rationals. Rational
/// roots come with algebraic and geometric multiplicity; irreducible
/// quadratics as (trace, det) pairs; anything beyond that is reported by its
/// coefficient list.
inline CharRoots rational_char_roots(const Matrix& m) {
    std::vector<Rat> p = char_poly(m);
    CharRoots out;
    auto roots = detail::extract_rational_roots(p);
    for (auto& [r, mult] : roots) {
        Matrix shifted = m;
        for (std::size_t i = 0; i < m.rows(); ++i) shifted(i, i) -= r;
        out.rational.push_back({r, mult, rank_kernel(shifted).kernel.size()});
    }
    std::sort(out.rational.begin(), out.rational.end(),
              [](auto& a, auto& b) { return a.value < b.value; });
    std::size_t d = p.size() - 1;
    if (d == 0) return out;
    if (d == 2) {
        out.quadratic.push_back({{-p[1] / p[2], p[0] / p[2]}, 1});
        return out;
    }
    if (d == 4) {
        std::vector<Rat> monic(5);
        for (int i = 0; i < 5; ++i) monic[i] = p[i] / p[4];
        if (auto split = detail::split_quartic(monic)) {
            if (split->first == split->second)
                out.quadratic.push_back({split->first, 2});
            else {
                out.quadratic.push_back({split->first, 1});
                out.quadratic.push_back({split->second, 1});
            }
            return out;
        }
    }
    for (auto& c : p) c /= p.back();
    out.residual = p;
    return out;
}

}  // namespace lpp
