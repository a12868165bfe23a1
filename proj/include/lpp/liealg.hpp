#pragma once

// Lie algebras as exact structure constants: Jacobi verification, modular
// character, derived algebra and center, the bijection with linear Poisson
// bivectors, and the codimension-1 unimodular ideal search used by the 4D
// classification.

#include "lpp/matrix.hpp"
#include "lpp/multivector.hpp"
#include "lpp/rational.hpp"

#include <set>
#include <stdexcept>
#include <vector>

namespace lpp {

/// [e_i, e_j] = sum_k C^k_ij e_k, with C^k_ij = -C^k_ji enforced by
/// construction.
class StructureConstants {
  public:
    StructureConstants() = default;
    explicit StructureConstants(unsigned n) : n_(n), c_(n * n * n, Rat(0)) {}

    unsigned dim() const { return n_; }

    const Rat& c(unsigned i, unsigned j, unsigned k) const {
        return c_[(i * n_ + j) * n_ + k];
    }

    /// Sets [e_i, e_j] (and its antisymmetric mirror) component k.
    void set(unsigned i, unsigned j, unsigned k, const Rat& v) {
        if (i == j) {
            if (v != 0)
                throw std::invalid_argument("bracket [e_i,e_i] must vanish");
            return;
        }
        c_[(i * n_ + j) * n_ + k] = v;
        c_[(j * n_ + i) * n_ + k] = -v;
    }

    Vec bracket_basis(unsigned i, unsigned j) const {
        Vec v(n_);
        for (unsigned k = 0; k < n_; ++k) v[k] = c(i, j, k);
        return v;
    }

    Vec bracket(const Vec& x, const Vec& y) const {
        Vec v(n_, Rat(0));
        for (unsigned i = 0; i < n_; ++i)
            for (unsigned j = 0; j < n_; ++j) {
                if (x[i] == 0 || y[j] == 0) continue;
                for (unsigned k = 0; k < n_; ++k)
                    v[k] += x[i] * y[j] * c(i, j, k);
            }
        return v;
    }

    /// Matrix of ad(e_i): column j holds [e_i, e_j].
    Matrix ad_basis(unsigned i) const {
        Matrix m(n_, n_);
        for (unsigned j = 0; j < n_; ++j)
            for (unsigned k = 0; k < n_; ++k) m(k, j) = c(i, j, k);
        return m;
    }

    Matrix ad(const Vec& x) const {
        Matrix m(n_, n_);
        for (unsigned i = 0; i < n_; ++i) {
            if (x[i] == 0) continue;
            m = m + ad_basis(i) * x[i];
        }
        return m;
    }

    bool operator==(const StructureConstants& o) const {
        return n_ == o.n_ && c_ == o.c_;
    }

  private:
    unsigned n_ = 0;
    std::vector<Rat> c_;
};

struct JacobiReport {
    bool ok = true;
    unsigned i = 0, j = 0, k = 0;  // first violating triple when !ok
};

inline JacobiReport check_jacobi(const StructureConstants& g) {
    unsigned n = g.dim();
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j)
            for (unsigned k = j + 1; k < n; ++k)
                for (unsigned l = 0; l < n; ++l) {
                    Rat s(0);
                    for (unsigned m = 0; m < n; ++m)
                        s += g.c(i, j, m) * g.c(m, k, l) +
                             g.c(j, k, m) * g.c(m, i, l) +
                             g.c(k, i, m) * g.c(m, j, l);
                    if (s != 0) return {false, i, j, k};
                }
    return {};
}

/// The trace character xi -> tr(ad xi), as a covector. Zero iff unimodular.
/// Note: the divergence-defined modular vector of the associated bivector is
/// the negative of this (global sign, pinned by a decompose test).
inline Vec modular_character(const StructureConstants& g) {
    Vec k(g.dim());
    for (unsigned i = 0; i < g.dim(); ++i) k[i] = g.ad_basis(i).trace();
    return k;
}

inline bool is_unimodular(const StructureConstants& g) {
    for (auto& x : modular_character(g))
        if (x != 0) return false;
    return true;
}

/// Echelon basis of [g, g].
inline std::vector<Vec> derived_algebra(const StructureConstants& g) {
    std::vector<Vec> gens;
    for (unsigned i = 0; i < g.dim(); ++i)
        for (unsigned j = i + 1; j < g.dim(); ++j)
            gens.push_back(g.bracket_basis(i, j));
    return echelon_basis(gens);
}

/// Echelon basis of the center, the kernel of xi -> ad(xi).
inline std::vector<Vec> center(const StructureConstants& g) {
    unsigned n = g.dim();
    Matrix m(n * n, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            for (unsigned k = 0; k < n; ++k) m(k * n + j, i) = g.c(i, j, k);
    return rank_kernel(m).kernel;
}

// ---------------------------------------------------------------------------
// Linear bivector <-> structure constants.

/// pi = sum_{i<j,k} C^k_ij x_k d_i ^ d_j, so that {x_i, x_j} = sum C^k_ij x_k.
inline PolyMultivector bivector_of(const StructureConstants& g) {
    unsigned n = g.dim();
    PolyMultivector pi(n, 2);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) {
            Polynomial coef(n);
            for (unsigned k = 0; k < n; ++k)
                if (g.c(i, j, k) != 0)
                    coef = coef +
                           Polynomial::variable(n, k) * g.c(i, j, k);
            if (!coef.is_zero()) pi.add_term({i, j}, coef);
        }
    return pi;
}

/// Inverse of bivector_of; rejects bivectors with a constant (affine) part.
inline StructureConstants structure_of(const PolyMultivector& pi) {
    unsigned n = pi.dimension();
    if (pi.degree() != 2)
        throw std::invalid_argument("structure_of: bivector expected");
    StructureConstants g(n);
    for (auto& [e, c] : pi.terms()) {
        if (!c.is_affine() || c.constant_term() != 0)
            throw std::invalid_argument(
                "structure_of: bivector is not linear (affine Poisson input "
                "belongs to the extensions layer)");
        for (unsigned k = 0; k < n; ++k)
            g.set(e[0], e[1], k, c.linear_coefficient(k));
    }
    return g;
}

// ---------------------------------------------------------------------------
// Basis changes and subalgebras.

/// Structure constants in the new basis f_j = sum_i P(i,j) e_i.
inline StructureConstants change_basis(const StructureConstants& g,
                                       const Matrix& p) {
    unsigned n = g.dim();
    auto pinv = inverse(p);
    if (!pinv) throw std::invalid_argument("change_basis: singular matrix");
    StructureConstants h(n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) {
            Vec br = *pinv * g.bracket(p.column(i), p.column(j));
            for (unsigned k = 0; k < n; ++k) h.set(i, j, k, br[k]);
        }
    return h;
}

/// Restricts brackets to the span of the given (independent) vectors; throws
/// when the span is not closed under the bracket.
inline StructureConstants restrict_to(const StructureConstants& g,
                                      const std::vector<Vec>& basis) {
    unsigned m = static_cast<unsigned>(basis.size());
    Matrix b = Matrix::from_columns(basis);
    StructureConstants h(m);
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = i + 1; j < m; ++j) {
            Vec br = g.bracket(basis[i], basis[j]);
            auto coords = solve(b, br);
            if (!coords)
                throw std::invalid_argument(
                    "restrict_to: span not closed under bracket");
            for (unsigned k = 0; k < m; ++k) h.set(i, j, k, (*coords)[k]);
        }
    return h;
}

// ---------------------------------------------------------------------------
// Codimension-1 unimodular ideals of a 4D algebra.

namespace detail {

inline Vec normalize_covector(Vec v) {
    for (auto& x : v)
        if (x != 0) {
            Rat inv = Rat(1) / x;
            for (auto& y : v) y *= inv;
            return v;
        }
    return v;
}

}  // namespace detail

/// All hyperplanes h with [g,g] <= h that are unimodular as Lie algebras,
/// found over a rational candidate family (any hyperplane containing [g,g]
/// is automatically an ideal). Guaranteed nonempty for a valid 4D algebra;
/// an empty result is an internal error and throws.
inline std::vector<std::vector<Vec>> unimodular_hyperplane_ideals(
    const StructureConstants& g) {
    if (g.dim() != 4)
        throw std::invalid_argument("hyperplane ideal search requires dim 4");
    auto derived = derived_algebra(g);
    // covectors annihilating [g,g]
    std::vector<Vec> ann;
    if (derived.empty()) {
        for (unsigned i = 0; i < 4; ++i) {
            Vec e(4, Rat(0));
            e[i] = 1;
            ann.push_back(e);
        }
    } else {
        ann = rank_kernel(Matrix::from_rows(derived)).kernel;
    }
    if (ann.empty())
        throw std::logic_error(
            "no hyperplane contains [g,g]; not a valid 4D Lie algebra");

    std::vector<Vec> candidates = ann;
    Vec k = modular_character(g);
    bool k_zero = true;
    for (auto& x : k) k_zero &= x == 0;
    if (!k_zero) candidates.push_back(k);  // ker k, the Prop-2.3 hyperplane
    static const Rat grid[] = {Rat(1),     Rat(-1),    Rat(2),    Rat(-2),
                               Rat(3),     Rat(-3),    Rat(1, 2), Rat(-1, 2),
                               Rat(1, 3),  Rat(-1, 3), Rat(2, 3), Rat(-2, 3),
                               Rat(3, 2),  Rat(-3, 2)};
    for (std::size_t a = 0; a < ann.size(); ++a)
        for (std::size_t b = a + 1; b < ann.size(); ++b)
            for (auto& t : grid) {
                Vec v = ann[a];
                for (unsigned i = 0; i < 4; ++i) v[i] += t * ann[b][i];
                candidates.push_back(v);
            }
    if (ann.size() >= 3)  // small grid on triples covers the abelian-like case
        for (std::size_t a = 0; a < ann.size(); ++a)
            for (std::size_t b = a + 1; b < ann.size(); ++b)
                for (std::size_t c2 = b + 1; c2 < ann.size(); ++c2)
                    for (int sa : {1, -1})
                        for (int sb : {1, -1}) {
                            Vec v = ann[a];
                            for (unsigned i = 0; i < 4; ++i)
                                v[i] = v[i] + Rat(sa) * ann[b][i] +
                                       Rat(sb) * ann[c2][i];
                            candidates.push_back(v);
                        }

    std::set<Vec> seen;
    std::vector<std::vector<Vec>> result;
    for (auto& raw : candidates) {
        Vec phi = detail::normalize_covector(raw);
        bool zero = true;
        for (auto& x : phi) zero &= x == 0;
        if (zero || !seen.insert(phi).second) continue;
        auto h = rank_kernel(Matrix::from_rows({phi})).kernel;
        if (h.size() != 3) continue;
        StructureConstants sub;
        try {
            sub = restrict_to(g, h);
        } catch (const std::invalid_argument&) {
            continue;  // not closed: phi does not annihilate [g,g] after all
        }
        if (is_unimodular(sub)) result.push_back(h);
    }
    if (result.empty())
        throw std::logic_error(
            "no unimodular hyperplane ideal found; violates the extension "
            "decomposition guarantee");
    return result;
}

}  // namespace lpp
