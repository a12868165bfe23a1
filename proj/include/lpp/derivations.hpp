#pragma once

// Derivation spaces. The generic Leibniz linear system is the definition in
// every dimension; the 3D compatible-pair criterion (D* k = 0 and
// D A + A D* = tr(D) A) and the skew-parameterized inner derivations
// D = (2A + 1/2 k-bar) B serve as independent cross-checks.

#include "lpp/decompose.hpp"
#include "lpp/liealg.hpp"
#include "lpp/matrix.hpp"

#include <stdexcept>
#include <vector>

namespace lpp {

struct DerivationSpace {
    std::vector<Matrix> all;    // basis of Der(g)
    std::vector<Matrix> inner;  // echelon basis of {ad xi}
    std::size_t outer_dimension() const { return all.size() - inner.size(); }
};

namespace detail {

inline Matrix vec_to_matrix(const Vec& v, unsigned n) {
    Matrix m(n, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) m(i, j) = v[i * n + j];
    return m;
}

inline Vec matrix_to_vec(const Matrix& m) {
    unsigned n = static_cast<unsigned>(m.rows());
    Vec v(n * n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) v[i * n + j] = m(i, j);
    return v;
}

}  // namespace detail

/// Solves the Leibniz system D[e_i,e_j] = [D e_i, e_j] + [e_i, D e_j] over
/// the n^2 matrix entries; inner basis is the echelon span of {ad e_i}.
inline DerivationSpace derivation_space(const StructureConstants& g) {
    unsigned n = g.dim();
    // rows: one equation per (i<j, component k); unknowns D_{ab}
    std::vector<Vec> rows;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j)
            for (unsigned k = 0; k < n; ++k) {
                Vec row(n * n, Rat(0));
                // D [e_i,e_j] component k: sum_m C^m_ij D_{km}
                for (unsigned m = 0; m < n; ++m)
                    row[k * n + m] += g.c(i, j, m);
                // -[D e_i, e_j]: D e_i = sum_a D_{ai} e_a
                for (unsigned a = 0; a < n; ++a)
                    row[a * n + i] -= g.c(a, j, k);
                // -[e_i, D e_j]
                for (unsigned a = 0; a < n; ++a)
                    row[a * n + j] -= g.c(i, a, k);
                rows.push_back(std::move(row));
            }
    auto kernel = rank_kernel(Matrix::from_rows(rows)).kernel;
    DerivationSpace out;
    for (auto& v : kernel) out.all.push_back(detail::vec_to_matrix(v, n));
    std::vector<Vec> inner_vecs;
    for (unsigned i = 0; i < n; ++i)
        inner_vecs.push_back(detail::matrix_to_vec(g.ad_basis(i)));
    for (auto& v : echelon_basis(inner_vecs))
        out.inner.push_back(detail::vec_to_matrix(v, n));
    return out;
}

/// 3D criterion: D is a derivation iff D* k = 0 and D A + A D* = tr(D) A.
inline bool is_derivation_pair_criterion(const CompatiblePair& pair,
                                         const Matrix& d) {
    Matrix dt = d.transpose();
    Vec dk = dt * pair.k;
    for (auto& x : dk)
        if (x != 0) return false;
    return d * pair.a + pair.a * dt == pair.a * d.trace();
}

/// Cross-product matrix: [v]x w = v x w.
inline Matrix cross_matrix(const Vec& v) {
    return Matrix{{Rat(0), -v[2], v[1]},
                  {v[2], Rat(0), -v[0]},
                  {-v[1], v[0], Rat(0)}};
}

/// Inner derivation from a skew matrix: D = (2A + 1/2 k-bar) B, where k-bar
/// is the skew map decided by phi^{-1} k (the cross-product matrix of k in
/// the library's phi convention). For B = cross_matrix(xi) this is ad(xi).
inline Matrix inner_from_skew(const CompatiblePair& pair, const Matrix& b) {
    if (!b.is_skew())
        throw std::invalid_argument("inner_from_skew: B must be skew");
    return (pair.a * 2 + cross_matrix(pair.k) * Rat(1, 2)) * b;
}

inline std::size_t outer_dimension(const StructureConstants& g) {
    return derivation_space(g).outer_dimension();
}

/// True when d lies in the span of the inner derivations.
inline bool is_inner(const DerivationSpace& space, const Matrix& d) {
    std::vector<Vec> vecs;
    for (auto& m : space.inner) vecs.push_back(detail::matrix_to_vec(m));
    std::size_t before = echelon_basis(vecs).size();
    vecs.push_back(detail::matrix_to_vec(d));
    return echelon_basis(vecs).size() == before;
}

}  // namespace lpp
