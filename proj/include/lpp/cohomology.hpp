#pragma once

// Chevalley-Eilenberg cochain complexes C^k = Hom(^k g, V) for the trivial
// and adjoint representations, with the coboundary
//   (delta f)(x_1,...,x_{k+1}) = sum_i (-1)^i rho(x_i) f(...x_i-hat...)
//                              + sum_{i<j} (-1)^{i+j} f([x_i,x_j], ...),
// generic coboundary matrices in the lexicographic wedge basis, Betti
// numbers, and the closed-form 3D coboundary formulas used as an
// independent cross-check.

#include "lpp/decompose.hpp"
#include "lpp/liealg.hpp"
#include "lpp/matrix.hpp"

#include <functional>
#include <vector>

namespace lpp {

struct Representation {
    enum Kind { Trivial, Adjoint };
    Kind kind;
    StructureConstants algebra;

    unsigned value_dim() const {
        return kind == Trivial ? 1 : algebra.dim();
    }
    /// rho(e_i) acting on V.
    Matrix rho(unsigned i) const {
        if (kind == Trivial) return Matrix(1, 1);
        return algebra.ad_basis(i);
    }
};

namespace detail {

inline std::vector<IndexTuple> wedge_basis(unsigned n, unsigned k) {
    std::vector<IndexTuple> basis;
    enumerate_tuples(n, k, [&](const IndexTuple& t) { basis.push_back(t); });
    return basis;
}

inline std::size_t tuple_index(const std::vector<IndexTuple>& basis,
                               const IndexTuple& t) {
    auto it = std::lower_bound(basis.begin(), basis.end(), t);
    assert(it != basis.end() && *it == t);
    return static_cast<std::size_t>(it - basis.begin());
}

}  // namespace detail

/// One degree of the complex: the wedge basis and the matrix of delta^k.
struct CochainSpace {
    unsigned degree;
    std::vector<IndexTuple> basis;  // tensored with V in basis order
    Matrix coboundary;              // delta^k : C^k -> C^{k+1}
};

/// Matrix of delta^k; cochains are indexed by (wedge tuple) x (value index),
/// flattened as tuple_index * dim V + value_index.
inline Matrix coboundary_matrix(const Representation& rep, unsigned k) {
    unsigned n = rep.algebra.dim();
    unsigned dv = rep.value_dim();
    auto dom = detail::wedge_basis(n, k);
    auto cod = detail::wedge_basis(n, k + 1);
    Matrix delta(cod.size() * dv, dom.size() * dv);

    for (std::size_t jc = 0; jc < dom.size(); ++jc) {
        const IndexTuple& J = dom[jc];
        for (unsigned v = 0; v < dv; ++v) {
            std::size_t col = jc * dv + v;
            for (std::size_t rt = 0; rt < cod.size(); ++rt) {
                const IndexTuple& T = cod[rt];
                // first sum: (-1)^i rho(x_i) f(T minus position i); degree 0
                // is delta^0 v (xi) = rho(xi) v
                for (unsigned i = 0; i < k + 1; ++i) {
                    IndexTuple rest;
                    for (unsigned t = 0; t < k + 1; ++t)
                        if (t != i) rest.push_back(T[t]);
                    int s = detail::normalize_tuple(rest);
                    if (s == 0 || rest != J) continue;
                    int sgn = (i % 2 == 0 ? 1 : -1) * s;
                    Matrix act = rep.rho(T[i]);
                    for (unsigned w = 0; w < dv; ++w) {
                        if (act(w, v) == 0) continue;
                        delta(rt * dv + w, col) +=
                            Rat(sgn) * act(w, v);
                    }
                }
                // second sum: (-1)^{i+j} f([x_i,x_j], rest)
                for (unsigned i = 0; i < k + 1; ++i)
                    for (unsigned j = i + 1; j < k + 1; ++j) {
                        IndexTuple rest;
                        for (unsigned t = 0; t < k + 1; ++t)
                            if (t != i && t != j) rest.push_back(T[t]);
                        Vec br = rep.algebra.bracket_basis(T[i], T[j]);
                        int base_sgn = ((i + 1) + (j + 1)) % 2 == 0 ? 1 : -1;
                        for (unsigned c = 0; c < n; ++c) {
                            if (br[c] == 0) continue;
                            IndexTuple full{c};
                            full.insert(full.end(), rest.begin(), rest.end());
                            int s = detail::normalize_tuple(full);
                            if (s == 0 || full != J) continue;
                            delta(rt * dv + v, col) +=
                                Rat(base_sgn * s) * br[c];
                        }
                    }
            }
        }
    }
    return delta;
}

inline CochainSpace cochain_space(const Representation& rep, unsigned k) {
    return {k, detail::wedge_basis(rep.algebra.dim(), k),
            coboundary_matrix(rep, k)};
}

struct BettiData {
    std::vector<std::size_t> h;                   // dim H^0 .. dim H^n
    std::vector<std::vector<Vec>> cocycles;       // echelon basis per degree
    std::vector<std::vector<Vec>> coboundaries;   // echelon basis per degree
};

inline BettiData betti(const Representation& rep) {
    unsigned n = rep.algebra.dim();
    BettiData out;
    std::vector<Matrix> delta(n + 1);
    for (unsigned k = 0; k <= n; ++k) delta[k] = coboundary_matrix(rep, k);
    for (unsigned k = 0; k <= n; ++k) {
        auto rk = rank_kernel(delta[k]);
        std::vector<Vec> cocycle = rk.kernel;
        std::vector<Vec> cobound;
        if (k > 0) {
            std::vector<Vec> cols;
            for (std::size_t j = 0; j < delta[k - 1].cols(); ++j)
                cols.push_back(delta[k - 1].column(j));
            cobound = echelon_basis(cols);
        }
        out.h.push_back(cocycle.size() - cobound.size());
        out.cocycles.push_back(std::move(cocycle));
        out.coboundaries.push_back(std::move(cobound));
    }
    return out;
}

// ---------------------------------------------------------------------------
// 3D closed-form coboundaries (trivial coefficients), as an oracle.
// Constant 2-forms on R^3 are written (alpha, beta, gamma) meaning
// alpha dy^dz + beta dz^dx + gamma dx^dy.

/// delta eta = 1/2 k ^ eta - 2 Phi(A eta) for a covector eta, returned in
/// (alpha, beta, gamma) coordinates.
inline Vec delta1_special(const CompatiblePair& pair, const Vec& eta) {
    const Vec& k = pair.k;
    Vec a_eta = pair.a * eta;
    // (k ^ eta)_{ij} = k_i eta_j - k_j eta_i; Phi(e_1)=dy^dz, Phi(e_2)=dz^dx,
    // Phi(e_3)=dx^dy under the library convention
    Vec out(3);
    out[0] = (k[1] * eta[2] - k[2] * eta[1]) / 2 - 2 * a_eta[0];  // dy^dz
    out[1] = (k[2] * eta[0] - k[0] * eta[2]) / 2 - 2 * a_eta[1];  // dz^dx
    out[2] = (k[0] * eta[1] - k[1] * eta[0]) / 2 - 2 * a_eta[2];  // dx^dy
    return out;
}

/// delta omega = k ^ omega for a 2-form (alpha,beta,gamma); the coefficient
/// of dx^dy^dz.
inline Rat delta2_special(const CompatiblePair& pair, const Vec& omega) {
    return pair.k[0] * omega[0] + pair.k[1] * omega[1] + pair.k[2] * omega[2];
}

/// Converts (alpha,beta,gamma) to coordinates in the lexicographic wedge
/// basis {(1,2),(1,3),(2,3)} used by coboundary_matrix.
inline Vec two_form_to_lex(const Vec& abg) {
    return {abg[2], -abg[1], abg[0]};
}

inline Vec lex_to_two_form(const Vec& lex) {
    return {lex[2], -lex[1], lex[0]};
}

}  // namespace lpp
