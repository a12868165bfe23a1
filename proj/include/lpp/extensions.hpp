#pragma once

// 4D algebras from 3D ones:
//   * central extension by a closed constant 2-form omega,
//   * semidirect extension by a derivation D ([x, e4] = D x),
// plus the reductions that map a cocycle to its canonical coset
// representative and a derivation to a canonical form modulo inner
// derivations, automorphism conjugation, and overall scaling (e4 -> t e4
// turns D into t D, so only the ray of D matters).
//
// Constant 2-forms on R^3 are written (alpha, beta, gamma) meaning
// alpha dy^dz + beta dz^dx + gamma dx^dy, as in cohomology.hpp.

#include "lpp/catalog.hpp"
#include "lpp/cohomology.hpp"
#include "lpp/decompose.hpp"
#include "lpp/derivations.hpp"
#include "lpp/liealg.hpp"
#include "lpp/matrix.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpp {

/// D[x,y] = [Dx,y] + [x,Dy] on all basis pairs.
inline bool is_derivation(const StructureConstants& g, const Matrix& d) {
    unsigned n = g.dim();
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) {
            Vec ei(n, Rat(0)), ej(n, Rat(0));
            ei[i] = 1;
            ej[j] = 1;
            Vec lhs = d * g.bracket_basis(i, j);
            Vec r1 = g.bracket(d.column(i), ej);
            Vec r2 = g.bracket(ei, d.column(j));
            for (unsigned k = 0; k < n; ++k)
                if (lhs[k] != r1[k] + r2[k]) return false;
        }
    return true;
}

/// Central extension: [e_i,e_j] = [e_i,e_j]_g + omega(e_i,e_j) e4, e4
/// central. Requires omega closed (so that Jacobi holds); both are checked.
inline StructureConstants central_extend(const StructureConstants& g,
                                         const Vec& omega_abg) {
    if (g.dim() != 3)
        throw std::invalid_argument("central_extend: base must be 3D");
    Vec lex = two_form_to_lex(omega_abg);
    Matrix d2 = coboundary_matrix({Representation::Trivial, g}, 2);
    Vec img = d2 * lex;
    for (auto& x : img)
        if (x != 0)
            throw std::invalid_argument(
                "central_extend: omega is not a 2-cocycle");
    StructureConstants e(4);
    // omega(e1,e2) = gamma, omega(e1,e3) = -beta, omega(e2,e3) = alpha
    Rat w[3][3] = {};
    w[0][1] = omega_abg[2];
    w[0][2] = -omega_abg[1];
    w[1][2] = omega_abg[0];
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = i + 1; j < 3; ++j) {
            for (unsigned k = 0; k < 3; ++k) e.set(i, j, k, g.c(i, j, k));
            e.set(i, j, 3, w[i][j]);
        }
    auto rep = check_jacobi(e);
    if (!rep.ok) throw std::logic_error("central_extend: Jacobi failed");
    return e;
}

/// Semidirect extension by a derivation: [x, e4] = D x for x in g, so
/// ad(e4) restricted to g is -D.
inline StructureConstants derivation_extend(const StructureConstants& g,
                                            const Matrix& d) {
    if (g.dim() != 3 || d.rows() != 3 || d.cols() != 3)
        throw std::invalid_argument("derivation_extend: base must be 3D");
    if (!is_derivation(g, d))
        throw std::invalid_argument(
            "derivation_extend: matrix is not a derivation");
    StructureConstants e(4);
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = i + 1; j < 3; ++j)
            for (unsigned k = 0; k < 3; ++k) e.set(i, j, k, g.c(i, j, k));
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned k = 0; k < 3; ++k) e.set(i, 3, k, d(k, i));
    auto rep = check_jacobi(e);
    if (!rep.ok) throw std::logic_error("derivation_extend: Jacobi failed");
    return e;
}

// ---------------------------------------------------------------------------
// Cocycle reduction.

/// Canonical representative of [omega] in H^2(g): 0 when the class is
/// trivial, else the canonical generator for the base's standard case
/// (dx^dy for the unimodular cases, dz^dx for case 9 at a = 1/4).
/// The base must be in normalized shape (k = 0 or (0,0,1), as produced by
/// the classifier); omega must be closed.
inline Vec reduce_cocycle(const StructureConstants& g, const Vec& omega_abg) {
    if (g.dim() != 3)
        throw std::invalid_argument("reduce_cocycle: base must be 3D");
    Representation triv{Representation::Trivial, g};
    Vec lex = two_form_to_lex(omega_abg);
    Vec img = coboundary_matrix(triv, 2) * lex;
    for (auto& x : img)
        if (x != 0)
            throw std::invalid_argument("reduce_cocycle: not a 2-cocycle");
    // reduce mod the image of delta^1
    Matrix d1 = coboundary_matrix(triv, 1);
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < d1.cols(); ++j) cols.push_back(d1.column(j));
    Vec r = reduce_mod_span(echelon_basis(cols), lex);
    bool zero = true;
    for (auto& x : r) zero &= x == 0;
    if (zero) return Vec(3, Rat(0));
    CaseId cid = case_of_normalized_pair(compatible_pair(bivector_of(g)));
    switch (cid.number) {
        case 1:
        case 4:
        case 5:
        case 6:
            return Vec{Rat(0), Rat(0), Rat(1)};  // dx^dy
        case 9:
            if (cid.nine_two) return Vec{Rat(0), Rat(1), Rat(0)};  // dz^dx
            [[fallthrough]];
        default:
            throw std::logic_error(
                "reduce_cocycle: nontrivial class in a case with H^2 = 0");
    }
}

// ---------------------------------------------------------------------------
// Derivation reduction.

/// Canonical form of a derivation modulo inner derivations, base
/// automorphisms, and scaling. `family` plus `params` is the verdict
/// (equal iff the semidirect extensions are identified by these moves);
/// `rep` is a rational representative when one exists (families with
/// irrational canonical entries carry exact rational descriptors instead).
struct DerivationClass {
    std::string family;
    std::vector<Rat> params;
    std::optional<Matrix> rep;

    bool operator==(const DerivationClass& o) const {
        return family == o.family && params == o.params;
    }
    std::string str() const {
        std::string s = family;
        if (!params.empty()) {
            s += "(";
            for (std::size_t i = 0; i < params.size(); ++i)
                s += (i ? "," : "") + to_string(params[i]);
            s += ")";
        }
        return s;
    }
};

namespace detail {

/// Canonical class of a 2x2 matrix under similarity and nonzero scaling.
/// Families: zero, n2 ([[0,1],[0,0]]), jordan2 ([[1,1],[0,1]]),
/// scalar (I), split (distinct real, param det/tr^2 when tr != 0),
/// antidiag (diag(1,-1): tr = 0, det < 0), rot-pure ([[0,1],[-1,0]]:
/// tr = 0, det > 0), rot (complex pair, param 4 det/tr^2 - 1 > 0).
inline DerivationClass matrix_class_2x2(const Matrix& m) {
    Rat t = m.trace(), d = det(m);
    if (m.is_zero()) return {"zero", {}, Matrix(2, 2)};
    if (t == 0) {
        if (d == 0) return {"n2", {}, Matrix{{Rat(0), Rat(1)},
                                             {Rat(0), Rat(0)}}};
        if (d < 0) return {"antidiag", {}, Matrix{{Rat(1), Rat(0)},
                                                  {Rat(0), Rat(-1)}}};
        return {"rot-pure", {}, Matrix{{Rat(0), Rat(1)},
                                       {Rat(-1), Rat(0)}}};
    }
    Rat q = d / (t * t);
    if (q == Rat(1, 4)) {  // double eigenvalue t/2
        Matrix half = m;
        half(0, 0) -= t / 2;
        half(1, 1) -= t / 2;
        if (half.is_zero())
            return {"scalar", {}, Matrix::identity(2)};
        return {"jordan2", {}, Matrix{{Rat(1), Rat(1)}, {Rat(0), Rat(1)}}};
    }
    if (q < Rat(1, 4)) {
        // distinct real eigenvalues {z, 1-z} after scaling tr -> 1, with
        // z(1-z) = q; rational representative when the split is rational
        DerivationClass out{"split", {q}, std::nullopt};
        Rat disc = 1 - 4 * q;
        if (auto s = rat_sqrt_exact(disc)) {
            Rat z = (1 - *s) / 2;  // z <= 1-z
            out.rep = Matrix::diag(Vec{z, 1 - z});
        }
        return out;
    }
    return {"rot", {4 * q - 1}, std::nullopt};  // [[1,e],[-e,1]], e^2 = param
}

/// Canonical class of a 3x3 matrix under similarity and nonzero scaling
/// (derivations of the abelian algebra). Families:
///   zero, n2, n3 (nilpotent of index 2 / 3),
///   diag   params (l1<=l2<=l3 canonical): diagonalizable, rational spectrum
///   j2     param (a): [[1,1,0],[0,1,0],[0,0,a]]
///   j2-zero: [[1,0,0],[0,0,1],[0,0,0]] (2-block at 0, simple nonzero root)
///   j3: [[1,1,0],[0,1,1],[0,0,1]]
///   quad / rotq  params (t,d,u) normalized: irreducible quadratic
///     x^2 - t x + d (real for quad, complex for rotq) plus rational root u
///   cubic  params: irreducible characteristic polynomial, scale-normalized
inline DerivationClass matrix_class_3x3(const Matrix& m) {
    if (m.is_zero()) return {"zero", {}, Matrix(3, 3)};
    CharRoots roots = rational_char_roots(m);

    if (!roots.residual.empty()) {  // irreducible cubic x^3-c2 x^2+c1 x-c0
        Rat c2 = -roots.residual[2], c1 = roots.residual[1],
            c0 = -roots.residual[0];
        if (c2 != 0)
            return {"cubic", {Rat(1), c1 / (c2 * c2), c0 / (c2 * c2 * c2)},
                    std::nullopt};
        if (c1 != 0)
            return {"cubic",
                    {Rat(0), Rat(c1 > 0 ? 1 : -1),
                     (c0 * c0) / (c1 * c1 * c1)},
                    std::nullopt};
        return {"cubic", {Rat(0), Rat(0), Rat(1)}, std::nullopt};
    }

    if (!roots.quadratic.empty()) {
        // irreducible quadratic (trace t, det d) + rational root u;
        // invariants under scaling s: (s t, s^2 d, s u)
        Rat t = roots.quadratic[0].first.trace;
        Rat d = roots.quadratic[0].first.det;
        Rat u = roots.rational.empty() ? Rat(0) : roots.rational[0].value;
        std::string fam = t * t - 4 * d > 0 ? "quad" : "rotq";
        if (t != 0) return {fam, {Rat(1), d / (t * t), u / t}, std::nullopt};
        if (u != 0)
            return {fam, {Rat(0), d / (u * u), Rat(1)}, std::nullopt};
        // t = 0, u = 0: d scales by squares
        Rat sf(squarefree_part(d));
        return {fam, {Rat(0), sf, Rat(0)}, std::nullopt};
    }

    // rational spectrum
    std::vector<Rat> eigen;
    bool diagonalizable = true;
    for (auto& r : roots.rational) {
        for (int i = 0; i < r.multiplicity; ++i) eigen.push_back(r.value);
        diagonalizable &= r.diagonalizable();
    }
    bool all_zero =
        std::all_of(eigen.begin(), eigen.end(), [](auto& x) { return x == 0; });
    if (all_zero) {
        // nilpotent: index decides the class
        bool index2 = (m * m).is_zero();
        Matrix rep(3, 3);
        rep(0, 1) = 1;
        if (index2) return {"n2", {}, rep};
        rep(1, 2) = 1;
        return {"n3", {}, rep};
    }
    if (diagonalizable) {
        // normalize the spectrum by the best scaling 1/c over nonzero
        // eigenvalues and both signs; pick the lexicographically smallest
        // sorted triple
        std::vector<Rat> best;
        for (auto& r : roots.rational) {
            if (r.value == 0) continue;
            for (int sgn : {1, -1}) {
                Rat c = r.value * sgn;
                std::vector<Rat> cand;
                for (auto& e : eigen) cand.push_back(e / c);
                std::sort(cand.begin(), cand.end());
                if (best.empty() || cand < best) best = cand;
            }
        }
        return {"diag", best, Matrix::diag(best)};
    }
    // a non-diagonalizable rational eigenvalue exists
    for (auto& r : roots.rational) {
        if (r.diagonalizable()) continue;
        std::size_t jordan = r.multiplicity - r.geometric;  // 1 or 2 extra
        if (r.multiplicity == 3 && r.geometric == 1) {
            Matrix rep{{Rat(1), Rat(1), Rat(0)},
                       {Rat(0), Rat(1), Rat(1)},
                       {Rat(0), Rat(0), Rat(1)}};
            return {"j3", {}, rep};
        }
        (void)jordan;
        // 2-block at r.value; remaining eigenvalue u
        Rat u(0);
        for (auto& s : roots.rational) {
            if (s.value == r.value && s.multiplicity == r.multiplicity)
                continue;
            u = s.value;
        }
        if (r.multiplicity == 3) u = r.value;  // geometric 2: block + 1-cell
        if (r.value == 0) {
            // 2-block at zero, u != 0 (else nilpotent, handled above)
            Matrix rep(3, 3);
            rep(0, 0) = 1;
            rep(1, 2) = 1;
            return {"j2-zero", {}, rep};
        }
        Rat a = u / r.value;
        Matrix rep{{Rat(1), Rat(1), Rat(0)},
                   {Rat(0), Rat(1), Rat(0)},
                   {Rat(0), Rat(0), a}};
        return {"j2", {a}, rep};
    }
    throw std::logic_error("matrix_class_3x3: unreachable");
}

inline DerivationClass embed_2x2(const DerivationClass& c2) {
    DerivationClass out{"h-" + c2.family, c2.params, std::nullopt};
    if (c2.rep) {
        Matrix rep(3, 3);
        rep(0, 0) = c2.rep->trace();
        for (unsigned i = 0; i < 2; ++i)
            for (unsigned j = 0; j < 2; ++j) rep(i + 1, j + 1) = (*c2.rep)(i, j);
        out.rep = rep;
    }
    return out;
}

}  // namespace detail

/// Canonical class of a derivation of a normalized 3D base (k = 0 or
/// (0,0,1), A diagonal with the case's sign pattern, as produced by the
/// classifier's witness). Cases:
///   1: full similarity/scaling classification of the matrix
///   2,3: every derivation is inner, so the class is zero
///   4,5,8,9(a != 1/4): one outer direction; nonzero reduces to diag(1,1,0)
///   6: the induced 2x2 map on g/z(g) up to similarity and scaling
///   7: the traceless part of the 2x2 action on span(e1,e2)
///   9(a = 1/4), 10: nonzero classes reported by coset coordinates
inline DerivationClass reduce_derivation(const StructureConstants& g,
                                         const Matrix& d) {
    if (g.dim() != 3)
        throw std::invalid_argument("reduce_derivation: base must be 3D");
    if (!is_derivation(g, d))
        throw std::invalid_argument(
            "reduce_derivation: matrix is not a derivation");
    DerivationSpace space = derivation_space(g);
    std::vector<Vec> inner;
    for (auto& m : space.inner) inner.push_back(detail::matrix_to_vec(m));
    Vec r = reduce_mod_span(echelon_basis(inner), detail::matrix_to_vec(d));
    bool zero = true;
    for (auto& x : r) zero &= x == 0;
    if (zero) return {"zero", {}, Matrix(3, 3)};
    Matrix rm = detail::vec_to_matrix(r, 3);

    CaseId cid = case_of_normalized_pair(compatible_pair(bivector_of(g)));
    // 1- or 2-dimensional outer space (case 10 and case 9 at a = 1/4): the
    // verdict is the ray of the coset representative, normalized so the
    // first nonzero entry is 1
    auto outer_ray = [&]() -> DerivationClass {
        Vec scaled = r;
        Rat lead(0);
        for (auto& x : scaled)
            if (x != 0) {
                lead = x;
                break;
            }
        for (auto& x : scaled) x /= lead;
        return {"outer", scaled, detail::vec_to_matrix(scaled, 3)};
    };
    switch (cid.number) {
        case 1:
            return detail::matrix_class_3x3(rm);
        case 2:
        case 3:
            throw std::logic_error(
                "reduce_derivation: outer class in a case where all "
                "derivations are inner");
        case 4:
        case 5:
        case 8:
        case 9: {
            if (cid.number == 9 && cid.nine_two) return outer_ray();
            // the single outer direction is the class of diag(1,1,0);
            // verified, not assumed
            Matrix d110 = Matrix::diag(Vec{Rat(1), Rat(1), Rat(0)});
            Vec rr = reduce_mod_span(echelon_basis(inner),
                                     detail::matrix_to_vec(d110));
            bool proportional = false;
            for (std::size_t i = 0; i < r.size() && !proportional; ++i)
                if (rr[i] != 0) {
                    Rat lam = r[i] / rr[i];
                    proportional = true;
                    for (std::size_t j = 0; j < r.size(); ++j)
                        proportional &= r[j] == lam * rr[j];
                }
            if (!proportional)
                throw std::logic_error(
                    "reduce_derivation: outer class not proportional to "
                    "diag(1,1,0)");
            return {"diag110", {}, d110};
        }
        case 6:
            // center is span(e1); the class is decided by the induced map
            // on g/z(g), the lower-right 2x2 block
            return detail::embed_2x2(
                detail::matrix_class_2x2(rm.block(1, 1, 2, 2)));
        case 7: {
            // Aut acts as GL(2) on span(e1,e2); mod inner only the traceless
            // part of the upper-left block survives
            Matrix n = rm.block(0, 0, 2, 2);
            Rat half_tr = n.trace() / 2;
            n(0, 0) -= half_tr;
            n(1, 1) -= half_tr;
            auto c2 = detail::matrix_class_2x2(n);
            auto out = detail::embed_2x2(c2);
            if (c2.rep) {
                Matrix rep(3, 3);
                for (unsigned i = 0; i < 2; ++i)
                    for (unsigned j = 0; j < 2; ++j)
                        rep(i, j) = (*c2.rep)(i, j);
                out.rep = rep;
            }
            return out;
        }
        case 10:
            return outer_ray();
        default:
            throw std::logic_error("reduce_derivation: unknown case");
    }
}

}  // namespace lpp
