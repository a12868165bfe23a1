#pragma once

// Leaf-level verification for Jacobi pairs (E, Lambda): the characteristic
// distribution rank at a point, the inverse 2-form Omega on an open leaf
// (exact rational-function arithmetic, adjugate over determinant), the Lee
// form omega = i_E Omega, and the conformal-symplectic identity
// d Omega + omega ^ Omega = 0.

#include "lpp/decompose.hpp"
#include "lpp/matrix.hpp"
#include "lpp/multivector.hpp"
#include "lpp/polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace lpp {

namespace detail {

/// Skew coefficient matrix of a bivector: L(i,j) = coefficient on d_i ^ d_j.
inline std::vector<std::vector<Polynomial>> bivector_matrix(
    const PolyMultivector& u) {
    unsigned n = u.dimension();
    if (u.degree() != 2)
        throw std::invalid_argument("bivector_matrix: degree-2 input expected");
    std::vector<std::vector<Polynomial>> l(
        n, std::vector<Polynomial>(n, Polynomial(n)));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            if (i != j) l[i][j] = u.coefficient({i, j});
    return l;
}

inline RationalFunction rf_det(
    const std::vector<std::vector<RationalFunction>>& m) {
    std::size_t n = m.size();
    if (n == 1) return m[0][0];
    RationalFunction acc(m[0][0].nvars());
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<RationalFunction>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<RationalFunction> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[i][c]);
            minor.push_back(std::move(row));
        }
        RationalFunction term = m[0][j] * rf_det(minor);
        acc = j % 2 == 0 ? acc + term : acc - term;
    }
    return acc;
}

/// Inverse by adjugate over determinant; the caller checks nondegeneracy.
inline std::vector<std::vector<RationalFunction>> rf_inverse(
    const std::vector<std::vector<RationalFunction>>& m,
    const RationalFunction& d) {
    std::size_t n = m.size();
    std::vector<std::vector<RationalFunction>> inv(
        n, std::vector<RationalFunction>(n, RationalFunction(m[0][0].nvars())));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::vector<RationalFunction>> minor;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == j) continue;
                std::vector<RationalFunction> row;
                for (std::size_t c = 0; c < n; ++c)
                    if (c != i) row.push_back(m[r][c]);
                minor.push_back(std::move(row));
            }
            RationalFunction cof = rf_det(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            inv[i][j] = cof / d;
        }
    return inv;
}

}  // namespace detail

/// Rank of span{Lambda#(dx_i)} + span{E} at the point, exactly.
inline unsigned distribution_rank(const JacobiPair& pair, const Vec& point) {
    unsigned n = pair.lambda.dimension();
    if (point.size() != n)
        throw std::invalid_argument("distribution_rank: wrong point dimension");
    auto l = detail::bivector_matrix(pair.lambda);
    std::vector<Vec> rows;
    for (unsigned i = 0; i < n; ++i) {
        Vec row(n);
        for (unsigned j = 0; j < n; ++j) row[j] = l[i][j].eval(point);
        rows.push_back(std::move(row));
    }
    Vec e(n, Rat(0));
    for (auto& [idx, c] : pair.e.terms()) e[idx[0]] = c.eval(point);
    rows.push_back(std::move(e));
    return static_cast<unsigned>(rank(Matrix::from_rows(rows)));
}

struct LeafForm {
    RatFnForm omega2;  // the 2-form Omega inverse to Lambda
    RatFnForm lee;     // omega = i_E Omega
};

/// Omega = inverse of Lambda's skew matrix; requires Lambda generically
/// nondegenerate (nonzero determinant polynomial).
inline LeafForm leaf_form(const JacobiPair& pair) {
    unsigned n = pair.lambda.dimension();
    auto lp = detail::bivector_matrix(pair.lambda);
    std::vector<std::vector<RationalFunction>> l(
        n, std::vector<RationalFunction>(n, RationalFunction(n)));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) l[i][j] = RationalFunction(lp[i][j]);
    RationalFunction d = detail::rf_det(l);
    if (d.is_zero())
        throw std::invalid_argument(
            "leaf_form: Lambda is degenerate, no open leaf");
    auto inv = detail::rf_inverse(l, d);
    LeafForm out{RatFnForm(n, 2), RatFnForm(n, 1)};
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j)
            out.omega2.add_term({i, j}, inv[i][j]);
    // lee_j = sum_i E_i Omega(e_i, e_j)
    Multivector<RationalFunction> e(n, 1);
    for (auto& [idx, c] : pair.e.terms())
        e.add_term(idx, RationalFunction(c));
    out.lee = contract(e, out.omega2);
    return out;
}

struct ConformalReport {
    bool ok;              // d Omega + omega ^ Omega == 0 identically
    RatFnForm residual;   // d Omega + omega ^ Omega
    RatFnForm d_omega2;   // d Omega itself, for comparison
};

inline ConformalReport conformal_check(const LeafForm& form) {
    RatFnForm d = exterior_d(form.omega2);
    RatFnForm residual = d + form.lee.wedge(form.omega2);
    return {residual.is_zero() ||
                residual == RatFnForm(residual.dimension(), residual.degree()),
            residual, d};
}

}  // namespace lpp
