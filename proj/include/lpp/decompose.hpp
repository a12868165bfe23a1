#pragma once

// Modular decomposition of linear Poisson bivectors,
//     pi = 1/(n-1) I-hat ^ k-hat + Lambda,
// compatible-pair extraction on R^3, and Jacobi-pair extraction.
//
// k is *defined* by D(pi) = k-hat, so the decomposition identity is exact by
// construction; the trace-character relation holds up to one global sign
// (k_div = -k_trace with this library's bracket orientation, pinned by test).

#include "lpp/liealg.hpp"
#include "lpp/matrix.hpp"
#include "lpp/multivector.hpp"

#include <stdexcept>
#include <string>

namespace lpp {

struct Decomposition {
    Vec k;                 // modular vector, D(pi) = k-hat
    PolyMultivector lambda;  // divergence-free linear part
};

struct CompatiblePair {
    Vec k;     // 3 entries
    Matrix a;  // symmetric 3x3, f = x^T A x

    bool compatible() const {
        Vec ak = a * k;
        for (auto& x : ak)
            if (x != 0) return false;
        return true;
    }
};

struct JacobiPair {
    PolyMultivector e;       // (1/(n-1)) k-hat
    PolyMultivector lambda;
};

namespace detail {

inline void require_linear_poisson(const PolyMultivector& pi) {
    if (pi.degree() != 2)
        throw std::invalid_argument("expected a bivector");
    // structure_of rejects affine parts; check_jacobi names the violation
    StructureConstants g = structure_of(pi);
    auto rep = check_jacobi(g);
    if (!rep.ok)
        throw std::invalid_argument(
            "not a Poisson bivector: Jacobi fails on triple (" +
            std::to_string(rep.i + 1) + "," + std::to_string(rep.j + 1) + "," +
            std::to_string(rep.k + 1) + ")");
}

/// Extracts the constant vector k with D(pi) = k-hat.
inline Vec modular_vector(const PolyMultivector& pi) {
    unsigned n = pi.dimension();
    PolyMultivector d = divergence(pi);
    Vec k(n, Rat(0));
    for (auto& [e, c] : d.terms()) {
        if (!c.is_affine() || c.degree() > 0)
            throw std::logic_error("D(pi) of a linear bivector must be constant");
        k[e[0]] = c.constant_term();
    }
    return k;
}

}  // namespace detail

inline Decomposition decompose(const PolyMultivector& pi) {
    detail::require_linear_poisson(pi);
    unsigned n = pi.dimension();
    Vec k = detail::modular_vector(pi);
    Rat inv(1, static_cast<long>(n) - 1);
    PolyMultivector ik = euler_field(n).wedge(constant_field(k)) * inv;
    PolyMultivector lambda = pi - ik;
    // validated, not assumed
    if (!divergence(lambda).is_zero())
        throw std::logic_error("decompose: D(Lambda) != 0");
    if (!(ik + lambda == pi))
        throw std::logic_error("decompose: reconstruction failed");
    return {std::move(k), std::move(lambda)};
}

/// (k, A) with f = x^T A x such that pi = 1/2 I^k-hat + pi_f (R^3 only).
inline CompatiblePair compatible_pair(const PolyMultivector& pi) {
    if (pi.dimension() != 3)
        throw std::invalid_argument("compatible_pair requires dimension 3");
    Decomposition d = decompose(pi);
    // pi_f = g1 d2^d3 + g2 d3^d1 + g3 d1^d2 with g = grad f = 2 A x
    const PolyMultivector& pf = d.lambda;
    Polynomial g1 = pf.coefficient({1, 2});
    Polynomial g2 = -pf.coefficient({0, 2});
    Polynomial g3 = pf.coefficient({0, 1});
    Matrix a(3, 3);
    const Polynomial* g[3] = {&g1, &g2, &g3};
    for (unsigned i = 0; i < 3; ++i) {
        if (g[i]->constant_term() != 0)
            throw std::logic_error("compatible_pair: non-homogeneous gradient");
        for (unsigned j = 0; j < 3; ++j)
            a(i, j) = g[i]->linear_coefficient(j) / 2;
    }
    if (!a.is_symmetric())
        throw std::logic_error("compatible_pair: Hessian not symmetric");
    CompatiblePair pair{std::move(d.k), std::move(a)};
    if (!pair.compatible())
        throw std::logic_error("compatible_pair: A k != 0");
    return pair;
}

/// Quadratic form f = x^T A x as a polynomial on R^3.
inline Polynomial quadratic_form(const Matrix& a) {
    unsigned n = static_cast<unsigned>(a.rows());
    Polynomial f(n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            if (a(i, j) == 0) continue;
            f = f + Polynomial::variable(n, i) * Polynomial::variable(n, j) *
                        a(i, j);
        }
    return f;
}

/// pi_f = f_x d2^d3 + f_y d3^d1 + f_z d1^d2 for a quadratic f on R^3.
inline PolyMultivector gradient_bivector(const Polynomial& f) {
    PolyMultivector pi(3, 2);
    pi.add_term({1, 2}, f.derivative(0));
    pi.add_term({2, 0}, f.derivative(1));
    pi.add_term({0, 1}, f.derivative(2));
    return pi;
}

inline PolyMultivector pair_to_bivector(const CompatiblePair& pair) {
    PolyMultivector ik =
        euler_field(3).wedge(constant_field(pair.k)) * Rat(1, 2);
    return ik + gradient_bivector(quadratic_form(pair.a));
}

/// ((1/(n-1)) k-hat, Lambda); verifies the Jacobi-structure identities
/// [Lambda,Lambda] = 2 E ^ Lambda and [E, Lambda] = 0.
inline JacobiPair jacobi_pair(const PolyMultivector& pi) {
    Decomposition d = decompose(pi);
    unsigned n = pi.dimension();
    PolyMultivector e =
        constant_field(d.k) * Rat(1, static_cast<long>(n) - 1);
    if (!(schouten(d.lambda, d.lambda) == e.wedge(d.lambda) * Rat(2)))
        throw std::logic_error("jacobi_pair: [Lambda,Lambda] != 2 E^Lambda");
    if (!schouten(e, d.lambda).is_zero())
        throw std::logic_error("jacobi_pair: [E,Lambda] != 0");
    return {std::move(e), std::move(d.lambda)};
}

}  // namespace lpp
