#pragma once

// Shared deterministic random generators for the test suite. Everything is
// seeded, so failures reproduce exactly.

#include "lpp/classify.hpp"
#include "lpp/decompose.hpp"
#include "lpp/liealg.hpp"
#include "lpp/matrix.hpp"
#include "lpp/multivector.hpp"

#include <random>

namespace testutil {

struct Rng {
    std::mt19937 gen{20240817};

    int pick(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(gen);
    }

    lpp::Rat rat(int lo = -3, int hi = 3, int maxden = 3) {
        return lpp::Rat(pick(lo, hi), pick(1, maxden));
    }

    lpp::Vec vec(unsigned n, int lo = -3, int hi = 3) {
        lpp::Vec v(n);
        for (auto& x : v) x = rat(lo, hi);
        return v;
    }

    lpp::Matrix matrix(unsigned n) {
        lpp::Matrix m(n, n);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) m(i, j) = rat();
        return m;
    }

    lpp::Matrix symmetric(unsigned n) {
        lpp::Matrix m(n, n);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i; j < n; ++j) m(i, j) = m(j, i) = rat();
        return m;
    }

    lpp::Matrix invertible(unsigned n) {
        for (;;) {
            lpp::Matrix m = matrix(n);
            if (lpp::det(m) != 0) return m;
        }
    }

    /// Random compatible pair: a standard form pushed through a random
    /// invertible change of coordinates (covers every orbit type).
    lpp::CompatiblePair pair() {
        static const int cases[] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 9, 10};
        int c = cases[pick(0, 10)];
        lpp::Rat a(1);
        if (c == 8 || c == 9) {
            a = lpp::Rat(pick(1, 4), pick(1, 4));
        }
        return lpp::act(invertible(3), lpp::standard_pair(c, a));
    }

    /// Random linear-coefficient vector field on R^n.
    lpp::PolyMultivector linear_field(unsigned n) {
        return lpp::linear_field(matrix(n)) +
               lpp::constant_field(vec(n, -2, 2));
    }
};

/// Lie bracket of two polynomial vector fields, computed directly:
/// [X,Y]_i = sum_j X_j d_j Y_i - Y_j d_j X_i.
inline lpp::PolyMultivector lie_bracket(const lpp::PolyMultivector& x,
                                        const lpp::PolyMultivector& y) {
    unsigned n = x.dimension();
    lpp::PolyMultivector r(n, 1);
    for (unsigned i = 0; i < n; ++i) {
        lpp::Polynomial ci(n);
        for (unsigned j = 0; j < n; ++j) {
            ci = ci + x.coefficient({j}) * y.coefficient({i}).derivative(j) -
                 y.coefficient({j}) * x.coefficient({i}).derivative(j);
        }
        if (!ci.is_zero()) r.add_term({i}, ci);
    }
    return r;
}

/// Wedge of a list of vector fields.
inline lpp::PolyMultivector wedge_all(
    const std::vector<lpp::PolyMultivector>& xs) {
    lpp::PolyMultivector r = xs.at(0);
    for (std::size_t i = 1; i < xs.size(); ++i) r = r.wedge(xs[i]);
    return r;
}

/// Schouten bracket of decomposable multivectors via the classical formula
/// [X_1^...^X_p, Y_1^...^Y_q] =
///     sum_{i,j} (-1)^{i+j} [X_i,Y_j] ^ X_(without i) ^ Y_(without j),
/// an oracle independent of the divergence-operator implementation.
inline lpp::PolyMultivector schouten_oracle(
    const std::vector<lpp::PolyMultivector>& xs,
    const std::vector<lpp::PolyMultivector>& ys) {
    unsigned n = xs.at(0).dimension();
    unsigned deg =
        static_cast<unsigned>(xs.size() + ys.size()) - 1;
    lpp::PolyMultivector acc(n, deg);
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < ys.size(); ++j) {
            std::vector<lpp::PolyMultivector> factors;
            factors.push_back(lie_bracket(xs[i], ys[j]));
            for (std::size_t t = 0; t < xs.size(); ++t)
                if (t != i) factors.push_back(xs[t]);
            for (std::size_t t = 0; t < ys.size(); ++t)
                if (t != j) factors.push_back(ys[t]);
            lpp::PolyMultivector term = wedge_all(factors);
            // (-1)^{i+j} from the double sum (1-based indices cancel mod 2)
            // and (-1)^{p-1} from moving [X_i,Y_j] to the front
            if ((i + j + xs.size() - 1) % 2 == 1) term = -term;
            acc = acc + term;
        }
    return acc;
}

}  // namespace testutil
