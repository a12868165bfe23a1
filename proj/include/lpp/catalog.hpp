#pragma once

// The ten standard 3D forms, keyed by compatible pairs (k, A):
//   unimodular (k = 0):
//     (1) A = 0          (2) A = I          (3) A = diag(1,1,-1)
//     (4) A = diag(1,1,0) (5) A = diag(1,-1,0) (6) A = diag(1,0,0)
//   k = (0,0,1):
//     (7) A = 0  (8) A = diag(a,a,0)  (9) A = diag(a,-a,0)  (10) A = diag(1,0,0)
// with a > 0; case (9) splits at a = 1/4 (det A2 = -1/16).

#include "lpp/decompose.hpp"
#include "lpp/liealg.hpp"
#include "lpp/matrix.hpp"

#include <stdexcept>

namespace lpp {

/// Case identifiers; 9 is reported with a sub-flag for a = 1/4.
struct CaseId {
    int number = 0;        // 1..10
    bool nine_two = false; // case 9 with a = 1/4

    bool operator==(const CaseId& o) const {
        return number == o.number && nine_two == o.nine_two;
    }
    std::string str() const {
        if (number == 9) return nine_two ? "9_2" : "9_1";
        return std::to_string(number);
    }
};

inline CompatiblePair standard_pair(int case_number, const Rat& a = Rat(1)) {
    auto diag3 = [](Rat x, Rat y, Rat z) {
        return Matrix::diag(Vec{x, y, z});
    };
    Vec k0(3, Rat(0));
    Vec kz{Rat(0), Rat(0), Rat(1)};
    switch (case_number) {
        case 1: return {k0, Matrix(3, 3)};
        case 2: return {k0, Matrix::identity(3)};
        case 3: return {k0, diag3(1, 1, -1)};
        case 4: return {k0, diag3(1, 1, 0)};
        case 5: return {k0, diag3(1, -1, 0)};
        case 6: return {k0, diag3(1, 0, 0)};
        case 7: return {kz, Matrix(3, 3)};
        case 8:
            if (a <= 0) throw std::invalid_argument("case 8 needs a > 0");
            return {kz, diag3(a, a, 0)};
        case 9:
            if (a <= 0) throw std::invalid_argument("case 9 needs a > 0");
            return {kz, diag3(a, -a, 0)};
        case 10: return {kz, diag3(1, 0, 0)};
        default: throw std::invalid_argument("case number out of range");
    }
}

inline StructureConstants standard_algebra(int case_number,
                                           const Rat& a = Rat(1)) {
    return structure_of(pair_to_bivector(standard_pair(case_number, a)));
}

/// Case of a pair already normalized so that k is 0 or (0,0,1). The general
/// normalization (arbitrary k, witness construction) lives in classify.
inline CaseId case_of_normalized_pair(const CompatiblePair& pair) {
    bool k_zero = pair.k[0] == 0 && pair.k[1] == 0 && pair.k[2] == 0;
    if (k_zero) {
        Signature s = signature(pair.a);
        std::size_t r = s.n_plus + s.n_minus;
        if (r == 0) return {1};
        if (r == 3) return {s.n_plus == 3 || s.n_minus == 3 ? 2 : 3};
        if (r == 2) return {s.n_plus == 2 || s.n_minus == 2 ? 4 : 5};
        return {6};
    }
    if (!(pair.k[0] == 0 && pair.k[1] == 0 && pair.k[2] == 1))
        throw std::invalid_argument(
            "case_of_normalized_pair: k must be 0 or (0,0,1)");
    // compatibility A k = 0 kills the third row/column
    Matrix a2 = pair.a.block(0, 0, 2, 2);
    Rat d = det(a2);
    if (a2.is_zero()) return {7};
    if (d > 0) return {8};
    if (d < 0) return {9, d == Rat(-1, 16)};
    return {10};
}

}  // namespace lpp
