#pragma once

// Deterministic text rendering of library objects, plus the regenerable
// reference tables shipped under data/golden: the canonical 3D forms, their
// cohomology and derivation data, canonical extension classes, a 4D
// classification round trip, and affine constant parts. Every table is
// computed from first principles on fixed sample grids, so a pristine
// checkout regenerates the golden files byte-for-byte.

#include "lpp/classify.hpp"
#include "lpp/cohomology.hpp"
#include "lpp/derivations.hpp"
#include "lpp/extensions.hpp"
#include "lpp/liealg.hpp"

#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace lpp {

inline std::vector<std::string> coord_names(unsigned n) {
    static const char* xyzw[] = {"x", "y", "z", "w"};
    std::vector<std::string> names;
    for (unsigned i = 0; i < n; ++i)
        names.push_back(n <= 4 ? xyzw[i] : "x" + std::to_string(i + 1));
    return names;
}

inline std::string format(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + to_string(v[i]);
    return s + ")";
}

inline std::string format(const Matrix& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j)
            s += (j ? ", " : "") + to_string(m(i, j));
        s += "]";
    }
    return s + "]";
}

/// Linear combination over labelled basis vectors, e.g. "e1 - 2 e3".
inline std::string format_combo(const Vec& v, const std::string& prefix) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        std::string coef = v[i] == 1    ? ""
                           : v[i] == -1 ? "-"
                                        : to_string(v[i]) + " ";
        if (!s.empty()) {
            if (!coef.empty() && coef[0] == '-') {
                s += " - ";
                coef = coef.substr(1);
                if (coef == "-") coef = "";
            } else {
                s += " + ";
            }
        }
        s += coef + prefix + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

inline std::string format_brackets(const StructureConstants& g) {
    std::string s;
    for (unsigned i = 0; i < g.dim(); ++i)
        for (unsigned j = i + 1; j < g.dim(); ++j) {
            Vec b = g.bracket_basis(i, j);
            bool any = false;
            for (auto& x : b) any |= x != 0;
            if (!any) continue;
            if (!s.empty()) s += "; ";
            s += "[e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) +
                 "] = " + format_combo(b, "e");
        }
    return s.empty() ? "abelian" : s;
}

template <class R>
std::string format_multivector(const Multivector<R>& u) {
    auto names = coord_names(u.dimension());
    std::string s;
    for (auto& [e, c] : u.terms()) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str(names) + ")";
        for (auto i : e) s += " d" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

template <class R>
std::string format_form(const Form<R>& w) {
    auto names = coord_names(w.dimension());
    std::string s;
    for (auto& [e, c] : w.terms()) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str(names) + ")";
        bool first = true;
        for (auto i : e) {
            s += (first ? " " : "^") + ("d" + names[i]);
            first = false;
        }
    }
    return s.empty() ? "0" : s;
}

/// Constant 2-form in (alpha, beta, gamma) coordinates, meaning
/// alpha dy^dz + beta dz^dx + gamma dx^dy.
inline std::string format_two_form(const Vec& abg) {
    static const char* basis[] = {"dy^dz", "dz^dx", "dx^dy"};
    std::string s;
    for (unsigned i = 0; i < 3; ++i) {
        if (abg[i] == 0) continue;
        std::string coef =
            abg[i] == 1 ? "" : abg[i] == -1 ? "-" : to_string(abg[i]) + " ";
        if (!s.empty()) s += " + ";
        s += coef + basis[i];
    }
    return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------
// Reference tables.

struct StandardSample {
    std::string label;
    int number;
    Rat a;
};

/// The canonical 3D forms with the case-(8)/(9) parameter sampled.
inline const std::vector<StandardSample>& standard_samples() {
    static const std::vector<StandardSample> samples = {
        {"1", 1, Rat(1)},          {"2", 2, Rat(1)},
        {"3", 3, Rat(1)},          {"4", 4, Rat(1)},
        {"5", 5, Rat(1)},          {"6", 6, Rat(1)},
        {"7", 7, Rat(1)},          {"8 (a=1)", 8, Rat(1)},
        {"8 (a=1/4)", 8, Rat(1, 4)}, {"8 (a=3)", 8, Rat(3)},
        {"9_1 (a=1)", 9, Rat(1)},  {"9_1 (a=3)", 9, Rat(3)},
        {"9_2 (a=1/4)", 9, Rat(1, 4)}, {"10", 10, Rat(1)},
    };
    return samples;
}

struct NamedTable {
    std::string name;
    std::string content;
};

namespace detail {

/// Fixed grid of constant 2-forms used to probe cocycle reduction.
inline std::vector<Vec> two_form_grid() {
    return {
        Vec{Rat(0), Rat(0), Rat(0)},
        Vec{Rat(1), Rat(0), Rat(0)}, Vec{Rat(0), Rat(1), Rat(0)},
        Vec{Rat(0), Rat(0), Rat(1)}, Vec{Rat(1), Rat(1), Rat(0)},
        Vec{Rat(1), Rat(0), Rat(1)}, Vec{Rat(0), Rat(1), Rat(1)},
        Vec{Rat(1), Rat(1), Rat(1)}, Vec{Rat(2), Rat(-1), Rat(3)},
        Vec{Rat(-1), Rat(1, 2), Rat(0)},
    };
}

inline bool is_two_cocycle(const StructureConstants& g, const Vec& abg) {
    Vec img = coboundary_matrix({Representation::Trivial, g}, 2) *
              two_form_to_lex(abg);
    for (auto& x : img)
        if (x != 0) return false;
    return true;
}

/// Deterministic derivation samples: the basis, signed pairs, triples, and
/// weighted pairs from Der(g). Probes every family the reduction can reach.
inline std::vector<Matrix> derivation_samples(const DerivationSpace& sp) {
    std::vector<Matrix> out;
    unsigned n = sp.all.empty() ? 3 : static_cast<unsigned>(sp.all[0].rows());
    out.push_back(Matrix(n, n));
    auto& b = sp.all;
    for (auto& m : b) {
        out.push_back(m);
        out.push_back(-m);
        out.push_back(m * Rat(2));
    }
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j) {
            out.push_back(b[i] + b[j]);
            out.push_back(b[i] - b[j]);
            out.push_back(b[i] * Rat(2) + b[j]);
        }
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
            for (std::size_t k = j + 1; k < b.size(); ++k)
                out.push_back(b[i] + b[j] + b[k]);
    return out;
}

/// The canonical 4D rows: each unimodular base together with a sample of
/// canonical derivations (parameters on a small rational grid).
inline std::vector<std::pair<int, Matrix>> canonical_4d_rows() {
    std::vector<std::pair<int, Matrix>> rows;
    auto add = [&](int c, const Matrix& m) { rows.push_back({c, m}); };
    Rat _0(0), _1(1);
    // base (1): the full gl(3) classification
    add(1, Matrix(3, 3));
    add(1, Matrix{{_0, _1, _0}, {_0, _0, _0}, {_0, _0, _0}});
    add(1, Matrix{{_0, _1, _0}, {_0, _0, _1}, {_0, _0, _0}});
    add(1, Matrix{{_1, _0, _0}, {_0, _0, _1}, {_0, _0, _0}});
    add(1, Matrix{{_1, _1, _0}, {_0, _1, _1}, {_0, _0, _1}});
    for (Rat al : {Rat(0), Rat(1), Rat(2), Rat(1, 2), Rat(-1)})
        add(1, Matrix{{_1, _1, _0}, {_0, _1, _0}, {_0, _0, al}});
    for (auto [be, ga] : std::vector<std::pair<Rat, Rat>>{
             {Rat(1), Rat(1)}, {Rat(1), Rat(0)}, {Rat(2), Rat(3)},
             {Rat(-1), Rat(1)}, {Rat(0), Rat(0)}, {Rat(1), Rat(-2)}})
        add(1, Matrix::diag(Vec{Rat(1), be, ga}));
    for (auto [de, ep] : std::vector<std::pair<Rat, Rat>>{
             {Rat(0), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(2)},
             {Rat(1), Rat(0)}, {Rat(2), Rat(-1)}})
        add(1, Matrix{{de, _1, _0}, {-_1, de, _0}, {_0, _0, ep}});
    // bases (2), (3): every derivation is inner
    add(2, Matrix(3, 3));
    add(3, Matrix(3, 3));
    // bases (4), (5): one outer direction
    for (int c : {4, 5}) {
        add(c, Matrix(3, 3));
        add(c, Matrix::diag(Vec{Rat(1), Rat(1), Rat(0)}));
    }
    // base (6): block form diag(tr M, M)
    add(6, Matrix(3, 3));
    add(6, Matrix{{_0, _0, _0}, {_0, _0, _1}, {_0, _0, _0}});
    add(6, Matrix::diag(Vec{Rat(0), Rat(1), Rat(-1)}));
    add(6, Matrix{{_0, _0, _0}, {_0, _0, _1}, {_0, -_1, _0}});
    for (Rat ep : {Rat(1), Rat(2)})
        add(6, Matrix{{Rat(2), _0, _0}, {_0, _1, ep}, {_0, -ep, _1}});
    add(6, Matrix{{Rat(2), _0, _0}, {_0, _1, _1}, {_0, _0, _1}});
    for (Rat ze : {Rat(0), Rat(1, 2), Rat(2), Rat(1, 3), Rat(-1)})
        add(6, Matrix::diag(Vec{Rat(1), ze, Rat(1) - ze}));
    return rows;
}

}  // namespace detail

inline std::string table_standard_forms() {
    std::ostringstream os;
    os << "# canonical 3D forms: pair (k, A), f = x^T A x, brackets\n";
    for (auto& s : standard_samples()) {
        CompatiblePair p = standard_pair(s.number, s.a);
        StructureConstants g = structure_of(pair_to_bivector(p));
        os << "case " << s.label << ": k = " << format(p.k)
           << ", f = " << quadratic_form(p.a).str(coord_names(3))
           << ", brackets: " << format_brackets(g) << "\n";
    }
    return os.str();
}

inline std::string table_cohomology_trivial() {
    std::ostringstream os;
    os << "# Chevalley-Eilenberg cohomology, trivial coefficients: dim H^k\n";
    for (auto& s : standard_samples()) {
        auto b = betti({Representation::Trivial,
                        standard_algebra(s.number, s.a)});
        os << "case " << s.label << ": H = (" << b.h[0] << ", " << b.h[1]
           << ", " << b.h[2] << ", " << b.h[3] << ")\n";
    }
    return os.str();
}

inline std::string table_derivations() {
    std::ostringstream os;
    os << "# derivation spaces: dim Der, dim Inn, dim H^1(ad)\n";
    for (auto& s : standard_samples()) {
        StructureConstants g = standard_algebra(s.number, s.a);
        DerivationSpace sp = derivation_space(g);
        auto b = betti({Representation::Adjoint, g});
        os << "case " << s.label << ": dim Der = " << sp.all.size()
           << ", dim Inn = " << sp.inner.size()
           << ", outer = " << sp.outer_dimension() << ", H^1(ad) = " << b.h[1]
           << "\n";
    }
    return os.str();
}

inline std::string table_central_extensions() {
    std::ostringstream os;
    os << "# central extensions: dim H^2 and canonical cocycle classes "
          "reached from a fixed 2-form grid\n";
    for (auto& s : standard_samples()) {
        StructureConstants g = standard_algebra(s.number, s.a);
        auto b = betti({Representation::Trivial, g});
        std::set<std::string> reps;
        for (auto& w : detail::two_form_grid()) {
            if (!detail::is_two_cocycle(g, w)) continue;
            reps.insert(format_two_form(reduce_cocycle(g, w)));
        }
        os << "case " << s.label << ": dim H^2 = " << b.h[2] << ", classes: {";
        bool first = true;
        for (auto& r : reps) {
            os << (first ? "" : ", ") << r;
            first = false;
        }
        os << "}\n";
    }
    return os.str();
}

inline std::string table_derivation_families() {
    std::ostringstream os;
    os << "# derivation classes modulo inner derivations, automorphisms and "
          "scaling, probed on a fixed sample grid\n";
    for (auto& s : standard_samples()) {
        StructureConstants g = standard_algebra(s.number, s.a);
        DerivationSpace sp = derivation_space(g);
        std::set<std::string> fams;
        for (auto& d : detail::derivation_samples(sp))
            fams.insert(reduce_derivation(g, d).family);
        os << "case " << s.label << ": families: {";
        bool first = true;
        for (auto& f : fams) {
            os << (first ? "" : ", ") << f;
            first = false;
        }
        os << "}\n";
    }
    return os.str();
}

inline std::string table_classification_4d() {
    std::ostringstream os;
    os << "# 4D classification round trip: extension of each unimodular base "
          "by a canonical derivation, then classified back\n";
    for (auto& [c, d] : detail::canonical_4d_rows()) {
        StructureConstants base = standard_algebra(c);
        StructureConstants ext = derivation_extend(base, d);
        Classification4 v = classify4(ext);
        os << "base " << c << "; D = " << format(d) << "; verdict: " << v.str()
           << "\n";
    }
    return os.str();
}

inline std::string table_affine() {
    std::ostringstream os;
    os << "# affine structures: canonical constant parts reached from a "
          "fixed 2-form grid of cocycles\n";
    for (auto& s : standard_samples()) {
        CompatiblePair p = standard_pair(s.number, s.a);
        StructureConstants g = structure_of(pair_to_bivector(p));
        std::set<std::string> parts;
        for (auto& w : detail::two_form_grid()) {
            if (!detail::is_two_cocycle(g, w)) continue;
            parts.insert(format_two_form(classify_affine3(p, w).omega));
        }
        os << "case " << s.label << ": constant parts: {";
        bool first = true;
        for (auto& r : parts) {
            os << (first ? "" : ", ") << r;
            first = false;
        }
        os << "}\n";
    }
    return os.str();
}

inline std::vector<NamedTable> reference_tables() {
    return {
        {"standard_forms_3d.txt", table_standard_forms()},
        {"cohomology_trivial_3d.txt", table_cohomology_trivial()},
        {"derivations_3d.txt", table_derivations()},
        {"central_extensions_3d.txt", table_central_extensions()},
        {"derivation_families_3d.txt", table_derivation_families()},
        {"classification_4d.txt", table_classification_4d()},
        {"affine_3d.txt", table_affine()},
    };
}

}  // namespace lpp
