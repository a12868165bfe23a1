// Command-line front end for the linear/affine Poisson structure library.
//
// Exit codes: 0 success or true verdict, 1 false verdict, 2 input error,
// 3 internal invariant violation.

#include "lpp/classify.hpp"
#include "lpp/cohomology.hpp"
#include "lpp/decompose.hpp"
#include "lpp/derivations.hpp"
#include "lpp/extensions.hpp"
#include "lpp/io.hpp"
#include "lpp/jacobi.hpp"
#include "lpp/report.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

constexpr int kOk = 0;
constexpr int kFalseVerdict = 1;
constexpr int kInputError = 2;
constexpr int kInternalError = 3;

lpp::AlgebraDocument load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw lpp::ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return lpp::parse_document(buf.str());
}

lpp::Vec parse_rat_list(const std::string& text, std::size_t expect,
                        const std::string& what) {
    lpp::Vec out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(lpp::parse_rat(item));
    if (out.size() != expect)
        throw lpp::ParseError(what + ": expected " + std::to_string(expect) +
                              " comma-separated rationals");
    return out;
}

lpp::Matrix parse_rat_matrix(const std::string& text, std::size_t n,
                             const std::string& what) {
    lpp::Matrix m(n, n);
    std::stringstream ss(text);
    std::string row;
    std::size_t i = 0;
    while (std::getline(ss, row, ';')) {
        if (i >= n) throw lpp::ParseError(what + ": too many rows");
        lpp::Vec r = parse_rat_list(row, n, what + " row");
        for (std::size_t j = 0; j < n; ++j) m(i, j) = r[j];
        ++i;
    }
    if (i != n)
        throw lpp::ParseError(what + ": expected " + std::to_string(n) +
                              " semicolon-separated rows");
    return m;
}

std::string approx(const lpp::Rat& r) {
    std::ostringstream os;
    os << lpp::rat_num(r).convert_to<double>() /
              lpp::rat_den(r).convert_to<double>();
    return os.str();
}

int cmd_check(const std::string& file) {
    auto doc = load(file);
    auto rep = lpp::check_jacobi(doc.algebra);
    if (rep.ok) {
        std::cout << "jacobi: ok\n";
        return kOk;
    }
    std::cout << "jacobi: fails on triple (" << rep.i + 1 << "," << rep.j + 1
              << "," << rep.k + 1 << ")\n";
    return kFalseVerdict;
}

int cmd_modular(const std::string& file) {
    auto doc = load(file);
    std::cout << "modular character: "
              << lpp::format(lpp::modular_character(doc.algebra)) << "\n";
    return kOk;
}

int cmd_decompose(const std::string& file) {
    auto doc = load(file);
    auto pi = lpp::bivector_of(doc.algebra);
    auto d = lpp::decompose(pi);
    std::cout << "pi = " << lpp::format_multivector(pi) << "\n";
    std::cout << "k = " << lpp::format(d.k) << "\n";
    std::cout << "Lambda = " << lpp::format_multivector(d.lambda) << "\n";
    if (doc.algebra.dim() == 3) {
        auto pair = lpp::compatible_pair(pi);
        std::cout << "A = " << lpp::format(pair.a) << "\n";
        std::cout << "f = "
                  << lpp::quadratic_form(pair.a).str(lpp::coord_names(3))
                  << "\n";
    }
    return kOk;
}

int cmd_cohomology(const std::string& file, const std::string& rep_name) {
    auto doc = load(file);
    lpp::Representation rep{rep_name == "adjoint"
                                ? lpp::Representation::Adjoint
                                : lpp::Representation::Trivial,
                            doc.algebra};
    auto b = lpp::betti(rep);
    std::cout << "betti:";
    for (std::size_t k = 0; k < b.h.size(); ++k)
        std::cout << " H^" << k << " = " << b.h[k];
    std::cout << "\n";
    for (std::size_t k = 0; k < b.h.size(); ++k) {
        std::cout << "degree " << k << " cocycle basis:";
        if (b.cocycles[k].empty()) std::cout << " (none)";
        for (auto& v : b.cocycles[k]) std::cout << " " << lpp::format(v);
        std::cout << "\n";
        std::cout << "degree " << k << " coboundary basis:";
        if (b.coboundaries[k].empty()) std::cout << " (none)";
        for (auto& v : b.coboundaries[k]) std::cout << " " << lpp::format(v);
        std::cout << "\n";
    }
    return kOk;
}

int cmd_derivations(const std::string& file) {
    auto doc = load(file);
    auto sp = lpp::derivation_space(doc.algebra);
    std::cout << "dim Der = " << sp.all.size() << ", dim Inn = "
              << sp.inner.size() << ", outer = " << sp.outer_dimension()
              << "\n";
    std::cout << "derivation basis:\n";
    for (auto& m : sp.all) std::cout << "  " << lpp::format(m) << "\n";
    std::cout << "inner basis:\n";
    for (auto& m : sp.inner) std::cout << "  " << lpp::format(m) << "\n";
    return kOk;
}

int cmd_extend(const std::string& file, const std::string& central,
               const std::string& derivation) {
    auto doc = load(file);
    if (doc.algebra.dim() != 3)
        throw lpp::ParseError("extend: base algebra must be 3-dimensional");
    lpp::StructureConstants ext;
    if (!central.empty()) {
        lpp::Vec w = parse_rat_list(central, 3, "--central");
        ext = lpp::central_extend(doc.algebra, w);
    } else {
        lpp::Matrix d = parse_rat_matrix(derivation, 3, "--derivation");
        ext = lpp::derivation_extend(doc.algebra, d);
    }
    std::cout << lpp::print_document({ext, std::nullopt});
    return kOk;
}

int cmd_classify(const std::string& file, bool decimal) {
    auto doc = load(file);
    unsigned n = doc.algebra.dim();
    if (n == 3 && doc.cocycle) {
        auto pair = lpp::compatible_pair(lpp::bivector_of(doc.algebra));
        lpp::Vec lex{(*doc.cocycle)(0, 1), (*doc.cocycle)(0, 2),
                     (*doc.cocycle)(1, 2)};
        auto v = lpp::classify_affine3(pair, lpp::lex_to_two_form(lex));
        std::cout << v.str() << "\n";
        std::cout << "linear part: " << v.linear.str() << ", f = "
                  << lpp::quadratic_form(v.linear.normalized.a)
                         .str(lpp::coord_names(3))
                  << "\n";
        std::cout << "witness T = " << lpp::format(v.linear.witness) << "\n";
        return kOk;
    }
    if (n == 3) {
        auto v = lpp::classify3(lpp::bivector_of(doc.algebra));
        std::cout << v.str() << ", f = "
                  << lpp::quadratic_form(v.normalized.a)
                         .str(lpp::coord_names(3))
                  << "\n";
        if (decimal && v.a)
            std::cout << "a ~ " << approx(*v.a) << "\n";
        std::cout << "normalized k = " << lpp::format(v.normalized.k)
                  << ", A = " << lpp::format(v.normalized.a) << "\n";
        std::cout << "witness T = " << lpp::format(v.witness) << "\n";
        return kOk;
    }
    if (n == 4) {
        auto v = lpp::classify4(doc.algebra);
        std::cout << v.str() << "\n";
        std::cout << "hyperplane ideal basis:";
        for (auto& h : v.hyperplane)
            std::cout << " " << lpp::format_combo(h, "e");
        std::cout << "\n";
        std::cout << "base f = "
                  << lpp::quadratic_form(v.base.normalized.a)
                         .str(lpp::coord_names(3))
                  << "\n";
        if (v.derivation.rep)
            std::cout << "derivation representative = "
                      << lpp::format(*v.derivation.rep) << "\n";
        return kOk;
    }
    throw lpp::ParseError("classify: supports dimensions 3 and 4 only");
}

int cmd_leaf(const std::string& file, const std::string& point, bool form) {
    auto doc = load(file);
    auto pair = lpp::jacobi_pair(lpp::bivector_of(doc.algebra));
    if (!point.empty()) {
        lpp::Vec p = parse_rat_list(point, doc.algebra.dim(), "--point");
        std::cout << "distribution rank = "
                  << lpp::distribution_rank(pair, p) << "\n";
        return kOk;
    }
    if (!form) throw lpp::ParseError("leaf: pass --point P or --form");
    auto lf = lpp::leaf_form(pair);
    std::cout << "Omega = " << lpp::format_form(lf.omega2) << "\n";
    std::cout << "lee form omega = " << lpp::format_form(lf.lee) << "\n";
    auto rep = lpp::conformal_check(lf);
    std::cout << "d Omega = " << lpp::format_form(rep.d_omega2) << "\n";
    std::cout << "conformal identity d Omega + omega ^ Omega = 0: "
              << (rep.ok ? "holds" : "FAILS") << "\n";
    return rep.ok ? kOk : kFalseVerdict;
}

int cmd_tables(const std::string& golden, bool write) {
    namespace fs = std::filesystem;
    auto tables = lpp::reference_tables();
    if (write) {
        fs::create_directories(golden);
        for (auto& t : tables) {
            std::ofstream out(fs::path(golden) / t.name);
            out << t.content;
        }
        std::cout << "wrote " << tables.size() << " tables to " << golden
                  << "\n";
        return kOk;
    }
    bool all_ok = true;
    for (auto& t : tables) {
        std::ifstream in(fs::path(golden) / t.name);
        std::ostringstream buf;
        buf << in.rdbuf();
        bool ok = in.good() || in.eof();
        ok = ok && buf.str() == t.content;
        std::cout << t.name << ": " << (ok ? "ok" : "MISMATCH") << "\n";
        all_ok &= ok;
    }
    return all_ok ? kOk : kFalseVerdict;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculus and classification of linear and affine "
                 "Poisson structures in low dimension"};
    app.require_subcommand(1);

    std::string file, rep_name = "trivial", central, derivation, point,
                      golden = "data/golden";
    bool form = false, write = false, decimal = false;

    auto* check = app.add_subcommand("check", "Jacobi identity verdict");
    check->add_option("file", file)->required();
    auto* modular = app.add_subcommand("modular", "modular character");
    modular->add_option("file", file)->required();
    auto* dec = app.add_subcommand("decompose", "modular decomposition");
    dec->add_option("file", file)->required();
    auto* coh = app.add_subcommand("cohomology", "Chevalley-Eilenberg data");
    coh->add_option("file", file)->required();
    coh->add_option("--rep", rep_name)
        ->check(CLI::IsMember({"trivial", "adjoint"}));
    auto* der = app.add_subcommand("derivations", "derivation spaces");
    der->add_option("file", file)->required();
    auto* ext = app.add_subcommand("extend", "build a 4D extension");
    ext->add_option("file", file)->required();
    auto* opt_c = ext->add_option("--central", central,
                                  "2-cocycle alpha,beta,gamma");
    auto* opt_d = ext->add_option("--derivation", derivation,
                                  "matrix a,b,c;d,e,f;g,h,i");
    opt_c->excludes(opt_d);
    auto* cls = app.add_subcommand("classify", "canonical form verdict");
    cls->add_option("file", file)->required();
    cls->add_flag("--decimal", decimal,
                  "additionally print decimal approximations");
    auto* leaf = app.add_subcommand("leaf", "leaf geometry");
    leaf->add_option("file", file)->required();
    leaf->add_option("--point", point, "evaluation point p1,p2,...");
    leaf->add_flag("--form", form, "print Omega, the Lee form, and the "
                                   "conformal verdict");
    auto* tab = app.add_subcommand("tables", "regenerate reference tables");
    tab->add_option("--golden", golden, "golden directory");
    tab->add_flag("--write", write, "write tables instead of diffing");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) return cmd_check(file);
        if (*modular) return cmd_modular(file);
        if (*dec) return cmd_decompose(file);
        if (*coh) return cmd_cohomology(file, rep_name);
        if (*der) return cmd_derivations(file);
        if (*ext) {
            if (central.empty() == derivation.empty())
                throw lpp::ParseError(
                    "extend: pass exactly one of --central, --derivation");
            return cmd_extend(file, central, derivation);
        }
        if (*cls) return cmd_classify(file, decimal);
        if (*leaf) return cmd_leaf(file, point, form);
        if (*tab) return cmd_tables(golden, write);
    } catch (const lpp::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
    return kInputError;
}
