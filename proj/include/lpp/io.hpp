#pragma once

// Algebra documents: JSON-compatible structured text holding structure
// constants (and optionally a constant 2-form) with rationals as "p/q"
// strings. Printing is deterministic byte-for-byte; parse(print(x)) == x.
//
// Layout:
//   {
//     "dim": 3,
//     "brackets": [ {"i": 1, "j": 2, "coeffs": {"3": "1/2"}} ],
//     "constant_cocycle": [ {"i": 1, "j": 2, "value": "1"} ]   // optional
//   }
// Indices are 1-based; i < j; coeffs maps basis index -> coefficient.

#include "lpp/liealg.hpp"
#include "lpp/rational.hpp"

#include <json.hpp>

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace lpp {

/// Malformed input; what() carries a location ("$.brackets[0].coeffs ...").
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct AlgebraDocument {
    StructureConstants algebra;
    std::optional<Matrix> cocycle;  // skew, cocycle(i,j) = omega(e_i, e_j)
};

namespace detail {

inline Rat parse_rat_or_throw(const std::string& s, const std::string& where) {
    try {
        return parse_rat(s);
    } catch (const std::exception& e) {
        throw ParseError(where + ": bad rational \"" + s + "\" (" + e.what() +
                         ")");
    }
}

inline unsigned index_field(const nlohmann::json& obj, const char* key,
                            unsigned dim, const std::string& where) {
    if (!obj.contains(key) || !obj[key].is_number_integer())
        throw ParseError(where + ": missing integer field \"" + key + "\"");
    long long v = obj[key].get<long long>();
    if (v < 1 || v > static_cast<long long>(dim))
        throw ParseError(where + ": index " + std::to_string(v) +
                         " out of range 1.." + std::to_string(dim));
    return static_cast<unsigned>(v);
}

}  // namespace detail

inline AlgebraDocument parse_document(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid document: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("$: expected an object");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer())
        throw ParseError("$.dim: missing integer field");
    long long dim = doc["dim"].get<long long>();
    if (dim < 1 || dim > 16)
        throw ParseError("$.dim: expected a dimension in 1..16");
    unsigned n = static_cast<unsigned>(dim);

    AlgebraDocument out{StructureConstants(n), std::nullopt};
    if (!doc.contains("brackets") || !doc["brackets"].is_array())
        throw ParseError("$.brackets: missing array field");
    std::size_t bi = 0;
    for (auto& b : doc["brackets"]) {
        std::string where = "$.brackets[" + std::to_string(bi++) + "]";
        if (!b.is_object()) throw ParseError(where + ": expected an object");
        unsigned i = detail::index_field(b, "i", n, where);
        unsigned j = detail::index_field(b, "j", n, where);
        if (i >= j)
            throw ParseError(where + ": requires i < j, got i = " +
                             std::to_string(i) + ", j = " + std::to_string(j));
        if (!b.contains("coeffs") || !b["coeffs"].is_object())
            throw ParseError(where + ": missing object field \"coeffs\"");
        for (auto& [key, val] : b["coeffs"].items()) {
            std::string kwhere = where + ".coeffs[\"" + key + "\"]";
            unsigned k = 0;
            try {
                std::size_t used = 0;
                long long kk = std::stoll(key, &used);
                if (used != key.size() || kk < 1 ||
                    kk > static_cast<long long>(n))
                    throw std::invalid_argument("range");
                k = static_cast<unsigned>(kk);
            } catch (const std::exception&) {
                throw ParseError(kwhere + ": key must be a basis index 1.." +
                                 std::to_string(n));
            }
            if (!val.is_string())
                throw ParseError(kwhere + ": expected a rational string");
            out.algebra.set(i - 1, j - 1, k - 1,
                            detail::parse_rat_or_throw(
                                val.get<std::string>(), kwhere));
        }
    }
    if (doc.contains("constant_cocycle")) {
        if (!doc["constant_cocycle"].is_array())
            throw ParseError("$.constant_cocycle: expected an array");
        Matrix w(n, n);
        std::size_t ci = 0;
        for (auto& c : doc["constant_cocycle"]) {
            std::string where =
                "$.constant_cocycle[" + std::to_string(ci++) + "]";
            if (!c.is_object())
                throw ParseError(where + ": expected an object");
            unsigned i = detail::index_field(c, "i", n, where);
            unsigned j = detail::index_field(c, "j", n, where);
            if (i >= j)
                throw ParseError(where + ": requires i < j");
            if (!c.contains("value") || !c["value"].is_string())
                throw ParseError(where +
                                 ": missing rational string field \"value\"");
            Rat v = detail::parse_rat_or_throw(c["value"].get<std::string>(),
                                               where + ".value");
            w(i - 1, j - 1) = v;
            w(j - 1, i - 1) = -v;
        }
        out.cocycle = std::move(w);
    }
    for (auto& [key, val] : doc.items()) {
        (void)val;
        if (key != "dim" && key != "brackets" && key != "constant_cocycle")
            throw ParseError("$." + key + ": unknown field");
    }
    return out;
}

inline std::string print_document(const AlgebraDocument& d) {
    const StructureConstants& g = d.algebra;
    unsigned n = g.dim();
    std::ostringstream os;
    os << "{\n  \"dim\": " << n << ",\n  \"brackets\": [";
    bool first = true;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) {
            bool any = false;
            for (unsigned k = 0; k < n; ++k) any |= g.c(i, j, k) != 0;
            if (!any) continue;
            os << (first ? "" : ",") << "\n    {\"i\": " << i + 1
               << ", \"j\": " << j + 1 << ", \"coeffs\": {";
            first = false;
            bool firstc = true;
            for (unsigned k = 0; k < n; ++k) {
                if (g.c(i, j, k) == 0) continue;
                os << (firstc ? "" : ", ") << "\"" << k + 1 << "\": \""
                   << to_string(g.c(i, j, k)) << "\"";
                firstc = false;
            }
            os << "}}";
        }
    os << (first ? "]" : "\n  ]");
    if (d.cocycle) {
        os << ",\n  \"constant_cocycle\": [";
        bool firstw = true;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i + 1; j < n; ++j) {
                if ((*d.cocycle)(i, j) == 0) continue;
                os << (firstw ? "" : ",") << "\n    {\"i\": " << i + 1
                   << ", \"j\": " << j + 1 << ", \"value\": \""
                   << to_string((*d.cocycle)(i, j)) << "\"}";
                firstw = false;
            }
        os << (firstw ? "]" : "\n  ]");
    }
    os << "\n}\n";
    return os.str();
}

}  // namespace lpp
