#pragma once

#include "homdef/algebra.hpp"
#include "homdef/deform.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace homdef {
namespace io {

inline constexpr const char* kToolVersion = "homdef 1.0.0";

using Json = nlohmann::json;

/// Any defect of an input file: JSON syntax, schema violations, bad
/// rationals, inconsistent structure constants.
struct FileFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses JSON text, converting syntax errors into FileFormatError with
/// line/column diagnostics.
inline Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw FileFormatError("parse error at line " + std::to_string(line) + ", column " +
                              std::to_string(col) + ": " + e.what());
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FileFormatError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw FileFormatError("cannot write file: " + path);
    out << text;
}

/// FNV-1a 64-bit digest of the raw input bytes; identifies inputs in
/// reports without external dependencies.
inline std::string fnv1a64_hex(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

namespace detail {

inline Rational parse_rational_field(const Json& j, const std::string& where) {
    if (!j.is_string())
        throw FileFormatError(where + ": rational values must be strings");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw FileFormatError(where + ": " + e.what());
    }
}

inline int parse_index(const Json& j, int dim, const std::string& where) {
    if (!j.is_number_integer())
        throw FileFormatError(where + ": index must be an integer");
    int v = j.get<int>();
    if (v < 0 || v >= dim)
        throw FileFormatError(where + ": index " + std::to_string(v) + " out of range [0, " +
                              std::to_string(dim) + ")");
    return v;
}

inline LinearMap parse_matrix(const Json& j, int dim, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw FileFormatError(where + ": expected " + std::to_string(dim) + " rows");
    Mat<Rational> m(dim, dim, Rational(0));
    for (int i = 0; i < dim; ++i) {
        const Json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            throw FileFormatError(where + ": row " + std::to_string(i) + " must have " +
                                  std::to_string(dim) + " entries");
        for (int k = 0; k < dim; ++k)
            m(i, k) = parse_rational_field(row[static_cast<std::size_t>(k)],
                                           where + "[" + std::to_string(i) + "][" +
                                               std::to_string(k) + "]");
    }
    return LinearMap(std::move(m));
}

inline Json matrix_to_json(const LinearMap& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.dim(); ++j)
            row.push_back(m.entry(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Parses a sparse product entry list into a structure-constant tensor.
/// For the hom-lie kind, entries may be given for i < j only (alternation
/// implied); full listings are consistency-checked.
inline BilinearMap parse_product(const Json& j, int dim, AlgebraKind kind,
                                 const std::string& where) {
    if (!j.is_array())
        throw FileFormatError(where + ": product must be a list of {i, j, out} entries");
    BilinearMap out(dim);
    std::vector<bool> seen(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), false);
    for (std::size_t t = 0; t < j.size(); ++t) {
        const Json& e = j[t];
        std::string ctx = where + "[" + std::to_string(t) + "]";
        if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("out"))
            throw FileFormatError(ctx + ": entry must be an object with i, j, out");
        int i = parse_index(e["i"], dim, ctx + ".i");
        int jj = parse_index(e["j"], dim, ctx + ".j");
        if (seen[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) +
                 static_cast<std::size_t>(jj)])
            throw FileFormatError(ctx + ": duplicate entry for pair (" + std::to_string(i) + ", " +
                                  std::to_string(jj) + ")");
        seen[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) +
             static_cast<std::size_t>(jj)] = true;
        const Json& map = e["out"];
        if (!map.is_object())
            throw FileFormatError(ctx + ".out: must map basis index to rational string");
        Vec<Rational> value(dim, Rational(0));
        for (const auto& [key, v] : map.items()) {
            int k;
            try {
                std::size_t used = 0;
                k = std::stoi(key, &used);
                if (used != key.size())
                    throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw FileFormatError(ctx + ".out: bad basis index '" + key + "'");
            }
            if (k < 0 || k >= dim)
                throw FileFormatError(ctx + ".out: index " + std::to_string(k) +
                                      " out of range [0, " + std::to_string(dim) + ")");
            value[k] = parse_rational_field(v, ctx + ".out." + key);
        }
        if (kind == AlgebraKind::HomLie) {
            if (i == jj) {
                if (!value.is_zero())
                    throw FileFormatError(ctx + ": hom-lie product requires [x, x] = 0");
                continue;
            }
            bool mirror = seen[static_cast<std::size_t>(jj) * static_cast<std::size_t>(dim) +
                               static_cast<std::size_t>(i)];
            if (mirror) {
                for (int k = 0; k < dim; ++k)
                    if (!(out.c(jj, i, k) == -value[k]))
                        throw FileFormatError(ctx + ": entry contradicts skew-symmetry with pair (" +
                                              std::to_string(jj) + ", " + std::to_string(i) + ")");
            }
            for (int k = 0; k < dim; ++k) {
                out.c(i, jj, k) = value[k];
                out.c(jj, i, k) = -value[k];
            }
        } else {
            for (int k = 0; k < dim; ++k)
                out.c(i, jj, k) = value[k];
        }
    }
    return out;
}

/// Canonical sparse listing: ascending (i, j); hom-lie kinds list i < j only.
inline Json product_to_json(const BilinearMap& b, AlgebraKind kind) {
    Json list = Json::array();
    const int n = b.dim();
    for (int i = 0; i < n; ++i)
        for (int j = (kind == AlgebraKind::HomLie ? i + 1 : 0); j < n; ++j) {
            Json outmap = Json::object();
            for (int k = 0; k < n; ++k)
                if (!b.c(i, j, k).is_zero())
                    outmap[std::to_string(k)] = b.c(i, j, k).str();
            if (!outmap.empty()) {
                Json e = Json::object();
                e["i"] = i;
                e["j"] = j;
                e["out"] = std::move(outmap);
                list.push_back(std::move(e));
            }
        }
    return list;
}

} // namespace detail

inline Json algebra_to_json(const HomAlgebra& a) {
    Json j = Json::object();
    j["kind"] = kind_name(a.kind);
    j["dim"] = a.dim;
    j["basis"] = a.basis;
    j["product"] = detail::product_to_json(a.product, a.kind);
    j["alpha"] = detail::matrix_to_json(a.alpha);
    return j;
}

inline HomAlgebra algebra_from_json(const Json& j, const std::string& where = "algebra") {
    if (!j.is_object())
        throw FileFormatError(where + ": expected an object");
    for (const char* field : {"kind", "dim", "basis", "product", "alpha"})
        if (!j.contains(field))
            throw FileFormatError(where + ": missing field '" + field + "'");
    if (!j["kind"].is_string())
        throw FileFormatError(where + ".kind: must be a string");
    auto kind = kind_from_name(j["kind"].get<std::string>());
    if (!kind)
        throw FileFormatError(where + ".kind: unknown kind '" + j["kind"].get<std::string>() + "'");
    if (!j["dim"].is_number_integer() || j["dim"].get<int>() <= 0)
        throw FileFormatError(where + ".dim: must be a positive integer");
    int dim = j["dim"].get<int>();
    if (!j["basis"].is_array() || static_cast<int>(j["basis"].size()) != dim)
        throw FileFormatError(where + ".basis: must list exactly dim labels");
    std::vector<std::string> basis;
    for (const auto& b : j["basis"]) {
        if (!b.is_string())
            throw FileFormatError(where + ".basis: labels must be strings");
        basis.push_back(b.get<std::string>());
    }
    BilinearMap product = detail::parse_product(j["product"], dim, *kind, where + ".product");
    LinearMap alpha = detail::parse_matrix(j["alpha"], dim, where + ".alpha");
    try {
        return HomAlgebra(*kind, std::move(basis), std::move(product), std::move(alpha));
    } catch (const std::invalid_argument& e) {
        throw FileFormatError(where + ": " + e.what());
    }
}

/// Deformations embed their base for self-containedness. The order-0 slots
/// of `products` and `alphas` are null in canonical form (they default to
/// the base structure); when given explicitly they must agree with it.
inline Json deformation_to_json(const DeformationSeries& d) {
    Json j = Json::object();
    j["base"] = algebra_to_json(d.base_algebra());
    j["orders"] = d.order();
    Json products = Json::array();
    Json alphas = Json::array();
    products.push_back(nullptr);
    alphas.push_back(nullptr);
    for (int s = 1; s <= d.order(); ++s) {
        products.push_back(
            detail::product_to_json(d.products[static_cast<std::size_t>(s)], d.base_kind()));
        alphas.push_back(detail::matrix_to_json(d.twists[static_cast<std::size_t>(s)]));
    }
    j["products"] = std::move(products);
    j["alphas"] = std::move(alphas);
    return j;
}

inline DeformationSeries deformation_from_json(const Json& j) {
    if (!j.is_object())
        throw FileFormatError("deformation: expected an object");
    for (const char* field : {"base", "orders", "products", "alphas"})
        if (!j.contains(field))
            throw FileFormatError(std::string("deformation: missing field '") + field + "'");
    HomAlgebra base = algebra_from_json(j["base"], "deformation.base");
    CochainFlavor flavor;
    if (base.kind == AlgebraKind::HomAssociative)
        flavor = CochainFlavor::Associative;
    else if (base.kind == AlgebraKind::HomLie)
        flavor = CochainFlavor::Lie;
    else
        throw FileFormatError("deformation.base.kind: must be hom-associative or hom-lie");
    if (!j["orders"].is_number_integer() || j["orders"].get<int>() < 0)
        throw FileFormatError("deformation.orders: must be a non-negative integer");
    int N = j["orders"].get<int>();
    const Json& products = j["products"];
    const Json& alphas = j["alphas"];
    if (!products.is_array() || static_cast<int>(products.size()) != N + 1)
        throw FileFormatError("deformation.products: must list exactly orders+1 entries");
    if (!alphas.is_array() || static_cast<int>(alphas.size()) != N + 1)
        throw FileFormatError("deformation.alphas: must list exactly orders+1 entries");

    std::vector<BilinearMap> ps;
    std::vector<LinearMap> ts;
    for (int s = 0; s <= N; ++s) {
        std::string where = "deformation.products[" + std::to_string(s) + "]";
        const Json& e = products[static_cast<std::size_t>(s)];
        if (e.is_null()) {
            if (s != 0)
                throw FileFormatError(where + ": only the order-0 product may be null");
            ps.push_back(base.product);
        } else {
            BilinearMap b = detail::parse_product(e, base.dim, base.kind, where);
            if (s == 0 && !(b == base.product))
                throw FileFormatError(where + ": explicit order-0 product contradicts the base");
            ps.push_back(std::move(b));
        }
    }
    for (int s = 0; s <= N; ++s) {
        std::string where = "deformation.alphas[" + std::to_string(s) + "]";
        const Json& e = alphas[static_cast<std::size_t>(s)];
        if (e.is_null()) {
            if (s != 0)
                throw FileFormatError(where + ": only the order-0 twist may be null");
            ts.push_back(base.alpha);
        } else {
            LinearMap m = detail::parse_matrix(e, base.dim, where);
            if (s == 0 && !(m == base.alpha))
                throw FileFormatError(where + ": explicit order-0 twist contradicts the base");
            ts.push_back(std::move(m));
        }
    }
    return DeformationSeries(flavor, std::move(ps), std::move(ts), base.basis);
}

/// Canonical serialization: two-space indent, sorted object keys (the JSON
/// library stores objects sorted), trailing newline. Export/parse/export is
/// byte-identical.
inline std::string canonical_dump(const Json& j) {
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Report documents.
// ---------------------------------------------------------------------------

struct ReportCheck {
    std::string name;
    std::string status; // pass | fail | error
    std::optional<TripleWitness> witness;
    std::string detail;
};

/// Checks decide the exit code; diagnostics are reported verdicts that do
/// not gate it (for instance the first-order cocycle characterization of a
/// deformation, which can legitimately fail for a perfectly valid input).
struct ReportDocument {
    std::string input_digest;
    std::vector<ReportCheck> checks;
    std::vector<ReportCheck> diagnostics;

    void add(ReportCheck c) { checks.push_back(std::move(c)); }
    void add_check(const CheckReport& r) {
        checks.push_back(ReportCheck{r.name, r.pass ? "pass" : "fail", r.witness, r.note});
    }
    void add_diagnostic(ReportCheck c) { diagnostics.push_back(std::move(c)); }

    bool all_pass() const {
        for (const auto& c : checks)
            if (c.status != "pass")
                return false;
        return true;
    }

    static Json check_to_json(const ReportCheck& c) {
        Json e = Json::object();
        e["name"] = c.name;
        e["status"] = c.status;
        if (c.witness) {
            Json w = Json::object();
            w["order"] = c.witness->order >= 0 ? Json(c.witness->order) : Json(nullptr);
            w["triple"] = {c.witness->triple[0], c.witness->triple[1], c.witness->triple[2]};
            Json res = Json::array();
            for (int i = 0; i < c.witness->residual.dim(); ++i)
                res.push_back(c.witness->residual[i].str());
            w["residual"] = std::move(res);
            e["witness"] = std::move(w);
        } else {
            e["witness"] = nullptr;
        }
        e["detail"] = c.detail;
        return e;
    }

    Json to_json() const {
        auto sorted_by_name = [](std::vector<ReportCheck> v) {
            std::sort(v.begin(), v.end(),
                      [](const ReportCheck& a, const ReportCheck& b) { return a.name < b.name; });
            return v;
        };
        Json j = Json::object();
        j["tool_version"] = kToolVersion;
        j["input_digest"] = input_digest;
        Json list = Json::array();
        long long failed = 0;
        for (const auto& c : sorted_by_name(checks)) {
            if (c.status != "pass")
                ++failed;
            list.push_back(check_to_json(c));
        }
        j["checks"] = std::move(list);
        Json diag = Json::array();
        for (const auto& c : sorted_by_name(diagnostics))
            diag.push_back(check_to_json(c));
        j["diagnostics"] = std::move(diag);
        Json summary = Json::object();
        summary["total"] = static_cast<long long>(checks.size());
        summary["failed"] = failed;
        summary["status"] = failed == 0 ? "pass" : "fail";
        j["summary"] = std::move(summary);
        return j;
    }

    std::string human() const {
        auto sorted_by_name = [](std::vector<ReportCheck> v) {
            std::sort(v.begin(), v.end(),
                      [](const ReportCheck& a, const ReportCheck& b) { return a.name < b.name; });
            return v;
        };
        std::ostringstream os;
        for (const auto& c : sorted_by_name(checks)) {
            os << (c.status == "pass" ? "PASS" : (c.status == "fail" ? "FAIL" : "ERROR")) << "  "
               << c.name;
            if (c.witness)
                os << "  [" << c.witness->str() << "]";
            if (!c.detail.empty())
                os << "  (" << c.detail << ")";
            os << "\n";
        }
        for (const auto& c : sorted_by_name(diagnostics)) {
            os << "INFO  " << c.name << ": " << c.status;
            if (c.witness)
                os << "  [" << c.witness->str() << "]";
            if (!c.detail.empty())
                os << "  (" << c.detail << ")";
            os << "\n";
        }
        os << (all_pass() ? "all checks passed" : "CHECKS FAILED") << "\n";
        return os.str();
    }
};

} // namespace io
} // namespace homdef
