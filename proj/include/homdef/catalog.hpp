#pragma once

#include "homdef/algebra.hpp"
#include "homdef/cochain.hpp"
#include "homdef/deform.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace homdef {
namespace catalog {

using Params = std::map<std::string, Rational>;

struct ParamSpec {
    std::string name;
    Rational default_value;
};

struct CatalogEntry {
    std::string name;
    std::string kind; // "algebra" | "deformation" | "graded-family"
    std::string summary;
    std::vector<ParamSpec> params;
    bool takes_order = false;
};

inline const std::vector<CatalogEntry>& entries() {
    static const std::vector<CatalogEntry> list = {
        {"sl2-efh", "algebra", "sl2 in the (e, f, h) basis with identity twist", {}, false},
        {"sl2-x", "algebra", "sl2 in the (x1, x2, x3) basis with identity twist", {}, false},
        {"sl2-twist", "algebra",
         "sl2-x brackets with the six-parameter twist family (a, d, c; 2c, b, f; 2d, e, b)",
         {{"a", Rational(1)},
          {"b", Rational(1)},
          {"c", Rational(0)},
          {"d", Rational(0)},
          {"e", Rational(0)},
          {"f", Rational(0)}},
         false},
        {"jackson-sl2", "deformation",
         "Jackson sl2 as a hom-lie deformation of sl2 (closed-form orders)", {}, true},
        {"sl2-inf-1", "deformation",
         "first infinitesimal hom-lie deformation family of sl2 (order 1)",
         {{"a1", Rational(1)},
          {"a2", Rational(1)},
          {"a3", Rational(1)},
          {"b1", Rational(1)},
          {"b2", Rational(1)},
          {"b3", Rational(1)}},
         false},
        {"sl2-inf-2", "deformation",
         "second infinitesimal hom-lie deformation family of sl2 (order 1)",
         {{"a1", Rational(1)},
          {"a2", Rational(1)},
          {"b1", Rational(1)},
          {"b2", Rational(1)},
          {"b3", Rational(1)},
          {"b4", Rational(1)}},
         false},
        {"sl2-inf-3", "deformation",
         "third infinitesimal hom-lie deformation family of sl2 (order 1; a3 must be nonzero)",
         {{"a1", Rational(1)},
          {"a2", Rational(1)},
          {"a3", Rational(1)},
          {"a4", Rational(1)},
          {"a5", Rational(1)},
          {"b", Rational(1)}},
         false},
        {"sl2-nonlie", "deformation",
         "non-Lie hom-lie deformation family of sl2 (polynomial in t, expanded to order N)",
         {{"a1", Rational(1)},
          {"a2", Rational(1)},
          {"a3", Rational(1)},
          {"a4", Rational(1)},
          {"b1", Rational(1)},
          {"b2", Rational(1)}},
         true},
        {"qwitt", "graded-family",
         "q-deformed Witt algebra on generators x_n, n in Z (use the graded command)",
         {{"q", Rational(2)}},
         false},
        {"virq", "graded-family",
         "q-deformed Virasoro algebra with central generator c (use the graded command)",
         {{"q", Rational(2)}},
         false},
        {"witt-deformation", "graded-family",
         "order-by-order hom-lie deformation of the Witt algebra W_{>=0} (use the graded command)",
         {},
         true},
    };
    return list;
}

inline const CatalogEntry& find_entry(const std::string& name) {
    for (const auto& e : entries())
        if (e.name == name)
            return e;
    throw std::invalid_argument("catalog: unknown entry '" + name + "'");
}

/// Merges user parameters over the entry defaults; unknown keys are errors.
inline Params resolve_params(const CatalogEntry& entry, const Params& user) {
    Params out;
    for (const auto& p : entry.params)
        out[p.name] = p.default_value;
    for (const auto& [k, v] : user) {
        if (!out.count(k))
            throw std::invalid_argument("catalog: entry '" + entry.name +
                                        "' has no parameter '" + k + "'");
        out[k] = v;
    }
    return out;
}

namespace detail {

inline void set_bracket(BilinearMap& b, int i, int j, const Vec<Rational>& value) {
    for (int k = 0; k < b.dim(); ++k) {
        b.c(i, j, k) = value[k];
        b.c(j, i, k) = -value[k];
    }
}

inline Vec<Rational> v3(Rational a, Rational b, Rational c) {
    Vec<Rational> v(3);
    v[0] = std::move(a);
    v[1] = std::move(b);
    v[2] = std::move(c);
    return v;
}

inline Mat<Rational> m3(std::initializer_list<Rational> rows) {
    Mat<Rational> m(3, 3, Rational(0));
    auto it = rows.begin();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m(i, j) = *it++;
    return m;
}

} // namespace detail

/// sl2 in the (e, f, h) basis: [h,f] = -2f, [h,e] = 2e, [e,f] = h.
inline BilinearMap sl2_efh_bracket() {
    BilinearMap b(3);
    detail::set_bracket(b, 2, 1, detail::v3(Rational(0), Rational(-2), Rational(0)));
    detail::set_bracket(b, 2, 0, detail::v3(Rational(2), Rational(0), Rational(0)));
    detail::set_bracket(b, 0, 1, detail::v3(Rational(0), Rational(0), Rational(1)));
    return b;
}

/// sl2 in the (x1, x2, x3) basis: [x1,x2] = 2x2, [x1,x3] = -2x3, [x2,x3] = x1.
inline BilinearMap sl2_x_bracket() {
    BilinearMap b(3);
    detail::set_bracket(b, 0, 1, detail::v3(Rational(0), Rational(2), Rational(0)));
    detail::set_bracket(b, 0, 2, detail::v3(Rational(0), Rational(0), Rational(-2)));
    detail::set_bracket(b, 1, 2, detail::v3(Rational(1), Rational(0), Rational(0)));
    return b;
}

inline HomAlgebra sl2_efh() {
    return HomAlgebra(AlgebraKind::HomLie, {"e", "f", "h"}, sl2_efh_bracket(),
                      LinearMap::identity(3));
}

inline HomAlgebra sl2_x() {
    return HomAlgebra(AlgebraKind::HomLie, {"x1", "x2", "x3"}, sl2_x_bracket(),
                      LinearMap::identity(3));
}

/// The six-parameter twist matrix (a, d, c; 2c, b, f; 2d, e, b) that makes
/// the sl2-x brackets a Hom-Lie algebra.
inline LinearMap sl2_twist_alpha(const Rational& a, const Rational& b, const Rational& c,
                                 const Rational& d, const Rational& e, const Rational& f) {
    return LinearMap(detail::m3({a, d, c, Rational(2) * c, b, f, Rational(2) * d, e, b}));
}

inline HomAlgebra sl2_twist(const Params& p) {
    return HomAlgebra(AlgebraKind::HomLie, {"x1", "x2", "x3"}, sl2_x_bracket(),
                      sl2_twist_alpha(p.at("a"), p.at("b"), p.at("c"), p.at("d"), p.at("e"),
                                      p.at("f")));
}

/// Jackson sl2 truncated at order N. Orders:
///   s = 0: sl2 brackets, identity twist;
///   s = 1: [h,f]_1 = -2f, [h,e]_1 = 0, [e,f]_1 = h/2,
///          alpha_1(e) = -e/2, alpha_1(h) = 0, alpha_1(f) = f/2;
///   s >= 2: brackets vanish, alpha_s(e) = ((-1)^s / 2) e, rest zero.
/// Basis order (e, f, h).
inline DeformationSeries jackson_sl2(int order) {
    if (order < 0)
        throw std::invalid_argument("jackson-sl2: order must be non-negative");
    std::vector<BilinearMap> products;
    std::vector<LinearMap> twists;
    products.push_back(sl2_efh_bracket());
    twists.push_back(LinearMap::identity(3));
    for (int s = 1; s <= order; ++s) {
        BilinearMap b(3);
        LinearMap alpha = LinearMap::zero(3);
        if (s == 1) {
            detail::set_bracket(b, 2, 1, detail::v3(Rational(0), Rational(-2), Rational(0)));
            detail::set_bracket(b, 0, 1, detail::v3(Rational(0), Rational(0), Rational(1, 2)));
            alpha.entry(0, 0) = Rational(-1, 2);
            alpha.entry(1, 1) = Rational(1, 2);
        } else {
            alpha.entry(0, 0) = Rational(s % 2 == 0 ? 1 : -1, 2);
        }
        products.push_back(std::move(b));
        twists.push_back(std::move(alpha));
    }
    return DeformationSeries(CochainFlavor::Lie, std::move(products), std::move(twists),
                             {"e", "f", "h"});
}

namespace detail {

inline DeformationSeries order1_family(BilinearMap bracket1, LinearMap alpha1) {
    std::vector<BilinearMap> products;
    std::vector<LinearMap> twists;
    products.push_back(sl2_x_bracket());
    products.push_back(std::move(bracket1));
    twists.push_back(LinearMap::identity(3));
    twists.push_back(std::move(alpha1));
    return DeformationSeries(CochainFlavor::Lie, std::move(products), std::move(twists),
                             {"x1", "x2", "x3"});
}

} // namespace detail

/// Infinitesimal family (1): [x1,x2]_1 = -a1 x2 + x3, [x1,x3]_1 = a2 x2 + a1 x3,
/// [x2,x3]_1 = a3 x1; alpha_1 = (b1, 0, 0; 0, b2, -b3 a2; 0, b3, b2).
inline DeformationSeries sl2_inf_1(const Params& p) {
    const Rational &a1 = p.at("a1"), &a2 = p.at("a2"), &a3 = p.at("a3");
    const Rational &b1 = p.at("b1"), &b2 = p.at("b2"), &b3 = p.at("b3");
    BilinearMap b(3);
    detail::set_bracket(b, 0, 1, detail::v3(Rational(0), -a1, Rational(1)));
    detail::set_bracket(b, 0, 2, detail::v3(Rational(0), a2, a1));
    detail::set_bracket(b, 1, 2, detail::v3(a3, Rational(0), Rational(0)));
    LinearMap alpha(detail::m3({b1, Rational(0), Rational(0), Rational(0), b2, -(b3 * a2),
                                Rational(0), b3, b2}));
    return detail::order1_family(std::move(b), std::move(alpha));
}

/// Infinitesimal family (2): [x1,x2]_1 = -2a1 x2, [x1,x3]_1 = a2 x2 + 2a1 x3,
/// [x2,x3]_1 = -a1 x1; alpha_1 = (b1, 0, b3; 2b3, b2, b4; 0, 0, b2).
inline DeformationSeries sl2_inf_2(const Params& p) {
    const Rational &a1 = p.at("a1"), &a2 = p.at("a2");
    const Rational &b1 = p.at("b1"), &b2 = p.at("b2"), &b3 = p.at("b3"), &b4 = p.at("b4");
    BilinearMap b(3);
    detail::set_bracket(b, 0, 1, detail::v3(Rational(0), Rational(-2) * a1, Rational(0)));
    detail::set_bracket(b, 0, 2, detail::v3(Rational(0), a2, Rational(2) * a1));
    detail::set_bracket(b, 1, 2, detail::v3(-a1, Rational(0), Rational(0)));
    LinearMap alpha(detail::m3({b1, Rational(0), b3, Rational(2) * b3, b2, b4, Rational(0),
                                Rational(0), b2}));
    return detail::order1_family(std::move(b), std::move(alpha));
}

/// Infinitesimal family (3): [x1,x2]_1 = -a1 x2 + a2 x3,
/// [x1,x3]_1 = a3 x1 + a4 x2 + a1 x3, [x2,x3]_1 = a5 x1 - a3 x2;
/// alpha_1 = b * id. The family is stated for a3 != 0.
inline DeformationSeries sl2_inf_3(const Params& p) {
    const Rational &a1 = p.at("a1"), &a2 = p.at("a2"), &a3 = p.at("a3"), &a4 = p.at("a4"),
                   &a5 = p.at("a5"), &b = p.at("b");
    BilinearMap br(3);
    detail::set_bracket(br, 0, 1, detail::v3(Rational(0), -a1, a2));
    detail::set_bracket(br, 0, 2, detail::v3(a3, a4, a1));
    detail::set_bracket(br, 1, 2, detail::v3(a5, -a3, Rational(0)));
    LinearMap alpha(detail::m3({b, Rational(0), Rational(0), Rational(0), b, Rational(0),
                                Rational(0), Rational(0), b}));
    return detail::order1_family(std::move(br), std::move(alpha));
}

/// The non-Lie family, polynomial in t:
///   [x1,x2]_t = a1 t x1 + (2 - a2 t) x2,
///   [x1,x3]_t = a3 t x1 + a4 t x2 + (-2 + a2 t) x3,
///   [x2,x3]_t = (1 - (a2/2) t) x1,
/// with twist rows (1 + b1 t, (a1/2) t, ((b2-a3)/2) t;
///                  b2 t, 1 - (a2/2) t, -(a4/2) t;
///                  0, 0, 1 - (a2/2) t),
/// expanded as a deformation truncated at order N (orders >= 2 vanish).
/// The (3,3) twist entry is taken as 1 - (a2/2) t, matching the (2,2) entry
/// pattern; verify() confirms the family satisfies the deformation equation.
inline DeformationSeries sl2_nonlie(const Params& p, int order) {
    if (order < 0)
        throw std::invalid_argument("sl2-nonlie: order must be non-negative");
    const Rational &a1 = p.at("a1"), &a2 = p.at("a2"), &a3 = p.at("a3"), &a4 = p.at("a4");
    const Rational &b1 = p.at("b1"), &b2 = p.at("b2");
    std::vector<BilinearMap> products;
    std::vector<LinearMap> twists;
    products.push_back(sl2_x_bracket());
    twists.push_back(LinearMap::identity(3));
    if (order >= 1) {
        BilinearMap b(3);
        detail::set_bracket(b, 0, 1, detail::v3(a1, -a2, Rational(0)));
        detail::set_bracket(b, 0, 2, detail::v3(a3, a4, a2));
        detail::set_bracket(b, 1, 2, detail::v3(-(a2 / Rational(2)), Rational(0), Rational(0)));
        products.push_back(std::move(b));
        LinearMap alpha(detail::m3({b1, a1 / Rational(2), (b2 - a3) / Rational(2), b2,
                                    -(a2 / Rational(2)), -(a4 / Rational(2)), Rational(0),
                                    Rational(0), -(a2 / Rational(2))}));
        twists.push_back(std::move(alpha));
    }
    for (int s = 2; s <= order; ++s) {
        products.push_back(BilinearMap(3));
        twists.push_back(LinearMap::zero(3));
    }
    return DeformationSeries(CochainFlavor::Lie, std::move(products), std::move(twists),
                             {"x1", "x2", "x3"});
}

/// Classical (untwisted) Jacobiator of a polynomial bracket family, order by
/// order: Jac_s = sum_{i+j=s} cyclic [x, [y,z]_j]_i.
inline std::vector<Trilinear> classical_jacobiator_orders(const std::vector<BilinearMap>& brackets,
                                                          int max_order) {
    if (brackets.empty())
        throw std::invalid_argument("classical_jacobiator_orders: need at least one bracket");
    const int n = brackets[0].dim();
    LinearMap id = LinearMap::identity(n);
    std::vector<Trilinear> out;
    for (int s = 0; s <= max_order; ++s) {
        Trilinear acc(n);
        for (int i = 0; i <= s; ++i) {
            int j = s - i;
            if (i >= static_cast<int>(brackets.size()) || j >= static_cast<int>(brackets.size()))
                continue;
            acc = acc + cyclic_twisted_jacobiator(brackets[static_cast<std::size_t>(i)], id,
                                                  brackets[static_cast<std::size_t>(j)]);
        }
        out.push_back(std::move(acc));
    }
    return out;
}

using CatalogValue = std::variant<HomAlgebra, DeformationSeries>;

/// Builds a catalog instance. Deformation entries take a truncation order
/// (required for jackson-sl2 and sl2-nonlie; the infinitesimal families are
/// fixed at order 1).
inline CatalogValue get(const std::string& name, const Params& user = {}, int order = -1) {
    const CatalogEntry& entry = find_entry(name);
    Params p = resolve_params(entry, user);
    if (entry.kind == "graded-family")
        throw std::invalid_argument("catalog: '" + name +
                                    "' is an integer-graded family; use the graded command");
    if (entry.takes_order && order < 0)
        throw std::invalid_argument("catalog: '" + name + "' needs a truncation order");
    if (name == "sl2-efh")
        return sl2_efh();
    if (name == "sl2-x")
        return sl2_x();
    if (name == "sl2-twist")
        return sl2_twist(p);
    if (name == "jackson-sl2")
        return jackson_sl2(order);
    if (name == "sl2-inf-1")
        return sl2_inf_1(p);
    if (name == "sl2-inf-2")
        return sl2_inf_2(p);
    if (name == "sl2-inf-3")
        return sl2_inf_3(p);
    if (name == "sl2-nonlie")
        return sl2_nonlie(p, order);
    throw std::logic_error("catalog: entry '" + name + "' has no builder");
}

/// Kernel description of all twists alpha making the sl2-x brackets a
/// Hom-Lie algebra: the Hom-Jacobi identity is linear in alpha once the
/// brackets are fixed.
struct TwistSolveResult {
    int dimension = 0;
    std::vector<LinearMap> basis;
    std::vector<std::string> relations;
};

inline TwistSolveResult solve_sl2_twists() {
    BilinearMap bracket = sl2_x_bracket();
    const int n = 3;
    Mat<Rational> sys(n * n * n * n, n * n, Rational(0));
    for (int t = 0; t < n * n; ++t) {
        Mat<Rational> m(n, n, Rational(0));
        m(t / n, t % n) = Rational(1);
        Trilinear image = cyclic_twisted_jacobiator(bracket, LinearMap(std::move(m)), bracket);
        int row = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l)
                        sys(row++, t) = image.c(i, j, k, l);
    }
    TwistSolveResult out;
    for (const auto& v : kernel_basis(sys)) {
        Mat<Rational> m(n, n, Rational(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m(i, j) = v[i * n + j];
        out.basis.push_back(LinearMap(std::move(m)));
    }
    out.dimension = static_cast<int>(out.basis.size());
    out.relations = {"m21 = 2*m13", "m31 = 2*m12", "m22 = m33"};
    return out;
}

/// Seeded statistics for the empirical probe: sampled infinitesimal
/// deformations from the three families, restricted to draws where
/// (V, [.,.]_0, alpha_1) is itself a Hom-Lie algebra, tested against the
/// classical Jacobi identity of the deformed bracket for all t. This
/// gathers evidence only; it cannot decide anything.
struct ProbeStats {
    long long samples = 0;
    long long side_condition_held = 0;
    long long lie_for_all_t = 0;
    long long counterexamples = 0; // side condition held but Jacobi failed
};

namespace detail {

inline long long rand_int(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Rational rand_rational(std::mt19937_64& rng) {
    long long num = rand_int(rng, -3, 3);
    long long den = rand_int(rng, 1, 2);
    return Rational(num, den);
}

} // namespace detail

inline ProbeStats probe_conjecture(long long samples, std::uint64_t seed) {
    ProbeStats stats;
    std::mt19937_64 rng(seed);
    for (long long s = 0; s < samples; ++s) {
        int family = static_cast<int>(detail::rand_int(rng, 1, 3));
        Params p;
        const CatalogEntry& entry = find_entry("sl2-inf-" + std::to_string(family));
        for (const auto& ps : entry.params)
            p[ps.name] = detail::rand_rational(rng);
        if (family == 3 && p["a3"].is_zero())
            p["a3"] = Rational(1); // family (3) requires a3 != 0
        DeformationSeries d = std::get<DeformationSeries>(get(entry.name, p));
        ++stats.samples;

        HomAlgebra base = d.base_algebra();
        bool side = tau_condition_lie(base, d.twists[1]).is_zero();
        if (!side)
            continue;
        ++stats.side_condition_held;

        bool lie = true;
        for (const auto& jac : classical_jacobiator_orders(d.products, 2))
            if (!jac.is_zero())
                lie = false;
        if (lie)
            ++stats.lie_for_all_t;
        else
            ++stats.counterexamples;
    }
    return stats;
}

} // namespace catalog
} // namespace homdef
