#pragma once

#include "homdef/algebra.hpp"
#include "homdef/cochain.hpp"
#include "homdef/series.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace homdef {

/// A formal deformation truncated at order N: products[i] is mu_i (or the
/// i-th bracket) and twists[i] is alpha_i. Stored raw; verify() and
/// skew_per_order() check the semantic requirements, so that corrupted or
/// merely-candidate data can be represented and diagnosed.
struct DeformationSeries {
    CochainFlavor flavor;
    std::vector<BilinearMap> products;
    std::vector<LinearMap> twists;
    std::vector<std::string> basis; // labels of the underlying space; may be empty

    DeformationSeries(CochainFlavor flavor_, std::vector<BilinearMap> products_,
                      std::vector<LinearMap> twists_, std::vector<std::string> basis_ = {})
        : flavor(flavor_), products(std::move(products_)), twists(std::move(twists_)),
          basis(std::move(basis_)) {
        if (products.empty() || products.size() != twists.size())
            throw std::invalid_argument("DeformationSeries: need N+1 products and N+1 twists");
        const int n = products[0].dim();
        for (const auto& p : products)
            if (p.dim() != n)
                throw std::invalid_argument("DeformationSeries: product dimension mismatch");
        for (const auto& t : twists)
            if (t.dim() != n)
                throw std::invalid_argument("DeformationSeries: twist dimension mismatch");
        if (!basis.empty() && static_cast<int>(basis.size()) != n)
            throw std::invalid_argument("DeformationSeries: basis label count mismatch");
    }

    int order() const { return static_cast<int>(products.size()) - 1; }
    int dim() const { return products[0].dim(); }

    AlgebraKind base_kind() const {
        return flavor == CochainFlavor::Associative ? AlgebraKind::HomAssociative
                                                    : AlgebraKind::HomLie;
    }
    HomAlgebra base_algebra() const {
        return HomAlgebra(base_kind(), basis, products[0], twists[0]);
    }
};

/// Degree-s term of the Hom-associative deformation equation:
/// sum over k = 0..s, i = 0..s-k of mu_i o_{alpha_k} mu_{s-k-i}.
inline Trilinear residual_assoc(const DeformationSeries& d, int s) {
    if (d.flavor != CochainFlavor::Associative)
        throw std::invalid_argument("residual_assoc: deformation is not associative-flavored");
    if (s < 0 || s > d.order())
        throw std::invalid_argument("residual_assoc: order out of range");
    Trilinear acc(d.dim());
    for (int k = 0; k <= s; ++k)
        for (int i = 0; i <= s - k; ++i)
            acc = acc + alpha_associator(d.products[static_cast<std::size_t>(i)],
                                         d.products[static_cast<std::size_t>(s - k - i)],
                                         d.twists[static_cast<std::size_t>(k)]);
    return acc;
}

/// Degree-s term of the Hom-Lie deformation equation:
/// sum over i+j+k = s of the cyclic sum of [alpha_j(x), [y,z]_k]_i.
inline Trilinear residual_lie(const DeformationSeries& d, int s) {
    if (d.flavor != CochainFlavor::Lie)
        throw std::invalid_argument("residual_lie: deformation is not lie-flavored");
    if (s < 0 || s > d.order())
        throw std::invalid_argument("residual_lie: order out of range");
    Trilinear acc(d.dim());
    for (int i = 0; i <= s; ++i)
        for (int j = 0; i + j <= s; ++j) {
            int k = s - i - j;
            acc = acc + cyclic_twisted_jacobiator(d.products[static_cast<std::size_t>(i)],
                                                  d.twists[static_cast<std::size_t>(j)],
                                                  d.products[static_cast<std::size_t>(k)]);
        }
    return acc;
}

inline Trilinear residual(const DeformationSeries& d, int s) {
    return d.flavor == CochainFlavor::Associative ? residual_assoc(d, s) : residual_lie(d, s);
}

/// Per-order verdicts of the truncated deformation equation.
struct VerifyReport {
    bool pass = true;
    std::vector<CheckReport> orders;

    const CheckReport* first_failure() const {
        for (const auto& r : orders)
            if (!r.pass)
                return &r;
        return nullptr;
    }
};

/// Checks the deformation equation at every order s = 0..N.
inline VerifyReport verify(const DeformationSeries& d) {
    VerifyReport rep;
    for (int s = 0; s <= d.order(); ++s) {
        CheckReport r = report_from_residual("order " + std::to_string(s), residual(d, s), s);
        rep.pass = rep.pass && r.pass;
        rep.orders.push_back(std::move(r));
    }
    return rep;
}

/// Skew-symmetry holds for the whole bracket series iff it holds order by
/// order.
inline bool skew_per_order(const DeformationSeries& d) {
    if (d.flavor != CochainFlavor::Lie)
        throw std::invalid_argument("skew_per_order: deformation is not lie-flavored");
    for (const auto& p : d.products)
        if (!p.is_alternating())
            return false;
    return true;
}

/// Formal isomorphism Phi_t = Id + Phi_1 t + ... + Phi_N t^N.
struct FormalIso {
    std::vector<LinearMap> maps;

    explicit FormalIso(std::vector<LinearMap> maps_) : maps(std::move(maps_)) {
        if (maps.empty())
            throw std::invalid_argument("FormalIso: need at least the order-0 map");
        if (maps[0] != LinearMap::identity(maps[0].dim()))
            throw std::invalid_argument("FormalIso: order-0 map must be the identity");
        for (const auto& m : maps)
            if (m.dim() != maps[0].dim())
                throw std::invalid_argument("FormalIso: dimension mismatch");
    }

    int order() const { return static_cast<int>(maps.size()) - 1; }
    int dim() const { return maps[0].dim(); }

    /// Orders of Phi_t^{-1}: Psi_0 = Id and Psi_s = -sum_{i=1..s} Phi_i Psi_{s-i}.
    std::vector<LinearMap> inverse_orders() const {
        std::vector<LinearMap> psi;
        psi.push_back(LinearMap::identity(dim()));
        for (int s = 1; s <= order(); ++s) {
            LinearMap acc = LinearMap::zero(dim());
            for (int i = 1; i <= s; ++i)
                acc = acc + maps[static_cast<std::size_t>(i)].compose(psi[static_cast<std::size_t>(s - i)]);
            psi.push_back(-acc);
        }
        return psi;
    }
};

/// Transports a deformation along a formal isomorphism:
/// mu'_t = Phi_t . mu_t . (Phi_t^{-1} x Phi_t^{-1}) and
/// alpha'_t = Phi_t . alpha_t . Phi_t^{-1}, truncated at N.
/// The result verifies iff the input does.
inline DeformationSeries apply_equivalence(const DeformationSeries& d, const FormalIso& phi) {
    if (phi.order() != d.order())
        throw std::invalid_argument("apply_equivalence: order mismatch");
    if (phi.dim() != d.dim())
        throw std::invalid_argument("apply_equivalence: dimension mismatch");
    const int n = d.dim();
    const int N = d.order();
    std::vector<LinearMap> psi = phi.inverse_orders();

    std::vector<BilinearMap> new_products(static_cast<std::size_t>(N) + 1, BilinearMap(n));
    for (int a = 0; a <= N; ++a)
        for (int b = 0; a + b <= N; ++b)
            for (int c = 0; a + b + c <= N; ++c)
                for (int e = 0; a + b + c + e <= N; ++e) {
                    int s = a + b + c + e;
                    // Phi_a( mu_b( Psi_c x, Psi_e y ) )
                    BilinearMap term(n);
                    for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j) {
                            Vec<Rational> v = phi.maps[static_cast<std::size_t>(a)].apply(
                                d.products[static_cast<std::size_t>(b)].apply(
                                    psi[static_cast<std::size_t>(c)].apply_basis(i),
                                    psi[static_cast<std::size_t>(e)].apply_basis(j)));
                            for (int k = 0; k < n; ++k)
                                term.c(i, j, k) = v[k];
                        }
                    new_products[static_cast<std::size_t>(s)] =
                        new_products[static_cast<std::size_t>(s)] + term;
                }

    std::vector<LinearMap> new_twists(static_cast<std::size_t>(N) + 1, LinearMap::zero(n));
    for (int a = 0; a <= N; ++a)
        for (int b = 0; a + b <= N; ++b)
            for (int c = 0; a + b + c <= N; ++c) {
                int s = a + b + c;
                new_twists[static_cast<std::size_t>(s)] =
                    new_twists[static_cast<std::size_t>(s)] +
                    phi.maps[static_cast<std::size_t>(a)]
                        .compose(d.twists[static_cast<std::size_t>(b)])
                        .compose(psi[static_cast<std::size_t>(c)]);
            }

    return DeformationSeries(d.flavor, std::move(new_products), std::move(new_twists));
}

/// Verdict of the first-order cocycle characterization. The hypothesis is
/// the standing assumption of the cohomological description (vanishing
/// rho^2(alpha_i) for the associative flavor, vanishing cyclic
/// [alpha_1(x), [y,z]_0]_0 for the Lie flavor); violations are reported
/// separately from cocycle failures, never silently ignored.
struct CocycleReport {
    bool hypothesis_ok = true;
    std::optional<TripleWitness> hypothesis_witness;
    bool cocycle_ok = true;
    std::optional<TripleWitness> cocycle_witness;
    std::string note;

    bool pass() const { return hypothesis_ok && cocycle_ok; }
};

/// Checks that the first-order pair (products[1], twists[1]) is a
/// 2-Hom-cocycle of the base.
inline CocycleReport first_order_cocycle_check(const DeformationSeries& d) {
    CocycleReport rep;
    HomAlgebra base = d.base_algebra();
    if (d.order() < 1) {
        rep.note = "order-0 deformation: first-order term is zero, trivially a cocycle";
        return rep;
    }
    const BilinearMap& mu1 = d.products[1];
    const LinearMap& alpha1 = d.twists[1];

    if (d.flavor == CochainFlavor::Associative) {
        // Hypothesis: rho^2(alpha_i) = mu_0 o_{alpha_i} mu_0 = 0 for all i >= 1.
        for (int i = 1; i <= d.order() && rep.hypothesis_ok; ++i) {
            CheckReport h = report_from_residual(
                "hypothesis", rho2_assoc(base, d.twists[static_cast<std::size_t>(i)]), i);
            if (!h.pass) {
                rep.hypothesis_ok = false;
                rep.hypothesis_witness = h.witness;
            }
        }
        CheckReport c = report_from_residual("cocycle", delta2_hom(base, mu1), 1);
        rep.cocycle_ok = c.pass;
        rep.cocycle_witness = c.witness;
    } else {
        CheckReport h = report_from_residual("hypothesis", tau_condition_lie(base, alpha1), 1);
        rep.hypothesis_ok = h.pass;
        rep.hypothesis_witness = h.witness;
        if (!mu1.is_alternating()) {
            rep.cocycle_ok = false;
            rep.note = "first-order bracket is not alternating";
            return rep;
        }
        CheckReport c = report_from_residual("cocycle", delta2_HL(base, mu1), 1);
        rep.cocycle_ok = c.pass;
        rep.cocycle_witness = c.witness;
    }
    return rep;
}

/// Right-hand side R_s that delta^2 mu_s must equal for the deformation
/// equation to hold at order s >= 2 (associative flavor):
/// R_s = - sum_{k=1}^{s-1} sum_{p=0}^{k} mu_{s-k} o_{alpha_p} mu_{k-p}
///       - sum_{k=1}^{s}   mu_0 o_{alpha_k} mu_{s-k}.
/// Satisfies residual_assoc(d, s) = delta2_hom(base, mu_s) - R_s.
inline Trilinear obstruction_assoc(const DeformationSeries& d, int s) {
    if (d.flavor != CochainFlavor::Associative)
        throw std::invalid_argument("obstruction_assoc: deformation is not associative-flavored");
    if (s < 2 || s > d.order())
        throw std::invalid_argument("obstruction_assoc: order must be in [2, N]");
    Trilinear acc(d.dim());
    for (int k = 1; k <= s - 1; ++k)
        for (int p = 0; p <= k; ++p)
            acc = acc + alpha_associator(d.products[static_cast<std::size_t>(s - k)],
                                         d.products[static_cast<std::size_t>(k - p)],
                                         d.twists[static_cast<std::size_t>(p)]);
    for (int k = 1; k <= s; ++k)
        acc = acc + alpha_associator(d.products[0], d.products[static_cast<std::size_t>(s - k)],
                                     d.twists[static_cast<std::size_t>(k)]);
    return Rational(-1) * acc;
}

/// Attempts to extend a deformation that verifies through order N by one
/// more order, with the next twist alpha_{N+1} given (zero by default): the
/// deformation equation at order N+1 is affine in the unknown mu_{N+1}, so
/// the extension reduces to solving delta^2(mu_{N+1}) = R_{N+1} exactly.
/// Absence of a solution means the obstruction is not resolvable at this
/// order for this twist. Returns the canonical solution when one exists.
inline std::optional<BilinearMap> extend_deformation(const DeformationSeries& d,
                                                     const LinearMap& alpha_next) {
    if (alpha_next.dim() != d.dim())
        throw std::invalid_argument("extend_deformation: twist dimension mismatch");
    const int n = d.dim();
    const int s = d.order() + 1;

    // Candidate with mu_s = 0: the residual is then exactly -R_s.
    std::vector<BilinearMap> products = d.products;
    std::vector<LinearMap> twists = d.twists;
    products.push_back(BilinearMap(n));
    twists.push_back(alpha_next);
    DeformationSeries candidate(d.flavor, std::move(products), std::move(twists));
    Vec<Rational> rhs = -trilinear_to_coords(residual(candidate, s));

    HomAlgebra base = d.base_algebra();
    CochainFlavor flavor = d.flavor;
    Mat<Rational> delta2 = linearized_delta2(base, flavor);
    auto sol = solve_affine(delta2, rhs);
    if (!sol)
        return std::nullopt;
    return cochain2_from_coords(n, flavor, sol->particular);
}

inline std::optional<BilinearMap> extend_deformation(const DeformationSeries& d) {
    return extend_deformation(d, LinearMap::zero(d.dim()));
}

/// The deformation's product as a single bilinear map with truncated-series
/// coefficients (order N). Used as an independent series-arithmetic route to
/// the same residuals.
inline BilinearMapT<TruncSeries> product_series(const DeformationSeries& d) {
    const int n = d.dim();
    const int N = d.order();
    BilinearMapT<TruncSeries> out(n, TruncSeries(N));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                TruncSeries s(N);
                for (int ord = 0; ord <= N; ++ord)
                    s.set_coeff(ord, d.products[static_cast<std::size_t>(ord)].c(i, j, k));
                out.c(i, j, k) = std::move(s);
            }
    return out;
}

/// The deformation's twist as a series-coefficient linear map.
inline LinearMapT<TruncSeries> twist_series(const DeformationSeries& d) {
    const int n = d.dim();
    const int N = d.order();
    Mat<TruncSeries> m(n, n, TruncSeries(N));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            TruncSeries s(N);
            for (int ord = 0; ord <= N; ++ord)
                s.set_coeff(ord, d.twists[static_cast<std::size_t>(ord)].entry(i, j));
            m(i, j) = std::move(s);
        }
    return LinearMapT<TruncSeries>(std::move(m));
}

} // namespace homdef
