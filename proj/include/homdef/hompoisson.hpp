#pragma once

#include "homdef/algebra.hpp"
#include "homdef/cochain.hpp"
#include "homdef/deform.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace homdef {

/// The bracket {x, y} := mu_1(x, y) - mu_1(y, x) extracted from a
/// first-order deformation term.
inline BilinearMap bracket_from_mu1(const BilinearMap& mu1) {
    return mu1.antisymmetrize();
}

/// Per-axiom verdicts for a Hom-Poisson candidate.
struct PoissonReport {
    bool pass = true;
    std::vector<CheckReport> parts;

    const CheckReport* find(const std::string& name) const {
        for (const auto& p : parts)
            if (p.name == name)
                return &p;
        return nullptr;
    }
};

/// Checks the three Hom-Poisson axioms on all basis tuples: commutative
/// Hom-associativity of mu, the Hom-Lie axioms for the bracket, and the
/// twisted Leibniz compatibility
///   {alpha(x), mu(y,z)} = mu(alpha(y), {x,z}) + mu(alpha(z), {x,y}),
/// also in its equivalent form
///   {mu(x,y), alpha(z)} = mu({x,z}, alpha(y)) + mu(alpha(x), {y,z}).
inline PoissonReport check_hom_poisson(const HomPoissonAlgebra& p) {
    PoissonReport rep;
    const int n = p.dim;

    {
        CheckReport r;
        r.name = "mu commutative";
        r.checked = static_cast<long long>(n) * n;
        r.pass = p.mu.is_commutative();
        if (!r.pass)
            r.note = "mu(x,y) != mu(y,x) somewhere";
        rep.parts.push_back(std::move(r));
    }
    {
        CheckReport r = report_from_residual("mu hom-associative",
                                             alpha_associator(p.mu, p.mu, p.alpha));
        rep.parts.push_back(std::move(r));
    }
    {
        CheckReport r;
        r.name = "bracket alternating";
        r.checked = static_cast<long long>(n) * n;
        r.pass = p.bracket.is_alternating();
        rep.parts.push_back(std::move(r));
    }
    if (p.bracket.is_alternating()) {
        CheckReport r = report_from_residual(
            "bracket hom-jacobi", cyclic_twisted_jacobiator(p.bracket, p.alpha, p.bracket));
        rep.parts.push_back(std::move(r));
    }
    {
        Trilinear residual(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    Vec<Rational> lhs =
                        p.bracket.apply(p.alpha.apply_basis(i), p.mu.apply_basis(j, k));
                    Vec<Rational> rhs =
                        p.mu.apply(p.alpha.apply_basis(j), p.bracket.apply_basis(i, k)) +
                        p.mu.apply(p.alpha.apply_basis(k), p.bracket.apply_basis(i, j));
                    residual.set_value(i, j, k, lhs - rhs);
                }
        rep.parts.push_back(report_from_residual("compatibility", residual));
    }
    {
        Trilinear residual(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    Vec<Rational> lhs =
                        p.bracket.apply(p.mu.apply_basis(i, j), p.alpha.apply_basis(k));
                    Vec<Rational> rhs =
                        p.mu.apply(p.bracket.apply_basis(i, k), p.alpha.apply_basis(j)) +
                        p.mu.apply(p.alpha.apply_basis(i), p.bracket.apply_basis(j, k));
                    residual.set_value(i, j, k, lhs - rhs);
                }
        rep.parts.push_back(report_from_residual("compatibility (leibniz form)", residual));
    }
    for (const auto& part : rep.parts)
        rep.pass = rep.pass && part.pass;
    return rep;
}

/// Assembles the Hom-Poisson quadruple (V, mu_0, {.,.}, alpha_0) from a
/// verified deformation of a commutative base. The Hom-Jacobi identity of
/// the extracted bracket consumes the order-2 deformation equation, so
/// truncations below N = 2 are rejected.
inline HomPoissonAlgebra poisson_from_deformation(const DeformationSeries& d) {
    if (d.flavor != CochainFlavor::Associative)
        throw std::invalid_argument("poisson_from_deformation: deformation must be associative-flavored");
    if (!d.products[0].is_commutative())
        throw std::invalid_argument("poisson_from_deformation: base product must be commutative");
    if (d.order() < 2)
        throw std::invalid_argument(
            "poisson_from_deformation: need order >= 2 (the bracket's hom-jacobi identity "
            "uses the order-2 deformation equation)");
    if (!verify(d).pass)
        throw std::invalid_argument("poisson_from_deformation: deformation fails to verify");
    BilinearMap bracket = bracket_from_mu1(d.products[1]);
    return HomPoissonAlgebra(d.products[0], std::move(bracket), d.twists[0]);
}

/// For a commutative Hom-associative base and an alternating 2-cocycle phi,
/// checks the induced Leibniz rule
///   phi(alpha(x), mu(y,z)) = mu(alpha(y), phi(x,z)) + mu(alpha(z), phi(x,y)).
/// Preconditions (commutativity, Hom-associativity, alternation, and
/// delta^2 phi = 0) are enforced, not assumed.
inline CheckReport cocycle_leibniz_property(const HomAlgebra& a, const BilinearMap& phi) {
    require_kind(a, AlgebraKind::HomAssociative, "cocycle_leibniz_property");
    if (!a.product.is_commutative())
        throw std::invalid_argument("cocycle_leibniz_property: product must be commutative");
    if (!check_hom_associative(a).pass)
        throw std::invalid_argument("cocycle_leibniz_property: base fails hom-associativity");
    if (!phi.is_alternating())
        throw std::invalid_argument("cocycle_leibniz_property: cochain must be alternating");
    if (!delta2_hom(a, phi).is_zero())
        throw std::invalid_argument("cocycle_leibniz_property: cochain is not a 2-cocycle");
    const int n = a.dim;
    Trilinear residual(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec<Rational> lhs = phi.apply(a.alpha.apply_basis(i), a.product.apply_basis(j, k));
                Vec<Rational> rhs =
                    a.product.apply(a.alpha.apply_basis(j), phi.apply_basis(i, k)) +
                    a.product.apply(a.alpha.apply_basis(k), phi.apply_basis(i, j));
                residual.set_value(i, j, k, lhs - rhs);
            }
    return report_from_residual("cocycle leibniz property", residual);
}

} // namespace homdef
