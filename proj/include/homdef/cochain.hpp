#pragma once

#include "homdef/algebra.hpp"
#include "homdef/linalg.hpp"
#include "homdef/tensor.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace homdef {

/// The two cochain-complex flavors. Associative cochains are arbitrary
/// bilinear maps; Lie cochains are alternating.
enum class CochainFlavor { Associative, Lie };

inline std::string flavor_name(CochainFlavor f) {
    return f == CochainFlavor::Associative ? "associative" : "lie";
}

/// rho^1(tau) = tau . alpha - alpha . tau.
inline LinearMap rho1(const HomAlgebra& a, const LinearMap& tau) {
    if (tau.dim() != a.dim)
        throw std::invalid_argument("rho1: dimension mismatch");
    return tau.compose(a.alpha) - a.alpha.compose(tau);
}

/// rho^2(tau) = mu o_tau mu, the twist-constraint tensor of the associative
/// flavor: mu(tau(x), mu(y,z)) - mu(mu(x,y), tau(z)).
inline Trilinear rho2_assoc(const HomAlgebra& a, const LinearMap& tau) {
    if (tau.dim() != a.dim)
        throw std::invalid_argument("rho2_assoc: dimension mismatch");
    return alpha_associator(a.product, a.product, tau);
}

/// Cyclic sum of [tau(x), [y, z]]; the twist constraint of the Lie flavor.
inline Trilinear tau_condition_lie(const HomAlgebra& g, const LinearMap& tau) {
    require_kind(g, AlgebraKind::HomLie, "tau_condition_lie");
    if (tau.dim() != g.dim)
        throw std::invalid_argument("tau_condition_lie: dimension mismatch");
    return cyclic_twisted_jacobiator(g.product, tau, g.product);
}

/// A 2-Hom-cochain candidate: a bilinear component phi paired with a twist
/// component tau. Whether tau satisfies its constraint (rho^2 tau = 0 for
/// the associative flavor, the cyclic bracket condition for the Lie flavor)
/// is checked, not assumed.
struct HomCochain2 {
    BilinearMap phi;
    LinearMap tau;
};

/// Verifies the structural requirements of a 2-Hom-cochain over `a`:
/// alternation of phi for the Lie flavor plus the twist constraint on tau.
inline CheckReport check_hom_cochain2(const HomAlgebra& a, CochainFlavor flavor,
                                      const HomCochain2& c) {
    if (c.phi.dim() != a.dim || c.tau.dim() != a.dim)
        throw std::invalid_argument("check_hom_cochain2: dimension mismatch");
    if (flavor == CochainFlavor::Lie && !c.phi.is_alternating()) {
        CheckReport rep;
        rep.name = "2-hom-cochain";
        rep.pass = false;
        rep.note = "lie-flavor phi component must be alternating";
        return rep;
    }
    Trilinear constraint = flavor == CochainFlavor::Associative
                               ? rho2_assoc(a, c.tau)
                               : tau_condition_lie(a, c.tau);
    CheckReport rep = report_from_residual("2-hom-cochain", constraint);
    if (!rep.pass)
        rep.note = "twist component violates its constraint";
    return rep;
}

/// delta^1 f (x, y) = f(mu(x,y)) - mu(f(x), y) - mu(x, f(y)).
inline BilinearMap delta1_hom(const HomAlgebra& a, const LinearMap& f) {
    if (f.dim() != a.dim)
        throw std::invalid_argument("delta1_hom: dimension mismatch");
    const int n = a.dim;
    BilinearMap out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec<Rational> v = f.apply(a.product.apply_basis(i, j)) -
                              a.product.apply(f.apply_basis(i), Vec<Rational>::unit(n, j)) -
                              a.product.apply(Vec<Rational>::unit(n, i), f.apply_basis(j));
            for (int k = 0; k < n; ++k)
                out.c(i, j, k) = v[k];
        }
    return out;
}

/// delta^2 phi (x,y,z) = phi(alpha(x), mu(y,z)) - phi(mu(x,y), alpha(z))
///                     + mu(alpha(x), phi(y,z)) - mu(phi(x,y), alpha(z)).
/// Equals phi o_alpha mu + mu o_alpha phi.
inline Trilinear delta2_hom(const HomAlgebra& a, const BilinearMap& phi) {
    if (phi.dim() != a.dim)
        throw std::invalid_argument("delta2_hom: dimension mismatch");
    const int n = a.dim;
    Trilinear out(n);
    for (int i = 0; i < n; ++i) {
        Vec<Rational> ax = a.alpha.apply_basis(i);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec<Rational> az = a.alpha.apply_basis(k);
                Vec<Rational> v = phi.apply(ax, a.product.apply_basis(j, k)) -
                                  phi.apply(a.product.apply_basis(i, j), az) +
                                  a.product.apply(ax, phi.apply_basis(j, k)) -
                                  a.product.apply(phi.apply_basis(i, j), az);
                out.set_value(i, j, k, v);
            }
    }
    return out;
}

/// delta^1 f (x, y) = f([x,y]) - [f(x), y] - [x, f(y)]; alternating whenever
/// the bracket is.
inline BilinearMap delta1_HL(const HomAlgebra& g, const LinearMap& f) {
    require_kind(g, AlgebraKind::HomLie, "delta1_HL");
    if (f.dim() != g.dim)
        throw std::invalid_argument("delta1_HL: dimension mismatch");
    const int n = g.dim;
    BilinearMap out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec<Rational> v = f.apply(g.product.apply_basis(i, j)) -
                              g.product.apply(f.apply_basis(i), Vec<Rational>::unit(n, j)) -
                              g.product.apply(Vec<Rational>::unit(n, i), f.apply_basis(j));
            for (int k = 0; k < n; ++k)
                out.c(i, j, k) = v[k];
        }
    return out;
}

/// delta^2 phi (x,y,z) = cyclic sum of phi(alpha(x), [y,z]) + [alpha(x), phi(y,z)].
inline Trilinear delta2_HL(const HomAlgebra& g, const BilinearMap& phi) {
    require_kind(g, AlgebraKind::HomLie, "delta2_HL");
    if (phi.dim() != g.dim)
        throw std::invalid_argument("delta2_HL: dimension mismatch");
    if (!phi.is_alternating())
        throw std::invalid_argument("delta2_HL: cochain must be alternating");
    return cyclic_twisted_jacobiator(phi, g.alpha, g.product) +
           cyclic_twisted_jacobiator(g.product, g.alpha, phi);
}

/// A 2-Hom-cocycle is a 2-Hom-cochain whose phi component additionally
/// satisfies delta^2 phi = 0.
inline CheckReport check_hom_cocycle2(const HomAlgebra& a, CochainFlavor flavor,
                                      const HomCochain2& c) {
    CheckReport structural = check_hom_cochain2(a, flavor, c);
    if (!structural.pass)
        return structural;
    Trilinear d2 = flavor == CochainFlavor::Associative ? delta2_hom(a, c.phi)
                                                        : delta2_HL(a, c.phi);
    return report_from_residual("2-hom-cocycle", d2);
}

// ---------------------------------------------------------------------------
// Linearization. Fixed coordinate orderings keep every computed basis
// reproducible across runs and platforms.
//
//   1-cochains:  matrix entries row-major, coord i*n + j <-> entry(i, j).
//   2-cochains:  associative flavor: coord (i*n + j)*n + k <-> c(i, j, k);
//                lie flavor: pairs i < j lexicographic, coord p*n + k where
//                p is the pair index.
//   3-tensors:   coord ((i*n + j)*n + k)*n + l.
// ---------------------------------------------------------------------------

inline int cochain2_dim(int n, CochainFlavor flavor) {
    return flavor == CochainFlavor::Associative ? n * n * n : n * (n - 1) / 2 * n;
}

inline Vec<Rational> cochain2_to_coords(const BilinearMap& phi, CochainFlavor flavor) {
    const int n = phi.dim();
    Vec<Rational> out(cochain2_dim(n, flavor));
    int t = 0;
    if (flavor == CochainFlavor::Associative) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    out[t++] = phi.c(i, j, k);
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    out[t++] = phi.c(i, j, k);
    }
    return out;
}

inline BilinearMap cochain2_from_coords(int n, CochainFlavor flavor, const Vec<Rational>& v) {
    if (v.dim() != cochain2_dim(n, flavor))
        throw std::invalid_argument("cochain2_from_coords: coordinate count mismatch");
    BilinearMap phi(n);
    int t = 0;
    if (flavor == CochainFlavor::Associative) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    phi.c(i, j, k) = v[t++];
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    phi.c(i, j, k) = v[t];
                    phi.c(j, i, k) = -v[t];
                    ++t;
                }
    }
    return phi;
}

inline Vec<Rational> cochain1_to_coords(const LinearMap& f) {
    const int n = f.dim();
    Vec<Rational> out(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out[i * n + j] = f.entry(i, j);
    return out;
}

inline LinearMap cochain1_from_coords(int n, const Vec<Rational>& v) {
    Mat<Rational> m(n, n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = v[i * n + j];
    return LinearMap(std::move(m));
}

inline Vec<Rational> trilinear_to_coords(const Trilinear& t) {
    const int n = t.dim();
    Vec<Rational> out(n * n * n * n);
    int idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    out[idx++] = t.c(i, j, k, l);
    return out;
}

/// Matrix of delta^2 in the fixed coordinates: rows n^4, one column per
/// 2-cochain coordinate.
inline Mat<Rational> linearized_delta2(const HomAlgebra& a, CochainFlavor flavor) {
    const int n = a.dim;
    const int cols = cochain2_dim(n, flavor);
    Mat<Rational> m(n * n * n * n, cols, Rational(0));
    for (int t = 0; t < cols; ++t) {
        Vec<Rational> e(cols, Rational(0));
        e[t] = Rational(1);
        BilinearMap phi = cochain2_from_coords(n, flavor, e);
        Trilinear image = flavor == CochainFlavor::Associative ? delta2_hom(a, phi)
                                                               : delta2_HL(a, phi);
        Vec<Rational> coords = trilinear_to_coords(image);
        for (int r = 0; r < coords.dim(); ++r)
            m(r, t) = coords[r];
    }
    return m;
}

/// Matrix of delta^1 in the fixed coordinates: one column per 1-cochain
/// coordinate, rows in the flavor's 2-cochain coordinates.
inline Mat<Rational> linearized_delta1(const HomAlgebra& a, CochainFlavor flavor) {
    const int n = a.dim;
    const int rows = cochain2_dim(n, flavor);
    Mat<Rational> m(rows, n * n, Rational(0));
    for (int t = 0; t < n * n; ++t) {
        Vec<Rational> e(n * n, Rational(0));
        e[t] = Rational(1);
        LinearMap f = cochain1_from_coords(n, e);
        BilinearMap image =
            flavor == CochainFlavor::Associative ? delta1_hom(a, f) : delta1_HL(a, f);
        Vec<Rational> coords = cochain2_to_coords(image, flavor);
        for (int r = 0; r < rows; ++r)
            m(r, t) = coords[r];
    }
    return m;
}

/// Matrix of rho^1 (the twist-commutation constraint on 1-cochains).
inline Mat<Rational> linearized_rho1(const HomAlgebra& a) {
    const int n = a.dim;
    Mat<Rational> m(n * n, n * n, Rational(0));
    for (int t = 0; t < n * n; ++t) {
        Vec<Rational> e(n * n, Rational(0));
        e[t] = Rational(1);
        LinearMap f = cochain1_from_coords(n, e);
        Vec<Rational> coords = cochain1_to_coords(rho1(a, f));
        for (int r = 0; r < n * n; ++r)
            m(r, t) = coords[r];
    }
    return m;
}

/// Exact dimensions and canonical bases of the degree-2 cohomology. The
/// paper-level Z^2 and B^2 are sets of pairs (phi, tau) whose tau component
/// ranges over one and the same constraint space, so the quotient collapses
/// to the phi part: dim H^2 = dim ker(delta^2) - dim delta^1({f : rho^1 f = 0}).
struct CohomologyReport {
    CochainFlavor flavor;
    int dim_Z2 = 0;
    int dim_B2 = 0;
    int dim_H2 = 0;
    std::vector<BilinearMap> basis_Z2;
    std::vector<BilinearMap> basis_B2;
};

inline CohomologyReport cohomology2(const HomAlgebra& a, CochainFlavor flavor) {
    AlgebraKind want = flavor == CochainFlavor::Associative ? AlgebraKind::HomAssociative
                                                            : AlgebraKind::HomLie;
    require_kind(a, want, "cohomology2");
    if (!check_identity(a).pass)
        throw std::invalid_argument("cohomology2: base algebra fails its defining identity");

    const int n = a.dim;
    CohomologyReport rep;
    rep.flavor = flavor;

    for (const auto& v : kernel_basis(linearized_delta2(a, flavor)))
        rep.basis_Z2.push_back(cochain2_from_coords(n, flavor, v));
    rep.dim_Z2 = static_cast<int>(rep.basis_Z2.size());

    // B^2 = delta^1 of the commutant {f : rho^1 f = 0}, reduced to a
    // canonical RREF row basis.
    auto commutant = kernel_basis(linearized_rho1(a));
    const int c2 = cochain2_dim(n, flavor);
    if (!commutant.empty() && c2 > 0) {
        Mat<Rational> images(static_cast<int>(commutant.size()), c2, Rational(0));
        for (int r = 0; r < static_cast<int>(commutant.size()); ++r) {
            LinearMap f = cochain1_from_coords(n, commutant[static_cast<std::size_t>(r)]);
            BilinearMap image =
                flavor == CochainFlavor::Associative ? delta1_hom(a, f) : delta1_HL(a, f);
            Vec<Rational> coords = cochain2_to_coords(image, flavor);
            for (int t = 0; t < c2; ++t)
                images(r, t) = coords[t];
        }
        auto [red, rank] = rref(std::move(images));
        rep.dim_B2 = rank;
        for (int r = 0; r < rank; ++r) {
            Vec<Rational> row(c2);
            for (int t = 0; t < c2; ++t)
                row[t] = red(r, t);
            rep.basis_B2.push_back(cochain2_from_coords(n, flavor, row));
        }
    }
    rep.dim_H2 = rep.dim_Z2 - rep.dim_B2;
    return rep;
}

/// Canonical basis of {f : delta^1 f = 0 and f commutes with alpha}: the
/// derivation space of the algebra. In degree 1 the cocycle space is the
/// whole story (there is nothing to quotient by), so this is also the
/// degree-1 cohomology.
inline std::vector<LinearMap> derivations(const HomAlgebra& a, CochainFlavor flavor) {
    const int n = a.dim;
    Mat<Rational> d1 = linearized_delta1(a, flavor);
    Mat<Rational> r1 = linearized_rho1(a);
    Mat<Rational> stacked(d1.rows() + r1.rows(), n * n, Rational(0));
    for (int i = 0; i < d1.rows(); ++i)
        for (int j = 0; j < n * n; ++j)
            stacked(i, j) = d1(i, j);
    for (int i = 0; i < r1.rows(); ++i)
        for (int j = 0; j < n * n; ++j)
            stacked(d1.rows() + i, j) = r1(i, j);
    std::vector<LinearMap> out;
    for (const auto& v : kernel_basis(stacked))
        out.push_back(cochain1_from_coords(n, v));
    return out;
}

} // namespace homdef
