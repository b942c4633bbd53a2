#pragma once

#include "homdef/linalg.hpp"
#include "homdef/report.hpp"
#include "homdef/tensor.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace homdef {

enum class AlgebraKind { HomAssociative, HomLie, HomLeibniz };

inline std::string kind_name(AlgebraKind k) {
    switch (k) {
    case AlgebraKind::HomAssociative: return "hom-associative";
    case AlgebraKind::HomLie: return "hom-lie";
    case AlgebraKind::HomLeibniz: return "hom-leibniz";
    }
    return "?";
}

inline std::optional<AlgebraKind> kind_from_name(const std::string& s) {
    if (s == "hom-associative")
        return AlgebraKind::HomAssociative;
    if (s == "hom-lie")
        return AlgebraKind::HomLie;
    if (s == "hom-leibniz")
        return AlgebraKind::HomLeibniz;
    return std::nullopt;
}

/// A finite-dimensional Hom-algebra candidate: a product (structure-constant
/// tensor), a twist map, and a declared kind. Construction checks structural
/// invariants only (dimensions; alternation for the hom-lie kind). Whether
/// the defining identity of the kind actually holds is a checked property,
/// never a construction invariant: the engine must be able to hold failing
/// candidates.
struct HomAlgebra {
    AlgebraKind kind;
    int dim;
    std::vector<std::string> basis;
    BilinearMap product;
    LinearMap alpha;

    HomAlgebra(AlgebraKind kind_, std::vector<std::string> basis_, BilinearMap product_,
               LinearMap alpha_)
        : kind(kind_), dim(product_.dim()), basis(std::move(basis_)), product(std::move(product_)),
          alpha(std::move(alpha_)) {
        if (dim <= 0)
            throw std::invalid_argument("HomAlgebra: dimension must be positive");
        if (alpha.dim() != dim)
            throw std::invalid_argument("HomAlgebra: product/alpha dimension mismatch");
        if (basis.empty())
            for (int i = 0; i < dim; ++i)
                basis.push_back("e" + std::to_string(i + 1));
        if (static_cast<int>(basis.size()) != dim)
            throw std::invalid_argument("HomAlgebra: basis label count mismatch");
        if (kind == AlgebraKind::HomLie && !product.is_alternating())
            throw std::invalid_argument("HomAlgebra: hom-lie product must be alternating");
    }
};

/// mu(alpha(e_i), mu(e_j, e_k)) - mu(mu(e_i, e_j), alpha(e_k)).
template <Scalar K>
Vec<K> hom_associator(const BilinearMapT<K>& mu, const LinearMapT<K>& alpha, int i, int j, int k) {
    detail::require_same_dim3<K>(mu.dim(), mu.dim(), alpha.dim());
    Vec<K> left = mu.apply(alpha.apply_basis(i), mu.apply_basis(j, k));
    Vec<K> right = mu.apply(mu.apply_basis(i, j), alpha.apply_basis(k));
    return left - right;
}

/// Cyclic sum over (x,y,z) of [alpha(x), [y, z]] at basis indices (i, j, k).
/// Requires an alternating bracket.
template <Scalar K>
Vec<K> hom_jacobiator(const BilinearMapT<K>& bracket, const LinearMapT<K>& alpha, int i, int j,
                      int k) {
    detail::require_same_dim3<K>(bracket.dim(), bracket.dim(), alpha.dim());
    if (!bracket.is_alternating())
        throw std::invalid_argument("hom_jacobiator: bracket must be alternating");
    Vec<K> acc = bracket.apply(alpha.apply_basis(i), bracket.apply_basis(j, k));
    acc += bracket.apply(alpha.apply_basis(j), bracket.apply_basis(k, i));
    acc += bracket.apply(alpha.apply_basis(k), bracket.apply_basis(i, j));
    return acc;
}

inline void require_kind(const HomAlgebra& a, AlgebraKind k, const char* who) {
    if (a.kind != k)
        throw std::invalid_argument(std::string(who) + ": expects a " + kind_name(k) +
                                    " algebra, got " + kind_name(a.kind));
}

/// Checks the Hom-associativity identity on all n^3 basis triples.
inline CheckReport check_hom_associative(const HomAlgebra& a) {
    require_kind(a, AlgebraKind::HomAssociative, "check_hom_associative");
    return report_from_residual("hom-associative identity",
                                alpha_associator(a.product, a.product, a.alpha));
}

/// Checks skew-symmetry plus the Hom-Jacobi identity on all basis triples.
inline CheckReport check_hom_lie(const HomAlgebra& a) {
    require_kind(a, AlgebraKind::HomLie, "check_hom_lie");
    CheckReport rep =
        report_from_residual("hom-jacobi identity",
                             cyclic_twisted_jacobiator(a.product, a.alpha, a.product));
    rep.name = "hom-lie identity";
    return rep;
}

/// Checks [[x,y], alpha(z)] = [[x,z], alpha(y)] + [alpha(x), [y,z]] on all
/// basis triples.
inline CheckReport check_hom_leibniz(const HomAlgebra& a) {
    require_kind(a, AlgebraKind::HomLeibniz, "check_hom_leibniz");
    const int n = a.dim;
    Trilinear residual(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec<Rational> lhs =
                    a.product.apply(a.product.apply_basis(i, j), a.alpha.apply_basis(k));
                Vec<Rational> rhs =
                    a.product.apply(a.product.apply_basis(i, k), a.alpha.apply_basis(j)) +
                    a.product.apply(a.alpha.apply_basis(i), a.product.apply_basis(j, k));
                residual.set_value(i, j, k, lhs - rhs);
            }
    return report_from_residual("hom-leibniz identity", residual);
}

/// Dispatches to the checker for the declared kind.
inline CheckReport check_identity(const HomAlgebra& a) {
    switch (a.kind) {
    case AlgebraKind::HomAssociative: return check_hom_associative(a);
    case AlgebraKind::HomLie: return check_hom_lie(a);
    case AlgebraKind::HomLeibniz: return check_hom_leibniz(a);
    }
    throw std::logic_error("check_identity: unknown kind");
}

/// Tensor product of Hom-associative algebras:
/// (V1 (x) V2, mu1 (x) mu2, alpha1 (x) alpha2). Basis e_i (x) f_p is indexed
/// i * dim(b) + p; labels are pairs.
inline HomAlgebra tensor_product(const HomAlgebra& a, const HomAlgebra& b) {
    require_kind(a, AlgebraKind::HomAssociative, "tensor_product");
    require_kind(b, AlgebraKind::HomAssociative, "tensor_product");
    const int na = a.dim, nb = b.dim, n = na * nb;
    BilinearMap product(n);
    for (int i = 0; i < na; ++i)
        for (int p = 0; p < nb; ++p)
            for (int j = 0; j < na; ++j)
                for (int q = 0; q < nb; ++q)
                    for (int k = 0; k < na; ++k)
                        for (int r = 0; r < nb; ++r)
                            product.c(i * nb + p, j * nb + q, k * nb + r) =
                                a.product.c(i, j, k) * b.product.c(p, q, r);
    Mat<Rational> alpha(n, n, Rational(0));
    for (int i = 0; i < na; ++i)
        for (int p = 0; p < nb; ++p)
            for (int j = 0; j < na; ++j)
                for (int q = 0; q < nb; ++q)
                    alpha(i * nb + p, j * nb + q) = a.alpha.entry(i, j) * b.alpha.entry(p, q);
    std::vector<std::string> labels;
    for (int i = 0; i < na; ++i)
        for (int p = 0; p < nb; ++p)
            labels.push_back(a.basis[static_cast<std::size_t>(i)] + "(x)" +
                             b.basis[static_cast<std::size_t>(p)]);
    return HomAlgebra(AlgebraKind::HomAssociative, std::move(labels), std::move(product),
                      LinearMap(std::move(alpha)));
}

/// True iff phi is a morphism a -> b: product_b(phi x phi) = phi . product_a
/// and phi . alpha_a = alpha_b . phi. Both algebras must share the dimension
/// of phi.
inline bool is_morphism(const LinearMap& phi, const HomAlgebra& a, const HomAlgebra& b) {
    if (phi.dim() != a.dim || a.dim != b.dim)
        throw std::invalid_argument("is_morphism: dimension mismatch");
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            Vec<Rational> lhs = b.product.apply(phi.apply_basis(i), phi.apply_basis(j));
            Vec<Rational> rhs = phi.apply(a.product.apply_basis(i, j));
            if (!(lhs == rhs))
                return false;
        }
    return phi.compose(a.alpha) == b.alpha.compose(phi);
}

/// Finds the two-sided unit of a Hom-associative algebra by solving
/// mu(e_i, u) = e_i and mu(u, e_i) = e_i for all i, or reports absence.
inline std::optional<Vec<Rational>> find_unit(const HomAlgebra& a) {
    require_kind(a, AlgebraKind::HomAssociative, "find_unit");
    const int n = a.dim;
    Mat<Rational> sys(2 * n * n, n, Rational(0));
    Vec<Rational> rhs(2 * n * n, Rational(0));
    int row = 0;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            for (int j = 0; j < n; ++j) {
                sys(row, j) = a.product.c(i, j, k);     // mu(e_i, u) = e_i
                sys(row + 1, j) = a.product.c(j, i, k); // mu(u, e_i) = e_i
            }
            Rational delta(i == k ? 1 : 0);
            rhs[row] = delta;
            rhs[row + 1] = delta;
            row += 2;
        }
    auto sol = solve_affine(sys, rhs);
    if (!sol)
        return std::nullopt;
    return sol->particular;
}

/// A Hom-Poisson candidate: commutative product, alternating bracket, shared
/// twist. Stored raw; check_hom_poisson reports which axioms hold.
struct HomPoissonAlgebra {
    int dim;
    BilinearMap mu;
    BilinearMap bracket;
    LinearMap alpha;

    HomPoissonAlgebra(BilinearMap mu_, BilinearMap bracket_, LinearMap alpha_)
        : dim(mu_.dim()), mu(std::move(mu_)), bracket(std::move(bracket_)),
          alpha(std::move(alpha_)) {
        if (bracket.dim() != dim || alpha.dim() != dim)
            throw std::invalid_argument("HomPoissonAlgebra: dimension mismatch");
    }
};

} // namespace homdef
