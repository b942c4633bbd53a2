#include "testutil.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace homdef;
using testutil::rand_int;

namespace {

Trilinear cyclic_sum(const Trilinear& t) {
    const int n = t.dim();
    Trilinear out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                out.set_value(i, j, k, t.value(i, j, k) + t.value(j, k, i) + t.value(k, i, j));
    return out;
}

/// Cyclic sum along the reversed cycle (x, z, y).
Trilinear reversed_cyclic_sum(const Trilinear& t) {
    const int n = t.dim();
    Trilinear out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                out.set_value(i, j, k, t.value(i, k, j) + t.value(k, j, i) + t.value(j, i, k));
    return out;
}

/// The 3-dim split algebra K.1 + m with m^2 = 0, basis (u, x, y).
BilinearMap split_null_product() {
    BilinearMap mu(3);
    for (int i = 0; i < 3; ++i) {
        mu.c(0, i, i) = Rational(1);
        if (i != 0)
            mu.c(i, 0, i) = Rational(1);
    }
    return mu;
}

/// Alternating 2-cocycles of `a` as a canonical basis (kernel of the
/// stacked system: linearized delta2 plus symmetry constraints).
std::vector<BilinearMap> alternating_cocycles(const HomAlgebra& a) {
    const int n = a.dim;
    Mat<Rational> d2 = linearized_delta2(a, CochainFlavor::Associative);
    int extra = n * n * n;
    Mat<Rational> stacked(d2.rows() + extra, n * n * n, Rational(0));
    for (int i = 0; i < d2.rows(); ++i)
        for (int j = 0; j < d2.cols(); ++j)
            stacked(i, j) = d2(i, j);
    int row = d2.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                // c(i,j,k) + c(j,i,k) = 0
                stacked(row, (i * n + j) * n + k) += Rational(1);
                stacked(row, (j * n + i) * n + k) += Rational(1);
                ++row;
            }
    std::vector<BilinearMap> out;
    for (const auto& v : kernel_basis(stacked))
        out.push_back(cochain2_from_coords(n, CochainFlavor::Associative, v));
    return out;
}

} // namespace

TEST_CASE("bracket_from_mu1") {
    BilinearMap sym(2);
    sym.c(0, 1, 0) = Rational(2);
    sym.c(1, 0, 0) = Rational(2);
    CHECK(bracket_from_mu1(sym).is_zero());

    BilinearMap mu1(2);
    mu1.c(0, 1, 0) = Rational(1);
    BilinearMap b = bracket_from_mu1(mu1);
    CHECK(b.c(0, 1, 0) == Rational(1));
    CHECK(b.c(1, 0, 0) == Rational(-1));
    CHECK(b.is_alternating());

    CHECK(bracket_from_mu1(BilinearMap(3)).is_zero());
}

TEST_CASE("check_hom_poisson") {
    // Commutative associative product with zero bracket passes.
    BilinearMap mu = split_null_product();
    HomPoissonAlgebra good(mu, BilinearMap(3), LinearMap::identity(3));
    CHECK(check_hom_poisson(good).pass);

    // Non-commutative mu fails the first axiom and is reported as such.
    BilinearMap bad(2);
    bad.c(0, 1, 0) = Rational(1); // mu(e0,e1) = e0, mu(e1,e0) = 0
    HomPoissonAlgebra p(bad, BilinearMap(2), LinearMap::identity(2));
    PoissonReport rep = check_hom_poisson(p);
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.find("mu commutative"));
    CHECK_FALSE(rep.find("mu commutative")->pass);
}

TEST_CASE("cyclic compatibility lemma: cyclic delta2 mu2 = cyclic mu2 o_alpha mu0") {
    std::mt19937_64 rng(211);
    for (int t = 0; t < 100; ++t) {
        int n = static_cast<int>(rand_int(rng, 1, 3));
        BilinearMap mu0 = testutil::rand_commutative_bilinear(rng, n);
        LinearMap alpha = testutil::rand_linear_map(rng, n);
        BilinearMap mu2 = testutil::rand_bilinear(rng, n);
        HomAlgebra a(AlgebraKind::HomAssociative, {}, mu0, alpha);
        CHECK(cyclic_sum(delta2_hom(a, mu2)) ==
              cyclic_sum(alpha_associator(mu2, mu0, alpha)));
    }
}

TEST_CASE("cyclic difference lemma vanishes for commutative bases") {
    std::mt19937_64 rng(223);
    for (int t = 0; t < 100; ++t) {
        int n = static_cast<int>(rand_int(rng, 1, 3));
        BilinearMap mu0 = testutil::rand_commutative_bilinear(rng, n);
        LinearMap alpha = testutil::rand_linear_map(rng, n);
        BilinearMap mu2 = testutil::rand_bilinear(rng, n);
        HomAlgebra a(AlgebraKind::HomAssociative, {}, mu0, alpha);
        Trilinear d2 = delta2_hom(a, mu2);
        CHECK((cyclic_sum(d2) - reversed_cyclic_sum(d2)).is_zero());
    }
}

TEST_CASE("cyclic twisted associator of a commutative product vanishes") {
    std::mt19937_64 rng(227);
    for (int t = 0; t < 100; ++t) {
        int n = static_cast<int>(rand_int(rng, 1, 3));
        BilinearMap mu0 = testutil::rand_commutative_bilinear(rng, n);
        LinearMap alpha = testutil::rand_linear_map(rng, n); // arbitrary
        CHECK(cyclic_sum(alpha_associator(mu0, mu0, alpha)).is_zero());
    }
}

TEST_CASE("cocycle_leibniz_property") {
    BilinearMap mu = split_null_product();
    HomAlgebra a(AlgebraKind::HomAssociative, {}, mu, LinearMap::identity(3));
    REQUIRE(check_hom_associative(a).pass);

    CHECK(cocycle_leibniz_property(a, BilinearMap(3)).pass);

    // Every alternating 2-cocycle of a random commutative base satisfies the
    // induced Leibniz rule.
    std::mt19937_64 rng(229);
    int nontrivial = 0;
    for (int t = 0; t < 40; ++t) {
        HomAlgebra base = testutil::rand_hom_associative(rng);
        REQUIRE(base.product.is_commutative());
        auto cocycles = alternating_cocycles(base);
        if (cocycles.empty())
            continue;
        BilinearMap phi(base.dim);
        for (const auto& c : cocycles)
            phi = phi + Rational(rand_int(rng, -2, 2)) * c;
        REQUIRE(phi.is_alternating());
        REQUIRE(delta2_hom(base, phi).is_zero());
        CHECK(cocycle_leibniz_property(base, phi).pass);
        if (!phi.is_zero())
            ++nontrivial;
    }
    CHECK(nontrivial > 0);

    // Alternating but not a cocycle: the precondition gate rejects it.
    BilinearMap notc(3);
    notc.c(0, 1, 0) = Rational(1);
    notc.c(1, 0, 0) = Rational(-1);
    if (!delta2_hom(a, notc).is_zero())
        CHECK_THROWS_AS(cocycle_leibniz_property(a, notc), std::invalid_argument);
}

TEST_CASE("poisson_from_deformation preconditions") {
    CHECK_THROWS_AS(poisson_from_deformation(catalog::jackson_sl2(3)), std::invalid_argument);

    BilinearMap mu = split_null_product();
    LinearMap id3 = LinearMap::identity(3);
    DeformationSeries short_d(CochainFlavor::Associative, {mu, BilinearMap(3)},
                              {id3, LinearMap::zero(3)});
    CHECK_THROWS_AS(poisson_from_deformation(short_d), std::invalid_argument);

    // Non-commutative base.
    BilinearMap nc(2);
    nc.c(0, 1, 0) = Rational(1);
    DeformationSeries ncd(CochainFlavor::Associative,
                          {nc, BilinearMap(2), BilinearMap(2)},
                          {LinearMap::identity(2), LinearMap::zero(2), LinearMap::zero(2)});
    CHECK_THROWS_AS(poisson_from_deformation(ncd), std::invalid_argument);

    // Trivial deformation of a commutative base: zero bracket, passes.
    DeformationSeries td(CochainFlavor::Associative, {mu, BilinearMap(3), BilinearMap(3)},
                         {id3, LinearMap::zero(3), LinearMap::zero(3)});
    HomPoissonAlgebra p = poisson_from_deformation(td);
    CHECK(p.bracket.is_zero());
    CHECK(check_hom_poisson(p).pass);
}

TEST_CASE("a derived deformation with a nonzero bracket is hom-poisson") {
    // Base: K.1 + m, m^2 = 0. The alternating cochain mu1(x, y) = x is a
    // 2-cocycle; extend_deformation supplies an order-2 term making the
    // truncated deformation equation hold, and the extracted bracket is a
    // genuine nonzero Hom-Poisson bracket.
    BilinearMap mu0 = split_null_product();
    LinearMap id3 = LinearMap::identity(3);
    HomAlgebra base(AlgebraKind::HomAssociative, {"u", "x", "y"}, mu0, id3);
    REQUIRE(check_hom_associative(base).pass);

    BilinearMap mu1(3);
    mu1.c(1, 2, 1) = Rational(1);
    mu1.c(2, 1, 1) = Rational(-1);
    REQUIRE(delta2_hom(base, mu1).is_zero());

    DeformationSeries d1(CochainFlavor::Associative, {mu0, mu1}, {id3, LinearMap::zero(3)});
    REQUIRE(verify(d1).pass);
    auto mu2 = extend_deformation(d1);
    REQUIRE(mu2);

    DeformationSeries d2(CochainFlavor::Associative, {mu0, mu1, *mu2},
                         {id3, LinearMap::zero(3), LinearMap::zero(3)});
    REQUIRE(verify(d2).pass);

    HomPoissonAlgebra p = poisson_from_deformation(d2);
    CHECK_FALSE(p.bracket.is_zero());
    PoissonReport rep = check_hom_poisson(p);
    CHECK(rep.pass);
}

TEST_CASE("verified deformations of commutative bases always yield hom-poisson") {
    // A parametric family over the zero product: mu_i take values in the
    // line K e3 and vanish whenever e3 enters, so all compositions vanish
    // and the deformation equation holds identically.
    std::mt19937_64 rng(233);
    for (int t = 0; t < 20; ++t) {
        const int n = 3;
        auto rand_line_map = [&]() {
            BilinearMap b(n);
            for (int i = 0; i < n - 1; ++i)
                for (int j = 0; j < n - 1; ++j)
                    b.c(i, j, n - 1) = testutil::rand_rational(rng);
            return b;
        };
        std::vector<BilinearMap> products{BilinearMap(n), rand_line_map(), rand_line_map()};
        std::vector<LinearMap> twists{LinearMap::identity(n), LinearMap::zero(n),
                                      LinearMap::zero(n)};
        DeformationSeries d(CochainFlavor::Associative, products, twists);
        REQUIRE(verify(d).pass);
        HomPoissonAlgebra p = poisson_from_deformation(d);
        CHECK(check_hom_poisson(p).pass);
    }
}
