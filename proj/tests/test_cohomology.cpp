#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace liecas;
using namespace liecas::testing;

namespace {

std::vector<GModule> modules_of(const LieAlgebra& g) {
    return {GModule::trivial(g), GModule::adjoint(g), GModule::adjoint2(g)};
}

} // namespace

TEST_CASE("module law holds for the three constructions") {
    for (const auto& g : catalog())
        for (const auto& m : modules_of(g)) CHECK(validate_module(g, m));
}

TEST_CASE("delta squared vanishes for every catalog algebra, module and degree") {
    for (const auto& g : catalog())
        for (const auto& m : modules_of(g))
            for (std::size_t n = 0; n + 1 <= kMaxCohomologyDegree; ++n) {
                const Matrix dn = ce_differential(g, m, n);
                const Matrix dn1 = ce_differential(g, m, n + 1);
                CHECK((dn1 * dn).is_zero());
            }
}

TEST_CASE("degree cap is enforced") {
    const LieAlgebra g = twodim();
    CHECK_THROWS_AS(ce_differential(g, GModule::trivial(g), 4), Error);
    CHECK_THROWS_AS(cohomology_dim(g, GModule::trivial(g), 4), Error);
}

TEST_CASE("differential in degree zero") {
    const LieAlgebra g = twodim();
    // trivial module: x.c = 0
    CHECK(ce_differential(g, GModule::trivial(g), 0).is_zero());
    // adjoint module: delta c (x) = [x, c], columns are adjoint matrices
    const Matrix d0 = ce_differential(g, GModule::adjoint(g), 0);
    REQUIRE(d0.rows() == 4); // C^1 = Hom(g, g)
    REQUIRE(d0.cols() == 2);
    // wedge basis of degree 1 is (e1), (e2); block row w holds ad(e_w)
    const Matrix adx = adjoint(g, g.basis_vector(0));
    const Matrix ady = adjoint(g, g.basis_vector(1));
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) {
            CHECK(d0.at(0 * 2 + a, b) == adx.at(a, b));
            CHECK(d0.at(1 * 2 + a, b) == ady.at(a, b));
        }
}

TEST_CASE("degree-one differential on the 2D algebra, trivial module") {
    // delta c (X ^ Y) = -c([X,Y]) = -c(X)
    const LieAlgebra g = twodim();
    const Matrix d1 = ce_differential(g, GModule::trivial(g), 1);
    REQUIRE(d1.rows() == 1);
    REQUIRE(d1.cols() == 2);
    CHECK(d1.at(0, 0) == Scalar(-1));
    CHECK(d1.at(0, 1) == Scalar(0));
}

TEST_CASE("H^0 with trivial coefficients is one-dimensional") {
    for (const auto& g : catalog()) CHECK(cohomology_dim(g, GModule::trivial(g), 0) == 1);
}

TEST_CASE("H^1 with trivial coefficients is the abelianization dual") {
    for (const auto& g : catalog()) {
        CHECK(cohomology_dim(g, GModule::trivial(g), 1) ==
              g.dim() - derived_algebra(g).dim());
    }
    CHECK(cohomology_dim(twodim(), GModule::trivial(twodim()), 1) == 1);
}

TEST_CASE("H^0 with adjoint coefficients is the center") {
    for (const auto& g : catalog())
        CHECK(cohomology_dim(g, GModule::adjoint(g), 0) == center(g).dim());
}

TEST_CASE("semisimple rigidity at desk scale: H^1 = H^2 = 0 for sl2 and so3") {
    for (const auto& g : {sl2(), so3()}) {
        for (const auto& m : {GModule::trivial(g), GModule::adjoint(g)}) {
            CHECK(cohomology_dim(g, m, 1) == 0);
            CHECK(cohomology_dim(g, m, 2) == 0);
        }
    }
}

TEST_CASE("invariants of the three module kinds") {
    const LieAlgebra h = heisenberg();
    // adjoint invariants = center
    const Subspace inv = invariants(h, GModule::adjoint(h));
    CHECK(inv.dim() == 1);
    CHECK(inv.contains(Vector{Scalar(0), Scalar(0), Scalar(1)}));

    const LieAlgebra ab = abelian(3);
    CHECK(invariants(ab, GModule::adjoint(ab)).dim() == 3);
    CHECK(invariants(ab, GModule::trivial(ab)).dim() == 1);

    for (const auto& g : catalog())
        CHECK(invariants(g, GModule::adjoint(g)).dim() == center(g).dim());
}
