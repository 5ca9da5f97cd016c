#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace liecas;
using namespace liecas::testing;

TEST_CASE("check_jacobi on the catalog") {
    for (const auto& g : catalog()) CHECK(check_jacobi(g).pass);
}

TEST_CASE("check_jacobi reports violating triples") {
    // [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e1: the triple (e1,e2,e3) leaves
    // the residual [e2,[e3,e1]] = -e3 uncancelled
    Tensor3 c(3, 3, 3);
    c.at(0, 1, 2) = Scalar(1);
    c.at(1, 0, 2) = Scalar(-1);
    c.at(1, 2, 0) = Scalar(1);
    c.at(2, 1, 0) = Scalar(-1);
    c.at(2, 0, 0) = Scalar(1);
    c.at(0, 2, 0) = Scalar(-1);
    const LieAlgebra g(3, {"e1", "e2", "e3"}, std::move(c));
    const JacobiReport rep = check_jacobi(g);
    REQUIRE(!rep.pass);
    CHECK(rep.violations.front().i == 0);
    CHECK(rep.violations.front().j == 1);
    CHECK(rep.violations.front().k == 2);
    CHECK(rep.violations.front().l == 2);
    CHECK(rep.violations.front().residual == Scalar(-1));
}

TEST_CASE("antisymmetric brackets that cancel in the lone triple still pass") {
    // [e1,e2] = e3 and [e1,e3] = e2 alone satisfy Jacobi: every term of the
    // (1,2,3) cyclic sum hits a vanishing bracket
    Tensor3 c(3, 3, 3);
    c.at(0, 1, 2) = Scalar(1);
    c.at(1, 0, 2) = Scalar(-1);
    c.at(0, 2, 1) = Scalar(1);
    c.at(2, 0, 1) = Scalar(-1);
    CHECK(check_jacobi(LieAlgebra(3, {"e1", "e2", "e3"}, std::move(c))).pass);
}

TEST_CASE("adjoint matrices") {
    const LieAlgebra g = twodim();
    // ad(X): Y -> X, X -> 0
    CHECK(adjoint(g, g.basis_vector(0)) == Matrix{{Scalar(0), Scalar(1)}, {Scalar(0), Scalar(0)}});
    CHECK(adjoint(g, Vector{Scalar(0), Scalar(0)}).is_zero());

    const LieAlgebra s = sl2();
    const Matrix adh = adjoint(s, s.basis_vector(0));
    CHECK(adh.at(1, 1) == Scalar(2));
    CHECK(adh.at(2, 2) == Scalar(-2));
    CHECK(adh.at(0, 0) == Scalar(0));
}

TEST_CASE("adjoint is a Lie homomorphism") {
    Rng rng(5);
    for (const auto& g : catalog()) {
        for (int k = 0; k < 20; ++k) {
            Vector x(g.dim()), y(g.dim());
            for (std::size_t i = 0; i < g.dim(); ++i) {
                x[i] = rng.rational();
                y[i] = rng.rational();
            }
            const Matrix lhs = adjoint(g, g.bracket(x, y));
            const Matrix rhs = adjoint(g, x) * adjoint(g, y) - adjoint(g, y) * adjoint(g, x);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("ad_power on simple tensors and zero") {
    const LieAlgebra g = twodim();
    CHECK(ad_power(g, Vector{Scalar(0), Scalar(0)}, 2).is_zero());
    CHECK(ad_power(g, Vector{Scalar(0), Scalar(0)}, 3).is_zero());
    CHECK_THROWS_AS(ad_power(g, g.basis_vector(0), 4), Error);

    // ad^(2)_X (Y (x) X) = [X,Y] (x) X + Y (x) [X,X] = X (x) X
    Matrix yx(2, 2);
    yx.at(1, 0) = Scalar(1);
    Matrix xx(2, 2);
    xx.at(0, 0) = Scalar(1);
    CHECK(unvec(ad_power(g, g.basis_vector(0), 2) * vec(yx), 2, 2) == xx);
}

TEST_CASE("ad_power is a module map: ad^(n)_[x,y] = [ad^(n)_x, ad^(n)_y]") {
    Rng rng(13);
    for (const auto& g : catalog()) {
        for (std::size_t n = 2; n <= 3; ++n) {
            for (int k = 0; k < 10; ++k) {
                Vector x(g.dim()), y(g.dim());
                for (std::size_t i = 0; i < g.dim(); ++i) {
                    x[i] = rng.rational();
                    y[i] = rng.rational();
                }
                const Matrix lhs = ad_power(g, g.bracket(x, y), n);
                const Matrix ax = ad_power(g, x, n), ay = ad_power(g, y, n);
                CHECK(lhs == ax * ay - ay * ax);
            }
        }
    }
}

TEST_CASE("Killing forms of the catalog") {
    CHECK(killing_form(twodim()).matrix ==
          Matrix{{Scalar(0), Scalar(0)}, {Scalar(0), Scalar(1)}});
    CHECK(killing_form(abelian(3)).matrix.is_zero());
    CHECK(killing_form(heisenberg()).matrix.is_zero());

    const Matrix k = killing_form(sl2()).matrix;
    CHECK(k.at(0, 0) == Scalar(8));
    CHECK(k.at(1, 2) == Scalar(4));
    CHECK(k.at(2, 1) == Scalar(4));
    CHECK(k.at(0, 1) == Scalar(0));
    CHECK(k.at(0, 2) == Scalar(0));
    CHECK(k.at(1, 1) == Scalar(0));
    CHECK(k.at(2, 2) == Scalar(0));
    CHECK(det(k) == Scalar(-128));
}

TEST_CASE("Killing form is associative and automorphism-invariant") {
    Rng rng(17);
    for (const auto& g : catalog()) {
        const Matrix k = killing_form(g).matrix;
        auto kappa = [&](const Vector& a, const Vector& b) {
            Scalar acc;
            for (std::size_t i = 0; i < g.dim(); ++i)
                for (std::size_t j = 0; j < g.dim(); ++j) acc += a[i] * k.at(i, j) * b[j];
            return acc;
        };
        for (int t = 0; t < 20; ++t) {
            Vector x(g.dim()), y(g.dim()), z(g.dim());
            for (std::size_t i = 0; i < g.dim(); ++i) {
                x[i] = rng.rational();
                y[i] = rng.rational();
                z[i] = rng.rational();
            }
            CHECK(kappa(g.bracket(x, y), z) == kappa(x, g.bracket(y, z)));
        }
    }
    // invariance under an explicit automorphism of the 2D algebra:
    // X -> 2X, Y -> Y preserves [X,Y] = X
    const LieAlgebra g = twodim();
    const Matrix rho{{Scalar(2), Scalar(0)}, {Scalar(0), Scalar(1)}};
    require_homomorphism(g, g, rho);
    const Matrix k = killing_form(g).matrix;
    CHECK(rho.transpose() * k * rho == k);
}

TEST_CASE("Killing radical dimensions and ideal property") {
    CHECK(killing_radical(sl2()).dim() == 0);
    CHECK(killing_radical(so3()).dim() == 0);
    CHECK(killing_radical(twodim()).dim() == 1);
    CHECK(killing_radical(heisenberg()).dim() == 3);
    CHECK(killing_radical(abelian(3)).dim() == 3);

    // 2D radical is span{X}
    const auto rad = killing_radical(twodim());
    CHECK(rad.contains(Vector{Scalar(1), Scalar(0)}));
    CHECK(!rad.contains(Vector{Scalar(0), Scalar(1)}));

    // restrict to the radical never fails (it is an ideal)
    for (const auto& g : catalog()) CHECK_NOTHROW(restrict(g, killing_radical(g)));
}

TEST_CASE("semisimplicity by the Killing criterion") {
    CHECK(is_semisimple(sl2()));
    CHECK(is_semisimple(so3()));
    CHECK(!is_semisimple(twodim()));
    CHECK(!is_semisimple(heisenberg()));
    CHECK(!is_semisimple(abelian(3)));
}

TEST_CASE("abelian ideals live inside the Killing radical") {
    // scan the coordinate lines and pairs of each catalog algebra for abelian
    // ideals and check containment in the radical
    for (const auto& g : catalog()) {
        const Subspace rad = killing_radical(g);
        auto is_ideal = [&](const Subspace& s) {
            for (const auto& v : s.basis)
                for (std::size_t i = 0; i < g.dim(); ++i)
                    if (!s.contains(g.bracket(g.basis_vector(i), v))) return false;
            return true;
        };
        auto is_abelian = [&](const Subspace& s) {
            for (const auto& v : s.basis)
                for (const auto& w : s.basis)
                    if (!g.bracket(v, w).is_zero()) return false;
            return true;
        };
        for (std::size_t i = 0; i < g.dim(); ++i) {
            Subspace line{g.dim(), {g.basis_vector(i)}};
            if (is_ideal(line) && is_abelian(line))
                for (const auto& v : line.basis) CHECK(rad.contains(v));
            for (std::size_t j = i + 1; j < g.dim(); ++j) {
                Subspace plane{g.dim(), {g.basis_vector(i), g.basis_vector(j)}};
                if (is_ideal(plane) && is_abelian(plane))
                    for (const auto& v : plane.basis) CHECK(rad.contains(v));
            }
        }
    }
}

TEST_CASE("derived algebra and center") {
    const LieAlgebra g2 = twodim();
    CHECK(derived_algebra(g2).dim() == 1);
    CHECK(derived_algebra(g2).contains(Vector{Scalar(1), Scalar(0)}));
    CHECK(center(g2).dim() == 0);

    const LieAlgebra ab = abelian(3);
    CHECK(derived_algebra(ab).dim() == 0);
    CHECK(center(ab).dim() == 3);

    const LieAlgebra h = heisenberg();
    CHECK(derived_algebra(h).dim() == 1);
    CHECK(center(h).dim() == 1);
    CHECK(center(h).contains(Vector{Scalar(0), Scalar(0), Scalar(1)}));
    CHECK(derived_algebra(h).contains(Vector{Scalar(0), Scalar(0), Scalar(1)}));
}

TEST_CASE("subalgebra closure") {
    const LieAlgebra s = sl2();
    std::vector<Vector> all{s.basis_vector(0), s.basis_vector(1), s.basis_vector(2)};
    CHECK(subalgebra_closure(s, all).dim() == 3);
    CHECK(subalgebra_closure(s, {s.basis_vector(1)}).dim() == 1);
    CHECK(subalgebra_closure(s, {s.basis_vector(1), s.basis_vector(2)}).dim() == 3);
}

TEST_CASE("restrict to closed subspaces") {
    const LieAlgebra s = sl2();
    // whole algebra: isomorphic copy
    Subspace whole{3, {s.basis_vector(0), s.basis_vector(1), s.basis_vector(2)}};
    const LieAlgebra copy = restrict(s, whole);
    CHECK(copy.structure_constants() == s.structure_constants());

    // span{e, h}: 2-dimensional with [h, e] = 2e
    Subspace borel{3, {s.basis_vector(0), s.basis_vector(1)}};
    const LieAlgebra b = restrict(s, borel);
    CHECK(b.c(0, 1, 1) == Scalar(2));
    CHECK(b.c(0, 1, 0) == Scalar(0));
    CHECK(check_jacobi(b).pass);

    // Heisenberg span{x, z} is abelian
    const LieAlgebra h = heisenberg();
    Subspace xz{3, {h.basis_vector(0), h.basis_vector(2)}};
    CHECK(restrict(h, xz).structure_constants().is_zero());

    // span{e, f} in sl2 is not closed: witness (0,1)
    Subspace ef{3, {s.basis_vector(1), s.basis_vector(2)}};
    CHECK_THROWS_AS(restrict(s, ef), MathError);
}
