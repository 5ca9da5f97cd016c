#include <catch2/catch_amalgamated.hpp>

#include "liecas/io.hpp"
#include "support.hpp"

using namespace liecas;
using namespace liecas::testing;
using liecas::io::json;

namespace {

const char* kTwodimDoc = R"({
  "dim": 2,
  "basis": ["X", "Y"],
  "brackets": [{"left": 0, "right": 1, "result": {"0": "1"}}]
})";

} // namespace

TEST_CASE("Lie algebra document parsing") {
    const LieAlgebra g = io::parse_lie_algebra(json::parse(kTwodimDoc));
    CHECK(g.dim() == 2);
    CHECK(g.basis_names()[0] == "X");
    CHECK(g.c(0, 1, 0) == Scalar(1));
    CHECK(g.c(1, 0, 0) == Scalar(-1)); // antisymmetric completion
}

TEST_CASE("Lie algebra document validation errors") {
    // [e_i, e_i] != 0
    CHECK_THROWS_AS(io::parse_lie_algebra(json::parse(
                        R"({"dim": 2, "brackets": [{"left": 0, "right": 0, "result": {"1": "1"}}]})")),
                    ParseError);
    // inconsistent double entry
    CHECK_THROWS_AS(io::parse_lie_algebra(json::parse(
                        R"({"dim": 2, "brackets": [
                             {"left": 0, "right": 1, "result": {"0": "1"}},
                             {"left": 1, "right": 0, "result": {"0": "1"}}]})")),
                    ParseError);
    // out-of-range index
    CHECK_THROWS_AS(io::parse_lie_algebra(json::parse(
                        R"({"dim": 2, "brackets": [{"left": 0, "right": 5, "result": {"0": "1"}}]})")),
                    ParseError);
    // bad scalar literal
    CHECK_THROWS_AS(io::parse_lie_algebra(json::parse(
                        R"({"dim": 2, "brackets": [{"left": 0, "right": 1, "result": {"0": "x"}}]})")),
                    ParseError);
    // Jacobi enforcement on load
    const char* bad = R"({"dim": 3, "brackets": [
        {"left": 0, "right": 1, "result": {"2": "1"}},
        {"left": 1, "right": 2, "result": {"0": "1"}},
        {"left": 2, "right": 0, "result": {"0": "1"}}]})";
    CHECK_THROWS_AS(io::parse_lie_algebra(json::parse(bad)), MathError);
    CHECK_NOTHROW(io::parse_lie_algebra(json::parse(bad), false));
}

TEST_CASE("r-matrix document parsing enforces the i < j convention") {
    const Bivector r =
        io::parse_rmatrix(json::parse(R"({"dim": 2, "entries": [{"i": 0, "j": 1, "value": "1"}]})"));
    CHECK(r.matrix().at(0, 1) == Scalar(1));
    CHECK(r.matrix().at(1, 0) == Scalar(-1));
    CHECK_THROWS_AS(
        io::parse_rmatrix(json::parse(R"({"dim": 2, "entries": [{"i": 1, "j": 0, "value": "1"}]})")),
        ParseError);
}

TEST_CASE("documents round-trip through emission") {
    // Lie algebras of the catalog
    for (const auto& g : catalog()) {
        const LieAlgebra back = io::parse_lie_algebra(io::emit_lie_algebra(g));
        CHECK(back.dim() == g.dim());
        CHECK(back.basis_names() == g.basis_names());
        CHECK(back.structure_constants() == g.structure_constants());
    }
    // random r-matrices
    Rng rng(101);
    for (int k = 0; k < 30; ++k) {
        const Bivector r = rng.bivector(4);
        CHECK(io::parse_rmatrix(io::emit_rmatrix(r)).matrix() == r.matrix());
    }
    // matrix algebra
    const MatrixLieAlgebra m = so13_matrices();
    const MatrixLieAlgebra back = io::parse_matrix_algebra(io::emit_matrix_algebra(m));
    CHECK(back.ambient() == m.ambient());
    for (std::size_t i = 0; i < m.dim(); ++i) CHECK(back.basis()[i] == m.basis()[i]);
    // Hopf algebra and twist
    const HopfAlgebra h = klein_group_algebra();
    const HopfAlgebra hback = io::parse_hopf(io::emit_hopf(h));
    CHECK(hback.mult == h.mult);
    CHECK(hback.coprod == h.coprod);
    CHECK(hback.unit == h.unit);
    CHECK(hback.counit == h.counit);
    CHECK(hback.antipode == h.antipode);
    const TwistElement t = TwistElement::from_f(h, klein_twist_vector());
    const TwistElement tback = io::parse_twist(io::emit_twist(t), hback);
    CHECK(tback.f == t.f);
    CHECK(tback.finv == t.finv);
    // module algebra
    const ModuleAlgebra a = klein_function_algebra();
    const ModuleAlgebra aback = io::parse_module_algebra(io::emit_module_algebra(a), h);
    CHECK(aback.amult == a.amult);
    CHECK(aback.action == a.action);
}

TEST_CASE("oversized documents are rejected early") {
    CHECK_THROWS_AS(io::parse_lie_algebra(json::parse(R"({"dim": 100000})")), ParseError);
}

TEST_CASE("scalars in documents may be plain integers") {
    const Bivector r =
        io::parse_rmatrix(json::parse(R"({"dim": 2, "entries": [{"i": 0, "j": 1, "value": 2}]})"));
    CHECK(r.matrix().at(0, 1) == Scalar(2));
}
