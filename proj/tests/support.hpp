#pragma once

#include <random>
#include <vector>

#include "liecas/liecas.hpp"

namespace liecas::testing {

// ---- algebra catalog --------------------------------------------------------

/// [X,Y] = X, the noncommutative 2-dimensional algebra.
inline LieAlgebra twodim() {
    Tensor3 c(2, 2, 2);
    c.at(0, 1, 0) = Scalar(1);
    c.at(1, 0, 0) = Scalar(-1);
    return LieAlgebra(2, {"X", "Y"}, std::move(c));
}

/// [x,y] = z with z central.
inline LieAlgebra heisenberg() {
    Tensor3 c(3, 3, 3);
    c.at(0, 1, 2) = Scalar(1);
    c.at(1, 0, 2) = Scalar(-1);
    return LieAlgebra(3, {"x", "y", "z"}, std::move(c));
}

/// (h, e, f) with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
inline LieAlgebra sl2() {
    Tensor3 c(3, 3, 3);
    c.at(0, 1, 1) = Scalar(2);
    c.at(1, 0, 1) = Scalar(-2);
    c.at(0, 2, 2) = Scalar(-2);
    c.at(2, 0, 2) = Scalar(2);
    c.at(1, 2, 0) = Scalar(1);
    c.at(2, 1, 0) = Scalar(-1);
    return LieAlgebra(3, {"h", "e", "f"}, std::move(c));
}

/// [x,y] = z, [y,z] = x, [z,x] = y.
inline LieAlgebra so3() {
    Tensor3 c(3, 3, 3);
    c.at(0, 1, 2) = Scalar(1);
    c.at(1, 0, 2) = Scalar(-1);
    c.at(1, 2, 0) = Scalar(1);
    c.at(2, 1, 0) = Scalar(-1);
    c.at(2, 0, 1) = Scalar(1);
    c.at(0, 2, 1) = Scalar(-1);
    return LieAlgebra(3, {"x", "y", "z"}, std::move(c));
}

inline LieAlgebra abelian(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("a" + std::to_string(i + 1));
    return LieAlgebra(n, std::move(names), Tensor3(n, n, n));
}

inline std::vector<LieAlgebra> catalog() {
    return {twodim(), heisenberg(), sl2(), so3(), abelian(3)};
}

// ---- matrix algebra catalog ---------------------------------------------------

inline Matrix unit_matrix(std::size_t n, std::size_t i, std::size_t j, int sign = 1) {
    Matrix m(n, n);
    m.at(i, j) = Scalar(sign);
    return m;
}

/// Rotations and boosts of Minkowski signature (1,3), ambient 4x4.
inline MatrixLieAlgebra so13_matrices() {
    std::vector<Matrix> basis;
    basis.push_back(unit_matrix(4, 2, 3) - unit_matrix(4, 3, 2));
    basis.push_back(unit_matrix(4, 1, 3) - unit_matrix(4, 3, 1));
    basis.push_back(unit_matrix(4, 1, 2) - unit_matrix(4, 2, 1));
    basis.push_back(unit_matrix(4, 0, 1) + unit_matrix(4, 1, 0));
    basis.push_back(unit_matrix(4, 0, 2) + unit_matrix(4, 2, 0));
    basis.push_back(unit_matrix(4, 0, 3) + unit_matrix(4, 3, 0));
    return MatrixLieAlgebra(4, std::move(basis));
}

inline MatrixLieAlgebra so3_matrices() {
    std::vector<Matrix> basis;
    basis.push_back(unit_matrix(3, 1, 2) - unit_matrix(3, 2, 1));
    basis.push_back(unit_matrix(3, 0, 2) - unit_matrix(3, 2, 0));
    basis.push_back(unit_matrix(3, 0, 1) - unit_matrix(3, 1, 0));
    return MatrixLieAlgebra(3, std::move(basis));
}

inline MatrixLieAlgebra sl2r_matrices() {
    std::vector<Matrix> basis;
    basis.push_back(unit_matrix(2, 0, 0) - unit_matrix(2, 1, 1));
    basis.push_back(unit_matrix(2, 0, 1));
    basis.push_back(unit_matrix(2, 1, 0));
    return MatrixLieAlgebra(2, std::move(basis));
}

// ---- Hopf catalog -------------------------------------------------------------

/// Group algebra k[G] from a multiplication table: Delta(g) = g (x) g,
/// eps(g) = 1, S(g) = g^{-1}; index 0 is the group unit.
inline HopfAlgebra group_algebra(const std::vector<std::vector<std::size_t>>& table,
                                 const std::vector<std::size_t>& inverse) {
    const std::size_t d = table.size();
    HopfAlgebra h;
    h.dim = d;
    h.mult = Tensor3(d, d, d);
    h.coprod = Tensor3(d, d, d);
    h.unit = Vector(d);
    h.counit = Vector(d);
    h.antipode = Matrix(d, d);
    h.unit[0] = Scalar(1);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) h.mult.at(i, j, table[i][j]) = Scalar(1);
        h.coprod.at(i, i, i) = Scalar(1);
        h.counit[i] = Scalar(1);
        h.antipode.at(inverse[i], i) = Scalar(1);
    }
    return h;
}

inline std::vector<std::vector<std::size_t>> klein_table() {
    return {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
}

inline HopfAlgebra klein_group_algebra() { return group_algebra(klein_table(), {0, 1, 2, 3}); }

inline HopfAlgebra z2_group_algebra() { return group_algebra({{0, 1}, {1, 0}}, {0, 1}); }

inline HopfAlgebra z3_group_algebra() {
    return group_algebra({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, {0, 2, 1});
}

inline HopfAlgebra one_dim_hopf() {
    HopfAlgebra h;
    h.dim = 1;
    h.mult = Tensor3(1, 1, 1);
    h.mult.at(0, 0, 0) = Scalar(1);
    h.coprod = Tensor3(1, 1, 1);
    h.coprod.at(0, 0, 0) = Scalar(1);
    h.unit = Vector(1);
    h.unit[0] = Scalar(1);
    h.counit = Vector(1);
    h.counit[0] = Scalar(1);
    h.antipode = Matrix::identity(1);
    return h;
}

/// F = 1/2 (1 (x) 1 + 1 (x) a + b (x) 1 - b (x) a) on k[Z/2 x Z/2], with
/// a = index 1 and b = index 2.
inline Vector klein_twist_vector() {
    Vector f(16);
    const Scalar half = Scalar::ratio(1, 2);
    f[0 * 4 + 0] = half;
    f[0 * 4 + 1] = half;
    f[2 * 4 + 0] = half;
    f[2 * 4 + 1] = -half;
    return f;
}

/// Functions on the Klein four-group (pointwise product) with the left
/// translation action of the group algebra: g |> delta_x = delta_{gx}.
inline ModuleAlgebra klein_function_algebra() {
    const auto table = klein_table();
    ModuleAlgebra a;
    a.dim_a = 4;
    a.amult = Tensor3(4, 4, 4);
    a.aunit = Vector(4);
    a.action = Tensor3(4, 4, 4);
    for (std::size_t x = 0; x < 4; ++x) {
        a.amult.at(x, x, x) = Scalar(1);
        a.aunit[x] = Scalar(1);
        for (std::size_t g = 0; g < 4; ++g) a.action.at(g, x, table[g][x]) = Scalar(1);
    }
    return a;
}

/// The 4-dimensional noncommutative, noncocommutative Hopf algebra with basis
/// (1, g, x, gx): g^2 = 1, x^2 = 0, x g = -g x, Delta(g) = g (x) g,
/// Delta(x) = x (x) 1 + g (x) x, S(g) = g, S(x) = -g x.
inline HopfAlgebra sweedler_hopf() {
    // basis indices: 0 -> 1, 1 -> g, 2 -> x, 3 -> gx
    HopfAlgebra h;
    h.dim = 4;
    h.mult = Tensor3(4, 4, 4);
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, int s) {
        h.mult.at(i, j, k) = Scalar(s);
    };
    // products with 1
    for (std::size_t i = 0; i < 4; ++i) {
        set(0, i, i, 1);
        if (i) set(i, 0, i, 1);
    }
    set(1, 1, 0, 1);  // g g = 1
    set(1, 2, 3, 1);  // g x = gx
    set(2, 1, 3, -1); // x g = -gx
    set(1, 3, 2, 1);  // g gx = x
    set(3, 1, 2, -1); // gx g = -x
    // x x = 0, x gx = x g x = -g x x = 0, gx x = 0, gx gx = g x g x = -x x = 0
    h.unit = Vector(4);
    h.unit[0] = Scalar(1);
    h.coprod = Tensor3(4, 4, 4);
    h.coprod.at(0, 0, 0) = Scalar(1);
    h.coprod.at(1, 1, 1) = Scalar(1);
    h.coprod.at(2, 2, 0) = Scalar(1); // x (x) 1
    h.coprod.at(2, 1, 2) = Scalar(1); // g (x) x
    // Delta(gx) = Delta(g) Delta(x) = (g (x) g)(x (x) 1 + g (x) x) = gx (x) g + 1 (x) gx
    h.coprod.at(3, 3, 1) = Scalar(1);
    h.coprod.at(3, 0, 3) = Scalar(1);
    h.counit = Vector(4);
    h.counit[0] = Scalar(1);
    h.counit[1] = Scalar(1);
    h.antipode = Matrix(4, 4);
    h.antipode.at(0, 0) = Scalar(1);
    h.antipode.at(1, 1) = Scalar(1);
    h.antipode.at(3, 2) = Scalar(-1); // S(x) = -gx
    h.antipode.at(2, 3) = Scalar(1);  // S(gx) = S(x)S(g) = (-gx)g = x
    return h;
}

// ---- randomness ----------------------------------------------------------------

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    /// Small rational with numerator in [-bound, bound] and denominator in [1, den].
    Scalar rational(int bound = 5, int den = 3) {
        std::uniform_int_distribution<int> num(-bound, bound);
        std::uniform_int_distribution<int> d(1, den);
        return Scalar(Rational(num(gen), d(gen)));
    }

    Scalar gaussian_rational(int bound = 5, int den = 3) {
        return rational(bound, den) + Scalar::i() * rational(bound, den);
    }

    Bivector bivector(std::size_t dim, int bound = 3, int den = 2) {
        Matrix m(dim, dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = i + 1; j < dim; ++j) {
                const Scalar v = rational(bound, den);
                m.at(i, j) = v;
                m.at(j, i) = -v;
            }
        return Bivector(std::move(m));
    }

    Poly monomial(int max_degree = 3) {
        std::uniform_int_distribution<int> deg(0, max_degree);
        const int d1 = deg(gen);
        std::uniform_int_distribution<int> rest(0, max_degree - d1);
        return Poly::monomial(d1, rest(gen), rational(4, 2));
    }

    Poly poly(int terms = 3, int max_degree = 3) {
        Poly p;
        std::uniform_int_distribution<int> t(1, terms);
        const int n = t(gen);
        for (int k = 0; k < n; ++k) p += monomial(max_degree);
        return p;
    }
};

} // namespace liecas::testing
