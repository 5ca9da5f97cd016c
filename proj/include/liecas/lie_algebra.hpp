#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "liecas/linalg.hpp"

namespace liecas {

struct JacobiViolation {
    std::size_t i, j, k, l; // triple (i,j,k) fails on output coordinate l
    Scalar residual;
};

struct JacobiReport {
    bool pass = true;
    std::vector<JacobiViolation> violations;
};

/// Finite-dimensional Lie algebra given by structure constants:
/// [e_i, e_j] = sum_k c(i,j,k) e_k.
///
/// Antisymmetry of c is enforced on construction; the Jacobi identity is a
/// separate check (check_jacobi) so that violations can be reported in full.
class LieAlgebra {
public:
    LieAlgebra(std::size_t dim, std::vector<std::string> basis_names, Tensor3 c)
        : dim_(dim), names_(std::move(basis_names)), c_(std::move(c)) {
        if (names_.size() != dim_) throw ShapeError("basis name count != dim");
        if (c_.dim1() != dim_ || c_.dim2() != dim_ || c_.dim3() != dim_)
            throw ShapeError("structure constant tensor has wrong shape");
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j <= i; ++j)
                for (std::size_t k = 0; k < dim_; ++k)
                    if (c_.at(i, j, k) != -c_.at(j, i, k))
                        throw MathError("structure constants are not antisymmetric at (" +
                                        std::to_string(i) + "," + std::to_string(j) + ")");
    }

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }
    const Tensor3& structure_constants() const { return c_; }

    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return c_.at(i, j, k); }

    Vector basis_vector(std::size_t i) const {
        Vector v(dim_);
        v[i] = Scalar(1);
        return v;
    }

    Vector bracket(const Vector& x, const Vector& y) const {
        if (x.size() != dim_ || y.size() != dim_) throw ShapeError("bracket: dimension mismatch");
        Vector z(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y[j].is_zero()) continue;
                const Scalar xy = x[i] * y[j];
                for (std::size_t k = 0; k < dim_; ++k) {
                    if (!c_.at(i, j, k).is_zero()) z[k] += xy * c_.at(i, j, k);
                }
            }
        }
        return z;
    }

private:
    std::size_t dim_;
    std::vector<std::string> names_;
    Tensor3 c_;
};

/// Subspace of a Lie algebra, held as coordinate vectors in the parent basis.
struct Subspace {
    std::size_t parent_dim = 0;
    std::vector<Vector> basis;

    std::size_t dim() const { return basis.size(); }
    bool contains(const Vector& v) const { return in_span(basis, v); }
};

/// Symmetric bilinear form on the algebra, as its Gram matrix.
struct BilinearForm {
    Matrix matrix;
};

/// Jacobi residual sum_m (c_jk^m c_im^l + c_ij^m c_km^l + c_ki^m c_jm^l)
/// over all i<j<k and output coordinates l.
inline JacobiReport check_jacobi(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    JacobiReport rep;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    Scalar acc;
                    for (std::size_t m = 0; m < n; ++m) {
                        acc += g.c(j, k, m) * g.c(i, m, l);
                        acc += g.c(i, j, m) * g.c(k, m, l);
                        acc += g.c(k, i, m) * g.c(j, m, l);
                    }
                    if (!acc.is_zero()) {
                        rep.pass = false;
                        rep.violations.push_back({i, j, k, l, acc});
                    }
                }
    return rep;
}

/// Matrix of ad(x): y -> [x, y] in the given basis; linear in x.
inline Matrix adjoint(const LieAlgebra& g, const Vector& x) {
    const std::size_t n = g.dim();
    if (x.size() != n) throw ShapeError("adjoint: dimension mismatch");
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (!g.c(i, j, k).is_zero()) m.at(k, j) += x[i] * g.c(i, j, k);
        }
    return m;
}

/// Matrix of the Leibniz extension ad_x on g^(x)n (n = 2 or 3), acting on
/// row-major flattened tensors.
inline Matrix ad_power(const LieAlgebra& g, const Vector& x, std::size_t n) {
    const Matrix a = adjoint(g, x);
    const Matrix id = Matrix::identity(g.dim());
    if (n == 2) return kron(a, id) + kron(id, a);
    if (n == 3) return kron(a, kron(id, id)) + kron(id, kron(a, id)) + kron(id, kron(id, a));
    throw Error("ad_power supports n = 2 or 3 only");
}

/// kappa(x, y) = tr(ad(x) ad(y)).
inline BilinearForm killing_form(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    std::vector<Matrix> ad(n);
    for (std::size_t i = 0; i < n; ++i) ad[i] = adjoint(g, g.basis_vector(i));
    Matrix k(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Scalar t = (ad[i] * ad[j]).trace();
            k.at(i, j) = t;
            k.at(j, i) = t;
        }
    return BilinearForm{std::move(k)};
}

inline Subspace center(const LieAlgebra& g);

/// Kernel of the Killing matrix. It is an ideal; this is re-verified here and
/// an internal inconsistency is an error.
inline Subspace killing_radical(const LieAlgebra& g) {
    Subspace s{g.dim(), kernel_basis(killing_form(g).matrix)};
    for (const auto& v : s.basis)
        for (std::size_t i = 0; i < g.dim(); ++i)
            if (!s.contains(g.bracket(g.basis_vector(i), v)))
                throw Error("internal: Killing radical is not an ideal");
    return s;
}

/// Killing criterion: nondegenerate kappa.
inline bool is_semisimple(const LieAlgebra& g) {
    if (g.dim() == 0) return true;
    return !det(killing_form(g).matrix).is_zero();
}

/// Span of all brackets [g, g].
inline Subspace derived_algebra(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    Matrix spanned(n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) spanned.at(i * n + j, k) = g.c(i, j, k);
    return Subspace{n, row_space_basis(spanned)};
}

/// Joint kernel of all adjoints: {y | [x, y] = 0 for all x}.
inline Subspace center(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    Matrix stacked(n * n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Matrix a = adjoint(g, g.basis_vector(i));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) stacked.at(i * n + r, c) = a.at(r, c);
    }
    return Subspace{n, kernel_basis(stacked)};
}

/// Smallest bracket-closed subspace containing the seed: alternates span
/// reduction with adjoining pairwise brackets until stable.
inline Subspace subalgebra_closure(const LieAlgebra& g, const std::vector<Vector>& seed) {
    std::vector<Vector> basis;
    for (const auto& v : seed) {
        if (v.size() != g.dim()) throw ShapeError("subalgebra_closure: dimension mismatch");
        if (!in_span(basis, v)) basis.push_back(v);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t sz = basis.size();
        for (std::size_t a = 0; a < sz && !grew; ++a)
            for (std::size_t b = a + 1; b < sz && !grew; ++b) {
                Vector w = g.bracket(basis[a], basis[b]);
                if (!in_span(basis, w)) {
                    basis.push_back(std::move(w));
                    grew = true;
                }
            }
    }
    return Subspace{g.dim(), std::move(basis)};
}

/// Structure constants of the bracket restricted to a closed subspace,
/// expressed in the subspace basis by an exact linear solve.
/// Throws MathError with the witness pair if some bracket leaves the span.
inline LieAlgebra restrict(const LieAlgebra& g, const Subspace& s,
                           std::vector<std::string> names = {}) {
    const std::size_t k = s.dim();
    if (s.parent_dim != g.dim()) throw ShapeError("restrict: subspace of a different algebra");
    const Matrix b = columns(s.basis, g.dim());
    Tensor3 c(k, k, k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t d = 0; d < k; ++d) {
            const Vector w = g.bracket(s.basis[a], s.basis[d]);
            auto coords = solve(b, w);
            if (!coords)
                throw MathError("subspace not closed under bracket: witness pair (" +
                                std::to_string(a) + "," + std::to_string(d) + ")");
            for (std::size_t m = 0; m < k; ++m) c.at(a, d, m) = (*coords)[m];
        }
    if (names.empty())
        for (std::size_t a = 0; a < k; ++a) names.push_back("s" + std::to_string(a + 1));
    return LieAlgebra(k, std::move(names), std::move(c));
}

} // namespace liecas
