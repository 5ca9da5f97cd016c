#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "liecas/lie_algebra.hpp"

namespace liecas {

/// Antisymmetric element r of g^g, stored as the full coefficient matrix
/// r[i][j] with r = sum_{i,j} r^{ij} e_i (x) e_j. Construction rejects
/// symmetric parts; general tensors go through classify_r directly.
class Bivector {
public:
    explicit Bivector(Matrix r) : r_(std::move(r)) {
        if (!r_.is_square()) throw ShapeError("bivector matrix must be square");
        for (std::size_t i = 0; i < r_.rows(); ++i)
            for (std::size_t j = 0; j <= i; ++j)
                if (r_.at(i, j) != -r_.at(j, i))
                    throw MathError("bivector is not antisymmetric at (" + std::to_string(i) +
                                    "," + std::to_string(j) + ")");
    }

    /// c * e_i ^ e_j = c (e_i (x) e_j - e_j (x) e_i).
    static Bivector wedge(std::size_t dim, std::size_t i, std::size_t j, const Scalar& c) {
        Matrix m(dim, dim);
        m.at(i, j) = c;
        m.at(j, i) = -c;
        return Bivector(std::move(m));
    }

    static Bivector zero(std::size_t dim) { return Bivector(Matrix(dim, dim)); }

    std::size_t dim() const { return r_.rows(); }
    const Matrix& matrix() const { return r_; }

private:
    Matrix r_;
};

/// Cobracket gamma: g -> g^g; gamma[i] is the antisymmetric coefficient
/// matrix of gamma(e_i).
class Cobracket {
public:
    explicit Cobracket(std::vector<Matrix> gamma) : g_(std::move(gamma)) {
        const std::size_t n = g_.size();
        for (const auto& m : g_) {
            if (m.rows() != n || m.cols() != n) throw ShapeError("cobracket component shape");
            if (m != -m.transpose()) throw MathError("cobracket component not antisymmetric");
        }
    }

    std::size_t dim() const { return g_.size(); }
    const Matrix& operator[](std::size_t i) const { return g_[i]; }

    /// gamma(x) for arbitrary x by linearity.
    Matrix apply(const Vector& x) const {
        Matrix out(dim(), dim());
        for (std::size_t i = 0; i < dim(); ++i)
            if (!x[i].is_zero()) out += x[i] * g_[i];
        return out;
    }

private:
    std::vector<Matrix> g_;
};

struct PairCheckReport {
    bool pass = true;
    // indices where the identity failed (pairs for the cocycle check,
    // single basis indices for coJacobi, stored in `i`)
    struct Violation {
        std::size_t i, j;
    };
    std::vector<Violation> violations;
};

/// Coboundary cobracket gamma(x) = ad_x^(2) r.
inline Cobracket cobracket_from_r(const LieAlgebra& g, const Bivector& r) {
    if (r.dim() != g.dim()) throw ShapeError("cobracket_from_r: dimension mismatch");
    std::vector<Matrix> comps;
    comps.reserve(g.dim());
    const Vector rv = vec(r.matrix());
    for (std::size_t i = 0; i < g.dim(); ++i) {
        const Matrix ad2 = ad_power(g, g.basis_vector(i), 2);
        comps.push_back(unvec(ad2 * rv, g.dim(), g.dim()));
    }
    return Cobracket(std::move(comps));
}

/// 1-cocycle condition gamma([x,y]) = ad_x^(2) gamma(y) - ad_y^(2) gamma(x)
/// on all basis pairs.
inline PairCheckReport check_cocycle(const LieAlgebra& g, const Cobracket& gamma) {
    const std::size_t n = g.dim();
    PairCheckReport rep;
    std::vector<Matrix> ad2(n);
    for (std::size_t i = 0; i < n; ++i) ad2[i] = ad_power(g, g.basis_vector(i), 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Matrix lhs(n, n);
            for (std::size_t k = 0; k < n; ++k)
                if (!g.c(i, j, k).is_zero()) lhs += g.c(i, j, k) * gamma[k];
            const Matrix rhs =
                unvec(ad2[i] * vec(gamma[j]) - ad2[j] * vec(gamma[i]), n, n);
            if (lhs != rhs) {
                rep.pass = false;
                rep.violations.push_back({i, j});
            }
        }
    return rep;
}

namespace detail {

/// Cyclic rotation e_a (x) e_b (x) e_c -> e_b (x) e_c (x) e_a on flattened
/// coefficient vectors: (cyc t)^{x,y,z} = t^{z,x,y}.
inline Vector rotate3(const Vector& t, std::size_t n) {
    Vector out(n * n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                out[(x * n + y) * n + z] = t[(z * n + x) * n + y];
    return out;
}

inline Vector alt3(const Vector& t, std::size_t n) {
    const Vector r1 = rotate3(t, n);
    return t + r1 + rotate3(r1, n);
}

/// (gamma (x) 1) gamma(x) as a flattened element of g^(x)3.
inline Vector gamma_tensor_gamma(const Cobracket& gamma, const Vector& x) {
    const std::size_t n = gamma.dim();
    const Matrix gx = gamma.apply(x);
    Vector t(n * n * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            const Scalar& cjk = gx.at(j, k);
            if (cjk.is_zero()) continue;
            const Matrix& gj = gamma[j];
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (!gj.at(a, b).is_zero()) t[(a * n + b) * n + k] += cjk * gj.at(a, b);
        }
    return t;
}

} // namespace detail

/// coJacobi: Alt((gamma (x) 1) gamma(e_i)) = 0 for every basis index,
/// with Alt(x (x) y (x) z) = x(x)y(x)z + y(x)z(x)x + z(x)x(x)y.
inline PairCheckReport check_cojacobi(const LieAlgebra& g, const Cobracket& gamma) {
    const std::size_t n = g.dim();
    PairCheckReport rep;
    for (std::size_t i = 0; i < n; ++i) {
        const Vector t = detail::gamma_tensor_gamma(gamma, g.basis_vector(i));
        if (!detail::alt3(t, n).is_zero()) {
            rep.pass = false;
            rep.violations.push_back({i, i});
        }
    }
    return rep;
}

struct DualBracketResult {
    LieAlgebra algebra;
    JacobiReport jacobi;
};

/// Transposed bracket on g*: [xi, eta] = gamma^t(xi (x) eta), i.e. the dual
/// structure constants are d(i,j,k) = gamma(e_k)^{ij}. The Jacobi report of
/// the output is attached; it fails exactly when gamma violates coJacobi.
inline DualBracketResult dual_bracket(const LieAlgebra& g, const Cobracket& gamma) {
    const std::size_t n = g.dim();
    if (gamma.dim() != n) throw ShapeError("dual_bracket: dimension mismatch");
    Tensor3 c(n, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) c.at(i, j, k) = gamma[k].at(i, j);
    std::vector<std::string> names;
    for (const auto& base : g.basis_names()) names.push_back(base + "*");
    LieAlgebra dual(n, std::move(names), std::move(c));
    JacobiReport rep = check_jacobi(dual);
    return DualBracketResult{std::move(dual), std::move(rep)};
}

/// Coordinate Yang-Baxter map: component (i,m,l) of
/// [r12,r13] + [r12,r23] + [r13,r23] equals
/// sum_{j,k} (r^{jm} r^{kl} c_jk^i + r^{ij} r^{mk} c_jk^l + r^{ij} r^{kl} c_jk^m).
inline Tensor3 cyb(const LieAlgebra& g, const Matrix& r) {
    const std::size_t n = g.dim();
    if (r.rows() != n || r.cols() != n) throw ShapeError("cyb: dimension mismatch");
    Tensor3 t(n, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t m = 0; m < n; ++m)
            for (std::size_t l = 0; l < n; ++l) {
                Scalar acc;
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k) {
                        if (!g.c(j, k, i).is_zero()) acc += r.at(j, m) * r.at(k, l) * g.c(j, k, i);
                        if (!g.c(j, k, l).is_zero()) acc += r.at(i, j) * r.at(m, k) * g.c(j, k, l);
                        if (!g.c(j, k, m).is_zero()) acc += r.at(i, j) * r.at(k, l) * g.c(j, k, m);
                    }
                t.at(i, m, l) = acc;
            }
    return t;
}

inline Tensor3 cyb(const LieAlgebra& g, const Bivector& r) { return cyb(g, r.matrix()); }

enum class RClass { triangular, quasitriangular, coboundary, none };

struct ClassifyReport {
    RClass cls = RClass::none;
    bool antisymmetric = false;
    bool cyb_zero = false;
    bool symmetric_part_invariant = false; // ad^(2)_x (r + sigma r) = 0 for all x
    bool cyb_invariant = false;            // ad^(3)_x CYB(r) = 0 for all x
};

/// Classifies a general candidate tensor r in g (x) g:
///   triangular       antisymmetric and CYB(r) = 0
///   quasitriangular  CYB(r) = 0 and r + sigma(r) g-invariant
///   coboundary       antisymmetric and CYB(r) g-invariant
inline ClassifyReport classify_r(const LieAlgebra& g, const Matrix& r) {
    const std::size_t n = g.dim();
    ClassifyReport rep;
    rep.antisymmetric = (r == -r.transpose());
    const Tensor3 c = cyb(g, r);
    rep.cyb_zero = c.is_zero();

    const Vector sym = vec(r + braid(r));
    rep.symmetric_part_invariant = true;
    for (std::size_t i = 0; i < n && rep.symmetric_part_invariant; ++i)
        if (!(ad_power(g, g.basis_vector(i), 2) * sym).is_zero())
            rep.symmetric_part_invariant = false;

    const Vector cv = vec3(c);
    rep.cyb_invariant = true;
    for (std::size_t i = 0; i < n && rep.cyb_invariant; ++i)
        if (!(ad_power(g, g.basis_vector(i), 3) * cv).is_zero()) rep.cyb_invariant = false;

    if (rep.antisymmetric && rep.cyb_zero)
        rep.cls = RClass::triangular;
    else if (rep.cyb_zero && rep.symmetric_part_invariant)
        rep.cls = RClass::quasitriangular;
    else if (rep.antisymmetric && rep.cyb_invariant)
        rep.cls = RClass::coboundary;
    else
        rep.cls = RClass::none;
    return rep;
}

/// r re-expressed in the basis of a subspace containing it: solves
/// B^T x B = r for the k x k coefficient matrix x.
inline Matrix restrict_bivector(const Bivector& r, const Subspace& h) {
    const std::size_t n = r.dim(), k = h.dim();
    const Matrix bt = columns(h.basis, n).transpose(); // k x n, rows are basis vectors
    // r = bt^T x bt, i.e. r = sum_{a,b} x_{ab} (row_a)^T (row_b)
    Matrix system(n * n, k * k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    system.at(i * n + j, a * k + b) = bt.at(a, i) * bt.at(b, j);
    auto x = solve(system, vec(r.matrix()));
    if (!x) throw MathError("bivector does not lie in the given subspace");
    return unvec(*x, k, k);
}

/// h_r = {(f (x) 1) r | f in g*}: the row space of the coefficient matrix.
/// Requires CYB(r) = 0. The result is re-verified to be bracket-closed and to
/// carry r as a non-degenerate element of h_r ^ h_r.
inline Subspace etingof_schiffmann(const LieAlgebra& g, const Bivector& r) {
    if (!cyb(g, r).is_zero())
        throw MathError("not an r-matrix: the Yang-Baxter equation fails");
    Subspace h{g.dim(), row_space_basis(r.matrix())};
    const Subspace closed = subalgebra_closure(g, h.basis);
    if (closed.dim() != h.dim())
        throw Error("internal: row space of an r-matrix is not bracket-closed");
    if (h.dim() > 0 && det(restrict_bivector(r, h)).is_zero())
        throw Error("internal: r is degenerate on its own row space");
    return h;
}

/// Verifies that phi : g -> h is a Lie algebra homomorphism on basis pairs.
inline void require_homomorphism(const LieAlgebra& g, const LieAlgebra& h, const Matrix& phi) {
    if (phi.rows() != h.dim() || phi.cols() != g.dim())
        throw ShapeError("homomorphism matrix has wrong shape");
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i + 1; j < g.dim(); ++j) {
            Vector lhs(g.dim());
            for (std::size_t k = 0; k < g.dim(); ++k) lhs[k] = g.c(i, j, k);
            const Vector image_of_bracket = phi * lhs;
            const Vector bracket_of_images = h.bracket(phi.col(i), phi.col(j));
            if (image_of_bracket != bracket_of_images)
                throw MathError("not a homomorphism: witness pair (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
        }
}

/// (phi (x) phi) r = phi r phi^T, pushed onto the codomain algebra.
inline Bivector pushforward_r(const LieAlgebra& g, const LieAlgebra& h, const Matrix& phi,
                              const Bivector& r) {
    require_homomorphism(g, h, phi);
    return Bivector(phi * r.matrix() * phi.transpose());
}

} // namespace liecas
