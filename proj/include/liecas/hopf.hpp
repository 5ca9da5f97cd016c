#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "liecas/linalg.hpp"

namespace liecas {

struct AxiomCheck {
    std::string name;
    bool pass = true;
    std::vector<std::vector<std::size_t>> witnesses; // failing basis index tuples
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Finite-dimensional Hopf algebra as structure tensors on a d-dimensional
/// space:
///   mult(i,j,k):   e_i e_j = sum_k mult(i,j,k) e_k
///   unit:          coordinates of 1_H
///   coprod(i,j,k): Delta(e_i) = sum_{j,k} coprod(i,j,k) e_j (x) e_k
///   counit[i]:     eps(e_i)
///   antipode(k,i): S(e_i) = sum_k antipode(k,i) e_k
struct HopfAlgebra {
    std::size_t dim = 0;
    Tensor3 mult;
    Vector unit;
    Tensor3 coprod;
    Vector counit;
    Matrix antipode;

    Vector basis_vector(std::size_t i) const {
        Vector v(dim);
        v[i] = Scalar(1);
        return v;
    }

    Vector mul(const Vector& x, const Vector& y) const {
        Vector z(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim; ++j) {
                if (y[j].is_zero()) continue;
                const Scalar xy = x[i] * y[j];
                for (std::size_t k = 0; k < dim; ++k)
                    if (!mult.at(i, j, k).is_zero()) z[k] += xy * mult.at(i, j, k);
            }
        }
        return z;
    }

    Vector coproduct(const Vector& x) const {
        Vector z(dim * dim);
        for (std::size_t i = 0; i < dim; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim; ++j)
                for (std::size_t k = 0; k < dim; ++k)
                    if (!coprod.at(i, j, k).is_zero())
                        z[j * dim + k] += x[i] * coprod.at(i, j, k);
        }
        return z;
    }

    Scalar eps(const Vector& x) const {
        Scalar s;
        for (std::size_t i = 0; i < dim; ++i) s += x[i] * counit[i];
        return s;
    }

    Vector apply_antipode(const Vector& x) const { return antipode * x; }

    // ---- tensor square H (x) H, flattened row-major ----

    Vector one2() const { return tensor2(unit, unit); }

    static Vector tensor2(const Vector& x, const Vector& y) {
        Vector z(x.size() * y.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < y.size(); ++j) z[i * y.size() + j] = x[i] * y[j];
        }
        return z;
    }

    Vector mul2(const Vector& x, const Vector& y) const {
        Vector z(dim * dim);
        for (std::size_t a = 0; a < dim; ++a)
            for (std::size_t b = 0; b < dim; ++b) {
                const Scalar& xa = x[a * dim + b];
                if (xa.is_zero()) continue;
                for (std::size_t c = 0; c < dim; ++c)
                    for (std::size_t d = 0; d < dim; ++d) {
                        const Scalar& yc = y[c * dim + d];
                        if (yc.is_zero()) continue;
                        const Scalar coeff = xa * yc;
                        for (std::size_t p = 0; p < dim; ++p) {
                            if (mult.at(a, c, p).is_zero()) continue;
                            for (std::size_t q = 0; q < dim; ++q)
                                if (!mult.at(b, d, q).is_zero())
                                    z[p * dim + q] += coeff * mult.at(a, c, p) * mult.at(b, d, q);
                        }
                    }
            }
        return z;
    }

    // ---- tensor cube H (x) H (x) H, flattened row-major ----

    Vector mul3(const Vector& x, const Vector& y) const {
        const std::size_t d2 = dim * dim;
        Vector z(dim * d2);
        for (std::size_t a = 0; a < dim; ++a)
            for (std::size_t b = 0; b < dim; ++b)
                for (std::size_t c = 0; c < dim; ++c) {
                    const Scalar& xv = x[(a * dim + b) * dim + c];
                    if (xv.is_zero()) continue;
                    for (std::size_t e = 0; e < dim; ++e)
                        for (std::size_t f = 0; f < dim; ++f)
                            for (std::size_t g = 0; g < dim; ++g) {
                                const Scalar& yv = y[(e * dim + f) * dim + g];
                                if (yv.is_zero()) continue;
                                const Scalar coeff = xv * yv;
                                for (std::size_t p = 0; p < dim; ++p) {
                                    if (mult.at(a, e, p).is_zero()) continue;
                                    for (std::size_t q = 0; q < dim; ++q) {
                                        if (mult.at(b, f, q).is_zero()) continue;
                                        const Scalar pq =
                                            coeff * mult.at(a, e, p) * mult.at(b, f, q);
                                        for (std::size_t r = 0; r < dim; ++r)
                                            if (!mult.at(c, g, r).is_zero())
                                                z[(p * dim + q) * dim + r] +=
                                                    pq * mult.at(c, g, r);
                                    }
                                }
                            }
                }
        return z;
    }

    /// (Delta (x) 1) applied to an element of H (x) H.
    Vector coprod_left(const Vector& x) const {
        Vector z(dim * dim * dim);
        for (std::size_t a = 0; a < dim; ++a)
            for (std::size_t b = 0; b < dim; ++b) {
                const Scalar& xv = x[a * dim + b];
                if (xv.is_zero()) continue;
                for (std::size_t j = 0; j < dim; ++j)
                    for (std::size_t k = 0; k < dim; ++k)
                        if (!coprod.at(a, j, k).is_zero())
                            z[(j * dim + k) * dim + b] += xv * coprod.at(a, j, k);
            }
        return z;
    }

    /// (1 (x) Delta) applied to an element of H (x) H.
    Vector coprod_right(const Vector& x) const {
        Vector z(dim * dim * dim);
        for (std::size_t a = 0; a < dim; ++a)
            for (std::size_t b = 0; b < dim; ++b) {
                const Scalar& xv = x[a * dim + b];
                if (xv.is_zero()) continue;
                for (std::size_t j = 0; j < dim; ++j)
                    for (std::size_t k = 0; k < dim; ++k)
                        if (!coprod.at(b, j, k).is_zero())
                            z[(a * dim + j) * dim + k] += xv * coprod.at(b, j, k);
            }
        return z;
    }

    /// x (x) 1_H and 1_H (x) x for x in H (x) H.
    Vector embed12(const Vector& x) const {
        Vector z(dim * dim * dim);
        for (std::size_t a = 0; a < dim; ++a)
            for (std::size_t b = 0; b < dim; ++b) {
                const Scalar& xv = x[a * dim + b];
                if (xv.is_zero()) continue;
                for (std::size_t u = 0; u < dim; ++u)
                    if (!unit[u].is_zero()) z[(a * dim + b) * dim + u] += xv * unit[u];
            }
        return z;
    }
    Vector embed23(const Vector& x) const {
        Vector z(dim * dim * dim);
        for (std::size_t a = 0; a < dim; ++a)
            for (std::size_t b = 0; b < dim; ++b) {
                const Scalar& xv = x[a * dim + b];
                if (xv.is_zero()) continue;
                for (std::size_t u = 0; u < dim; ++u)
                    if (!unit[u].is_zero()) z[(u * dim + a) * dim + b] += xv * unit[u];
            }
        return z;
    }

    /// Left multiplication operator by x on H, as a matrix.
    Matrix left_mul_operator(const Vector& x) const {
        Matrix op(dim, dim);
        for (std::size_t j = 0; j < dim; ++j) {
            const Vector col = mul(x, basis_vector(j));
            for (std::size_t i = 0; i < dim; ++i) op.at(i, j) = col[i];
        }
        return op;
    }

    /// Left multiplication operator by x on H (x) H.
    Matrix left_mul2_operator(const Vector& x) const {
        const std::size_t d2 = dim * dim;
        Matrix op(d2, d2);
        for (std::size_t j = 0; j < d2; ++j) {
            Vector ej(d2);
            ej[j] = Scalar(1);
            const Vector col = mul2(x, ej);
            for (std::size_t i = 0; i < d2; ++i) op.at(i, j) = col[i];
        }
        return op;
    }
};

inline void check_shapes(const HopfAlgebra& h) {
    const std::size_t d = h.dim;
    if (h.mult.dim1() != d || h.mult.dim2() != d || h.mult.dim3() != d ||
        h.coprod.dim1() != d || h.coprod.dim2() != d || h.coprod.dim3() != d ||
        h.unit.size() != d || h.counit.size() != d || h.antipode.rows() != d ||
        h.antipode.cols() != d)
        throw ShapeError("Hopf structure tensors have inconsistent shapes");
}

/// All Hopf axiom families as exact tensor identities on basis elements;
/// failures are recorded with witness index tuples.
inline AxiomReport check_hopf_axioms(const HopfAlgebra& h) {
    check_shapes(h);
    const std::size_t d = h.dim;
    AxiomReport rep;

    AxiomCheck assoc{"associativity"};
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                const Vector lhs = h.mul(h.mul(h.basis_vector(i), h.basis_vector(j)),
                                         h.basis_vector(k));
                const Vector rhs = h.mul(h.basis_vector(i),
                                         h.mul(h.basis_vector(j), h.basis_vector(k)));
                if (lhs != rhs) {
                    assoc.pass = false;
                    assoc.witnesses.push_back({i, j, k});
                }
            }
    rep.checks.push_back(std::move(assoc));

    AxiomCheck unit{"unit"};
    for (std::size_t i = 0; i < d; ++i) {
        const Vector e = h.basis_vector(i);
        if (h.mul(h.unit, e) != e || h.mul(e, h.unit) != e) {
            unit.pass = false;
            unit.witnesses.push_back({i});
        }
    }
    rep.checks.push_back(std::move(unit));

    AxiomCheck coassoc{"coassociativity"};
    for (std::size_t i = 0; i < d; ++i) {
        const Vector dx = h.coproduct(h.basis_vector(i));
        if (h.coprod_left(dx) != h.coprod_right(dx)) {
            coassoc.pass = false;
            coassoc.witnesses.push_back({i});
        }
    }
    rep.checks.push_back(std::move(coassoc));

    AxiomCheck counit{"counit"};
    for (std::size_t i = 0; i < d; ++i) {
        const Vector dx = h.coproduct(h.basis_vector(i));
        Vector left(d), right(d);
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) {
                const Scalar& v = dx[a * d + b];
                if (v.is_zero()) continue;
                left[b] += v * h.counit[a];
                right[a] += v * h.counit[b];
            }
        if (left != h.basis_vector(i) || right != h.basis_vector(i)) {
            counit.pass = false;
            counit.witnesses.push_back({i});
        }
    }
    rep.checks.push_back(std::move(counit));

    AxiomCheck coprod_alg{"coproduct is an algebra map"};
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Vector lhs = h.coproduct(h.mul(h.basis_vector(i), h.basis_vector(j)));
            const Vector rhs =
                h.mul2(h.coproduct(h.basis_vector(i)), h.coproduct(h.basis_vector(j)));
            if (lhs != rhs) {
                coprod_alg.pass = false;
                coprod_alg.witnesses.push_back({i, j});
            }
        }
    if (h.coproduct(h.unit) != h.one2()) {
        coprod_alg.pass = false;
        coprod_alg.witnesses.push_back({});
    }
    rep.checks.push_back(std::move(coprod_alg));

    AxiomCheck counit_alg{"counit is an algebra map"};
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (h.eps(h.mul(h.basis_vector(i), h.basis_vector(j))) !=
                h.eps(h.basis_vector(i)) * h.eps(h.basis_vector(j))) {
                counit_alg.pass = false;
                counit_alg.witnesses.push_back({i, j});
            }
        }
    if (!h.eps(h.unit).is_one()) {
        counit_alg.pass = false;
        counit_alg.witnesses.push_back({});
    }
    rep.checks.push_back(std::move(counit_alg));

    AxiomCheck antipode{"antipode"};
    for (std::size_t i = 0; i < d; ++i) {
        const Vector dx = h.coproduct(h.basis_vector(i));
        Vector left(d), right(d);
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) {
                const Scalar& v = dx[a * d + b];
                if (v.is_zero()) continue;
                left += v * h.mul(h.apply_antipode(h.basis_vector(a)), h.basis_vector(b));
                right += v * h.mul(h.basis_vector(a), h.apply_antipode(h.basis_vector(b)));
            }
        const Vector expected = h.eps(h.basis_vector(i)) * h.unit;
        if (left != expected || right != expected) {
            antipode.pass = false;
            antipode.witnesses.push_back({i});
        }
    }
    rep.checks.push_back(std::move(antipode));

    return rep;
}

/// Invertible element of H (x) H together with its two-sided inverse.
struct TwistElement {
    Vector f;
    Vector finv;

    /// Inverts f in the tensor-square algebra by an exact linear solve on the
    /// left-multiplication operator; verifies the inverse is two-sided.
    static TwistElement from_f(const HopfAlgebra& h, Vector f) {
        auto inv = solve(h.left_mul2_operator(f), h.one2());
        if (!inv) throw MathError("twist element is not invertible");
        if (h.mul2(*inv, f) != h.one2() || h.mul2(f, *inv) != h.one2())
            throw MathError("twist element has no two-sided inverse");
        return TwistElement{std::move(f), std::move(*inv)};
    }
};

/// Twist conditions on a raw element f of H (x) H: invertibility, the
/// 2-cocycle F12 ((Delta (x) 1) F) = F23 ((1 (x) Delta) F), and the
/// normalization (eps (x) 1) F = (1 (x) eps) F = 1_H. Each condition is
/// reported separately; the cocycle and normalization do not need the inverse.
inline AxiomReport is_twist(const HopfAlgebra& h, const Vector& f) {
    const std::size_t d = h.dim;
    AxiomReport rep;

    AxiomCheck invertible{"invertible"};
    {
        auto inv = solve(h.left_mul2_operator(f), h.one2());
        if (!inv || h.mul2(*inv, f) != h.one2() || h.mul2(f, *inv) != h.one2())
            invertible.pass = false;
    }
    rep.checks.push_back(std::move(invertible));

    AxiomCheck cocycle{"2-cocycle"};
    const Vector lhs = h.mul3(h.embed12(f), h.coprod_left(f));
    const Vector rhs = h.mul3(h.embed23(f), h.coprod_right(f));
    if (lhs != rhs) cocycle.pass = false;
    rep.checks.push_back(std::move(cocycle));

    AxiomCheck normalization{"normalization"};
    Vector left(d), right(d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            const Scalar& v = f[a * d + b];
            if (v.is_zero()) continue;
            left[b] += v * h.counit[a];
            right[a] += v * h.counit[b];
        }
    if (left != h.unit || right != h.unit) normalization.pass = false;
    rep.checks.push_back(std::move(normalization));

    return rep;
}

inline AxiomReport is_twist(const HopfAlgebra& h, const TwistElement& t) {
    return is_twist(h, t.f);
}

/// Conjugated coproduct Delta^F(x) = F Delta(x) F^{-1} and antipode
/// S^F(x) = U S(x) U^{-1} with U = m((1 (x) S) F); multiplication, unit and
/// counit are unchanged. The output is verified against all Hopf axioms.
inline HopfAlgebra deform_hopf(const HopfAlgebra& h, const TwistElement& t) {
    if (!is_twist(h, t).pass()) throw MathError("element is not a twist");
    const std::size_t d = h.dim;

    Tensor3 coprod(d, d, d);
    for (std::size_t i = 0; i < d; ++i) {
        const Vector conj = h.mul2(t.f, h.mul2(h.coproduct(h.basis_vector(i)), t.finv));
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) coprod.at(i, a, b) = conj[a * d + b];
    }

    // U = F_1 S(F_2)
    Vector u(d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            const Scalar& v = t.f[a * d + b];
            if (!v.is_zero()) u += v * h.mul(h.basis_vector(a), h.apply_antipode(h.basis_vector(b)));
        }
    auto uinv = solve(h.left_mul_operator(u), h.unit);
    if (!uinv || h.mul(*uinv, u) != h.unit || h.mul(u, *uinv) != h.unit)
        throw MathError("internal consistency failure: U = m((1 (x) S)F) is not invertible");

    Matrix antipode(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        const Vector s = h.mul(u, h.mul(h.apply_antipode(h.basis_vector(i)), *uinv));
        for (std::size_t k = 0; k < d; ++k) antipode.at(k, i) = s[k];
    }

    HopfAlgebra out{d, h.mult, h.unit, std::move(coprod), h.counit, std::move(antipode)};
    if (!check_hopf_axioms(out).pass())
        throw Error("internal: twisted structure violates the Hopf axioms");
    return out;
}

/// Twisting back: deforming by F and then by F^{-1} (a twist on the deformed
/// Hopf algebra) must reproduce the original structure tensors exactly.
inline HopfAlgebra twist_back(const HopfAlgebra& h, const TwistElement& t) {
    HopfAlgebra deformed = deform_hopf(h, t);
    TwistElement back{t.finv, t.f};
    if (!is_twist(deformed, back).pass())
        throw Error("internal: F^{-1} is not a twist on the deformed Hopf algebra");
    return deform_hopf(deformed, back);
}

/// Algebra carrying a Hopf action compatible with its product:
///   amult(a,b,c): u_a u_b = sum_c amult(a,b,c) u_c
///   action(i,a,b): e_i |> u_a = sum_b action(i,a,b) u_b
struct ModuleAlgebra {
    std::size_t dim_a = 0;
    Tensor3 amult;
    Vector aunit;
    Tensor3 action;

    Vector basis_vector(std::size_t a) const {
        Vector v(dim_a);
        v[a] = Scalar(1);
        return v;
    }

    Vector mul(const Vector& x, const Vector& y) const {
        Vector z(dim_a);
        for (std::size_t a = 0; a < dim_a; ++a) {
            if (x[a].is_zero()) continue;
            for (std::size_t b = 0; b < dim_a; ++b) {
                if (y[b].is_zero()) continue;
                const Scalar xy = x[a] * y[b];
                for (std::size_t c = 0; c < dim_a; ++c)
                    if (!amult.at(a, b, c).is_zero()) z[c] += xy * amult.at(a, b, c);
            }
        }
        return z;
    }

    /// xi |> v for xi in H, v in A.
    Vector act(const Vector& xi, const Vector& v) const {
        Vector z(dim_a);
        for (std::size_t i = 0; i < xi.size(); ++i) {
            if (xi[i].is_zero()) continue;
            for (std::size_t a = 0; a < dim_a; ++a) {
                if (v[a].is_zero()) continue;
                const Scalar s = xi[i] * v[a];
                for (std::size_t b = 0; b < dim_a; ++b)
                    if (!action.at(i, a, b).is_zero()) z[b] += s * action.at(i, a, b);
            }
        }
        return z;
    }
};

/// Module axioms and module-algebra compatibility of A against H.
inline AxiomReport check_module_algebra(const HopfAlgebra& h, const ModuleAlgebra& a) {
    const std::size_t d = h.dim, e = a.dim_a;
    AxiomReport rep;

    AxiomCheck assoc{"algebra associativity"};
    for (std::size_t x = 0; x < e; ++x)
        for (std::size_t y = 0; y < e; ++y)
            for (std::size_t z = 0; z < e; ++z)
                if (a.mul(a.mul(a.basis_vector(x), a.basis_vector(y)), a.basis_vector(z)) !=
                    a.mul(a.basis_vector(x), a.mul(a.basis_vector(y), a.basis_vector(z)))) {
                    assoc.pass = false;
                    assoc.witnesses.push_back({x, y, z});
                }
    rep.checks.push_back(std::move(assoc));

    AxiomCheck unital{"algebra unit"};
    for (std::size_t x = 0; x < e; ++x) {
        const Vector v = a.basis_vector(x);
        if (a.mul(a.aunit, v) != v || a.mul(v, a.aunit) != v) {
            unital.pass = false;
            unital.witnesses.push_back({x});
        }
    }
    rep.checks.push_back(std::move(unital));

    AxiomCheck module{"module law (xi zeta) |> v = xi |> (zeta |> v)"};
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t x = 0; x < e; ++x) {
                const Vector lhs =
                    a.act(h.mul(h.basis_vector(i), h.basis_vector(j)), a.basis_vector(x));
                const Vector rhs =
                    a.act(h.basis_vector(i), a.act(h.basis_vector(j), a.basis_vector(x)));
                if (lhs != rhs) {
                    module.pass = false;
                    module.witnesses.push_back({i, j, x});
                }
            }
    for (std::size_t x = 0; x < e; ++x)
        if (a.act(h.unit, a.basis_vector(x)) != a.basis_vector(x)) {
            module.pass = false;
            module.witnesses.push_back({x});
        }
    rep.checks.push_back(std::move(module));

    AxiomCheck leibniz{"action respects products via the coproduct"};
    for (std::size_t i = 0; i < d; ++i) {
        const Vector dx = h.coproduct(h.basis_vector(i));
        for (std::size_t x = 0; x < e; ++x)
            for (std::size_t y = 0; y < e; ++y) {
                const Vector lhs = a.act(h.basis_vector(i),
                                         a.mul(a.basis_vector(x), a.basis_vector(y)));
                Vector rhs(e);
                for (std::size_t p = 0; p < d; ++p)
                    for (std::size_t q = 0; q < d; ++q) {
                        const Scalar& v = dx[p * d + q];
                        if (v.is_zero()) continue;
                        rhs += v * a.mul(a.act(h.basis_vector(p), a.basis_vector(x)),
                                         a.act(h.basis_vector(q), a.basis_vector(y)));
                    }
                if (lhs != rhs) {
                    leibniz.pass = false;
                    leibniz.witnesses.push_back({i, x, y});
                }
            }
    }
    rep.checks.push_back(std::move(leibniz));

    AxiomCheck unit_action{"xi |> 1_A = eps(xi) 1_A"};
    for (std::size_t i = 0; i < d; ++i)
        if (a.act(h.basis_vector(i), a.aunit) != h.eps(h.basis_vector(i)) * a.aunit) {
            unit_action.pass = false;
            unit_action.witnesses.push_back({i});
        }
    rep.checks.push_back(std::move(unit_action));

    return rep;
}

/// Deformed product a * b = m(F^{-1} |> (a (x) b)) with the original unit;
/// the output is a module algebra over the deformed Hopf algebra, which is
/// verified before returning.
inline ModuleAlgebra twist_module_algebra(const HopfAlgebra& h, const TwistElement& t,
                                          const ModuleAlgebra& a) {
    if (!is_twist(h, t).pass()) throw MathError("element is not a twist");
    {
        AxiomReport before = check_module_algebra(h, a);
        if (!before.pass()) {
            std::string which;
            for (const auto& c : before.checks)
                if (!c.pass) which += (which.empty() ? "" : ", ") + c.name;
            throw MathError("module axioms fail: " + which);
        }
    }
    const std::size_t d = h.dim, e = a.dim_a;
    Tensor3 amult(e, e, e);
    for (std::size_t x = 0; x < e; ++x)
        for (std::size_t y = 0; y < e; ++y) {
            Vector prod(e);
            for (std::size_t p = 0; p < d; ++p)
                for (std::size_t q = 0; q < d; ++q) {
                    const Scalar& v = t.finv[p * d + q];
                    if (v.is_zero()) continue;
                    prod += v * a.mul(a.act(h.basis_vector(p), a.basis_vector(x)),
                                      a.act(h.basis_vector(q), a.basis_vector(y)));
                }
            for (std::size_t c = 0; c < e; ++c) amult.at(x, y, c) = prod[c];
        }
    ModuleAlgebra out{e, std::move(amult), a.aunit, a.action};
    if (!check_module_algebra(deform_hopf(h, t), out).pass())
        throw Error("internal: twisted module algebra violates the axioms");
    return out;
}

/// Convolution algebra on H*: (phi psi)(c) = (phi (x) psi)(Delta c), with
/// unit eps. Associativity and unitality are verified (they follow from
/// coassociativity and the counit law).
struct DualAlgebra {
    Tensor3 mult; // mult(i,j,k): e^i e^j = sum_k mult(i,j,k) e^k
    Vector unit;  // coordinates of eps in the dual basis
};

inline DualAlgebra dual_algebra_of_coalgebra(const HopfAlgebra& h) {
    const std::size_t d = h.dim;
    Tensor3 mult(d, d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) mult.at(i, j, k) = h.coprod.at(k, i, j);
    DualAlgebra dual{std::move(mult), h.counit};

    HopfAlgebra probe;
    probe.dim = d;
    probe.mult = dual.mult;
    probe.unit = dual.unit;
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
            for (std::size_t z = 0; z < d; ++z) {
                const Vector lhs = probe.mul(probe.mul(probe.basis_vector(x),
                                                       probe.basis_vector(y)),
                                             probe.basis_vector(z));
                const Vector rhs = probe.mul(probe.basis_vector(x),
                                             probe.mul(probe.basis_vector(y),
                                                       probe.basis_vector(z)));
                if (lhs != rhs) throw Error("internal: dual algebra is not associative");
            }
    for (std::size_t x = 0; x < d; ++x) {
        const Vector v = probe.basis_vector(x);
        if (probe.mul(probe.unit, v) != v || probe.mul(v, probe.unit) != v)
            throw Error("internal: eps is not a unit of the dual algebra");
    }
    return dual;
}

/// Derived antipode identities: S is an antialgebra map, S(1) = 1,
/// (S (x) S) Delta = sigma Delta S, eps S = eps.
inline AxiomReport antipode_properties(const HopfAlgebra& h) {
    const std::size_t d = h.dim;
    AxiomReport rep;

    AxiomCheck anti{"S(gh) = S(h)S(g)"};
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (h.apply_antipode(h.mul(h.basis_vector(i), h.basis_vector(j))) !=
                h.mul(h.apply_antipode(h.basis_vector(j)), h.apply_antipode(h.basis_vector(i)))) {
                anti.pass = false;
                anti.witnesses.push_back({i, j});
            }
    rep.checks.push_back(std::move(anti));

    AxiomCheck unit{"S(1) = 1"};
    if (h.apply_antipode(h.unit) != h.unit) unit.pass = false;
    rep.checks.push_back(std::move(unit));

    AxiomCheck coalg{"(S (x) S) Delta = sigma Delta S"};
    for (std::size_t i = 0; i < d; ++i) {
        const Vector dx = h.coproduct(h.basis_vector(i));
        Vector lhs(d * d);
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) {
                const Scalar& v = dx[a * d + b];
                if (v.is_zero()) continue;
                lhs += v * HopfAlgebra::tensor2(h.apply_antipode(h.basis_vector(a)),
                                                h.apply_antipode(h.basis_vector(b)));
            }
        const Vector ds = h.coproduct(h.apply_antipode(h.basis_vector(i)));
        Vector rhs(d * d);
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) rhs[b * d + a] = ds[a * d + b];
        if (lhs != rhs) {
            coalg.pass = false;
            coalg.witnesses.push_back({i});
        }
    }
    rep.checks.push_back(std::move(coalg));

    AxiomCheck counit{"eps S = eps"};
    for (std::size_t i = 0; i < d; ++i)
        if (h.eps(h.apply_antipode(h.basis_vector(i))) != h.eps(h.basis_vector(i))) {
            counit.pass = false;
            counit.witnesses.push_back({i});
        }
    rep.checks.push_back(std::move(counit));

    return rep;
}

} // namespace liecas
