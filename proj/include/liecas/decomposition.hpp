#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "liecas/lie_algebra.hpp"

namespace liecas {

/// Lie algebra of explicit ambient matrices, closed under the commutator.
class MatrixLieAlgebra {
public:
    MatrixLieAlgebra(std::size_t ambient, std::vector<Matrix> basis)
        : ambient_(ambient), basis_(std::move(basis)) {
        for (const auto& b : basis_)
            if (b.rows() != ambient_ || b.cols() != ambient_)
                throw ShapeError("basis matrix has wrong ambient size");
        if (rank(stacked()) != basis_.size())
            throw MathError("matrix basis is linearly dependent");
        for (std::size_t i = 0; i < basis_.size(); ++i)
            for (std::size_t j = i + 1; j < basis_.size(); ++j)
                if (!coordinates(commutator(basis_[i], basis_[j])))
                    throw MathError("not closed under commutator: witness pair (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Matrix>& basis() const { return basis_; }

    static Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

    /// Coordinates of an ambient matrix in the basis, if it lies in the span.
    std::optional<Vector> coordinates(const Matrix& m) const {
        return solve(stacked(), vec(m));
    }

    /// Ambient matrix from a coordinate vector.
    Matrix materialize(const Vector& coords) const {
        Matrix out(ambient_, ambient_);
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (!coords[i].is_zero()) out += coords[i] * basis_[i];
        return out;
    }

    std::vector<Matrix> materialize_all(const std::vector<Vector>& coords) const {
        std::vector<Matrix> out;
        out.reserve(coords.size());
        for (const auto& c : coords) out.push_back(materialize(c));
        return out;
    }

private:
    Matrix stacked() const {
        Matrix s(ambient_ * ambient_, basis_.size());
        for (std::size_t j = 0; j < basis_.size(); ++j) {
            const Vector v = vec(basis_[j]);
            for (std::size_t i = 0; i < v.size(); ++i) s.at(i, j) = v[i];
        }
        return s;
    }

    std::size_t ambient_;
    std::vector<Matrix> basis_;
};

/// Structure constants solved exactly from [B_i, B_j] = sum_k c_ij^k B_k.
inline LieAlgebra matrix_to_abstract(const MatrixLieAlgebra& m,
                                     std::vector<std::string> names = {}) {
    const std::size_t d = m.dim();
    Tensor3 c(d, d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto coords = m.coordinates(MatrixLieAlgebra::commutator(m.basis()[i], m.basis()[j]));
            if (!coords)
                throw MathError("not closed under commutator: witness pair (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
            for (std::size_t k = 0; k < d; ++k) c.at(i, j, k) = (*coords)[k];
        }
    if (names.empty())
        for (std::size_t i = 0; i < d; ++i) names.push_back("m" + std::to_string(i + 1));
    return LieAlgebra(d, std::move(names), std::move(c));
}

struct CartanDecomposition {
    Matrix theta;   // involution on coordinates
    Subspace k;     // +1 eigenspace
    Subspace p;     // -1 eigenspace
};

namespace detail {

inline bool bracket_into(const LieAlgebra& g, const Subspace& a, const Subspace& b,
                         const Subspace& target) {
    for (const auto& x : a.basis)
        for (const auto& y : b.basis)
            if (!target.contains(g.bracket(x, y))) return false;
    return true;
}

} // namespace detail

/// Eigenspace split of the fixed involution Theta(X) = -X^T. Errors if Theta
/// does not map the algebra to itself; verifies the bracket relations
/// [k,k] in k, [k,p] in p, [p,p] in k.
inline CartanDecomposition cartan_decomposition(const MatrixLieAlgebra& m,
                                                const LieAlgebra& abstract) {
    const std::size_t d = m.dim();
    Matrix theta(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        auto coords = m.coordinates(-m.basis()[i].transpose());
        if (!coords)
            throw MathError("Theta does not preserve algebra: witness basis index " +
                            std::to_string(i));
        for (std::size_t r = 0; r < d; ++r) theta.at(r, i) = (*coords)[r];
    }
    if (theta * theta != Matrix::identity(d))
        throw MathError("Theta is not an involution on this algebra");

    Subspace k{d, kernel_basis(theta - Matrix::identity(d))};
    Subspace p{d, kernel_basis(theta + Matrix::identity(d))};
    if (k.dim() + p.dim() != d) throw Error("internal: eigenspaces of Theta do not fill g");
    if (!detail::bracket_into(abstract, k, k, k) || !detail::bracket_into(abstract, k, p, p) ||
        !detail::bracket_into(abstract, p, p, k))
        throw MathError("Theta eigenspaces violate the Cartan bracket relations");
    return CartanDecomposition{std::move(theta), std::move(k), std::move(p)};
}

inline CartanDecomposition cartan_decomposition(const MatrixLieAlgebra& m) {
    return cartan_decomposition(m, matrix_to_abstract(m));
}

/// Greedy maximal abelian subspace of p, with a centralizer certificate:
/// extends by centralizer elements until the centralizer of a in p equals a.
inline Subspace maximal_abelian_in_p(const LieAlgebra& g, const Subspace& p) {
    Subspace a{g.dim(), {}};
    while (true) {
        // centralizer of a inside p, in coordinates of the p basis
        std::vector<Vector> cz;
        if (a.dim() == 0) {
            cz = p.basis;
        } else {
            const std::size_t pd = p.dim();
            Matrix sys(a.dim() * g.dim(), pd);
            for (std::size_t t = 0; t < a.dim(); ++t)
                for (std::size_t j = 0; j < pd; ++j) {
                    const Vector w = g.bracket(a.basis[t], p.basis[j]);
                    for (std::size_t r = 0; r < g.dim(); ++r)
                        sys.at(t * g.dim() + r, j) = w[r];
                }
            for (const auto& coeffs : kernel_basis(sys)) {
                Vector v(g.dim());
                for (std::size_t j = 0; j < pd; ++j)
                    if (!coeffs[j].is_zero()) v += coeffs[j] * p.basis[j];
                cz.push_back(std::move(v));
            }
        }
        bool extended = false;
        for (const auto& v : cz) {
            if (!a.contains(v)) {
                a.basis.push_back(v);
                extended = true;
                break;
            }
        }
        if (!extended) return a;
    }
}

namespace detail {

/// Characteristic polynomial coefficients (constant term first, leading 1)
/// by the Faddeev-LeVerrier recursion; entries must be real rationals.
inline std::vector<Rational> char_poly(const Matrix& m) {
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!m.at(i, j).is_real())
                throw MathError("eigenvalue search requires a real matrix");
    std::vector<Rational> coeff(n + 1);
    coeff[n] = 1;
    Matrix mk = Matrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        Rational ck = -mk.trace().real() / Rational(static_cast<long>(k));
        coeff[n - k] = ck;
        mk += Scalar(Rational(ck)) * Matrix::identity(n);
    }
    return coeff;
}

inline std::vector<Integer> small_prime_factors(Integer v, const Integer& trial_bound) {
    std::vector<Integer> primes;
    if (v < 0) v = -v;
    for (Integer f = 2; f * f <= v && f <= trial_bound; ++f) {
        if (v % f == 0) {
            primes.push_back(f);
            while (v % f == 0) v /= f;
        }
    }
    if (v > 1) {
        if (v > trial_bound * trial_bound)
            throw MathError("irrational restricted roots (eigenvalue search out of range)");
        primes.push_back(v);
    }
    return primes;
}

inline std::vector<Integer> divisors(const Integer& v) {
    Integer x = v < 0 ? Integer(-v) : v;
    std::vector<Integer> divs{1};
    for (const Integer& prime : small_prime_factors(x, Integer(1000000))) {
        Integer pk = 1;
        const std::size_t base = divs.size();
        while (x % (pk * prime) == 0) {
            pk *= prime;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

/// All rational roots of the characteristic polynomial, candidates taken from
/// the rational root theorem. Multiplicities are not computed here; callers
/// verify diagonalizability by eigenspace dimensions.
inline std::vector<Rational> rational_eigenvalues(const Matrix& m) {
    auto coeff = char_poly(m);
    // scale to integer coefficients
    Integer scale = 1;
    for (const auto& c : coeff) scale = boost::multiprecision::lcm(scale, denominator(c));
    std::vector<Integer> ic;
    ic.reserve(coeff.size());
    for (const auto& c : coeff) ic.push_back(numerator(c) * (scale / denominator(c)));

    std::vector<Rational> roots;
    std::size_t low = 0;
    while (low < ic.size() && ic[low].is_zero()) ++low;
    if (low > 0) roots.push_back(Rational(0));
    if (low == ic.size()) return roots;

    const auto eval = [&](const Rational& x) {
        Rational acc = 0;
        for (std::size_t k = ic.size(); k-- > low;) acc = acc * x + Rational(ic[k]);
        return acc;
    };
    for (const Integer& p : divisors(ic[low]))
        for (const Integer& q : divisors(ic.back())) {
            Rational candidate(p, q);
            for (int s = 0; s < 2; ++s, candidate = -candidate) {
                if (eval(candidate).is_zero() &&
                    std::find(roots.begin(), roots.end(), candidate) == roots.end())
                    roots.push_back(candidate);
            }
        }
    return roots;
}

} // namespace detail

struct RestrictedRoot {
    std::vector<Rational> alpha; // values on the a-basis
    std::size_t multiplicity;
};

struct IwasawaResult {
    std::vector<Matrix> k_basis;
    std::vector<Matrix> a_basis;
    std::vector<Matrix> p_basis;
    std::vector<Matrix> n_basis;
    std::vector<RestrictedRoot> restricted_roots; // nonzero roots only
    // coordinate data, for further exact checks
    LieAlgebra algebra;
    Matrix theta;
    Subspace k, a, p, n;
};

namespace detail {

struct EigenSpace {
    std::vector<Rational> label; // ad-eigenvalues on the a-basis so far
    std::vector<Vector> basis;   // coordinates in g
};

inline bool lex_positive(const std::vector<Rational>& alpha) {
    for (const auto& v : alpha) {
        if (v > 0) return true;
        if (v < 0) return false;
    }
    return false;
}

} // namespace detail

/// Joint ad-eigenspace refinement of g over a basis of a; n is the sum of the
/// root spaces with lexicographically positive root tuple. Verifies the
/// direct sum dimensions, [a,n] in n, abelianness of a, nilpotency of n and
/// a in p. Errors out when some restricted root is irrational.
inline IwasawaResult iwasawa(const MatrixLieAlgebra& m) {
    LieAlgebra g = matrix_to_abstract(m);
    CartanDecomposition cartan = cartan_decomposition(m, g);
    Subspace a = maximal_abelian_in_p(g, cartan.p);
    const std::size_t d = g.dim();

    std::vector<detail::EigenSpace> spaces{{{}, {}}};
    spaces[0].basis.reserve(d);
    for (std::size_t i = 0; i < d; ++i) spaces[0].basis.push_back(g.basis_vector(i));

    for (const auto& av : a.basis) {
        const Matrix ad = adjoint(g, av);
        std::vector<detail::EigenSpace> next;
        for (auto& sp : spaces) {
            const Matrix b = columns(sp.basis, d);
            // ad restricted to the space, in its own coordinates
            const std::size_t sd = sp.basis.size();
            Matrix restricted(sd, sd);
            for (std::size_t j = 0; j < sd; ++j) {
                auto coords = solve(b, ad * sp.basis[j]);
                if (!coords) throw Error("internal: ad(a) does not preserve a root space");
                for (std::size_t r = 0; r < sd; ++r) restricted.at(r, j) = (*coords)[r];
            }
            std::size_t found = 0;
            for (const Rational& lambda : detail::rational_eigenvalues(restricted)) {
                auto null = kernel_basis(restricted - Scalar(lambda) * Matrix::identity(sd));
                if (null.empty()) continue;
                detail::EigenSpace child;
                child.label = sp.label;
                child.label.push_back(lambda);
                for (const auto& coeffs : null) {
                    Vector v(d);
                    for (std::size_t j = 0; j < sd; ++j)
                        if (!coeffs[j].is_zero()) v += coeffs[j] * sp.basis[j];
                    child.basis.push_back(std::move(v));
                }
                found += child.basis.size();
                next.push_back(std::move(child));
            }
            if (found != sd)
                throw MathError("irrational restricted roots: ad(a) is not rationally "
                                "diagonalizable");
        }
        spaces = std::move(next);
    }

    Subspace n{d, {}};
    std::vector<RestrictedRoot> roots;
    for (const auto& sp : spaces) {
        const bool zero_label =
            std::all_of(sp.label.begin(), sp.label.end(), [](const Rational& v) {
                return v.is_zero();
            });
        if (zero_label) continue;
        roots.push_back({sp.label, sp.basis.size()});
        if (detail::lex_positive(sp.label))
            for (const auto& v : sp.basis) n.basis.push_back(v);
    }

    if (cartan.k.dim() + a.dim() + n.dim() != d)
        throw MathError("decomposition failed: dim k + dim a + dim n = " +
                        std::to_string(cartan.k.dim() + a.dim() + n.dim()) + " != " +
                        std::to_string(d));
    for (const auto& x : a.basis)
        for (const auto& y : a.basis)
            if (!g.bracket(x, y).is_zero()) throw Error("internal: a is not abelian");
    if (!detail::bracket_into(g, a, n, n)) throw MathError("decomposition failed: [a,n] not in n");
    for (const auto& v : a.basis)
        if (!cartan.p.contains(v)) throw Error("internal: a not contained in p");

    // lower central series of n must reach zero
    {
        Subspace current = n;
        std::size_t prev = current.dim() + 1;
        while (current.dim() > 0 && current.dim() < prev) {
            prev = current.dim();
            std::vector<Vector> next_gen;
            for (const auto& x : n.basis)
                for (const auto& y : current.basis) {
                    Vector w = g.bracket(x, y);
                    if (!w.is_zero()) next_gen.push_back(std::move(w));
                }
            current = Subspace{d, row_space_basis(columns(next_gen, d).transpose())};
        }
        if (current.dim() != 0) throw MathError("decomposition failed: n is not nilpotent");
    }

    IwasawaResult result{
        m.materialize_all(cartan.k.basis), m.materialize_all(a.basis),
        m.materialize_all(cartan.p.basis), m.materialize_all(n.basis),
        std::move(roots),                  std::move(g),
        std::move(cartan.theta),           std::move(cartan.k),
        std::move(a),                      std::move(cartan.p),
        std::move(n)};
    return result;
}

/// B_Theta(x, y) = -kappa(x, Theta y) as a matrix on coordinates.
inline Matrix cartan_form(const LieAlgebra& g, const Matrix& theta) {
    return -(killing_form(g).matrix * theta);
}

/// Exact positive definiteness via leading principal minors; requires real
/// entries.
inline bool positive_definite(const Matrix& b) {
    if (!b.is_square()) throw ShapeError("positive_definite expects a square matrix");
    for (std::size_t k = 1; k <= b.rows(); ++k) {
        Matrix minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor.at(i, j) = b.at(i, j);
        const Scalar d = det(minor);
        if (!d.is_real()) throw MathError("positive_definite requires a real form");
        if (!(d.real() > 0)) return false;
    }
    return true;
}

} // namespace liecas
