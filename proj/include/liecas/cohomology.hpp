#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "liecas/lie_algebra.hpp"

namespace liecas {

/// g-module (rho, V): one matrix rho_x per basis element x of g.
/// Module law: rho_[x,y] = rho_x rho_y - rho_y rho_x.
struct GModule {
    enum class Kind { trivial, adjoint, adjoint2 };

    Kind kind;
    std::size_t vdim;
    std::vector<Matrix> rho; // rho[i] acts on V, one per basis element of g

    static GModule trivial(const LieAlgebra& g) {
        return GModule{Kind::trivial, 1, std::vector<Matrix>(g.dim(), Matrix(1, 1))};
    }

    static GModule adjoint(const LieAlgebra& g) {
        std::vector<Matrix> rho;
        rho.reserve(g.dim());
        for (std::size_t i = 0; i < g.dim(); ++i)
            rho.push_back(liecas::adjoint(g, g.basis_vector(i)));
        return GModule{Kind::adjoint, g.dim(), std::move(rho)};
    }

    /// Kronecker-sum action ad_x (x) 1 + 1 (x) ad_x on g (x) g.
    static GModule adjoint2(const LieAlgebra& g) {
        std::vector<Matrix> rho;
        rho.reserve(g.dim());
        for (std::size_t i = 0; i < g.dim(); ++i) rho.push_back(ad_power(g, g.basis_vector(i), 2));
        return GModule{Kind::adjoint2, g.dim() * g.dim(), std::move(rho)};
    }
};

/// Verifies rho_[e_i,e_j] = [rho_i, rho_j] on all basis pairs.
inline bool validate_module(const LieAlgebra& g, const GModule& m) {
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i + 1; j < g.dim(); ++j) {
            Matrix lhs(m.vdim, m.vdim);
            for (std::size_t k = 0; k < g.dim(); ++k)
                if (!g.c(i, j, k).is_zero()) lhs += g.c(i, j, k) * m.rho[k];
            if (lhs != m.rho[i] * m.rho[j] - m.rho[j] * m.rho[i]) return false;
        }
    return true;
}

namespace detail {

inline std::vector<std::vector<std::size_t>> wedge_basis(std::size_t dim, std::size_t deg) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> tuple(deg);
    // lexicographic enumeration of increasing index tuples
    if (deg == 0) {
        out.push_back({});
        return out;
    }
    if (deg > dim) return out;
    for (std::size_t i = 0; i < deg; ++i) tuple[i] = i;
    while (true) {
        out.push_back(tuple);
        std::size_t i = deg;
        while (i-- > 0) {
            if (tuple[i] < dim - (deg - i)) {
                ++tuple[i];
                for (std::size_t j = i + 1; j < deg; ++j) tuple[j] = tuple[j - 1] + 1;
                break;
            }
            if (i == 0) return out;
        }
    }
}

} // namespace detail

constexpr std::size_t kMaxCohomologyDegree = 3;

/// Matrix of the Chevalley-Eilenberg differential delta_n : C^n(g,V) -> C^{n+1}(g,V).
///
/// Cochains are flattened with index (wedge index w, module index a) -> w*vdim + a,
/// wedge bases ordered lexicographically. Signs: module-action terms carry
/// (-1)^{k+1}, bracket-insertion terms (-1)^{k+j} (1-based positions), with the
/// bracket result inserted in front and sorted in by transposition parity.
inline Matrix ce_differential(const LieAlgebra& g, const GModule& m, std::size_t n) {
    if (n > kMaxCohomologyDegree)
        throw Error("Chevalley-Eilenberg differential capped at degree " +
                    std::to_string(kMaxCohomologyDegree));
    const std::size_t dim = g.dim();
    const auto dom = detail::wedge_basis(dim, n);
    const auto cod = detail::wedge_basis(dim, n + 1);
    std::map<std::vector<std::size_t>, std::size_t> dom_index;
    for (std::size_t w = 0; w < dom.size(); ++w) dom_index[dom[w]] = w;

    Matrix d(cod.size() * m.vdim, dom.size() * m.vdim);
    for (std::size_t wp = 0; wp < cod.size(); ++wp) {
        const auto& tuple = cod[wp];
        // module action terms
        for (std::size_t k = 0; k < tuple.size(); ++k) {
            std::vector<std::size_t> rest;
            rest.reserve(tuple.size() - 1);
            for (std::size_t t = 0; t < tuple.size(); ++t)
                if (t != k) rest.push_back(tuple[t]);
            const std::size_t w = dom_index.at(rest);
            const int sign = (k % 2 == 0) ? 1 : -1; // (-1)^{(k+1)+1} with 1-based k
            const Matrix& r = m.rho[tuple[k]];
            for (std::size_t ap = 0; ap < m.vdim; ++ap)
                for (std::size_t a = 0; a < m.vdim; ++a) {
                    if (r.at(ap, a).is_zero()) continue;
                    Scalar v = r.at(ap, a);
                    d.at(wp * m.vdim + ap, w * m.vdim + a) += (sign > 0) ? v : -v;
                }
        }
        // bracket insertion terms
        for (std::size_t k = 0; k < tuple.size(); ++k)
            for (std::size_t j = k + 1; j < tuple.size(); ++j) {
                std::vector<std::size_t> rest;
                rest.reserve(tuple.size() - 2);
                for (std::size_t t = 0; t < tuple.size(); ++t)
                    if (t != k && t != j) rest.push_back(tuple[t]);
                const int base_sign = ((k + j) % 2 == 0) ? 1 : -1; // (-1)^{k+j} for 1-based k+1, j+1
                for (std::size_t mm = 0; mm < dim; ++mm) {
                    const Scalar& cm = g.c(tuple[k], tuple[j], mm);
                    if (cm.is_zero()) continue;
                    bool repeated = false;
                    std::size_t pos = 0;
                    for (std::size_t x : rest) {
                        if (x == mm) repeated = true;
                        if (x < mm) ++pos;
                    }
                    if (repeated) continue;
                    std::vector<std::size_t> inserted = rest;
                    inserted.insert(inserted.begin() + static_cast<std::ptrdiff_t>(pos), mm);
                    const std::size_t w = dom_index.at(inserted);
                    int sign = base_sign * ((pos % 2 == 0) ? 1 : -1);
                    Scalar v = (sign > 0) ? cm : -cm;
                    for (std::size_t a = 0; a < m.vdim; ++a)
                        d.at(wp * m.vdim + a, w * m.vdim + a) += v;
                }
            }
    }
    return d;
}

/// dim H^n(g,V) = dim ker delta_n - rank delta_{n-1}.
inline std::size_t cohomology_dim(const LieAlgebra& g, const GModule& m, std::size_t n) {
    if (n > kMaxCohomologyDegree)
        throw Error("cohomology capped at degree " + std::to_string(kMaxCohomologyDegree));
    const Matrix dn = ce_differential(g, m, n);
    const std::size_t cycles = dn.cols() - rank(dn);
    const std::size_t boundaries = (n == 0) ? 0 : rank(ce_differential(g, m, n - 1));
    return cycles - boundaries;
}

/// V^g: joint kernel of all rho_x.
inline Subspace invariants(const LieAlgebra& g, const GModule& m) {
    const std::size_t n = g.dim();
    Matrix stacked(n * m.vdim, m.vdim);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < m.vdim; ++r)
            for (std::size_t c = 0; c < m.vdim; ++c)
                stacked.at(i * m.vdim + r, c) = m.rho[i].at(r, c);
    return Subspace{m.vdim, kernel_basis(stacked)};
}

} // namespace liecas
