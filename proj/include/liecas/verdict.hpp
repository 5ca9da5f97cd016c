#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liecas/bialgebra.hpp"
#include "liecas/deformation.hpp"

namespace liecas {

enum class Existence { yes, no, undetermined };

inline const char* to_string(Existence e) {
    switch (e) {
        case Existence::yes: return "yes";
        case Existence::no: return "no";
        default: return "undetermined";
    }
}

struct ChainStep {
    std::string step;
    std::string result;
    std::string citation;
};

/// Outcome of the obstruction pipeline. A "no" carries at least one citation;
/// flags collect anomalies that contradict the supporting theory.
struct Verdict {
    Existence exists_twist_star = Existence::undetermined;
    std::vector<ChainStep> chain;
    std::vector<std::string> flags;
    std::optional<TwistSeries> witness; // executable Moyal twist for the torus
};

/// chi of the closed orientable surface of the given genus: 2 - 2g.
inline long euler_characteristic_surface(long genus) { return 2 - 2 * genus; }

/// Existence of a twist star product deforming the symplectic structure on
/// the genus-g closed surface:
///   g = 0: no (the sphere forces a transitive effective action of a
///          semisimple group, against the non-degenerate-r obstruction);
///   g = 1: yes, with the Moyal twist attached as an executable witness;
///   g > 1: no (negative Euler characteristic excludes homogeneity).
inline Verdict surface_verdict(long genus) {
    Verdict v;
    const long chi = euler_characteristic_surface(genus);
    v.chain.push_back({"euler characteristic", "chi = " + std::to_string(chi),
                       "chi(T(g)) = 2 - 2g"});
    if (genus == 0) {
        v.exists_twist_star = Existence::no;
        v.chain.push_back({"homogeneity forced",
                           "a twist star product makes the sphere a homogeneous space of the "
                           "Etingof-Schiffmann subgroup",
                           "the Etingof-Schiffmann subgroup acts transitively"});
        v.chain.push_back({"classification of transitive effective actions",
                           "every connected Lie group acting transitively and effectively on the "
                           "sphere is semisimple (SO(3), SL(3,R), or the Lorentz group)",
                           "Onishchik classification"});
        v.chain.push_back({"non-degeneracy obstruction",
                           "the r-matrix would be non-degenerate on a semisimple subalgebra",
                           "no non-degenerate triangular structures on semisimple Lie algebras"});
        return v;
    }
    if (genus == 1) {
        TwistSeries moyal = moyal_twist(Scalar::i(), 3);
        const Poly x1 = Poly::variable(0), x2 = Poly::variable(1);
        const AssociativityReport assoc = check_associativity(moyal, x1, x2, x1 * x2);
        if (!assoc.pass) {
            // constructive "yes" only with a verified witness
            v.exists_twist_star = Existence::undetermined;
            v.flags.push_back("Moyal witness failed its associativity check");
            return v;
        }
        v.exists_twist_star = Existence::yes;
        v.chain.push_back({"Moyal witness",
                           "exp(-i hbar (d1 (x) d2 - d2 (x) d1)) verified associative to order " +
                               std::to_string(moyal.order()),
                           "the Weyl-Moyal star product deforms the symplectic structure on T^2"});
        v.witness = std::move(moyal);
        return v;
    }
    v.exists_twist_star = Existence::no;
    v.chain.push_back({"non-negativity of chi on homogeneous spaces",
                       "chi = " + std::to_string(chi) + " < 0 rules out a homogeneous structure",
                       "compact homogeneous spaces have chi >= 0 (Mostow)"});
    v.chain.push_back({"conclusion", "no twist star product on T(g) for g > 1",
                       "chi(T(g)) < 0 for g > 1"});
    return v;
}

/// Algebraic consistency chain for a candidate (g, r): antisymmetry, the
/// Yang-Baxter equation, extraction and restriction of the Etingof-Schiffmann
/// subalgebra, its Killing form and semisimplicity. A semisimple h_r is
/// impossible for a genuine r-matrix and is flagged; otherwise the algebra
/// alone cannot decide existence and the verdict stays undetermined.
inline Verdict algebra_verdict(const LieAlgebra& g, const Matrix& r) {
    Verdict v;
    const bool antisym = (r == -r.transpose());
    v.chain.push_back({"antisymmetry", antisym ? "pass" : "fail: r has a symmetric part",
                       "r-matrices live in g wedge g"});
    if (!antisym) {
        v.exists_twist_star = Existence::no;
        return v;
    }
    const Bivector rb{r};

    const Tensor3 c = cyb(g, rb);
    const bool cybe = c.is_zero();
    v.chain.push_back({"classical Yang-Baxter equation", cybe ? "pass" : "fail: CYB(r) != 0",
                       "CYB(r) = [r12,r13] + [r12,r23] + [r13,r23] = 0"});
    if (!cybe) {
        v.exists_twist_star = Existence::no;
        return v;
    }

    const Subspace h = etingof_schiffmann(g, rb);
    v.chain.push_back({"Etingof-Schiffmann subalgebra",
                       "h_r extracted, dim " + std::to_string(h.dim()),
                       "h_r = {(f (x) 1) r | f in g*}"});
    if (h.dim() == 0) {
        v.chain.push_back({"conclusion", "r = 0: trivially consistent, no obstruction data",
                           "h_r is the smallest subalgebra supporting r"});
        v.exists_twist_star = Existence::undetermined;
        return v;
    }

    const LieAlgebra restricted = restrict(g, h);
    v.chain.push_back({"restriction", "bracket closes on h_r; r non-degenerate there",
                       "r is non-degenerate in h_r wedge h_r"});

    const BilinearForm kappa = killing_form(restricted);
    v.chain.push_back({"Killing form", "computed on h_r, det = " + det(kappa.matrix).str(),
                       "kappa(x,y) = tr(ad x ad y)"});

    const bool semisimple = !det(kappa.matrix).is_zero();
    v.chain.push_back({"semisimplicity of h_r", semisimple ? "semisimple" : "not semisimple",
                       "semisimple iff kappa is non-degenerate"});
    if (semisimple) {
        v.flags.push_back(
            "inconsistent configuration: non-degenerate r-matrix on semisimple subalgebra "
            "(impossible)");
        v.exists_twist_star = Existence::no;
        v.chain.push_back({"conclusion", "configuration contradicts the theory",
                           "no non-degenerate triangular structures on semisimple Lie algebras"});
        return v;
    }
    v.exists_twist_star = Existence::undetermined;
    v.chain.push_back({"conclusion",
                       "no contradiction flag; existence is not decidable from the algebra alone",
                       "the topological side needs the underlying manifold"});
    return v;
}

} // namespace liecas
