// Command-line front end: parses JSON documents, dispatches to the library,
// emits human-readable or JSON reports.
//
// Exit codes: 0 = computed and all checks pass; 1 = computed but a
// mathematical check failed; 2 = input or parse error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "liecas/io.hpp"
#include "liecas/liecas.hpp"

using namespace liecas;
using liecas::io::json;

namespace {

struct Output {
    int exit_code = 0;
    json report = json::object();
    std::ostringstream human;
};

std::string matrix_str(const Matrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "  [";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ", ";
            os << m.at(i, j);
        }
        os << "]\n";
    }
    return os.str();
}

json matrix_json(const Matrix& m) { return io::emit_matrix(m); }

json vector_json(const Vector& v) { return io::emit_vector(v); }

json subspace_json(const Subspace& s) {
    json out = json::array();
    for (const auto& v : s.basis) out.push_back(vector_json(v));
    return out;
}

std::string vector_str(const Vector& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

json verdict_json(const Verdict& v) {
    json out;
    out["exists_twist_star"] = to_string(v.exists_twist_star);
    json chain = json::array();
    for (const auto& s : v.chain)
        chain.push_back({{"step", s.step}, {"result", s.result}, {"citation", s.citation}});
    out["chain"] = chain;
    out["flags"] = v.flags;
    return out;
}

void print_verdict(Output& out, const Verdict& v) {
    out.human << "exists twist star product: " << to_string(v.exists_twist_star) << "\n";
    for (const auto& s : v.chain)
        out.human << "  - " << s.step << ": " << s.result << "   [" << s.citation << "]\n";
    for (const auto& f : v.flags) out.human << "  ! " << f << "\n";
    out.report = verdict_json(v);
}

json axiom_report_json(const AxiomReport& rep) {
    json out = json::array();
    for (const auto& c : rep.checks) {
        json item;
        item["name"] = c.name;
        item["pass"] = c.pass;
        json witnesses = json::array();
        for (const auto& w : c.witnesses) witnesses.push_back(w);
        item["witnesses"] = witnesses;
        out.push_back(item);
    }
    return out;
}

void print_axiom_report(Output& out, const AxiomReport& rep) {
    for (const auto& c : rep.checks) {
        out.human << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.name;
        if (!c.pass && !c.witnesses.empty()) {
            out.human << "  witnesses:";
            std::size_t shown = 0;
            for (const auto& w : c.witnesses) {
                if (shown++ == 5) {
                    out.human << " ...";
                    break;
                }
                out.human << " (";
                for (std::size_t i = 0; i < w.size(); ++i) out.human << (i ? "," : "") << w[i];
                out.human << ")";
            }
        }
        out.human << "\n";
    }
    out.report["axioms"] = axiom_report_json(rep);
    out.report["pass"] = rep.pass();
}

struct DeformOptions {
    std::string coeff = "1*i";
    int order = 3;
    std::vector<std::string> exprs;
};

TwistSeries build_twist(const DeformOptions& opt) {
    return moyal_twist(Scalar::parse(opt.coeff), opt.order);
}

std::string series_poly_str(const HbarSeries<Poly>& s) {
    std::ostringstream os;
    bool first = true;
    for (int r = 0; r <= s.order; ++r) {
        const Poly& c = s.coeffs[static_cast<std::size_t>(r)];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (r == 0)
            os << c;
        else
            os << "hbar^" << r << " * (" << c << ")";
    }
    if (first) os << "0";
    return os.str();
}

json series_poly_json(const HbarSeries<Poly>& s) {
    json out = json::array();
    for (const auto& c : s.coeffs) out.push_back(c.str());
    return out;
}

json series_op_json(const HbarSeries<BidiffOp>& s) {
    json out = json::array();
    for (const auto& c : s.coeffs) out.push_back(c.str());
    return out;
}

GModule make_module(const LieAlgebra& g, const std::string& kind) {
    if (kind == "trivial") return GModule::trivial(g);
    if (kind == "adjoint") return GModule::adjoint(g);
    if (kind == "adjoint2") return GModule::adjoint2(g);
    throw ParseError("unknown module kind: " + kind);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for Lie bialgebras, twists and star products"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json_output = false;
    app.add_flag("--json", json_output, "emit a JSON report instead of text");

    std::string file_a, file_b, file_c, file_d;
    std::string module_kind = "trivial";
    std::optional<int> degree;
    long genus = 0;
    DeformOptions dopt;

    Output out;
    // handlers run inside a try block below; each fills `out`
    std::function<void()> run;

    auto* jac = app.add_subcommand("check-jacobi", "Jacobi identity report for a Lie algebra");
    jac->add_option("algebra", file_a, "Lie algebra JSON document")->required();
    jac->callback([&] {
        run = [&] {
            const LieAlgebra g = io::parse_lie_algebra(io::load_json_file(file_a), false);
            const JacobiReport rep = check_jacobi(g);
            out.report["pass"] = rep.pass;
            json vio = json::array();
            for (const auto& v : rep.violations) {
                vio.push_back({{"i", v.i}, {"j", v.j}, {"k", v.k}, {"l", v.l},
                               {"residual", v.residual.str()}});
                out.human << "violation at triple (" << v.i << "," << v.j << "," << v.k
                          << "), coordinate " << v.l << ", residual " << v.residual << "\n";
            }
            out.report["violations"] = vio;
            out.human << (rep.pass ? "Jacobi identity holds" : "Jacobi identity fails") << "\n";
            out.exit_code = rep.pass ? 0 : 1;
        };
    });

    auto* kil = app.add_subcommand("killing", "Killing form, determinant and radical");
    kil->add_option("algebra", file_a)->required();
    kil->callback([&] {
        run = [&] {
            const LieAlgebra g = io::parse_lie_algebra(io::load_json_file(file_a));
            const BilinearForm k = killing_form(g);
            const Subspace rad = killing_radical(g);
            out.human << "Killing form:\n" << matrix_str(k.matrix);
            out.human << "det = " << det(k.matrix) << "\n";
            out.human << "radical dimension = " << rad.dim() << "\n";
            for (const auto& v : rad.basis) out.human << "  radical basis " << v << "\n";
            out.report["killing"] = matrix_json(k.matrix);
            out.report["det"] = det(k.matrix).str();
            out.report["radical_dim"] = rad.dim();
            out.report["radical_basis"] = subspace_json(rad);
        };
    });

    auto* sem = app.add_subcommand("semisimple", "Killing-criterion semisimplicity");
    sem->add_option("algebra", file_a)->required();
    sem->callback([&] {
        run = [&] {
            const LieAlgebra g = io::parse_lie_algebra(io::load_json_file(file_a));
            const bool s = is_semisimple(g);
            out.human << (s ? "semisimple" : "not semisimple") << "\n";
            out.report["semisimple"] = s;
        };
    });

    auto* coh = app.add_subcommand("cohomology", "cohomology dimensions in degrees 0..3");
    coh->add_option("algebra", file_a)->required();
    coh->add_option("--module", module_kind, "trivial | adjoint | adjoint2")
        ->check(CLI::IsMember({"trivial", "adjoint", "adjoint2"}));
    coh->add_option("--degree", degree, "single degree (otherwise all of 0..3)");
    coh->callback([&] {
        run = [&] {
            const LieAlgebra g = io::parse_lie_algebra(io::load_json_file(file_a));
            const GModule m = make_module(g, module_kind);
            json dims = json::object();
            const std::size_t lo = degree ? static_cast<std::size_t>(*degree) : 0;
            const std::size_t hi = degree ? static_cast<std::size_t>(*degree)
                                          : kMaxCohomologyDegree;
            for (std::size_t n = lo; n <= hi; ++n) {
                const std::size_t d = cohomology_dim(g, m, n);
                out.human << "dim H^" << n << " = " << d << "\n";
                dims[std::to_string(n)] = d;
            }
            out.report["module"] = module_kind;
            out.report["dims"] = dims;
        };
    });

    auto* cob = app.add_subcommand("cobracket", "coboundary cobracket gamma = ad^(2) r");
    cob->add_option("algebra", file_a)->required();
    cob->add_option("rmatrix", file_b)->required();
    cob->callback([&] {
        run = [&] {
            const LieAlgebra g = io::parse_lie_algebra(io::load_json_file(file_a));
            const Bivector r = io::parse_rmatrix(io::load_json_file(file_b));
            const Cobracket gamma = cobracket_from_r(g, r);
            json comps = json::array();
            for (std::size_t i = 0; i < g.dim(); ++i) {
                out.human << "gamma(" << g.basis_names()[i] << "):\n" << matrix_str(gamma[i]);
                comps.push_back(matrix_json(gamma[i]));
            }
            out.report["components"] = comps;
        };
    });

    auto* coc = app.add_subcommand("cocycle", "1-cocycle identity for gamma = ad^(2) r");
    coc->add_option("algebra", file_a)->required();
    coc->add_option("rmatrix", file_b)->required();
    coc->callback([&] {
        run = [&] {
            const LieAlgebra g = io::parse_lie_algebra(io::load_json_file(file_a));
            const Bivector r = io::parse_rmatrix(io::load_json_file(file_b));
            const auto rep = check_cocycle(g, cobracket_from_r(g, r));
            out.human << (rep.pass ? "cocycle identity holds" : "cocycle identity fails") << "\n";
            out.report["pass"] = rep.pass;
            out.exit_code = rep.pass ? 0 : 1;
        };
    });

    auto* coj = app.add_subcommand("cojacobi", "coJacobi identity for gamma = ad^(2) r");
    coj->add_option("algebra", file_a)->required();
    coj->add_option("rmatrix", file_b)->required();
    coj->callback([&] {
        run = [&] {
            const LieAlgebra g = io::parse_lie_algebra(io::load_json_file(file_a));
            const Bivector r = io::parse_rmatrix(io::load_json_file(file_b));
            const auto rep = check_cojacobi(g, cobracket_from_r(g, r));
            json wit = json::array();
            for (const auto& v : rep.violations) {
                wit.push_back(v.i);
                out.human << "fails on basis index " << v.i << "\n";
            }
            out.human << (rep.pass ? "coJacobi identity holds" : "coJacobi identity fails")
                      << "\n";
            out.report["pass"] = rep.pass;
            out.report["witnesses"] = wit;
            out.exit_code = rep.pass ? 0 : 1;
        };
    });

    auto* dua = app.add_subcommand("dual", "dual bracket on g* from gamma = ad^(2) r");
    dua->add_option("algebra", file_a)->required();
    dua->add_option("rmatrix", file_b)->required();
    dua->callback([&] {
        run = [&] {
            const LieAlgebra g = io::parse_lie_algebra(io::load_json_file(file_a));
            const Bivector r = io::parse_rmatrix(io::load_json_file(file_b));
            const auto dual = dual_bracket(g, cobracket_from_r(g, r));
            out.human << "dual algebra document:\n" << io::emit_lie_algebra(dual.algebra).dump(2)
                      << "\n";
            out.human << (dual.jacobi.pass ? "dual bracket satisfies Jacobi"
                                           : "dual bracket violates Jacobi")
                      << "\n";
            out.report["result"] = io::emit_lie_algebra(dual.algebra);
            out.report["jacobi_pass"] = dual.jacobi.pass;
            out.exit_code = dual.jacobi.pass ? 0 : 1;
        };
    });

    auto* cyb_cmd = app.add_subcommand("cybe", "classical Yang-Baxter tensor of (g, r)");
    cyb_cmd->add_option("algebra", file_a)->required();
    cyb_cmd->add_option("rmatrix", file_b)->required();
    cyb_cmd->callback([&] {
        run = [&] {
            const LieAlgebra g = io::parse_lie_algebra(io::load_json_file(file_a));
            const Bivector r = io::parse_rmatrix(io::load_json_file(file_b));
            const Tensor3 t = cyb(g, r);
            json nz = json::array();
            for (std::size_t i = 0; i < g.dim(); ++i)
                for (std::size_t m = 0; m < g.dim(); ++m)
                    for (std::size_t l = 0; l < g.dim(); ++l)
                        if (!t.at(i, m, l).is_zero()) {
                            nz.push_back({{"i", i}, {"m", m}, {"l", l},
                                          {"value", t.at(i, m, l).str()}});
                            out.human << "CYB(r)[" << i << "," << m << "," << l
                                      << "] = " << t.at(i, m, l) << "\n";
                        }
            const bool zero = t.is_zero();
            out.human << (zero ? "CYB(r) = 0: r solves the classical Yang-Baxter equation"
                               : "CYB(r) != 0")
                      << "\n";
            out.report["pass"] = zero;
            out.report["nonzero_components"] = nz;
            out.exit_code = zero ? 0 : 1;
        };
    });

    auto* cls = app.add_subcommand("classify", "triangular / quasitriangular / coboundary");
    cls->add_option("algebra", file_a)->required();
    cls->add_option("rmatrix", file_b)->required();
    cls->callback([&] {
        run = [&] {
            const LieAlgebra g = io::parse_lie_algebra(io::load_json_file(file_a));
            const Bivector r = io::parse_rmatrix(io::load_json_file(file_b));
            const ClassifyReport rep = classify_r(g, r.matrix());
            const char* names[] = {"triangular", "quasitriangular", "coboundary", "none"};
            out.human << "class: " << names[static_cast<int>(rep.cls)] << "\n";
            out.human << "  antisymmetric: " << (rep.antisymmetric ? "yes" : "no") << "\n";
            out.human << "  CYB(r) = 0: " << (rep.cyb_zero ? "yes" : "no") << "\n";
            out.human << "  r + sigma(r) invariant: "
                      << (rep.symmetric_part_invariant ? "yes" : "no") << "\n";
            out.human << "  CYB(r) invariant: " << (rep.cyb_invariant ? "yes" : "no") << "\n";
            out.report["class"] = names[static_cast<int>(rep.cls)];
            out.report["antisymmetric"] = rep.antisymmetric;
            out.report["cyb_zero"] = rep.cyb_zero;
            out.report["symmetric_part_invariant"] = rep.symmetric_part_invariant;
            out.report["cyb_invariant"] = rep.cyb_invariant;
        };
    });

    auto* ess = app.add_subcommand("es-subalgebra", "Etingof-Schiffmann subalgebra of r");
    ess->add_option("algebra", file_a)->required();
    ess->add_option("rmatrix", file_b)->required();
    ess->callback([&] {
        run = [&] {
            const LieAlgebra g = io::parse_lie_algebra(io::load_json_file(file_a));
            const Bivector r = io::parse_rmatrix(io::load_json_file(file_b));
            const Subspace h = etingof_schiffmann(g, r);
            out.human << "dim h_r = " << h.dim() << "\n";
            for (const auto& v : h.basis) out.human << "  basis " << vector_str(v) << "\n";
            out.report["dim"] = h.dim();
            out.report["basis"] = subspace_json(h);
            if (h.dim() > 0) {
                const LieAlgebra sub = restrict(g, h);
                const bool ss = is_semisimple(sub);
                out.human << "restricted algebra semisimple: " << (ss ? "yes" : "no") << "\n";
                out.human << "r restricted to h_r has det " << det(restrict_bivector(r, h))
                          << "\n";
                out.report["restricted_semisimple"] = ss;
                out.report["restricted_r_det"] = det(restrict_bivector(r, h)).str();
            }
        };
    });

    auto* push = app.add_subcommand("pushforward", "(phi (x) phi) r along a homomorphism");
    push->add_option("source", file_a, "source Lie algebra document")->required();
    push->add_option("target", file_b, "target Lie algebra document")->required();
    push->add_option("phi", file_c, "matrix document (nested array, target-dim x source-dim)")
        ->required();
    push->add_option("rmatrix", file_d)->required();
    push->callback([&] {
        run = [&] {
            const LieAlgebra g = io::parse_lie_algebra(io::load_json_file(file_a));
            const LieAlgebra h = io::parse_lie_algebra(io::load_json_file(file_b));
            const Matrix phi = io::parse_matrix(io::load_json_file(file_c));
            const Bivector r = io::parse_rmatrix(io::load_json_file(file_d));
            const Bivector image = pushforward_r(g, h, phi, r);
            out.human << "pushforward r-matrix document:\n"
                      << io::emit_rmatrix(image).dump(2) << "\n";
            out.report["result"] = io::emit_rmatrix(image);
        };
    });

    auto* car = app.add_subcommand("cartan", "Cartan decomposition g = k + p");
    car->add_option("matrices", file_a, "matrix Lie algebra document")->required();
    car->callback([&] {
        run = [&] {
            const MatrixLieAlgebra m = io::parse_matrix_algebra(io::load_json_file(file_a));
            const auto dec = cartan_decomposition(m);
            out.human << "dim k = " << dec.k.dim() << ", dim p = " << dec.p.dim() << "\n";
            for (const auto& v : dec.k.basis) out.human << "  k " << vector_str(v) << "\n";
            for (const auto& v : dec.p.basis) out.human << "  p " << vector_str(v) << "\n";
            out.report["k_dim"] = dec.k.dim();
            out.report["p_dim"] = dec.p.dim();
            out.report["k_basis"] = subspace_json(dec.k);
            out.report["p_basis"] = subspace_json(dec.p);
        };
    });

    auto* iwa = app.add_subcommand("iwasawa", "Iwasawa decomposition g = k + a + n");
    iwa->add_option("matrices", file_a)->required();
    iwa->callback([&] {
        run = [&] {
            const MatrixLieAlgebra m = io::parse_matrix_algebra(io::load_json_file(file_a));
            const IwasawaResult res = iwasawa(m);
            out.human << "dim k = " << res.k.dim() << ", dim a = " << res.a.dim()
                      << ", dim n = " << res.n.dim() << "\n";
            json roots = json::array();
            for (const auto& root : res.restricted_roots) {
                out.human << "  root (";
                json alpha = json::array();
                for (std::size_t s = 0; s < root.alpha.size(); ++s) {
                    if (s) out.human << ", ";
                    out.human << root.alpha[s];
                    std::ostringstream rs;
                    rs << root.alpha[s];
                    alpha.push_back(rs.str());
                }
                out.human << ") multiplicity " << root.multiplicity << "\n";
                roots.push_back({{"alpha", alpha}, {"multiplicity", root.multiplicity}});
            }
            const bool pd = positive_definite(cartan_form(res.algebra, res.theta));
            out.human << "B_Theta positive definite: " << (pd ? "yes" : "no") << "\n";
            json nb = json::array();
            for (const auto& mat : res.n_basis) nb.push_back(matrix_json(mat));
            out.report["k_dim"] = res.k.dim();
            out.report["a_dim"] = res.a.dim();
            out.report["n_dim"] = res.n.dim();
            out.report["restricted_roots"] = roots;
            out.report["b_theta_positive_definite"] = pd;
            out.report["n_basis"] = nb;
        };
    });

    auto* hck = app.add_subcommand("hopf-check", "all Hopf axiom families");
    hck->add_option("hopf", file_a, "Hopf algebra JSON document")->required();
    hck->callback([&] {
        run = [&] {
            const HopfAlgebra h = io::parse_hopf(io::load_json_file(file_a));
            const AxiomReport rep = check_hopf_axioms(h);
            print_axiom_report(out, rep);
            out.exit_code = rep.pass() ? 0 : 1;
        };
    });

    auto* tck = app.add_subcommand("twist-check", "2-cocycle and normalization for F");
    tck->add_option("hopf", file_a)->required();
    tck->add_option("twist", file_b, "twist JSON document")->required();
    tck->callback([&] {
        run = [&] {
            const HopfAlgebra h = io::parse_hopf(io::load_json_file(file_a));
            const Vector f = io::parse_twist_raw(io::load_json_file(file_b), h);
            const AxiomReport rep = is_twist(h, f);
            print_axiom_report(out, rep);
            out.exit_code = rep.pass() ? 0 : 1;
        };
    });

    auto* tdf = app.add_subcommand("twist-deform", "deformed Hopf algebra H^F");
    tdf->add_option("hopf", file_a)->required();
    tdf->add_option("twist", file_b)->required();
    tdf->callback([&] {
        run = [&] {
            const HopfAlgebra h = io::parse_hopf(io::load_json_file(file_a));
            const TwistElement t = io::parse_twist(io::load_json_file(file_b), h);
            const HopfAlgebra deformed = deform_hopf(h, t);
            out.human << io::emit_hopf(deformed).dump(2) << "\n";
            out.report["result"] = io::emit_hopf(deformed);
        };
    });

    auto* tmd = app.add_subcommand("twist-module", "deformed module algebra product");
    tmd->add_option("hopf", file_a)->required();
    tmd->add_option("twist", file_b)->required();
    tmd->add_option("module", file_c, "module algebra JSON document")->required();
    tmd->callback([&] {
        run = [&] {
            const HopfAlgebra h = io::parse_hopf(io::load_json_file(file_a));
            const TwistElement t = io::parse_twist(io::load_json_file(file_b), h);
            const ModuleAlgebra a = io::parse_module_algebra(io::load_json_file(file_c), h);
            const ModuleAlgebra deformed = twist_module_algebra(h, t, a);
            out.human << io::emit_module_algebra(deformed).dump(2) << "\n";
            out.report["result"] = io::emit_module_algebra(deformed);
        };
    });

    auto add_deform_options = [&](CLI::App* cmd, int exprs) {
        cmd->add_option("--coeff", dopt.coeff, "scalar literal c in exp(-c hbar wedge)");
        cmd->add_option("--order", dopt.order, "truncation order N >= 1");
        if (exprs > 0)
            cmd->add_option("--expr", dopt.exprs, "polynomial expression (repeatable)")
                ->expected(exprs);
    };

    auto* moy = app.add_subcommand("moyal", "exponential twist series and inverse");
    add_deform_options(moy, 0);
    moy->callback([&] {
        run = [&] {
            const TwistSeries t = build_twist(dopt);
            for (int r = 0; r <= t.order(); ++r)
                out.human << "F_" << r << " = " << t.f.coeffs[static_cast<std::size_t>(r)]
                          << "\n";
            out.report["F"] = series_op_json(t.f);
            out.report["Finv"] = series_op_json(t.finv);
        };
    });

    auto* star = app.add_subcommand("star", "truncated star product of two polynomials");
    add_deform_options(star, 2);
    star->callback([&] {
        run = [&] {
            const TwistSeries t = build_twist(dopt);
            const Poly f = parse_poly(dopt.exprs.at(0)), g = parse_poly(dopt.exprs.at(1));
            const auto prod = twist_product(t, f, g);
            out.human << series_poly_str(prod) << "\n";
            out.report["orders"] = series_poly_json(prod);
        };
    });

    auto* assoc = app.add_subcommand("assoc", "associativity residual of a star triple");
    add_deform_options(assoc, 3);
    assoc->callback([&] {
        run = [&] {
            const TwistSeries t = build_twist(dopt);
            const auto rep = check_associativity(t, parse_poly(dopt.exprs.at(0)),
                                                 parse_poly(dopt.exprs.at(1)),
                                                 parse_poly(dopt.exprs.at(2)));
            if (rep.pass) {
                out.human << "associative mod hbar^" << (t.order() + 1) << "\n";
            } else {
                out.human << "associativity fails first at order " << rep.first_failure_order
                          << "\n";
                out.human << "residual: " << series_poly_str(rep.residual) << "\n";
            }
            out.report["pass"] = rep.pass;
            out.report["first_failure_order"] = rep.first_failure_order;
            out.report["residual"] = series_poly_json(rep.residual);
            out.exit_code = rep.pass ? 0 : 1;
        };
    });

    auto* extr = app.add_subcommand("extract-r", "r = sigma(F_1) - F_1 of the twist");
    add_deform_options(extr, 0);
    extr->callback([&] {
        run = [&] {
            const BidiffOp r = extract_rmatrix(build_twist(dopt));
            out.human << r << "\n";
            out.report["r"] = r.str();
        };
    });

    auto* poi = app.add_subcommand("poisson-check",
                                   "C_1 antisymmetrization against the r action");
    add_deform_options(poi, 2);
    poi->callback([&] {
        run = [&] {
            const TwistSeries t = build_twist(dopt);
            const PoissonReport rep = poisson_compatibility(t, parse_poly(dopt.exprs.at(0)),
                                                            parse_poly(dopt.exprs.at(1)));
            out.human << "C_1(f,g) - C_1(g,f) = " << rep.lhs << "\n";
            out.human << "m(r |> (f (x) g))  = " << rep.rhs << "\n";
            out.human << (rep.pass ? "match" : "MISMATCH") << "\n";
            out.report["lhs"] = rep.lhs.str();
            out.report["rhs"] = rep.rhs.str();
            out.report["pass"] = rep.pass;
            out.exit_code = rep.pass ? 0 : 1;
        };
    });

    auto* eul = app.add_subcommand("euler", "Euler characteristic 2 - 2g");
    eul->add_option("--genus", genus, "genus of the closed orientable surface")->required();
    eul->callback([&] {
        run = [&] {
            out.human << euler_characteristic_surface(genus) << "\n";
            out.report["chi"] = euler_characteristic_surface(genus);
        };
    });

    auto* sur = app.add_subcommand("surface", "twist star product verdict for T(g)");
    sur->add_option("--genus", genus)->required();
    sur->callback([&] {
        run = [&] {
            print_verdict(out, surface_verdict(genus));
        };
    });

    auto* obs = app.add_subcommand("obstruct", "algebraic obstruction chain for (g, r)");
    obs->add_option("algebra", file_a)->required();
    obs->add_option("rmatrix", file_b)->required();
    obs->callback([&] {
        run = [&] {
            const LieAlgebra g = io::parse_lie_algebra(io::load_json_file(file_a));
            const Bivector r = io::parse_rmatrix(io::load_json_file(file_b));
            const Verdict v = algebra_verdict(g, r.matrix());
            print_verdict(out, v);
            const bool consistent = v.flags.empty() && v.exists_twist_star != Existence::no;
            out.exit_code = consistent ? 0 : 1;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    const std::string verb = app.get_subcommands().front()->get_name();
    out.report["verb"] = verb;
    try {
        run();
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const MathError& e) {
        if (json_output) {
            out.report["status"] = "check-failed";
            out.report["error"] = e.what();
            std::cout << out.report.dump(2) << "\n";
        } else {
            std::cout << "check failed: " << e.what() << "\n";
        }
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (json_output) {
        out.report["status"] = out.exit_code == 0 ? "ok" : "check-failed";
        std::cout << out.report.dump(2) << "\n";
    } else {
        std::cout << out.human.str();
    }
    return out.exit_code;
}
