#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "liecas/bialgebra.hpp"
#include "liecas/decomposition.hpp"
#include "liecas/hopf.hpp"
#include "liecas/lie_algebra.hpp"

namespace liecas::io {

using nlohmann::json;

/// Documents are desk-scale; reject absurd dimensions before allocating.
constexpr std::size_t kMaxDocumentDim = 64;

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what(), e.byte);
    }
}

inline Scalar scalar_from_json(const json& j) {
    if (j.is_number_integer()) return Scalar(Integer(j.get<long long>()));
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
    throw ParseError("expected a scalar literal string");
}

inline std::size_t index_from_json(const json& j, std::size_t dim, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        throw ParseError(std::string("expected a nonnegative index for ") + what);
    const auto v = j.get<unsigned long long>();
    if (v >= dim)
        throw ParseError(std::string(what) + " index " + std::to_string(v) + " out of range");
    return static_cast<std::size_t>(v);
}

// ---- Lie algebra documents -------------------------------------------------
// {"dim": n, "basis": [...],
//  "brackets": [{"left": i, "right": j, "result": {"k": "scalar-literal"}}]}
// Omitted pairs default to zero; indices are 0-based; the (j,i) entry is the
// antisymmetric completion unless given explicitly (then it must agree).

inline LieAlgebra parse_lie_algebra(const json& j, bool enforce_jacobi = true) {
    if (!j.is_object() || !j.contains("dim")) throw ParseError("Lie algebra document needs 'dim'");
    const std::size_t dim = index_from_json(j.at("dim"), kMaxDocumentDim, "dim");
    std::vector<std::string> names;
    if (j.contains("basis")) {
        if (!j.at("basis").is_array() || j.at("basis").size() != dim)
            throw ParseError("'basis' must list one name per dimension");
        for (const auto& b : j.at("basis")) names.push_back(b.get<std::string>());
    } else {
        for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
    }

    Tensor3 c(dim, dim, dim);
    std::vector<bool> given(dim * dim, false);
    if (j.contains("brackets")) {
        for (const auto& entry : j.at("brackets")) {
            const std::size_t left = index_from_json(entry.at("left"), dim, "left");
            const std::size_t right = index_from_json(entry.at("right"), dim, "right");
            Vector result(dim);
            for (const auto& [key, value] : entry.at("result").items()) {
                std::size_t k = 0;
                try {
                    k = static_cast<std::size_t>(std::stoul(key));
                } catch (...) {
                    throw ParseError("bracket result key is not an index: " + key);
                }
                if (k >= dim) throw ParseError("bracket result index out of range: " + key);
                result[k] = scalar_from_json(value);
            }
            if (left == right && !result.is_zero())
                throw ParseError("[e_i, e_i] must vanish (entry " + std::to_string(left) + ")");
            if (given[left * dim + right])
                throw ParseError("duplicate bracket entry (" + std::to_string(left) + "," +
                                 std::to_string(right) + ")");
            given[left * dim + right] = true;
            if (given[right * dim + left]) {
                for (std::size_t k = 0; k < dim; ++k)
                    if (c.at(right, left, k) != -result[k])
                        throw ParseError("bracket entries (" + std::to_string(left) + "," +
                                         std::to_string(right) + ") violate antisymmetry");
            }
            for (std::size_t k = 0; k < dim; ++k) {
                c.at(left, right, k) = result[k];
                if (!given[right * dim + left]) c.at(right, left, k) = -result[k];
            }
        }
    }
    LieAlgebra algebra(dim, std::move(names), std::move(c));
    if (enforce_jacobi) {
        const JacobiReport rep = check_jacobi(algebra);
        if (!rep.pass) {
            const auto& v = rep.violations.front();
            throw MathError("Jacobi identity fails at triple (" + std::to_string(v.i) + "," +
                            std::to_string(v.j) + "," + std::to_string(v.k) + ")" +
                            (rep.violations.size() > 1
                                 ? " and " + std::to_string(rep.violations.size() - 1) + " more"
                                 : ""));
        }
    }
    return algebra;
}

inline json emit_lie_algebra(const LieAlgebra& g) {
    json out;
    out["dim"] = g.dim();
    out["basis"] = g.basis_names();
    json brackets = json::array();
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t l = i + 1; l < g.dim(); ++l) {
            json result = json::object();
            for (std::size_t k = 0; k < g.dim(); ++k)
                if (!g.c(i, l, k).is_zero()) result[std::to_string(k)] = g.c(i, l, k).str();
            if (!result.empty())
                brackets.push_back({{"left", i}, {"right", l}, {"result", result}});
        }
    out["brackets"] = brackets;
    return out;
}

// ---- r-matrix documents ----------------------------------------------------
// {"dim": n, "entries": [{"i": i, "j": j, "value": "scalar-literal"}]}
// storing only i < j entries; the antisymmetric completion is implied.

inline Bivector parse_rmatrix(const json& j) {
    if (!j.is_object() || !j.contains("dim")) throw ParseError("r-matrix document needs 'dim'");
    const std::size_t dim = index_from_json(j.at("dim"), kMaxDocumentDim, "dim");
    Matrix r(dim, dim);
    if (j.contains("entries")) {
        for (const auto& entry : j.at("entries")) {
            const std::size_t a = index_from_json(entry.at("i"), dim, "i");
            const std::size_t b = index_from_json(entry.at("j"), dim, "j");
            if (a >= b)
                throw ParseError("r-matrix entries must have i < j (got " + std::to_string(a) +
                                 "," + std::to_string(b) + ")");
            const Scalar v = scalar_from_json(entry.at("value"));
            r.at(a, b) = v;
            r.at(b, a) = -v;
        }
    }
    return Bivector(std::move(r));
}

inline json emit_rmatrix(const Bivector& r) {
    json out;
    out["dim"] = r.dim();
    json entries = json::array();
    for (std::size_t i = 0; i < r.dim(); ++i)
        for (std::size_t j = i + 1; j < r.dim(); ++j)
            if (!r.matrix().at(i, j).is_zero())
                entries.push_back({{"i", i}, {"j", j}, {"value", r.matrix().at(i, j).str()}});
    out["entries"] = entries;
    return out;
}

// ---- plain matrices --------------------------------------------------------

inline Matrix parse_matrix(const json& j) {
    if (!j.is_array() || j.empty() || !j.front().is_array())
        throw ParseError("expected a nested array of scalar literals");
    const std::size_t rows = j.size(), cols = j.front().size();
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw ParseError("ragged matrix rows");
        for (std::size_t k = 0; k < cols; ++k) m.at(i, k) = scalar_from_json(j[i][k]);
    }
    return m;
}

inline json emit_matrix(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k).str());
        rows.push_back(row);
    }
    return rows;
}

// ---- matrix Lie algebra documents -------------------------------------------
// {"ambient": m, "matrices": [[["scalar-literal", ...], ...], ...]}

inline MatrixLieAlgebra parse_matrix_algebra(const json& j) {
    if (!j.is_object() || !j.contains("ambient") || !j.contains("matrices"))
        throw ParseError("matrix algebra document needs 'ambient' and 'matrices'");
    const std::size_t ambient = index_from_json(j.at("ambient"), kMaxDocumentDim, "ambient");
    std::vector<Matrix> basis;
    for (const auto& mj : j.at("matrices")) {
        Matrix m = parse_matrix(mj);
        if (m.rows() != ambient || m.cols() != ambient)
            throw ParseError("basis matrix is not ambient x ambient");
        basis.push_back(std::move(m));
    }
    return MatrixLieAlgebra(ambient, std::move(basis));
}

inline json emit_matrix_algebra(const MatrixLieAlgebra& m) {
    json out;
    out["ambient"] = m.ambient();
    json mats = json::array();
    for (const auto& b : m.basis()) mats.push_back(emit_matrix(b));
    out["matrices"] = mats;
    return out;
}

// ---- tensors ---------------------------------------------------------------

inline Tensor3 parse_tensor3(const json& j, std::size_t n1, std::size_t n2, std::size_t n3,
                             const char* what) {
    if (!j.is_array() || j.size() != n1)
        throw ParseError(std::string(what) + " must be a " + std::to_string(n1) + "-element array");
    Tensor3 t(n1, n2, n3);
    for (std::size_t i = 0; i < n1; ++i) {
        if (!j[i].is_array() || j[i].size() != n2) throw ParseError("tensor shape mismatch");
        for (std::size_t a = 0; a < n2; ++a) {
            if (!j[i][a].is_array() || j[i][a].size() != n3)
                throw ParseError("tensor shape mismatch");
            for (std::size_t b = 0; b < n3; ++b) t.at(i, a, b) = scalar_from_json(j[i][a][b]);
        }
    }
    return t;
}

inline json emit_tensor3(const Tensor3& t) {
    json out = json::array();
    for (std::size_t i = 0; i < t.dim1(); ++i) {
        json plane = json::array();
        for (std::size_t a = 0; a < t.dim2(); ++a) {
            json row = json::array();
            for (std::size_t b = 0; b < t.dim3(); ++b) row.push_back(t.at(i, a, b).str());
            plane.push_back(row);
        }
        out.push_back(plane);
    }
    return out;
}

inline Vector parse_vector(const json& j, std::size_t n, const char* what) {
    if (!j.is_array() || j.size() != n)
        throw ParseError(std::string(what) + " must be a " + std::to_string(n) + "-element array");
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = scalar_from_json(j[i]);
    return v;
}

inline json emit_vector(const Vector& v) {
    json out = json::array();
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(v[i].str());
    return out;
}

// ---- Hopf algebra documents --------------------------------------------------
// {"dim": d, "mult": d x d x d, "unit": d, "coprod": d x d x d, "counit": d,
//  "antipode": d x d} with nested arrays of scalar literals.

inline HopfAlgebra parse_hopf(const json& j) {
    if (!j.is_object() || !j.contains("dim")) throw ParseError("Hopf document needs 'dim'");
    const std::size_t d = index_from_json(j.at("dim"), kMaxDocumentDim, "dim");
    HopfAlgebra h;
    h.dim = d;
    h.mult = parse_tensor3(j.at("mult"), d, d, d, "mult");
    h.unit = parse_vector(j.at("unit"), d, "unit");
    h.coprod = parse_tensor3(j.at("coprod"), d, d, d, "coprod");
    h.counit = parse_vector(j.at("counit"), d, "counit");
    Matrix s = parse_matrix(j.at("antipode"));
    if (s.rows() != d || s.cols() != d) throw ParseError("antipode must be dim x dim");
    h.antipode = std::move(s);
    return h;
}

inline json emit_hopf(const HopfAlgebra& h) {
    json out;
    out["dim"] = h.dim;
    out["mult"] = emit_tensor3(h.mult);
    out["unit"] = emit_vector(h.unit);
    out["coprod"] = emit_tensor3(h.coprod);
    out["counit"] = emit_vector(h.counit);
    out["antipode"] = emit_matrix(h.antipode);
    return out;
}

// ---- twist documents ---------------------------------------------------------
// {"F": [d*d scalar literals, row-major]}; the inverse is computed, not supplied.

inline Vector parse_twist_raw(const json& j, const HopfAlgebra& h) {
    if (!j.is_object() || !j.contains("F")) throw ParseError("twist document needs 'F'");
    return parse_vector(j.at("F"), h.dim * h.dim, "F");
}

inline TwistElement parse_twist(const json& j, const HopfAlgebra& h) {
    return TwistElement::from_f(h, parse_twist_raw(j, h));
}

inline json emit_twist(const TwistElement& t) {
    json out;
    out["F"] = emit_vector(t.f);
    return out;
}

// ---- module algebra documents -------------------------------------------------
// {"dim": e, "amult": e x e x e, "aunit": e, "action": d x e x e} against a
// d-dimensional Hopf algebra.

inline ModuleAlgebra parse_module_algebra(const json& j, const HopfAlgebra& h) {
    if (!j.is_object() || !j.contains("dim"))
        throw ParseError("module algebra document needs 'dim'");
    const std::size_t e = index_from_json(j.at("dim"), kMaxDocumentDim, "dim");
    ModuleAlgebra a;
    a.dim_a = e;
    a.amult = parse_tensor3(j.at("amult"), e, e, e, "amult");
    a.aunit = parse_vector(j.at("aunit"), e, "aunit");
    a.action = parse_tensor3(j.at("action"), h.dim, e, e, "action");
    return a;
}

inline json emit_module_algebra(const ModuleAlgebra& a) {
    json out;
    out["dim"] = a.dim_a;
    out["amult"] = emit_tensor3(a.amult);
    out["aunit"] = emit_vector(a.aunit);
    out["action"] = emit_tensor3(a.action);
    return out;
}

} // namespace liecas::io
