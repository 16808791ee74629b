#pragma once

// The structure-constant file format (JSON) and JSON report builders.
//
// An algebra file carries: name, cyclotomic_order N, dim n, dense mult and
// comult tensors (n x n x n arrays of field elements), unit and counit
// vectors, the antipode matrix, and optional metadata. A field element is an
// array of phi(N) rational strings "p/q" (or "p"); rationals and tensors
// round-trip bit-exactly.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hopfkern/central.hpp"
#include "hopfkern/corpus.hpp"

namespace hopfkern {

using nlohmann::json;

inline json field_elem_to_json(const FieldElem& x) {
    json a = json::array();
    for (const std::string& s : x.to_strings()) a.push_back(s);
    return a;
}

inline FieldElem field_elem_from_json(const CycloField* f, const json& a) {
    if (!a.is_array())
        throw InvalidInputError("field element must be an array of rational strings");
    std::vector<std::string> s;
    for (const auto& v : a) {
        if (!v.is_string()) throw InvalidInputError("field coefficients must be strings");
        s.push_back(v.get<std::string>());
    }
    try {
        return FieldElem::from_strings(f, s);
    } catch (const std::exception& e) {
        throw InvalidInputError(e.what());
    }
}

inline json algebra_to_json(const HopfAlgebraData& h) {
    const size_t n = h.dim();
    json out;
    out["name"] = h.name();
    out["cyclotomic_order"] = h.field()->order();
    out["dim"] = n;
    json mult = json::array(), comult = json::array();
    for (size_t i = 0; i < n; ++i) {
        json mi = json::array(), ci = json::array();
        for (size_t j = 0; j < n; ++j) {
            json mj = json::array(), cj = json::array();
            for (size_t k = 0; k < n; ++k) {
                mj.push_back(field_elem_to_json(h.mult()[i].at(j, k)));
                cj.push_back(field_elem_to_json(h.comult()[i].at(j, k)));
            }
            mi.push_back(std::move(mj));
            ci.push_back(std::move(cj));
        }
        mult.push_back(std::move(mi));
        comult.push_back(std::move(ci));
    }
    out["mult"] = std::move(mult);
    out["comult"] = std::move(comult);
    json unit = json::array(), counit = json::array(), antipode = json::array();
    for (size_t i = 0; i < n; ++i) {
        unit.push_back(field_elem_to_json(h.unit()[i]));
        counit.push_back(field_elem_to_json(h.counit()[i]));
        json row = json::array();
        for (size_t j = 0; j < n; ++j) row.push_back(field_elem_to_json(h.antipode().at(i, j)));
        antipode.push_back(std::move(row));
    }
    out["unit"] = std::move(unit);
    out["counit"] = std::move(counit);
    out["antipode"] = std::move(antipode);
    return out;
}

inline HopfAlgebraData algebra_from_json(const json& in) {
    for (const char* key : {"name", "cyclotomic_order", "dim", "mult", "comult", "unit",
                            "counit", "antipode"}) {
        if (!in.contains(key))
            throw InvalidInputError(std::string("algebra file is missing '") + key + "'");
    }
    std::string name = in["name"].get<std::string>();
    unsigned order = in["cyclotomic_order"].get<unsigned>();
    if (order == 0) throw InvalidInputError(name + ": cyclotomic_order must be positive");
    if (order > 256)
        throw InvalidInputError(name + ": cyclotomic_order " + std::to_string(order) +
                                " is above the supported bound of 256");
    size_t n = in["dim"].get<size_t>();
    if (n == 0) throw InvalidInputError(name + ": dim must be positive");
    auto field = std::make_shared<const CycloField>(order);
    const CycloField* f = field.get();

    auto tensor = [&](const json& t, const char* what) {
        if (!t.is_array() || t.size() != n)
            throw InvalidInputError(name + ": '" + what + "' must be a dim^3 tensor");
        std::vector<Matrix> out;
        for (size_t i = 0; i < n; ++i) {
            if (!t[i].is_array() || t[i].size() != n)
                throw InvalidInputError(name + ": '" + what + "' must be a dim^3 tensor");
            Matrix m(f, n, n);
            for (size_t j = 0; j < n; ++j) {
                if (!t[i][j].is_array() || t[i][j].size() != n)
                    throw InvalidInputError(name + ": '" + what + "' must be a dim^3 tensor");
                for (size_t k = 0; k < n; ++k) m.at(j, k) = field_elem_from_json(f, t[i][j][k]);
            }
            out.push_back(std::move(m));
        }
        return out;
    };
    auto vector_of = [&](const json& v, const char* what) {
        if (!v.is_array() || v.size() != n)
            throw InvalidInputError(name + ": '" + what + "' must have length dim");
        Vec out;
        for (size_t i = 0; i < n; ++i) out.push_back(field_elem_from_json(f, v[i]));
        return out;
    };
    std::vector<Matrix> mult = tensor(in["mult"], "mult");
    std::vector<Matrix> comult = tensor(in["comult"], "comult");
    Vec unit = vector_of(in["unit"], "unit");
    Vec counit = vector_of(in["counit"], "counit");
    const json& ant = in["antipode"];
    if (!ant.is_array() || ant.size() != n)
        throw InvalidInputError(name + ": 'antipode' must be a dim x dim matrix");
    Matrix antipode(f, n, n);
    for (size_t i = 0; i < n; ++i) {
        if (!ant[i].is_array() || ant[i].size() != n)
            throw InvalidInputError(name + ": 'antipode' must be a dim x dim matrix");
        for (size_t j = 0; j < n; ++j) antipode.at(i, j) = field_elem_from_json(f, ant[i][j]);
    }
    return HopfAlgebraData(field, name, n, std::move(mult), std::move(unit),
                           std::move(comult), std::move(counit), std::move(antipode));
}

inline HopfAlgebraData load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InvalidInputError("cannot parse '" + path + "': " + e.what());
    }
    return algebra_from_json(j);
}

inline void save_algebra_file(const HopfAlgebraData& h, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InvalidInputError("cannot write '" + path + "'");
    out << algebra_to_json(h).dump(1) << "\n";
}

// ---- report builders ----

inline json axiom_report_to_json(const AxiomReport& rep) {
    json out = json::array();
    for (const AxiomCheck& c : rep.checks) {
        json row;
        row["axiom"] = c.axiom;
        row["pass"] = c.pass;
        if (!c.pass) row["witness"] = c.witness;
        out.push_back(std::move(row));
    }
    return out;
}

// rows = irreducible characters, columns = basis elements
inline json character_table_to_json(const IrrData& irr) {
    json out = json::array();
    for (const IrrBlock& b : irr.blocks) {
        json row;
        row["degree"] = b.degree;
        row["block_dim"] = b.block_dim;
        json vals = json::array();
        for (const FieldElem& v : b.character.values) vals.push_back(field_elem_to_json(v));
        row["values"] = std::move(vals);
        out.push_back(std::move(row));
    }
    return out;
}

inline json kernel_report_to_json(const KernelReport& r) {
    json out;
    out["character"] = r.char_index;
    out["ker_set"] = r.ker;
    out["ker_set_closed"] = r.ker_closed;
    out["kernel_dim"] = r.kernel_space.dim();
    out["sm_dim"] = r.sm.dim();
    out["hopf_kernel_dim"] = r.hker.dim();
    out["quotient_dim"] = r.quotient_dim;
    out["hopf_kernel_matches"] = r.hopf_kernel_matches;
    out["sm_oracle_matches"] = r.sm_oracle_matches;
    out["quotient_module_matches"] = r.quotient_module_matches;
    out["normal"] = r.normal;
    return out;
}

inline json matrix_to_json(const Matrix& m) {
    json out = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(field_elem_to_json(m.at(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

// quotient algebra with its projection and section, in the algebra-file format
inline json quotient_to_json(const QuotientData& q) {
    json out;
    out["quotient"] = algebra_to_json(*q.quotient);
    out["ideal_dim"] = q.ideal.dim();
    out["projection"] = matrix_to_json(q.projection);
    out["section"] = matrix_to_json(q.section);
    return out;
}

inline json lattice_to_json(const LatticeData& lat) {
    json out = json::array();
    for (size_t i = 0; i < lat.subalgebras.size(); ++i) {
        json row;
        row["dim"] = lat.subalgebras[i].dim();
        row["normal"] = static_cast<bool>(lat.normal_flags[i]);
        if (lat.dual_correspondence[i]) {
            row["dual_partner"] = *lat.dual_correspondence[i];
            row["dual_partner_dim"] = lat.dual_subalgebras[*lat.dual_correspondence[i]].dim();
        }
        out.push_back(std::move(row));
    }
    return out;
}

inline json central_to_json(const CentralData& cd) {
    json out;
    out["central_characters_dim"] = cd.z_hat_dual.dim();
    out["partition_y"] = cd.partition_y;
    out["partition_x"] = cd.partition_x;
    auto vecs = [&](const std::vector<Vec>& vs) {
        json a = json::array();
        for (const Vec& v : vs) {
            json row = json::array();
            for (const FieldElem& x : v) row.push_back(field_elem_to_json(x));
            a.push_back(std::move(row));
        }
        return a;
    };
    out["e_idempotents"] = vecs(cd.e_idempotents);
    out["class_characters"] = vecs(cd.e_hats);
    out["f_elements"] = vecs(cd.f_elements);
    return out;
}

inline json findings_to_json(const TheoremHarness& th) {
    json out = json::array();
    for (const Finding& f : th.findings) {
        json row;
        row["id"] = f.id;
        row["pass"] = f.pass;
        row["informational"] = f.informational;
        if (!f.detail.empty()) row["detail"] = f.detail;
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace hopfkern
