#include "qre/ansatz.hpp"
#include "qre/braid.hpp"
#include "qre/error.hpp"
#include "qre/json_io.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qre;

namespace {

Scalar scalar_from_rational(const std::string& s) { return Scalar(rat_from_string(s)); }

Mat mat_from_rows(const std::vector<std::vector<Scalar>>& rows, std::vector<long> row_legs,
                  std::vector<long> col_legs) {
    if (rows.empty()) throw Error("need at least one row");
    if (row_legs.empty()) row_legs = {static_cast<long>(rows.size())};
    if (col_legs.empty()) col_legs = {static_cast<long>(rows[0].size())};
    Mat m(row_legs, col_legs);
    if (m.rows() != rows.size()) throw Error("row count does not match row legs");
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (rows[r].size() != m.cols()) throw Error("column count does not match col legs");
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

py::object witness_tuple(const Residual& r) {
    if (!r.witness) return py::none();
    return py::make_tuple(r.witness->row, r.witness->col, r.witness->value);
}

AnsatzKind parse_kind(const std::string& name) {
    if (name == "diagonal") return AnsatzKind::diagonal;
    if (name == "antidiagonal") return AnsatzKind::antidiagonal;
    if (name == "upper_triangular") return AnsatzKind::upper_triangular;
    throw Error("unknown ansatz kind: " + name);
}

}  // namespace

PYBIND11_MODULE(_qre, m) {
    m.doc() = "exact R-matrix and reflection-equation toolkit";

    py::register_exception<Error>(m, "QreError");

    py::class_<Scalar>(m, "Scalar")
        .def(py::init<>())
        .def(py::init<long>())
        .def(py::init(&scalar_from_rational), py::arg("rational"))
        .def_static("q", &Scalar::q, py::arg("exp") = 1)
        .def("is_zero", &Scalar::is_zero)
        .def("is_one", &Scalar::is_one)
        .def("eval", [](const Scalar& s, const std::string& q0) {
            return rat_to_string(s.eval(rat_from_string(q0)));
        })
        .def("inverse", &Scalar::inverse)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__repr__", &Scalar::to_string)
        .def("to_json", [](const Scalar& s) { return dump_canonical(scalar_to_json(s)); })
        .def_static("from_json", [](const std::string& text) {
            return scalar_from_json(Json::parse(text, nullptr, true));
        });

    py::class_<Mat>(m, "Mat")
        .def(py::init(&mat_from_rows), py::arg("rows"),
             py::arg("row_legs") = std::vector<long>{}, py::arg("col_legs") = std::vector<long>{})
        .def_static("identity", &Mat::identity, py::arg("legs"))
        .def_static("flip", &Mat::flip, py::arg("dim"))
        .def_property_readonly("row_legs", &Mat::row_legs)
        .def_property_readonly("col_legs", &Mat::col_legs)
        .def_property_readonly("rows", &Mat::rows)
        .def_property_readonly("cols", &Mat::cols)
        .def("at", [](const Mat& a, std::size_t r, std::size_t c) -> Scalar {
            if (r >= a.rows() || c >= a.cols()) throw Error("index out of range");
            return a.at(r, c);
        })
        .def("is_zero", &Mat::is_zero)
        .def("is_identity", &Mat::is_identity)
        .def("reshaped", &Mat::reshaped, py::arg("row_legs"), py::arg("col_legs"))
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def("__rmul__", [](const Mat& a, const Scalar& s) { return s * a; })
        .def(py::self == py::self)
        .def("to_json", [](const Mat& a) { return dump_canonical(mat_to_json(a)); })
        .def_static("from_json", [](const std::string& text) {
            return mat_from_json(Json::parse(text, nullptr, true));
        });

    m.def("kron", &kron);
    m.def("leg_permute", &leg_permute, py::arg("mat"), py::arg("perm"));
    m.def("embed", &embed, py::arg("op"), py::arg("targets"), py::arg("shape"));
    m.def("invert", &invert);
    m.def("rank", &rank);
    m.def("column_space_basis", [](const Mat& p) {
        const Intertwiners iw = column_space_basis(p);
        return py::make_tuple(iw.iota, iw.pi);
    });
    m.def("eval_mat", [](const Mat& a, const std::string& q0) {
        return eval_mat(a, rat_from_string(q0));
    });

    m.def("gl_r", &gl_r_matrix, py::arg("rank"));
    m.def("braid_op", [](const Mat& r) { return braid_operator(r).op; });
    m.def("satisfies_hecke", [](const Mat& s) { return satisfies_hecke(BraidOp{s}); });
    m.def("hecke_projectors", [](const Mat& r) {
        const HeckeProjectors p = hecke_projectors(braid_operator(r));
        return py::make_tuple(p.plus, p.minus);
    });

    py::class_<Residual>(m, "Residual")
        .def_readonly("ok", &Residual::ok)
        .def_property_readonly("witness", &witness_tuple)
        .def("__bool__", [](const Residual& r) { return r.ok; })
        .def("__repr__", [](const Residual& r) {
            return r.ok ? std::string("Residual(ok)") : std::string("Residual(FAIL)");
        });

    py::class_<REMatrix>(m, "REMatrix")
        .def(py::init(&make_re_matrix), py::arg("rep"), py::arg("coeff_dim"), py::arg("k"))
        .def_readonly("rep", &REMatrix::rep)
        .def_readonly("coeff_dim", &REMatrix::coeff_dim)
        .def_readonly("k", &REMatrix::k)
        .def(py::self == py::self)
        .def("to_json", [](const REMatrix& k) { return dump_canonical(re_matrix_to_json(k)); })
        .def_static("from_json", [](const std::string& text) {
            return re_matrix_from_json(Json::parse(text, nullptr, true));
        });

    py::class_<RMatrixFamily>(m, "RMatrixFamily")
        .def_static("single", &RMatrixFamily::single, py::arg("id"), py::arg("r"))
        .def_static("uniform", &RMatrixFamily::uniform, py::arg("ids"), py::arg("r"))
        .def("rep_dim", [](const RMatrixFamily& f, const std::string& id) {
            return f.rep(id).dim;
        })
        .def("rep_ids", [](const RMatrixFamily& f) {
            std::vector<std::string> ids;
            for (const auto& r : f.reps()) ids.push_back(r.id);
            return ids;
        })
        .def("r", &RMatrixFamily::r, py::arg("i"), py::arg("j"))
        .def("to_json", [](const RMatrixFamily& f) { return dump_canonical(family_to_json(f)); })
        .def_static("from_json", [](const std::string& text) {
            return family_from_json(Json::parse(text, nullptr, true));
        });

    py::class_<REData>(m, "REData")
        .def(py::init([](const RMatrixFamily& fam, const std::vector<REMatrix>& triples) {
                 REData data;
                 data.family = fam;
                 for (const auto& k : triples) data.triples[k.rep] = k;
                 validate(data);
                 return data;
             }),
             py::arg("family"), py::arg("triples"))
        .def_readonly("family", &REData::family)
        .def("triple", [](const REData& d, const std::string& id) -> REMatrix {
            const auto it = d.triples.find(id);
            if (it == d.triples.end()) throw Error("no triple for rep " + id);
            return it->second;
        })
        .def("rep_ids", [](const REData& d) {
            std::vector<std::string> ids;
            for (const auto& [id, k] : d.triples) ids.push_back(id);
            return ids;
        })
        .def("to_json", [](const REData& d) { return dump_canonical(re_data_to_json(d)); })
        .def_static("from_json", [](const std::string& text) {
            return re_data_from_json(Json::parse(text, nullptr, true));
        });

    m.def("verify_ybe", &verify_ybe, py::arg("family"), py::arg("i"), py::arg("j"), py::arg("k"));
    m.def("verify_re", py::overload_cast<const Mat&, const REMatrix&>(&verify_re));
    m.def("verify_re", py::overload_cast<const RMatrixFamily&, const REMatrix&>(&verify_re));
    m.def("verify_compat", &verify_compat);
    m.def("check_re_data", &check_re_data);
    m.def("fused_id", &fused_id);
    m.def("extend_family", &extend_family);
    m.def("fuse", &fuse);
    m.def("q_solution", &q_solution);
    m.def("restrict_to_submodule", [](const RMatrixFamily& fam, const REMatrix& k, const Mat& p,
                                      const std::string& sub_id) {
        const Restriction res = restrict_to_submodule(fam, k, p, sub_id);
        return py::make_tuple(res.family, res.k0);
    });
    m.def("appendix_identities", [](const REData& d, const std::string& i, const std::string& j,
                                    const std::string& k) {
        const auto [a, b] = appendix_identities(d, i, j, k);
        return py::make_tuple(a, b);
    });

    m.def("solve_ansatz", [](const Mat& r, const std::string& kind) {
        std::vector<std::pair<REMatrix, std::string>> out;
        for (const auto& sol : solve_ansatz(r, parse_kind(kind))) {
            out.push_back({sol.k, sol.family});
        }
        return out;
    });

    py::class_<CylinderRep>(m, "CylinderRep")
        .def_readonly("n", &CylinderRep::n)
        .def_readonly("legs", &CylinderRep::legs)
        .def_readonly("sigma", &CylinderRep::sigma)
        .def_readonly("taus", &CylinderRep::taus);

    m.def("build_cylinder_rep", &build_cylinder_rep, py::arg("r"), py::arg("k"),
          py::arg("strands"));
    m.def("add_boundary_op", &add_boundary_op);
    m.def("braid_residuals", [](const CylinderRep& rep) {
        std::vector<std::pair<std::string, Residual>> out;
        for (const auto& item : braid_residuals(rep)) out.push_back({item.name, item.res});
        return out;
    });
}
