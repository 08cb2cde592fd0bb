#include "qre/json_io.hpp"

#include "qre/error.hpp"

#include <fstream>

namespace qre {

namespace {

Laurent laurent_from_json(const Json& j) {
    if (!j.is_array()) throw Error("polynomial must be a list of [coef, exp] pairs");
    std::vector<Term> terms;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_string() || !t[1].is_number_integer()) {
            throw Error("polynomial term must be [coef_string, exp_int]");
        }
        terms.push_back({rat_from_string(t[0].get<std::string>()), t[1].get<long>()});
    }
    return Laurent::from_terms(std::move(terms));
}

Json laurent_to_json(const Laurent& p) {
    Json out = Json::array();
    for (const auto& t : p.terms()) {
        out.push_back(Json::array({rat_to_string(t.coef), t.exp}));
    }
    return out;
}

std::vector<long> legs_from_json(const Json& j, const char* what) {
    if (!j.is_array()) throw Error(std::string(what) + " must be a list");
    std::vector<long> legs;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw Error(std::string(what) + " entries must be integers");
        legs.push_back(v.get<long>());
    }
    return legs;
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
    Json out;
    out["n"] = laurent_to_json(s.num());
    if (!s.den().is_one()) out["d"] = laurent_to_json(s.den());
    return out;
}

Scalar scalar_from_json(const Json& j) {
    try {
        if (!j.is_object() || !j.contains("n")) throw Error("scalar must be {\"n\": ..., \"d\": ...}");
        Laurent num = laurent_from_json(j.at("n"));
        Laurent den = j.contains("d") ? laurent_from_json(j.at("d")) : Laurent::constant(1);
        return Scalar(std::move(num), std::move(den));
    } catch (const Json::exception& e) {
        throw Error(std::string("malformed scalar: ") + e.what());
    }
}

Json mat_to_json(const Mat& m) {
    Json out;
    out["row_legs"] = m.row_legs();
    out["col_legs"] = m.col_legs();
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    out["entries"] = std::move(rows);
    return out;
}

Mat mat_from_json(const Json& j) {
    try {
        Mat m(legs_from_json(j.at("row_legs"), "row_legs"),
              legs_from_json(j.at("col_legs"), "col_legs"));
        const Json& entries = j.at("entries");
        if (!entries.is_array() || entries.size() != m.rows()) {
            throw Error("entries row count does not match row legs");
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            const Json& row = entries[r];
            if (!row.is_array() || row.size() != m.cols()) {
                throw Error("entries column count does not match col legs");
            }
            for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = scalar_from_json(row[c]);
        }
        return m;
    } catch (const Json::exception& e) {
        throw Error(std::string("malformed matrix: ") + e.what());
    }
}

Json re_matrix_to_json(const REMatrix& k) {
    Json out;
    out["rep"] = k.rep;
    out["coeff_dim"] = k.coeff_dim;
    out["matrix"] = mat_to_json(k.k);
    return out;
}

REMatrix re_matrix_from_json(const Json& j) {
    try {
        const std::string rep = j.at("rep").get<std::string>();
        const long da = j.at("coeff_dim").get<long>();
        return make_re_matrix(rep, da, mat_from_json(j.at("matrix")));
    } catch (const Json::exception& e) {
        throw Error(std::string("malformed RE matrix: ") + e.what());
    }
}

Json family_to_json(const RMatrixFamily& fam) {
    Json out;
    Json reps = Json::array();
    for (const auto& r : fam.reps()) {
        Json item;
        item["id"] = r.id;
        item["dim"] = r.dim;
        reps.push_back(std::move(item));
    }
    out["reps"] = std::move(reps);
    Json pairs = Json::array();
    for (const auto& [key, mat] : fam.pairs()) {
        Json item;
        item["i"] = key.first;
        item["j"] = key.second;
        item["mat"] = mat_to_json(mat);
        pairs.push_back(std::move(item));
    }
    out["r"] = std::move(pairs);
    return out;
}

RMatrixFamily family_from_json(const Json& j) {
    try {
        RMatrixFamily fam;
        for (const auto& r : j.at("reps")) {
            fam.add_rep({r.at("id").get<std::string>(), r.at("dim").get<long>()});
        }
        for (const auto& p : j.at("r")) {
            fam.set_r(p.at("i").get<std::string>(), p.at("j").get<std::string>(),
                      mat_from_json(p.at("mat")));
        }
        return fam;
    } catch (const Json::exception& e) {
        throw Error(std::string("malformed family: ") + e.what());
    }
}

Json re_data_to_json(const REData& data) {
    Json out;
    out["family"] = family_to_json(data.family);
    Json triples = Json::object();
    for (const auto& [id, k] : data.triples) triples[id] = re_matrix_to_json(k);
    out["triples"] = std::move(triples);
    return out;
}

REData re_data_from_json(const Json& j) {
    try {
        REData data;
        data.family = family_from_json(j.at("family"));
        for (const auto& [id, kj] : j.at("triples").items()) {
            REMatrix k = re_matrix_from_json(kj);
            if (k.rep != id) throw Error("triple key does not match rep id: " + id);
            data.triples[id] = std::move(k);
        }
        validate(data);
        return data;
    } catch (const Json::exception& e) {
        throw Error(std::string("malformed RE data: ") + e.what());
    }
}

Json residual_to_json(const Residual& r) {
    Json out;
    out["ok"] = r.ok;
    if (r.witness) {
        out["witness"] = Json::array(
            {r.witness->row, r.witness->col, scalar_to_json(r.witness->value)});
    }
    return out;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw Error("invalid JSON in " + path + ": " + e.what());
    }
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << dump_canonical(j);
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qre
