#pragma once

#include "qre/braid.hpp"
#include "qre/rekit.hpp"

#include "json.hpp"

#include <string>

namespace qre {

using Json = nlohmann::ordered_json;

// Canonical forms (field order as written here, coefficients as reduced
// fraction strings, exponent lists strictly decreasing):
//   Scalar:   {"n": [[coef, exp], ...], "d": [[coef, exp], ...]} ("d" omitted for 1)
//   Mat:      {"row_legs": [...], "col_legs": [...], "entries": [[Scalar, ...], ...]}
//   REMatrix: {"rep": id, "coeff_dim": dA, "matrix": Mat}
//   family:   {"reps": [{"id":..., "dim":...}, ...], "r": [{"i":..., "j":..., "mat": Mat}, ...]}
//   REData:   {"family": family, "triples": {id: REMatrix, ...}}
//   Residual: {"ok": bool, "witness": [row, col, Scalar]} (witness only on failure)

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j);

Json re_matrix_to_json(const REMatrix& k);
REMatrix re_matrix_from_json(const Json& j);

Json family_to_json(const RMatrixFamily& fam);
RMatrixFamily family_from_json(const Json& j);

Json re_data_to_json(const REData& data);
REData re_data_from_json(const Json& j);

Json residual_to_json(const Residual& r);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);
std::string dump_canonical(const Json& j);

}  // namespace qre
