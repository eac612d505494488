#pragma once

#include <json.hpp>

#include "gl2/binary_form.hpp"
#include "gl2/geometry.hpp"
#include "gl2/normalization.hpp"

namespace gl2 {

using Json = nlohmann::json;

// All scalars travel as exact strings in the shared grammar; nothing is
// ever rendered as a float.

Json matrix_to_json(const Matrix<GaussRational>& m);
Matrix<GaussRational> matrix_from_json(const Json& j);

Json binary_form_to_json(const BinaryForm& f);
BinaryForm binary_form_from_json(const Json& j);

/// {"degree": k, "components": [{"i":r, "j":a, "k":b, "value":"..."}]}
Json torsion_to_json(const TorsionTensor<GaussRational>& t);
TorsionTensor<GaussRational> torsion_from_json(const Json& j);

/// {"degree": k, "psi": {"1_1": [...], "2_1": [...], "1_2": [...], "2_2": [...]}}
/// with psi^a_b layout (a the 2x2 column index, b the row index).
Json correction_to_json(const ConnectionCorrection<GaussRational>& psi);
ConnectionCorrection<GaussRational> correction_from_json(const Json& j);

/// {"vars": ["p0", ...], "forms": [[{"coeff": "p1", "d": 2}, ...], ...]}
Json coframe_to_json(const Coframe& cf);
Coframe coframe_from_json(const Json& j);

Json analysis_report_to_json(const AnalysisReport& rep);

Json block_report_to_json(const BlockReport& rep);

/// Parses "a,b,c;d,e,f" into rational tuples.
std::vector<PatchPoint> parse_points(const std::string& text);

}  // namespace gl2
