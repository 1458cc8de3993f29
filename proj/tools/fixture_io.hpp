#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "coxkit/coxeter.hpp"
#include "coxkit/hopf.hpp"
#include "coxkit/lie_bialgebra.hpp"

namespace coxkit::cli {

using Json = nlohmann::ordered_json;

// Malformed or unreadable fixture; maps to exit code 2.
class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// Laurent polynomials as {"exponent": "coefficient"}; anything else as
// {"num": {...}, "den": {...}}.
Json qscalar_to_json(const QScalar& x);
QScalar qscalar_from_json(const Json& j);

Json matrix_to_json(const RMatrix& m);
RMatrix matrix_from_json(const Json& j);
Json qmatrix_to_json(const QMatrix& m);
QMatrix qmatrix_from_json(const Json& j);

// Reads a fixture file, checking it is a JSON object with the expected kind
// (any kind if `kind` is empty). A bare name resolves to <fixture dir>/<name>.json.
Json load_fixture(const std::string& path_or_name, const std::string& kind = {});
std::filesystem::path fixture_dir();

// {"kind": "diagram", "vertices": n, "edges": [[i, j], ...], "labels": [[i, j, m], ...]}
LabelledDiagram diagram_from_json(const Json& j);
// {"kind": "matrix", "rows": [["2", "-1"], ...]}
RMatrix matrix_fixture_from_json(const Json& j);
// {"kind": "hopf", "dim": d, "mult", "unit", "comult", "counit", "antipode", "antipode_inv"}
HopfAlgebra hopf_from_json(const Json& j);
Json hopf_to_json(const HopfAlgebra& h);
// {"kind": "bialgebra", "dim": n, "bracket": [[i, j, k, "c"], ...], "cobracket": [[k, p, q, "c"], ...]}
LieBialgebra bialgebra_from_json(const Json& j);
Json bialgebra_to_json(const LieBialgebra& b);
// {"kind": "witness", "flavor", "cartan", "orientation", "modules", "operators"}
CoxeterWitness witness_from_json(const Json& j);
Json witness_to_json(const CoxeterWitness& w);

}  // namespace coxkit::cli
