#pragma once

#include <string>

#include <json.hpp>

#include "grasshard/graph.hpp"
#include "grasshard/manifolds.hpp"
#include "grasshard/poly.hpp"
#include "grasshard/reductions.hpp"
#include "grasshard/solvers.hpp"

// JSON forms of the library's data. Parsing failures throw Error(Parse).
// Rationals are decimal strings ("-3/4"); readers also accept JSON integers.
namespace grasshard::json {

using Json = nlohmann::ordered_json;

Json parse(const std::string& text);
// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json to_json(const SparsePoly& f);
SparsePoly poly_from_json(const Json& j);

Json to_json(const Point& p);
Point point_from_json(const Json& j);

Json to_json(const RationalMatrix& a);
// Nested rows of rationals (strings or integers).
RationalMatrix rational_matrix_from_json(const Json& j);

Json to_json(const TheoreticalValue& v);
TheoreticalValue theoretical_value_from_json(const Json& j);

Json to_json(const ReductionInstance& inst);
ReductionInstance instance_from_json(const Json& j);

Json to_json(const SolveReport& r);
// One row per start: start,seed,iterations,final_value,grad_norm (%.17g).
std::string report_csv(const SolveReport& r);

// Row-major dense matrix: {"rows": r, "cols": c, "data": [...]}.
Json matrix_to_json(const Eigen::MatrixXd& m);

}  // namespace grasshard::json
