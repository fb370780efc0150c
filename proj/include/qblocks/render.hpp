#pragma once

// Text, JSON, CSV and LaTeX output for paths, tilings, matrices and block
// vectors, plus the JSON readers that invert the JSON writers.

#include <string>
#include <vector>

#include <json.hpp>

#include "qblocks/dyck.hpp"
#include "qblocks/qmatrix.hpp"
#include "qblocks/tilings.hpp"
#include "qblocks/uqsl2.hpp"

namespace qblocks {

using json = nlohmann::json;

// Paths: step strings "UDUD".
json paths_to_json(const std::vector<DyckPath>& paths);
std::string paths_to_text(const std::vector<DyckPath>& paths);

// Tilings: {"low": "UD..", "high": "UU..", "tiles": [{"x", "xp", "h", "profile"}]}.
json tiling_to_json(const Tiling& t);
Tiling tiling_from_json(const json& j);
/// Diamond grid, top level first. Tile cells carry a letter per tile, 'o'
/// marks the upper path, '*' the lower path.
std::string tiling_to_ascii(const Tiling& t);

// Matrices: {"n", "order": [steps], "entries": [[RatQ]]}.
json matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const json& j);
std::string matrix_to_text(const QMatrix& m);
/// Real parts at q = exp(4 pi i / kappa); header row and column are step strings.
std::string matrix_to_csv(const QMatrix& m, double kappa);
std::string matrix_to_latex(const QMatrix& m);

// Tensor vectors: {"n", "factor_order": "leftmost first; factor 1 = rightmost",
//                  "terms": [{"bits": "0110", "coeff": RatQ}]}.
json tensor_to_json(const TensorVec& v);
TensorVec tensor_from_json(const json& j);
std::string tensor_to_text(const TensorVec& v);

json block_to_json(const BlockVector& b);
std::string block_to_text(const BlockVector& b);

inline constexpr const char* kFactorLegend = "bitstrings list the leftmost tensor factor first; factor 1 = rightmost";

}  // namespace qblocks
