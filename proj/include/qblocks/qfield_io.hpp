#pragma once

// Text, LaTeX and JSON forms of Laurent polynomials and Q(q) elements.
//
// JSON schema:
//   LaurentPoly  [[exponent, "p/q"], ...]   nonzero terms, exponent ascending
//   RatQ         {"num": LaurentPoly, "den": LaurentPoly}

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "qblocks/qfield.hpp"

namespace qblocks {

nlohmann::json to_json(const LaurentPoly& p);
nlohmann::json to_json(const RatQ& x);
LaurentPoly laurent_from_json(const nlohmann::json& j);
RatQ ratq_from_json(const nlohmann::json& j);
bool is_ratq_json(const nlohmann::json& j);

/// "q^2 + 1 + q^-2", highest exponent first.
std::string to_text(const LaurentPoly& p);
std::string to_text(const RatQ& x);

/// x = sign * prod_k [k]^exponents[k], when such a form exists.
struct QBracketForm {
  int sign = 1;
  std::map<int, int> exponents;  // k >= 2, nonzero exponents only
};
std::optional<QBracketForm> as_qbracket_product(const RatQ& x);

/// "-\frac{[2]}{[3]}" for bracket products, otherwise a ratio of polynomials.
std::string to_latex(const RatQ& x);
/// Short text form preferring brackets: "-[2]/[3]", "1/[2]".
std::string to_bracket_text(const RatQ& x);

}  // namespace qblocks
