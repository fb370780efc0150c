#include "qblocks/qfield_io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qblocks {

namespace {

std::string rational_string(const mpq_class& c) {
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

mpq_class parse_rational(const std::string& s) {
  mpq_class c;
  if (c.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational coefficient: " + s);
  if (sgn(c.get_den()) == 0) throw std::invalid_argument("zero denominator in coefficient: " + s);
  c.canonicalize();
  return c;
}

// --- cyclotomic valuations for bracket detection ---------------------------

using Poly = std::vector<mpq_class>;

// Quotient and whether the division was exact.
std::pair<Poly, bool> poly_divide(Poly a, const Poly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const int da = static_cast<int>(a.size()) - 1;
  if (da < db) return {{}, false};
  Poly quot(da - db + 1);
  for (int k = da - db; k >= 0; --k) {
    const mpq_class c = a[k + db] / b.back();
    quot[k] = c;
    for (int i = 0; i <= db; ++i) a[k + i] -= c * b[i];
  }
  for (const auto& r : a)
    if (sgn(r) != 0) return {{}, false};
  return {quot, true};
}

// Cached per thread; bracket detection is only used for rendering.
const Poly& cyclotomic(int n) {
  thread_local std::map<int, Poly> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  Poly p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = poly_divide(p, cyclotomic(d)).first;
  }
  return cache[n] = p;
}

int valuation(Poly p, const Poly& phi) {
  int v = 0;
  while (p.size() >= phi.size()) {
    auto [quot, exact] = poly_divide(p, phi);
    if (!exact) break;
    p = std::move(quot);
    ++v;
  }
  return v;
}

}  // namespace

nlohmann::json to_json(const LaurentPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back({e, rational_string(c)});
  return arr;
}

nlohmann::json to_json(const RatQ& x) { return {{"num", to_json(x.num())}, {"den", to_json(x.den())}}; }

LaurentPoly laurent_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("LaurentPoly JSON must be an array");
  std::vector<std::pair<int, mpq_class>> terms;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() || !term[1].is_string()) {
      throw std::invalid_argument("LaurentPoly term must be [exponent, \"p/q\"]");
    }
    terms.emplace_back(term[0].get<int>(), parse_rational(term[1].get<std::string>()));
  }
  return LaurentPoly::from_terms(terms);
}

RatQ ratq_from_json(const nlohmann::json& j) {
  if (!is_ratq_json(j)) throw std::invalid_argument("RatQ JSON must be {\"num\": [...], \"den\": [...]}");
  return RatQ(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

bool is_ratq_json(const nlohmann::json& j) {
  return j.is_object() && j.size() == 2 && j.contains("num") && j.contains("den") && j["num"].is_array() &&
         j["den"].is_array();
}

std::string to_text(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  auto terms = p.terms();
  std::ostringstream os;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    mpq_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (!unit) os << mag.get_str() << "*";
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::string to_text(const RatQ& x) {
  if (x.is_laurent()) return to_text(x.num());
  return "(" + to_text(x.num()) + ")/(" + to_text(x.den()) + ")";
}

std::optional<QBracketForm> as_qbracket_product(const RatQ& x) {
  if (x.is_zero()) return std::nullopt;
  const Poly& n0 = x.num().dense();
  const Poly& d0 = x.den().dense();
  const int max_deg = static_cast<int>(std::max(n0.size(), d0.size())) - 1;
  // [k] = q^(1-k) * prod_{d | 2k, d > 2} Phi_d, and Phi_2k first appears in [k].
  const int kmax = max_deg / 2 + 1;
  std::map<int, int> val;
  for (int k = 2; k <= kmax; ++k) {
    const Poly& phi = cyclotomic(2 * k);
    val[k] = valuation(n0, phi) - valuation(d0, phi);
  }
  QBracketForm form;
  for (int k = kmax; k >= 2; --k) {
    int e = val[k];
    for (int m = 2 * k; m <= kmax; m += k) {
      if (auto it = form.exponents.find(m); it != form.exponents.end()) e -= it->second;
    }
    if (e != 0) form.exponents[k] = e;
  }
  RatQ y(1);
  for (const auto& [k, e] : form.exponents) {
    for (int i = 0; i < std::abs(e); ++i) y = e > 0 ? y * qint(k) : y / qint(k);
  }
  const RatQ ratio = x / y;
  if (ratio == RatQ(1)) {
    form.sign = 1;
  } else if (ratio == RatQ(-1)) {
    form.sign = -1;
  } else {
    return std::nullopt;
  }
  return form;
}

namespace {

std::string bracket_factors(const std::map<int, int>& exps, bool positive, bool latex) {
  std::string out;
  for (const auto& [k, e] : exps) {
    if ((e > 0) != positive) continue;
    const int m = std::abs(e);
    out += "[" + std::to_string(k) + "]";
    if (m > 1) out += latex ? "^{" + std::to_string(m) + "}" : "^" + std::to_string(m);
  }
  return out;
}

std::string latex_poly(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  auto terms = p.terms();
  std::string out;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    const mpq_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    std::string coef;
    if (mag.get_den() == 1) {
      coef = mag.get_num().get_str();
    } else {
      coef = "\\tfrac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
    }
    if (e == 0) {
      out += coef;
      continue;
    }
    if (mag != 1) out += coef + " ";
    out += "q";
    if (e != 1) out += "^{" + std::to_string(e) + "}";
  }
  return out;
}

}  // namespace

std::string to_latex(const RatQ& x) {
  if (x.is_zero()) return "0";
  if (auto form = as_qbracket_product(x)) {
    std::string num = bracket_factors(form->exponents, true, true);
    std::string den = bracket_factors(form->exponents, false, true);
    std::string sign = form->sign < 0 ? "-" : "";
    if (num.empty()) num = "1";
    if (den.empty()) return sign + num;
    return sign + "\\frac{" + num + "}{" + den + "}";
  }
  if (x.is_laurent()) return latex_poly(x.num());
  return "\\frac{" + latex_poly(x.num()) + "}{" + latex_poly(x.den()) + "}";
}

std::string to_bracket_text(const RatQ& x) {
  if (x.is_zero()) return "0";
  if (auto form = as_qbracket_product(x)) {
    std::string num = bracket_factors(form->exponents, true, false);
    std::string den = bracket_factors(form->exponents, false, false);
    std::string sign = form->sign < 0 ? "-" : "";
    if (num.empty()) num = "1";
    if (den.empty()) return sign + num;
    return sign + num + "/" + den;
  }
  return to_text(x);
}

}  // namespace qblocks
