#include "qblocks/qfield.hpp"

#include <cmath>
#include <numbers>

namespace qblocks {

namespace {

// Ordinary polynomials over Q, index = degree, no trailing zeros.
using Poly = std::vector<mpq_class>;

void strip(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

void make_monic(Poly& p) {
  if (p.empty()) return;
  const mpq_class lead = p.back();
  if (lead == 1) return;
  for (auto& c : p) c /= lead;
}

// Remainder of a modulo a monic b.
Poly poly_rem_monic(Poly a, const Poly& b) {
  const int db = degree(b);
  while (degree(a) >= db) {
    const mpq_class lead = a.back();
    const int shift = degree(a) - db;
    for (int i = 0; i <= db; ++i) a[shift + i] -= lead * b[i];
    a.pop_back();
    strip(a);
  }
  return a;
}

// Exact quotient a / b (b divides a).
Poly poly_exact_div(Poly a, const Poly& b) {
  const int db = degree(b);
  const int dq = degree(a) - db;
  Poly quot(dq + 1);
  const mpq_class& lead_b = b.back();
  for (int k = dq; k >= 0; --k) {
    const mpq_class c = a[k + db] / lead_b;
    quot[k] = c;
    if (sgn(c) != 0) {
      for (int i = 0; i <= db; ++i) a[k + i] -= c * b[i];
    }
  }
  return quot;
}

// Monic gcd over Q.
Poly poly_gcd(Poly a, Poly b) {
  make_monic(a);
  make_monic(b);
  if (degree(a) < degree(b)) std::swap(a, b);
  while (!b.empty()) {
    Poly r = poly_rem_monic(std::move(a), b);
    make_monic(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly LaurentPoly::constant(const mpq_class& c) { return monomial(0, c); }

LaurentPoly LaurentPoly::monomial(int exponent, const mpq_class& c) {
  LaurentPoly p;
  if (sgn(c) != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(c);
  }
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, mpq_class>>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p += monomial(e, c);
  return p;
}

LaurentPoly LaurentPoly::from_dense(int low, std::vector<mpq_class> coeffs) {
  LaurentPoly p;
  p.low_ = low;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && sgn(coeffs_[lead]) == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

mpq_class LaurentPoly::coefficient(int exponent) const {
  const int i = exponent - low_;
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

std::vector<std::pair<int, mpq_class>> LaurentPoly::terms() const {
  std::vector<std::pair<int, mpq_class>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
  }
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const int lo = std::min(low_, rhs.low_);
  const int hi = std::max(high_exponent(), rhs.high_exponent());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), mpq_class(0));
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[static_cast<std::size_t>(rhs.low_ - lo) + i] += rhs.coeffs_[i];
  }
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly& LaurentPoly::operator*=(const mpq_class& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return LaurentPoly::from_dense(a.low_ + b.low_, std::move(out));
}

mpq_class LaurentPoly::evaluate(const mpq_class& q) const {
  if (coeffs_.empty()) return 0;
  if (sgn(q) == 0 && low_ < 0) throw PoleError("negative power of q evaluated at q = 0");
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  mpq_class base = low_ >= 0 ? q : mpq_class(1 / q);
  for (int i = 0; i < std::abs(low_); ++i) acc *= base;
  return acc;
}

// ----------------------------------------------------------------------- RatQ

RatQ::RatQ(long n) : num_(LaurentPoly::constant(n)), den_(LaurentPoly::constant(1)) {}

RatQ::RatQ(const mpq_class& c) : num_(LaurentPoly::constant(c)), den_(LaurentPoly::constant(1)) {}

RatQ::RatQ(LaurentPoly num) : num_(std::move(num)), den_(LaurentPoly::constant(1)) {
  canonicalize();
}

RatQ::RatQ(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  canonicalize();
}

RatQ RatQ::q_power(int k) { return RatQ(Raw{}, LaurentPoly::monomial(k), LaurentPoly::constant(1)); }

bool RatQ::is_one() const {
  return num_ == LaurentPoly::constant(1) && den_ == LaurentPoly::constant(1);
}

bool RatQ::is_laurent() const { return den_ == LaurentPoly::constant(1); }

void RatQ::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(1);
    return;
  }
  const int shift = num_.low_exponent() - den_.low_exponent();
  Poly n0 = num_.dense();
  Poly d0 = den_.dense();

  if (degree(d0) > 0 && degree(n0) > 0) {
    Poly g = poly_gcd(n0, d0);
    if (degree(g) > 0) {
      n0 = poly_exact_div(std::move(n0), g);
      d0 = poly_exact_div(std::move(d0), g);
    }
  }

  // Scale so that d0 is a primitive integer polynomial with d0(0) > 0.
  mpz_class lcm_den = 1;
  for (const auto& c : d0) {
    if (sgn(c) != 0) lcm_den = lcm(lcm_den, mpz_class(c.get_den()));
  }
  mpz_class gcd_num = 0;
  for (const auto& c : d0) {
    if (sgn(c) == 0) continue;
    mpz_class scaled = c.get_num() * (lcm_den / c.get_den());
    gcd_num = gcd(gcd_num, scaled);
  }
  mpq_class factor(lcm_den, gcd_num);
  factor.canonicalize();
  if (sgn(d0.front()) < 0) factor = -factor;
  if (factor != 1) {
    for (auto& c : n0) c *= factor;
    for (auto& c : d0) c *= factor;
  }
  num_ = LaurentPoly::from_dense(shift, std::move(n0));
  den_ = LaurentPoly::from_dense(0, std::move(d0));
}

RatQ RatQ::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return RatQ(den_, num_);
}

RatQ RatQ::mul_q_power(int k) const { return RatQ(Raw{}, num_.shifted(k), den_); }

RatQ RatQ::operator-() const { return RatQ(Raw{}, -num_, den_); }

RatQ& RatQ::operator+=(const RatQ& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
  }
  canonicalize();
  return *this;
}

RatQ& RatQ::operator-=(const RatQ& rhs) { return *this += -rhs; }

RatQ& RatQ::operator*=(const RatQ& rhs) {
  if (is_zero()) return *this;
  if (rhs.is_zero()) return *this = RatQ();
  num_ = num_ * rhs.num_;
  den_ = den_ * rhs.den_;
  canonicalize();
  return *this;
}

RatQ& RatQ::operator/=(const RatQ& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  if (is_zero()) return *this;
  num_ = num_ * rhs.den_;
  den_ = den_ * rhs.num_;
  canonicalize();
  return *this;
}

mpq_class RatQ::evaluate(const mpq_class& q) const {
  const mpq_class d = den_.evaluate(q);
  if (sgn(d) == 0) throw PoleError("denominator vanishes at the evaluation point");
  return num_.evaluate(q) / d;
}

// ------------------------------------------------------------------ q-numbers

LaurentPoly q_integer(int n) {
  if (n < 0) throw std::invalid_argument("q_integer: n must be nonnegative");
  std::vector<std::pair<int, mpq_class>> terms;
  for (int k = 0; k < n; ++k) terms.emplace_back(n - 1 - 2 * k, 1);
  return LaurentPoly::from_terms(terms);
}

RatQ qint(int n) { return RatQ(q_integer(n)); }

QNumeric QNumeric::from_kappa(double kappa) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw std::invalid_argument("kappa must be a positive finite number");
  }
  const double angle = 4.0 * std::numbers::pi / kappa;
  return QNumeric{kappa, std::polar(1.0, angle)};
}

namespace {

std::complex<long double> q_long(const QNumeric& ctx) {
  const long double angle = 4.0L * std::numbers::pi_v<long double> / ctx.kappa;
  return std::polar(1.0L, angle);
}

}  // namespace

std::complex<double> eval_at_kappa(const LaurentPoly& f, const QNumeric& ctx) {
  const auto v = f.evaluate(q_long(ctx));
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

std::complex<double> eval_at_kappa(const RatQ& f, const QNumeric& ctx) {
  const auto q = q_long(ctx);
  const auto d = f.den().evaluate(q);
  if (std::abs(d) < kPoleTolerance) {
    throw PoleError("evaluation at a pole: denominator vanishes at q = exp(4 pi i / kappa)");
  }
  const auto v = f.num().evaluate(q) / d;
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

}  // namespace qblocks
