#pragma once

// Exact arithmetic in Q[q, q^-1] and its fraction field Q(q).
//
// Every matrix entry and tensor coefficient in this library lives in Q(q).
// RatQ values are kept in a canonical form so that equality and zero tests
// are plain structural comparisons:
//
//   value = num / den,   den an ordinary integer polynomial with positive
//   constant term and content 1,   gcd(num * q^s, den) = 1,
//
// where q^s is the shift that turns num into an ordinary polynomial with a
// nonzero constant term. The q-power part of the value is carried by num.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qblocks {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by the zero element of Q(q)") {}
};

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Element of Q[q, q^-1].
///
/// Stored densely between the lowest and highest nonzero exponent. The
/// public view is the sparse one: terms() lists only nonzero coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly constant(const mpq_class& c);
  static LaurentPoly monomial(int exponent, const mpq_class& c = 1);
  static LaurentPoly from_terms(const std::vector<std::pair<int, mpq_class>>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest / highest exponent with a nonzero coefficient. Undefined for zero.
  int low_exponent() const { return low_; }
  int high_exponent() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }

  mpq_class coefficient(int exponent) const;
  std::vector<std::pair<int, mpq_class>> terms() const;

  /// Multiply by q^k.
  LaurentPoly shifted(int k) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const mpq_class& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const mpq_class& c) { return a *= c; }

  bool operator==(const LaurentPoly& rhs) const {
    return low_ == rhs.low_ && coeffs_ == rhs.coeffs_;
  }

  template <class Scalar>
  Scalar evaluate(const Scalar& q) const;

  mpq_class evaluate(const mpq_class& q) const;

  // Dense access used by the fraction-field code.
  const std::vector<mpq_class>& dense() const { return coeffs_; }
  static LaurentPoly from_dense(int low, std::vector<mpq_class> coeffs);

 private:
  void trim();

  int low_ = 0;
  std::vector<mpq_class> coeffs_;  // coeffs_[i] multiplies q^(low_ + i)
};

/// Element of Q(q) in canonical form.
class RatQ {
 public:
  RatQ() : den_(LaurentPoly::constant(1)) {}
  RatQ(long n);  // NOLINT(google-explicit-constructor): integers embed in Q(q)
  RatQ(int n) : RatQ(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  explicit RatQ(const mpq_class& c);
  explicit RatQ(LaurentPoly num);
  RatQ(LaurentPoly num, LaurentPoly den);

  /// q^k.
  static RatQ q_power(int k);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  /// True when the value is a Laurent polynomial (den == 1).
  bool is_laurent() const;

  RatQ inverse() const;
  /// Multiply by q^k without renormalising.
  RatQ mul_q_power(int k) const;

  RatQ operator-() const;
  RatQ& operator+=(const RatQ& rhs);
  RatQ& operator-=(const RatQ& rhs);
  RatQ& operator*=(const RatQ& rhs);
  RatQ& operator/=(const RatQ& rhs);
  friend RatQ operator+(RatQ a, const RatQ& b) { return a += b; }
  friend RatQ operator-(RatQ a, const RatQ& b) { return a -= b; }
  friend RatQ operator*(RatQ a, const RatQ& b) { return a *= b; }
  friend RatQ operator/(RatQ a, const RatQ& b) { return a /= b; }

  bool operator==(const RatQ& rhs) const { return num_ == rhs.num_ && den_ == rhs.den_; }

  /// Exact value at a rational point; throws PoleError if den vanishes there.
  mpq_class evaluate(const mpq_class& q) const;

 private:
  struct Raw {};
  RatQ(Raw, LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

/// The q-integer [n] = q^(n-1) + q^(n-3) + ... + q^(1-n); [0] = 0.
LaurentPoly q_integer(int n);

/// [n] as a field element.
RatQ qint(int n);

/// Numeric specialisation q = exp(i 4 pi / kappa).
struct QNumeric {
  double kappa = 0.0;
  std::complex<double> q_value;

  static QNumeric from_kappa(double kappa);
};

/// |den(q)| below this is treated as a pole.
inline constexpr double kPoleTolerance = 1e-12;

std::complex<double> eval_at_kappa(const RatQ& f, const QNumeric& ctx);
std::complex<double> eval_at_kappa(const LaurentPoly& f, const QNumeric& ctx);

template <class Scalar>
Scalar LaurentPoly::evaluate(const Scalar& q) const {
  if (coeffs_.empty()) return Scalar(0);
  Scalar acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * q + Scalar(it->get_d());
  }
  Scalar shift(1);
  const Scalar base = low_ >= 0 ? q : Scalar(1) / q;
  for (int i = 0; i < (low_ >= 0 ? low_ : -low_); ++i) shift *= base;
  return acc * shift;
}

}  // namespace qblocks
