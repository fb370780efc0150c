#pragma once

// U_q(sl2) acting on tensor powers of the two-dimensional module M2 over Q(q).
//
// Tensor factors are numbered from the right: factor 1 is the rightmost
// one. A basis monomial e_{b_n} (x) ... (x) e_{b_1} is stored under the key
// with bit p-1 equal to b_p. Rendered bitstrings list the leftmost factor
// first, so "10" is e_1 (x) e_0.
//
// Single factor: K e0 = q e0, K e1 = q^-1 e1, E e1 = e0, F e0 = e1.
// Coproduct: D(E) = E (x) K + 1 (x) E, D(F) = F (x) 1 + K^-1 (x) F, D(K) = K (x) K.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qblocks/dyck.hpp"
#include "qblocks/exec.hpp"
#include "qblocks/qfield.hpp"

namespace qblocks {

inline constexpr int kMaxTensorFactors = 62;

class TensorVec {
 public:
  explicit TensorVec(int n = 0);
  /// The single monomial with the given key.
  static TensorVec basis(int n, std::uint64_t key, const RatQ& c = RatQ(1));
  /// Key from a bitstring, leftmost factor first.
  static std::uint64_t key_from_bits(const std::string& bits);
  static std::string bits_from_key(std::uint64_t key, int n);

  int n() const { return n_; }
  const std::map<std::uint64_t, RatQ>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  RatQ coefficient(std::uint64_t key) const;

  /// Adds c to the coefficient of key, dropping it if it cancels.
  void add_term(std::uint64_t key, const RatQ& c);

  TensorVec operator-() const;
  TensorVec& operator+=(const TensorVec& rhs);
  TensorVec& operator-=(const TensorVec& rhs);
  TensorVec& operator*=(const RatQ& c);
  friend TensorVec operator+(TensorVec a, const TensorVec& b) { return a += b; }
  friend TensorVec operator-(TensorVec a, const TensorVec& b) { return a -= b; }
  friend TensorVec operator*(TensorVec a, const RatQ& c) { return a *= c; }
  friend TensorVec operator*(const RatQ& c, TensorVec a) { return a *= c; }

  bool operator==(const TensorVec&) const = default;

 private:
  int n_;
  std::map<std::uint64_t, RatQ> coeffs_;
};

/// left (x) right; right occupies the low factors.
TensorVec tensor(const TensorVec& left, const TensorVec& right);

enum class Generator { E, F, K, Kinv };

TensorVec act(Generator g, const TensorVec& v);

/// E v = 0 and K v = q^s v.
bool is_highest_weight(const TensorVec& v, int s);

/// Projection of factors j+1, j onto the trivial module:
/// e0e1 -> (q^-1 - q)/[2], e1e0 -> (1 - q^-2)/[2], e0e0, e1e1 -> 0.
TensorVec pi_hat(const TensorVec& v, int j);

/// (e1 (x) e0 - q e0 (x) e1) / (q - q^-1).
TensorVec singlet();
/// e0 (x) e0, q^-1 e0 (x) e1 + e1 (x) e0, [2] e1 (x) e1.
TensorVec triplet_plus();
TensorVec triplet_zero();
TensorVec triplet_minus();

/// Coefficient of the singlet when v in M2 (x) M2 is written in the basis
/// {s, t+, t0, t-}, by solving the 4x4 system.
RatQ singlet_component(const TensorVec& v);

/// prod over up-wedges of 1/[a(i)+1] times prod over down-wedges of [a(i)+1].
RatQ c_alpha(const DyckPath& alpha);

struct BlockVector {
  DyckPath path;
  TensorVec vec;                   // [2]^N c_alpha u^(2N)
  RatQ normalization;              // [2]^N c_alpha
  std::vector<TensorVec> prefixes; // u^(0), ..., u^(2N)
};

BlockVector build_u(const DyckPath& alpha);

struct ProjectionCheck {
  int j = 0;
  LocalShape shape = LocalShape::UpSlope;
  RatQ predicted;                  // 0, 1 or -[a(j)+1]/[a(j)+2]
  std::optional<RatQ> measured;    // pi_hat / target when proportional; nullopt if not
  bool ok = false;
};

struct ProjectionReport {
  DyckPath path;
  std::vector<ProjectionCheck> checks;
  int failures() const;
};

/// Predicted coefficient of pi_hat_j(u_alpha) relative to u_{alpha minus wedge j}.
RatQ projection_coefficient(const DyckPath& alpha, int j);

ProjectionReport verify_projections(const DyckPath& alpha);

std::vector<ProjectionReport> verify_all_projections(int n, Exec exec);

/// Prefix u^(k) lies in H_k^(alpha(k)) for every k.
bool verify_prefixes(const BlockVector& b);

/// Rank over Q(q) of {build_u(a).vec : a in DP_N}.
std::size_t basis_rank(int n);

/// dim of {v in span of weight-zero monomials of M2^(2N) : E v = 0}.
std::size_t trivial_subspace_dimension(int n);

/// The joint kernel of all pi_hat_j on H^(0)_{2N} is zero.
bool homogeneous_kernel_trivial(int n);

}  // namespace qblocks
