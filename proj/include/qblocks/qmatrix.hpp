#pragma once

// Weighted incidence matrices of the parenthesis reversal relation and
// their inverses, indexed by Dyck paths in canonical order.
//
//   M(a, b)    = prod over the nested tiling of a/b of (-w(t)),  0 unless a ~> b
//   Minv(a, b) = sum over cover-inclusive tilings T of a/b of prod_T w(t)
//
// with w(t) = [h_t] / [h_t + 1]. Both are unit upper triangular.

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "qblocks/dyck.hpp"
#include "qblocks/exec.hpp"
#include "qblocks/linalg.hpp"
#include "qblocks/qfield.hpp"

namespace qblocks {

inline constexpr int kMaxMatrixN = 6;
inline constexpr int kMaxInverseN = 5;

template <class T>
struct PathMatrix {
  int n = 0;
  std::vector<DyckPath> order;
  DenseMatrix<T> entries;

  std::size_t size() const { return order.size(); }
  std::size_t index_of(const DyckPath& p) const;
  const T& at(const DyckPath& a, const DyckPath& b) const { return entries(index_of(a), index_of(b)); }
  bool operator==(const PathMatrix&) const = default;
};

using QMatrix = PathMatrix<RatQ>;
using RationalMatrix = PathMatrix<mpq_class>;

/// Tile weight as a function of the tile height.
template <class T>
using WeightFn = std::function<T(int)>;

/// [h] / [h + 1].
RatQ tile_weight(int h);
/// h / (h + 1), the q = 1 weight.
mpq_class tile_weight_q1(int h);

template <class T>
PathMatrix<T> build_M_weighted(int n, const WeightFn<T>& w, Exec exec = Exec::Parallel);
template <class T>
PathMatrix<T> build_Minv_weighted(int n, const WeightFn<T>& w, Exec exec = Exec::Parallel);
template <class T>
PathMatrix<T> build_M_recursive_weighted(int n, const WeightFn<T>& f, Exec exec = Exec::Parallel);

QMatrix build_M(int n, Exec exec = Exec::Parallel);
QMatrix build_Minv_tilings(int n, Exec exec = Exec::Parallel);
/// Bottom-up wedge recursion. Every up-wedge column of the column path is
/// evaluated; disagreement throws std::logic_error.
QMatrix build_M_recursive(int n, Exec exec = Exec::Parallel);

/// Gauss-Jordan inverse; throws std::domain_error if singular.
template <class T>
PathMatrix<T> eliminate_inverse(const PathMatrix<T>& m);

bool is_unit_upper_triangular(const QMatrix& m);

/// build_M(n) * build_Minv_tilings(n) == I.
bool verify_inverse(int n, Exec exec = Exec::Parallel);

struct CoeffVector {
  int n = 0;
  std::map<DyckPath, RatQ> coeffs;  // zero coefficients are not stored
};

enum class BasisDirection { U_from_Z, Z_from_U };

/// Row-vector product v^T M (U_from_Z) or v^T M^-1 (Z_from_U).
CoeffVector change_basis(const CoeffVector& v, BasisDirection dir, const QMatrix& m, const QMatrix& minv);
CoeffVector change_basis(const CoeffVector& v, BasisDirection dir);

/// Entrywise value at q = 1.
RationalMatrix specialize_q1(const QMatrix& m);

}  // namespace qblocks
