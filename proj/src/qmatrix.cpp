#include "qblocks/qmatrix.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <string>

#include "qblocks/tilings.hpp"

namespace qblocks {

template <class T>
std::size_t PathMatrix<T>::index_of(const DyckPath& p) const {
  auto it = std::lower_bound(order.begin(), order.end(), p);
  if (it == order.end() || !(*it == p)) throw std::out_of_range("path " + p.steps() + " is not indexed by this matrix");
  return static_cast<std::size_t>(it - order.begin());
}

RatQ tile_weight(int h) {
  if (h < 1) throw std::invalid_argument("tile_weight: height must be positive");
  return qint(h) / qint(h + 1);
}

mpq_class tile_weight_q1(int h) {
  if (h < 1) throw std::invalid_argument("tile_weight_q1: height must be positive");
  return mpq_class(h, h + 1);
}

namespace {

void check_cap(int n, int cap, const char* what) {
  if (n < 0 || n > cap) {
    throw std::invalid_argument(std::string(what) + ": N must be in [0, " + std::to_string(cap) + "]");
  }
}

template <class T>
PathMatrix<T> empty_matrix(int n) {
  PathMatrix<T> m;
  m.n = n;
  m.order = enumerate_paths(n);
  m.entries = DenseMatrix<T>(m.order.size(), m.order.size());
  return m;
}

// Runs body(i) for every row, rethrowing the first exception after the loop.
template <class Body>
void for_each_row(std::size_t rows, Exec exec, Body&& body) {
  std::exception_ptr error;
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(rows); ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical(qblocks_row_error)
        if (!error) error = std::current_exception();
      }
    }
  } else {
    for (std::size_t i = 0; i < rows; ++i) body(i);
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

template <class T>
PathMatrix<T> build_M_weighted(int n, const WeightFn<T>& w, Exec exec) {
  check_cap(n, kMaxMatrixN, "build_M");
  auto m = empty_matrix<T>(n);
  for_each_row(m.size(), exec, [&](std::size_t i) {
    for (std::size_t j = i; j < m.size(); ++j) {
      auto tiling = nested_tiling(m.order[i], m.order[j]);
      if (!tiling) continue;
      T value(1);
      for (const auto& t : tiling->tiles) value *= -w(t.h);
      m.entries(i, j) = value;
    }
  });
  return m;
}

template <class T>
PathMatrix<T> build_Minv_weighted(int n, const WeightFn<T>& w, Exec exec) {
  check_cap(n, kMaxInverseN, "build_Minv_tilings");
  auto m = empty_matrix<T>(n);
  for_each_row(m.size(), exec, [&](std::size_t i) {
    for (std::size_t j = i; j < m.size(); ++j) {
      T sum(0);
      for (const auto& tiling : enumerate_cover_inclusive(m.order[i], m.order[j])) {
        T value(1);
        for (const auto& t : tiling.tiles) value *= w(t.h);
        sum += value;
      }
      m.entries(i, j) = sum;
    }
  });
  return m;
}

template <class T>
PathMatrix<T> build_M_recursive_weighted(int n, const WeightFn<T>& f, Exec exec) {
  check_cap(n, kMaxMatrixN, "build_M_recursive");
  PathMatrix<T> prev = empty_matrix<T>(0);
  prev.entries(0, 0) = T(1);
  for (int k = 1; k <= n; ++k) {
    auto cur = empty_matrix<T>(k);
    for_each_row(cur.size(), exec, [&](std::size_t i) {
      const DyckPath& alpha = cur.order[i];
      for (std::size_t j = 0; j < cur.size(); ++j) {
        const DyckPath& beta = cur.order[j];
        std::optional<T> value;
        for (int col = 1; col < 2 * k; ++col) {
          if (local_shape(beta, col) != LocalShape::UpWedge) continue;
          T candidate(0);
          const LocalShape a = local_shape(alpha, col);
          if (is_wedge(a)) {
            const T& sub = prev.at(remove_wedge(alpha, col), remove_wedge(beta, col));
            candidate = a == LocalShape::UpWedge ? sub : T(-f(alpha[col] + 1) * sub);
          }
          if (!value) {
            value = candidate;
          } else if (!(*value == candidate)) {
            throw std::logic_error("wedge recursion disagrees across columns for " + alpha.steps() + ", " +
                                   beta.steps());
          }
        }
        cur.entries(i, j) = *value;
      }
    });
    prev = std::move(cur);
  }
  return prev;
}

template <class T>
PathMatrix<T> eliminate_inverse(const PathMatrix<T>& m) {
  auto inv = inverse(m.entries);
  if (!inv) throw std::domain_error("matrix is singular");
  PathMatrix<T> out;
  out.n = m.n;
  out.order = m.order;
  out.entries = std::move(*inv);
  return out;
}

template PathMatrix<RatQ> build_M_weighted(int, const WeightFn<RatQ>&, Exec);
template PathMatrix<mpq_class> build_M_weighted(int, const WeightFn<mpq_class>&, Exec);
template PathMatrix<RatQ> build_Minv_weighted(int, const WeightFn<RatQ>&, Exec);
template PathMatrix<mpq_class> build_Minv_weighted(int, const WeightFn<mpq_class>&, Exec);
template PathMatrix<RatQ> build_M_recursive_weighted(int, const WeightFn<RatQ>&, Exec);
template PathMatrix<mpq_class> build_M_recursive_weighted(int, const WeightFn<mpq_class>&, Exec);
template PathMatrix<RatQ> eliminate_inverse(const PathMatrix<RatQ>&);
template PathMatrix<mpq_class> eliminate_inverse(const PathMatrix<mpq_class>&);
template struct PathMatrix<RatQ>;
template struct PathMatrix<mpq_class>;

QMatrix build_M(int n, Exec exec) { return build_M_weighted<RatQ>(n, tile_weight, exec); }

QMatrix build_Minv_tilings(int n, Exec exec) { return build_Minv_weighted<RatQ>(n, tile_weight, exec); }

QMatrix build_M_recursive(int n, Exec exec) { return build_M_recursive_weighted<RatQ>(n, tile_weight, exec); }

bool is_unit_upper_triangular(const QMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m.entries(i, i).is_one()) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (!m.entries(i, j).is_zero()) return false;
    }
  }
  return true;
}

bool verify_inverse(int n, Exec exec) {
  const auto m = build_M(n, exec);
  const auto minv = build_Minv_tilings(n, exec);
  return multiply(m.entries, minv.entries) == DenseMatrix<RatQ>::identity(m.size());
}

CoeffVector change_basis(const CoeffVector& v, BasisDirection dir, const QMatrix& m, const QMatrix& minv) {
  const QMatrix& a = dir == BasisDirection::U_from_Z ? m : minv;
  if (a.n != v.n) throw std::invalid_argument("change_basis: vector and matrix sizes differ");
  std::vector<RatQ> acc(a.size());
  for (const auto& [path, c] : v.coeffs) {
    const std::size_t i = a.index_of(path);
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (!a.entries(i, j).is_zero()) acc[j] += c * a.entries(i, j);
    }
  }
  CoeffVector out;
  out.n = v.n;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (!acc[j].is_zero()) out.coeffs.emplace(a.order[j], acc[j]);
  }
  return out;
}

CoeffVector change_basis(const CoeffVector& v, BasisDirection dir) {
  const auto m = build_M(v.n);
  const auto minv = build_Minv_tilings(v.n);
  return change_basis(v, dir, m, minv);
}

RationalMatrix specialize_q1(const QMatrix& m) {
  RationalMatrix out;
  out.n = m.n;
  out.order = m.order;
  out.entries = DenseMatrix<mpq_class>(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out.entries(i, j) = m.entries(i, j).evaluate(mpq_class(1));
  }
  return out;
}

}  // namespace qblocks
