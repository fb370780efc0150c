#pragma once

// Dyck paths as height sequences (h(0), ..., h(2N)), h(0) = h(2N) = 0.
//
// The canonical index order for every matrix and vector in the library is
// ascending lexicographic order of the height sequence. It refines the
// pointwise partial order, so matrices supported on that order are upper
// triangular.

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qblocks {

/// Largest N accepted by enumerate_paths (C_12 = 208012 paths).
inline constexpr int kMaxEnumerateN = 12;

class PathParseError : public std::invalid_argument {
 public:
  PathParseError(const std::string& what, std::size_t index)
      : std::invalid_argument(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class DyckPath {
 public:
  /// The empty path (0).
  DyckPath() : heights_{0} {}
  explicit DyckPath(std::vector<int> heights);

  /// Parse a step string over {U, D}; "UDUD" -> (0,1,0,1,0).
  static DyckPath from_steps(std::string_view steps);

  int semilength() const { return static_cast<int>(heights_.size() / 2); }
  /// Number of steps, 2N.
  int steps_count() const { return static_cast<int>(heights_.size()) - 1; }
  int operator[](int j) const { return heights_[static_cast<std::size_t>(j)]; }
  std::span<const int> heights() const { return heights_; }

  std::string steps() const;
  std::string heights_string() const;

  auto operator<=>(const DyckPath&) const = default;

 private:
  std::vector<int> heights_;
};

enum class LocalShape { UpWedge, DownWedge, UpSlope, DownSlope };

inline bool is_wedge(LocalShape s) { return s == LocalShape::UpWedge || s == LocalShape::DownWedge; }
const char* shape_name(LocalShape s);

/// All C_N Dyck paths of semilength N in canonical order.
std::vector<DyckPath> enumerate_paths(int n);

/// Local shape at an interior position 1 <= j <= 2N-1.
LocalShape local_shape(const DyckPath& path, int j);

/// Drop heights j and j+1 at a wedge.
DyckPath remove_wedge(const DyckPath& path, int j);

/// Inverse of remove_wedge: insert a wedge of the given kind so that it sits at j.
DyckPath insert_wedge(const DyckPath& path, int j, LocalShape kind);

/// Pointwise order; throws std::invalid_argument on length mismatch.
bool path_leq(const DyckPath& a, const DyckPath& b);

/// Catalan number C_n.
long long catalan(int n);

}  // namespace qblocks
