#pragma once

// Dyck tiles, skew shapes and Dyck tilings.
//
// A cell of the skew shape low/high is the diamond (j, m) with
// low(j) < m < high(j) and m = j + 1 (mod 2). A tile is stored by its
// horizontal extent [x, xp] and the level of its cell in each column; the
// first and last levels equal the height h and no level drops below h.

#include <compare>
#include <functional>
#include <optional>
#include <vector>

#include "qblocks/dyck.hpp"

namespace qblocks {

struct Cell {
  int j = 0;
  int m = 0;
  auto operator<=>(const Cell&) const = default;
};

struct DyckTile {
  int x = 0;
  int xp = 0;
  int h = 0;
  std::vector<int> profile;  // profile[i] = level of the cell in column x + i

  /// Validates the Dyck-tile shape; throws std::invalid_argument.
  DyckTile(int x, int xp, std::vector<int> profile);
  /// Single-cell tile.
  static DyckTile single(int x, int h) { return DyckTile(x, x, {h}); }

  int level_at(int j) const { return profile[static_cast<std::size_t>(j - x)]; }
  bool spans(int j) const { return x <= j && j <= xp; }
  std::vector<Cell> cells() const;

  bool operator==(const DyckTile&) const = default;
};

/// t2 covers t1: some shared column has t2's cell strictly above t1's.
bool tile_covers(const DyckTile& t1, const DyckTile& t2);

class SkewShape {
 public:
  /// Throws std::invalid_argument unless low <= high pointwise.
  SkewShape(DyckPath low, DyckPath high);

  const DyckPath& low() const { return low_; }
  const DyckPath& high() const { return high_; }
  /// Cells sorted by (column, level).
  const std::vector<Cell>& cells() const { return cells_; }
  bool contains(const Cell& c) const;

 private:
  DyckPath low_;
  DyckPath high_;
  std::vector<Cell> cells_;
};

struct Tiling {
  DyckPath low;
  DyckPath high;
  std::vector<DyckTile> tiles;  // sorted by leftmost cell (x, h)
};

/// Independent check: each tile is a Dyck tile, tiles are cell-disjoint and
/// cover exactly the cells of low/high.
bool is_valid_tiling(const Tiling& t);

bool is_nested(const Tiling& t);
bool is_cover_inclusive(const Tiling& t);

/// Pairwise condition on distinct tiles of one tiling.
using TilePairPredicate = std::function<bool(const DyckTile&, const DyckTile&)>;
bool nested_pair(const DyckTile& a, const DyckTile& b);
bool cover_inclusive_pair(const DyckTile& a, const DyckTile& b);

/// Every Dyck tiling of low/high, by backtracking on the smallest uncovered
/// cell. With a predicate, partial tilings are pruned as soon as a pair
/// fails it. Empty result when low is not <= high.
std::vector<Tiling> enumerate_tilings(const DyckPath& low, const DyckPath& high,
                                      const TilePairPredicate& keep = nullptr);

/// The unique nested tiling of low/high, if any. Throws std::logic_error if
/// more than one nested tiling is found.
std::optional<Tiling> nested_tiling(const DyckPath& low, const DyckPath& high);

std::vector<Tiling> enumerate_cover_inclusive(const DyckPath& low, const DyckPath& high);

}  // namespace qblocks
