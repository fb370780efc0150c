#include "qblocks/tilings.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qblocks {

DyckTile::DyckTile(int x_, int xp_, std::vector<int> profile_)
    : x(x_), xp(xp_), h(profile_.empty() ? 0 : profile_.front()), profile(std::move(profile_)) {
  if (x < 1 || xp < x) throw std::invalid_argument("Dyck tile extent must satisfy 0 < x <= x'");
  if (static_cast<int>(profile.size()) != xp - x + 1) {
    throw std::invalid_argument("Dyck tile profile length must equal x' - x + 1");
  }
  if (h < 1) throw std::invalid_argument("Dyck tile height must be positive");
  if (profile.back() != h) throw std::invalid_argument("Dyck tile profile must end at its height");
  for (std::size_t i = 1; i < profile.size(); ++i) {
    if (std::abs(profile[i] - profile[i - 1]) != 1) {
      throw std::invalid_argument("Dyck tile profile steps must be +1 or -1");
    }
    if (profile[i] < h) throw std::invalid_argument("Dyck tile profile drops below its height");
  }
  if ((x + h) % 2 == 0) throw std::invalid_argument("Dyck tile cell (x, h) has the wrong parity");
}

std::vector<Cell> DyckTile::cells() const {
  std::vector<Cell> out;
  out.reserve(profile.size());
  for (int j = x; j <= xp; ++j) out.push_back({j, level_at(j)});
  return out;
}

bool tile_covers(const DyckTile& t1, const DyckTile& t2) {
  const int lo = std::max(t1.x, t2.x);
  const int hi = std::min(t1.xp, t2.xp);
  for (int j = lo; j <= hi; ++j) {
    if (t2.level_at(j) > t1.level_at(j)) return true;
  }
  return false;
}

SkewShape::SkewShape(DyckPath low, DyckPath high) : low_(std::move(low)), high_(std::move(high)) {
  if (!path_leq(low_, high_)) throw std::invalid_argument("skew shape requires low <= high pointwise");
  for (int j = 1; j < low_.steps_count(); ++j) {
    for (int m = low_[j] + 1; m < high_[j]; m += 2) cells_.push_back({j, m});
  }
}

bool SkewShape::contains(const Cell& c) const {
  if (c.j < 1 || c.j >= low_.steps_count()) return false;
  return low_[c.j] < c.m && c.m < high_[c.j] && (c.m - low_[c.j]) % 2 == 1;
}

bool is_valid_tiling(const Tiling& t) {
  if (t.low.steps_count() != t.high.steps_count() || !path_leq(t.low, t.high)) return false;
  const SkewShape shape(t.low, t.high);
  std::vector<Cell> covered;
  for (const auto& tile : t.tiles) {
    try {
      DyckTile check(tile.x, tile.xp, tile.profile);
      if (check.h != tile.h) return false;
    } catch (const std::invalid_argument&) {
      return false;
    }
    for (const auto& c : tile.cells()) covered.push_back(c);
  }
  std::sort(covered.begin(), covered.end());
  if (std::adjacent_find(covered.begin(), covered.end()) != covered.end()) return false;
  return covered == shape.cells();
}

bool nested_pair(const DyckTile& a, const DyckTile& b) {
  // Shadows are the open intervals (x - 1, xp + 1).
  if (b.x >= a.xp + 2 || a.x >= b.xp + 2) return true;
  const bool a_in_b = b.x <= a.x && a.xp <= b.xp;
  const bool b_in_a = a.x <= b.x && b.xp <= a.xp;
  if (a_in_b && b_in_a) return tile_covers(a, b) || tile_covers(b, a);
  if (a_in_b) return tile_covers(a, b);
  if (b_in_a) return tile_covers(b, a);
  return false;
}

bool cover_inclusive_pair(const DyckTile& a, const DyckTile& b) {
  if (a.xp < b.x || b.xp < a.x) return true;
  if (tile_covers(a, b) && !(a.x <= b.x && b.xp <= a.xp)) return false;
  if (tile_covers(b, a) && !(b.x <= a.x && a.xp <= b.xp)) return false;
  return true;
}

namespace {

bool all_pairs(const Tiling& t, bool (*pred)(const DyckTile&, const DyckTile&)) {
  for (std::size_t i = 0; i < t.tiles.size(); ++i) {
    for (std::size_t k = i + 1; k < t.tiles.size(); ++k) {
      if (!pred(t.tiles[i], t.tiles[k])) return false;
    }
  }
  return true;
}

class Backtracker {
 public:
  Backtracker(const SkewShape& shape, const TilePairPredicate& keep)
      : shape_(shape), keep_(keep), levels_(shape.low().semilength() + 2) {
    const int cols = shape.low().steps_count() + 1;
    in_shape_.assign(static_cast<std::size_t>(cols * levels_), 0);
    used_.assign(in_shape_.size(), 0);
    for (const auto& c : shape.cells()) in_shape_[index(c.j, c.m)] = 1;
  }

  std::vector<Tiling> run() {
    recurse(0);
    return std::move(out_);
  }

 private:
  std::size_t index(int j, int m) const { return static_cast<std::size_t>(j * levels_ + m); }

  bool free_cell(int j, int m) const {
    if (j < 1 || j >= shape_.low().steps_count() || m < 0 || m >= levels_) return false;
    const auto i = index(j, m);
    return in_shape_[i] && !used_[i];
  }

  void mark(const std::vector<int>& profile, int x, char v) {
    for (std::size_t i = 0; i < profile.size(); ++i) used_[index(x + static_cast<int>(i), profile[i])] = v;
  }

  void recurse(std::size_t from) {
    const auto& cells = shape_.cells();
    while (from < cells.size() && used_[index(cells[from].j, cells[from].m)]) ++from;
    if (from == cells.size()) {
      out_.push_back(Tiling{shape_.low(), shape_.high(), current_});
      return;
    }
    const Cell start = cells[from];
    std::vector<int> profile{start.m};
    extend(profile, start, from);
  }

  // Grow the profile one column at a time; every return to the starting
  // level closes a candidate tile.
  void extend(std::vector<int>& profile, const Cell& start, std::size_t from) {
    const int h = start.m;
    if (profile.back() == h) try_tile(profile, start, from);
    const int next_j = start.j + static_cast<int>(profile.size());
    for (int step : {-1, +1}) {
      const int m = profile.back() + step;
      if (m < h || !free_cell(next_j, m)) continue;
      profile.push_back(m);
      extend(profile, start, from);
      profile.pop_back();
    }
  }

  void try_tile(const std::vector<int>& profile, const Cell& start, std::size_t from) {
    DyckTile tile(start.j, start.j + static_cast<int>(profile.size()) - 1, profile);
    if (keep_) {
      for (const auto& other : current_) {
        if (!keep_(other, tile)) return;
      }
    }
    mark(profile, start.j, 1);
    current_.push_back(std::move(tile));
    recurse(from + 1);
    current_.pop_back();
    mark(profile, start.j, 0);
  }

  const SkewShape& shape_;
  const TilePairPredicate& keep_;
  int levels_;
  std::vector<char> in_shape_;
  std::vector<char> used_;
  std::vector<DyckTile> current_;
  std::vector<Tiling> out_;
};

}  // namespace

bool is_nested(const Tiling& t) { return all_pairs(t, nested_pair); }

bool is_cover_inclusive(const Tiling& t) { return all_pairs(t, cover_inclusive_pair); }

std::vector<Tiling> enumerate_tilings(const DyckPath& low, const DyckPath& high, const TilePairPredicate& keep) {
  if (low.steps_count() != high.steps_count()) throw std::invalid_argument("paths differ in length");
  if (!path_leq(low, high)) return {};
  const SkewShape shape(low, high);
  return Backtracker(shape, keep).run();
}

std::optional<Tiling> nested_tiling(const DyckPath& low, const DyckPath& high) {
  auto found = enumerate_tilings(low, high, nested_pair);
  if (found.empty()) return std::nullopt;
  if (found.size() > 1) {
    throw std::logic_error("more than one nested tiling of " + low.steps() + " / " + high.steps());
  }
  return std::move(found.front());
}

std::vector<Tiling> enumerate_cover_inclusive(const DyckPath& low, const DyckPath& high) {
  return enumerate_tilings(low, high, cover_inclusive_pair);
}

}  // namespace qblocks
