#include <gtest/gtest.h>

#include <algorithm>

#include "qblocks/tilings.hpp"
#include "test_util.hpp"

using namespace qblocks;
using qblocks::testing::P;

namespace {

bool same_tiles(std::vector<DyckTile> a, std::vector<DyckTile> b) {
  const auto key = [](const DyckTile& t) { return std::tuple(t.x, t.xp, t.profile); };
  const auto less = [&](const DyckTile& s, const DyckTile& t) { return key(s) < key(t); };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return a == b;
}

DyckTile peak(int x, int h) { return DyckTile(x, x + 2, {h, h + 1, h}); }

}  // namespace

TEST(DyckTile, Validation) {
  EXPECT_NO_THROW(DyckTile(2, 4, {1, 2, 1}));
  EXPECT_THROW(DyckTile(2, 4, {1, 2}), std::invalid_argument);
  EXPECT_THROW(DyckTile(2, 3, {1, 2}), std::invalid_argument);
  EXPECT_THROW(DyckTile(2, 4, {1, 0, 1}), std::invalid_argument);
  EXPECT_THROW(DyckTile(2, 4, {1, 2, 3}), std::invalid_argument);
  // x + h must be odd.
  EXPECT_THROW(DyckTile::single(2, 2), std::invalid_argument);
}

TEST(DyckTile, Cells) {
  const auto t = peak(2, 1);
  EXPECT_EQ(t.cells(), (std::vector<Cell>{{2, 1}, {3, 2}, {4, 1}}));
  EXPECT_EQ(t.level_at(3), 2);
  EXPECT_TRUE(t.spans(4));
  EXPECT_FALSE(t.spans(5));
}

TEST(TileCovers, Examples) {
  const auto low = DyckTile::single(2, 1);
  const auto stacked = DyckTile(2, 2, {3});
  EXPECT_TRUE(tile_covers(low, stacked));
  EXPECT_FALSE(tile_covers(stacked, low));
  const auto a = DyckTile::single(2, 1), b = DyckTile::single(4, 1);
  EXPECT_FALSE(tile_covers(a, b));
  EXPECT_FALSE(tile_covers(b, a));
  // A peak tile and a cell at its own apex level share a column but neither is strictly above.
  EXPECT_FALSE(tile_covers(peak(2, 1), DyckTile::single(3, 2)));
  EXPECT_FALSE(tile_covers(DyckTile::single(3, 2), peak(2, 1)));
}

TEST(SkewShape, Cells) {
  const SkewShape s(P("UDUDUD"), P("UUUDDD"));
  EXPECT_EQ(s.cells(), (std::vector<Cell>{{2, 1}, {3, 2}, {4, 1}}));
  EXPECT_TRUE(s.contains({3, 2}));
  EXPECT_FALSE(s.contains({3, 1}));
  EXPECT_THROW(SkewShape(P("UUDD"), P("UDUD")), std::invalid_argument);
}

TEST(NestedTiling, Examples) {
  const auto same = nested_tiling(P("UDUD"), P("UDUD"));
  ASSERT_TRUE(same);
  EXPECT_TRUE(same->tiles.empty());

  const auto one = nested_tiling(P("UDUD"), P("UUDD"));
  ASSERT_TRUE(one);
  ASSERT_EQ(one->tiles.size(), 1u);
  EXPECT_EQ(one->tiles[0], DyckTile::single(2, 1));

  EXPECT_FALSE(nested_tiling(P("UDUUDD"), P("UUUDDD")));
  EXPECT_FALSE(nested_tiling(P("UUDD"), P("UDUD")));
}

TEST(CoverInclusive, Examples) {
  const auto one = enumerate_cover_inclusive(P("UDUD"), P("UUDD"));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(same_tiles(one[0].tiles, {DyckTile::single(2, 1)}));

  const auto stair = enumerate_cover_inclusive(P("UDUUDD"), P("UUUDDD"));
  ASSERT_EQ(stair.size(), 1u);
  EXPECT_TRUE(same_tiles(stair[0].tiles, {DyckTile::single(2, 1), DyckTile::single(3, 2)}));

  const auto two = enumerate_cover_inclusive(P("UDUDUD"), P("UUUDDD"));
  ASSERT_EQ(two.size(), 2u);
  const bool singles_first = two[0].tiles.size() == 3;
  const auto& singles = two[singles_first ? 0 : 1];
  const auto& big = two[singles_first ? 1 : 0];
  EXPECT_TRUE(same_tiles(singles.tiles, {DyckTile::single(2, 1), DyckTile::single(3, 2), DyckTile::single(4, 1)}));
  EXPECT_TRUE(same_tiles(big.tiles, {peak(2, 1)}));
}

TEST(CoverInclusive, EmptyWhenNotComparable) {
  EXPECT_TRUE(enumerate_cover_inclusive(P("UUDD"), P("UDUD")).empty());
}

TEST(Predicates, NestedPairCases) {
  // Disjoint shadows.
  EXPECT_TRUE(nested_pair(DyckTile::single(2, 1), DyckTile::single(4, 1)));
  // Overlapping, non-nested shadows.
  EXPECT_FALSE(nested_pair(DyckTile::single(2, 1), DyckTile::single(3, 2)));
  // Larger shadow must cover the smaller.
  EXPECT_TRUE(nested_pair(peak(2, 3), DyckTile::single(3, 2)));
  EXPECT_FALSE(nested_pair(peak(2, 1), DyckTile::single(3, 4)));
  // Equal shadows: either may cover.
  EXPECT_TRUE(nested_pair(DyckTile::single(3, 2), DyckTile::single(3, 4)));
}

TEST(Predicates, CoverInclusiveCases) {
  EXPECT_TRUE(cover_inclusive_pair(DyckTile::single(2, 1), DyckTile::single(3, 2)));
  // The covering peak extends beyond the tile it covers.
  EXPECT_FALSE(cover_inclusive_pair(DyckTile::single(3, 2), peak(2, 3)));
}

TEST(Enumeration, AllTilingsValid) {
  for (int n = 0; n <= 4; ++n) {
    const auto paths = enumerate_paths(n);
    for (const auto& a : paths) {
      for (const auto& b : paths) {
        const auto all = enumerate_tilings(a, b);
        EXPECT_EQ(all.empty(), !path_leq(a, b));
        int nested = 0;
        for (const auto& t : all) {
          EXPECT_TRUE(is_valid_tiling(t));
          nested += is_nested(t);
        }
        EXPECT_LE(nested, 1) << a.steps() << " / " << b.steps();
        EXPECT_EQ(nested == 1, nested_tiling(a, b).has_value());
      }
    }
  }
}

TEST(Enumeration, SingleCellTilingsCounted) {
  // The staircase UDUDUD / UUUDDD has three cells: all singles, or one peak tile.
  EXPECT_EQ(enumerate_tilings(P("UDUDUD"), P("UUUDDD")).size(), 2u);
}

TEST(Validity, DetectsBadTilings) {
  Tiling t{P("UDUD"), P("UUDD"), {}};
  EXPECT_FALSE(is_valid_tiling(t));
  t.tiles.push_back(DyckTile::single(2, 1));
  EXPECT_TRUE(is_valid_tiling(t));
  t.tiles.push_back(DyckTile::single(2, 1));
  EXPECT_FALSE(is_valid_tiling(t));
}
