#include <gtest/gtest.h>

#include <cmath>

#include "tactile/geometry.hpp"

namespace tactile {
namespace {

TEST(GeometryTest, SegmentDistances) {
  EXPECT_DOUBLE_EQ(point_segment_distance({0, 1}, {-1, 0}, {1, 0}), 1.0);
  EXPECT_DOUBLE_EQ(point_segment_distance({3, 4}, {0, 0}, {0, 0}), 5.0);
  EXPECT_DOUBLE_EQ(segment_segment_distance({0, 0}, {1, 0}, {0, 2}, {1, 2}), 2.0);
  EXPECT_DOUBLE_EQ(segment_segment_distance({0, -1}, {0, 1}, {-1, 0}, {1, 0}), 0.0);
}

TEST(GeometryTest, CurvatureSignChanges) {
  std::vector<Point> straight = {{0, 0}, {1, 0}, {2, 0}, {3, 0}};
  EXPECT_EQ(curvature_sign_changes(straight), 0);
  std::vector<Point> zigzag = {{0, 0}, {1, 1}, {2, 0}, {3, 1}, {4, 0}};
  EXPECT_EQ(curvature_sign_changes(zigzag), 2);
}

TEST(GeometryTest, SnapIsIdempotentAndHasNoNegativeZero) {
  EXPECT_EQ(snap_um(1.23456), 1.235);
  EXPECT_EQ(snap_um(snap_um(7.0004)), snap_um(7.0004));
  EXPECT_FALSE(std::signbit(snap_um(-0.0001)));
}

TEST(RegionTest, RectClearanceExact) {
  const Region r = RectRegion{0, 0, 40, 20};
  EXPECT_DOUBLE_EQ(clearance(r, {10, 5}), 5.0);
  EXPECT_DOUBLE_EQ(clearance(r, {39, 10}), 1.0);
  EXPECT_LT(clearance(r, {-1, 10}), 0.0);
  EXPECT_DOUBLE_EQ(area(r), 800.0);
}

TEST(RegionTest, SectorClearance) {
  const Region s = SectorRegion{{0, 0}, 40, 90, 75, 105, 0};
  EXPECT_NEAR(clearance(s, {0, 65}), 65 * std::sin(deg_to_rad(15.0)), 1e-9);
  EXPECT_NEAR(clearance(s, {0, 88}), 2.0, 1e-12);
  EXPECT_NEAR(clearance(s, {0, 45}), 5.0, 1e-12);
  EXPECT_LT(clearance(s, {0, 30}), 0.0);
  EXPECT_LT(clearance(s, {0, -65}), 0.0);
  EXPECT_LT(clearance(s, {40, 40}), 0.0);
  // Near the start edge (75 deg), distance to the edge line governs.
  const Point p = rotate({60, 0}, 76);
  EXPECT_NEAR(clearance(s, p), 60 * std::sin(deg_to_rad(1.0)), 1e-9);
}

TEST(RegionTest, SectorWrapsThroughZero) {
  const Region s = SectorRegion{{0, 0}, 40, 90, 345, 375, 0};
  EXPECT_GT(clearance(s, {60, 0}), 0.0);
  EXPECT_GT(clearance(s, rotate({60, 0}, 10)), 0.0);
  EXPECT_GT(clearance(s, rotate({60, 0}, -10)), 0.0);
  EXPECT_LT(clearance(s, rotate({60, 0}, 20)), 0.0);
}

TEST(RegionTest, InsetSectorOutlineSitsAtInsetDistance) {
  const SectorRegion full{{0, 0}, 40, 90, 75, 105, 0};
  const SectorRegion inset{{0, 0}, 40.5, 89.5, 75, 105, 0.5};
  for (Point p : outline(inset)) EXPECT_GE(clearance(full, p), 0.5 - 1e-9);
  EXPECT_EQ(outline(inset).size(), 2u * (kArcSegments + 1));
}

TEST(RegionTest, SectorBoundsCoverOutline) {
  const SectorRegion s{{0, 0}, 40, 90, 345, 375, 0};
  const Box b = bounds(s);
  EXPECT_DOUBLE_EQ(b.max_x, 90.0);
  for (Point p : outline(s)) {
    EXPECT_GE(p.x, b.min_x - 1e-9);
    EXPECT_LE(p.x, b.max_x + 1e-9);
    EXPECT_GE(p.y, b.min_y - 1e-9);
    EXPECT_LE(p.y, b.max_y + 1e-9);
  }
}

TEST(RegionTest, Validation) {
  EXPECT_THROW(validate_region(RectRegion{0, 0, 0, 10}), Error);
  EXPECT_THROW(validate_region(SectorRegion{{0, 0}, 50, 40, 0, 30, 0}), Error);
  EXPECT_THROW(validate_region(SectorRegion{{0, 0}, 40, 90, 0, 200, 0}), Error);
  EXPECT_NO_THROW(validate_region(SectorRegion{{0, 0}, 40, 90, 0, 30, 0.5}));
}

}  // namespace
}  // namespace tactile
