#include <gtest/gtest.h>

#include <cmath>

#include "tactile/decode.hpp"
#include "tactile/layout.hpp"

namespace tactile {
namespace {

class WheelTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    wheel_ = new WheelLayout(build_wheel(40, 90));
    kit_ = new Kit(build_kit(*wheel_));
  }
  static void TearDownTestSuite() {
    delete kit_;
    delete wheel_;
  }
  static WheelLayout* wheel_;
  static Kit* kit_;
};

WheelLayout* WheelTest::wheel_ = nullptr;
Kit* WheelTest::kit_ = nullptr;

TEST_F(WheelTest, SectorsAtClockPositions) {
  ASSERT_EQ(wheel_->sectors.size(), 12u);
  EXPECT_DOUBLE_EQ(wheel_->sectors[0].center_deg(), 90.0);
  EXPECT_DOUBLE_EQ(wheel_->sectors[4].center_deg(), 330.0);
  EXPECT_DOUBLE_EQ(wheel_->sectors[8].center_deg(), 210.0);
  for (const WheelSector& s : wheel_->sectors) {
    EXPECT_DOUBLE_EQ(s.center_deg(), clock_position(s.hue).angle_deg);
    EXPECT_DOUBLE_EQ(s.end_deg - s.start_deg, 30.0);
  }
}

TEST_F(WheelTest, HueOrderRunsClockwise) {
  for (int i = 0; i < 12; ++i) {
    EXPECT_EQ(index_of(wheel_->sectors[static_cast<std::size_t>(i)].hue), i);
    const double here = wheel_->sectors[static_cast<std::size_t>(i)].start_deg;
    const double next = wheel_->sectors[static_cast<std::size_t>((i + 1) % 12)].end_deg;
    EXPECT_NEAR(wrap_deg(next), here, 1e-9);  // next sector ends where this one starts
  }
}

TEST_F(WheelTest, SpansPartitionTheCircle) {
  // Sample the circle finely: every angle falls in exactly one sector.
  for (int k = 0; k < 3600; ++k) {
    const double a = k * 0.1 + 0.05;
    int hits = 0;
    for (const WheelSector& s : wheel_->sectors) hits += wrap_deg(a - s.start_deg) < 30.0;
    EXPECT_EQ(hits, 1) << a;
  }
}

TEST_F(WheelTest, EverySectorPatternIsLegibleAndDecodes) {
  for (const WheelSector& s : wheel_->sectors) {
    EXPECT_TRUE(validate_legibility(s.pattern, s.pattern.constraints).pass()) << name_of(s.hue);
    EXPECT_EQ(decode_elements(s.pattern.elements, s.pattern.scale).hue, s.hue);
  }
}

TEST_F(WheelTest, NeighbouringSectorsKeepTheGap) {
  for (std::size_t i = 0; i < 12; ++i) {
    const auto& a = wheel_->sectors[i].pattern;
    const auto& b = wheel_->sectors[(i + 1) % 12].pattern;
    PatternSpec both = a;
    both.layers.clear();
    both.elements.insert(both.elements.end(), b.elements.begin(), b.elements.end());
    EXPECT_TRUE(validate_legibility(both, a.constraints).pass()) << i;
  }
}

TEST_F(WheelTest, KitCardinality) {
  EXPECT_EQ(kit_->pieces.size(), 12u);
  EXPECT_EQ(kit_->tray.recesses.size(), 12u);
  for (std::size_t i = 0; i < 12; ++i) {
    EXPECT_EQ(kit_->pieces[i].hue, kit_->tray.recesses[i].hue);
    EXPECT_EQ(kit_->pieces[i].label, name_of(kit_->pieces[i].hue));
  }
}

TEST_F(WheelTest, PieceOutlineIsInsetIntoItsSector) {
  for (std::size_t i = 0; i < 12; ++i) {
    const SectorRegion sector = wheel_->sector_region(wheel_->sectors[i]);
    for (Point p : kit_->pieces[i].outline) EXPECT_GE(clearance(sector, p), kAssemblyClearance - 1e-9);
    EXPECT_EQ(kit_->pieces[i].pattern.region, Region{kit_->pieces[i].region});
  }
}

TEST_F(WheelTest, PiecesAreLegibleAndDecode) {
  for (const KitPiece& piece : kit_->pieces) {
    EXPECT_TRUE(validate_legibility(piece.pattern, piece.pattern.constraints).pass()) << piece.label;
    EXPECT_EQ(decode_elements(piece.pattern.elements, piece.pattern.scale).hue, piece.hue);
  }
}

// Rotate each recess back to recess 0's frame and compare vertex by vertex.
TEST_F(WheelTest, RecessesCongruentUpToRotation) {
  const auto& ref = kit_->tray.recesses[0];
  for (const Recess& r : kit_->tray.recesses) {
    EXPECT_NEAR(wrap_deg(r.center_deg), clock_position(r.hue).angle_deg, 1e-9);
    const double turn = ref.center_deg - r.center_deg;
    ASSERT_EQ(r.outline.size(), ref.outline.size());
    double worst = 0.0;
    for (std::size_t k = 0; k < r.outline.size(); ++k) {
      worst = std::max(worst, distance(rotate(r.outline[k], turn, kit_->tray.center), ref.outline[k]));
    }
    EXPECT_LT(worst, 0.01) << name_of(r.hue);
  }
}

TEST(BuildWheelTest, RingTooThin) {
  try {
    build_wheel(40, 41);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ring_too_thin);
  }
  EXPECT_THROW(build_wheel(0, 50), Error);
}

TEST(BuildWheelTest, Deterministic) {
  const WheelLayout a = build_wheel(35, 80);
  const WheelLayout b = build_wheel(35, 80);
  for (std::size_t i = 0; i < 12; ++i) EXPECT_EQ(a.sectors[i].pattern, b.sectors[i].pattern);
}

}  // namespace
}  // namespace tactile
