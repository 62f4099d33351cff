#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "tactile/decode.hpp"
#include "test_support.hpp"

namespace tactile {
namespace {

Element polyline_element(PrimitiveKind kind, std::vector<Point> pts, double size = 2.0) {
  Element e;
  e.kind = kind;
  e.size = size;
  e.center = pts.front();
  e.geometry = Polyline{std::move(pts)};
  return e;
}

Element dot_element(Point c, double d) {
  Element e;
  e.kind = PrimitiveKind::dot;
  e.center = c;
  e.size = d;
  e.geometry = Circle{c, d};
  return e;
}

std::vector<Point> sinusoid(double amplitude, double wavelength, int periods, int samples_per_period) {
  std::vector<Point> pts;
  const int n = periods * samples_per_period;
  for (int k = 0; k <= n; ++k) {
    const double x = wavelength * periods * k / n;
    pts.push_back({x, amplitude * std::sin(2 * std::numbers::pi * x / wavelength)});
  }
  return pts;
}

// Oracle: sign changes of the second finite difference of y, for polylines
// sampled uniformly in x.
int second_difference_sign_changes(const std::vector<Point>& pts) {
  int changes = 0;
  int last = 0;
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    const double d2 = pts[i + 1].y - 2 * pts[i].y + pts[i - 1].y;
    if (std::abs(d2) < 1e-12) continue;
    const int s = d2 > 0 ? 1 : -1;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

TEST(ClassifyTest, Examples) {
  EXPECT_EQ(classify_element(dot_element({1, 2}, 3.0)), PrimitiveKind::dot);
  EXPECT_EQ(classify_element(polyline_element(PrimitiveKind::straight_line, {{0, 0}, {10, 3}})),
            PrimitiveKind::straight_line);
  const auto wave = sinusoid(2.0, 8.0, 3, 32);
  const int oracle = second_difference_sign_changes(wave);
  EXPECT_GE(oracle, 2);
  EXPECT_EQ(curvature_sign_changes(wave), oracle);
  EXPECT_EQ(classify_element(polyline_element(PrimitiveKind::wavy_line, wave)), PrimitiveKind::wavy_line);
}

TEST(ClassifyTest, PolygonalCircleIsDot) {
  std::vector<Point> ring;
  for (int k = 0; k <= 24; ++k) ring.push_back(rotate({1.5, 0}, 15.0 * k) + Point{5, 5});
  ring.back() = ring.front();
  EXPECT_EQ(classify_element(polyline_element(PrimitiveKind::dot, ring)), PrimitiveKind::dot);
}

TEST(ClassifyTest, Unclassifiable) {
  // A single arc: curved but never changes turning direction.
  std::vector<Point> arc;
  for (int k = 0; k <= 20; ++k) arc.push_back(rotate({10, 0}, 9.0 * k));
  const auto code = [](const Element& e) {
    try {
      classify_element(e);
    } catch (const Error& err) {
      return err.code();
    }
    return ErrorCode::invalid_input;
  };
  EXPECT_EQ(code(polyline_element(PrimitiveKind::wavy_line, arc)), ErrorCode::unclassifiable);
  EXPECT_EQ(code(polyline_element(PrimitiveKind::straight_line, {{1, 1}})), ErrorCode::unclassifiable);
  EXPECT_EQ(code(polyline_element(PrimitiveKind::straight_line, {{1, 1}, {1, 1}})), ErrorCode::unclassifiable);
  std::vector<Point> triangle = {{0, 0}, {3, 0}, {3, 1}, {0, 0}};
  EXPECT_EQ(code(polyline_element(PrimitiveKind::dot, triangle)), ErrorCode::unclassifiable);
}

TEST(ClassifyTest, RotationInvariantOnSynthesizedElements) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> angle(0.0, 360.0);
  for (Hue h : kAllHues) {
    const PatternSpec spec = synthesize_swatch(mix_of(h), RectRegion{0, 0, 40, 40});
    for (const Element& e : spec.elements) {
      const PrimitiveKind k = classify_element(e);
      EXPECT_EQ(k, e.kind);
      for (int i = 0; i < 16; ++i) EXPECT_EQ(classify_element(testing::rotated(e, 22.5 * i)), k);
      for (int i = 0; i < 8; ++i) EXPECT_EQ(classify_element(testing::rotated(e, angle(rng), {3, -7})), k);
    }
  }
}

TEST(DecodeTest, RoundTripAllHues) {
  for (Hue h : kAllHues) {
    const PatternSpec spec = synthesize_swatch(mix_of(h), RectRegion{0, 0, 40, 40});
    const DecodedMix d = decode_elements(spec.elements, spec.scale);
    EXPECT_EQ(d.hue, h);
    const RYBMix m = mix_of(h);
    EXPECT_NEAR(d.mix.r, m.r, 0.02);
    EXPECT_NEAR(d.mix.y, m.y, 0.02);
    EXPECT_NEAR(d.mix.b, m.b, 0.02);
  }
}

TEST(DecodeTest, OrangeAndBluePurple) {
  const PatternSpec orange = synthesize_swatch(mix_of(Hue::orange), RectRegion{0, 0, 40, 40});
  const DecodedMix d = decode_elements(orange.elements, orange.scale);
  EXPECT_DOUBLE_EQ(d.mix.y, 0.5);
  EXPECT_DOUBLE_EQ(d.mix.r, 0.5);
  EXPECT_EQ(d.hue, Hue::orange);

  const PatternSpec bp = synthesize_swatch(mix_of(Hue::blue_purple), RectRegion{0, 0, 40, 40});
  const DecodedMix e = decode_elements(bp.elements, bp.scale);
  EXPECT_DOUBLE_EQ(e.mix.r, 0.25);
  EXPECT_DOUBLE_EQ(e.mix.b, 0.75);
  EXPECT_EQ(e.hue, Hue::blue_purple);
  EXPECT_DOUBLE_EQ(e.mean_size[slot(PrimitiveKind::straight_line)], 1.5);
  EXPECT_DOUBLE_EQ(e.mean_size[slot(PrimitiveKind::wavy_line)], 2.5);
}

TEST(DecodeTest, TooFewElements) {
  const std::vector<Element> two = {dot_element({0, 0}, 3.0), dot_element({10, 0}, 3.0)};
  try {
    decode_elements(two, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::too_few_elements);
  }
  EXPECT_THROW(decode_elements(std::vector<Element>{}, {}), Error);
}

TEST(DecodeTest, AchromaticPropagates) {
  // Equal-fraction dots, lines and waves decode to a grey mix.
  std::vector<Element> es;
  for (int i = 0; i < 3; ++i) {
    es.push_back(dot_element({10.0 * i, 0}, 2.75));
    es.push_back(polyline_element(PrimitiveKind::straight_line, {{10.0 * i, 10}, {10.0 * i + 5, 10}}, 2.0));
    es.push_back(polyline_element(PrimitiveKind::wavy_line, sinusoid(2, 6, 2, 16), 2.0));
  }
  try {
    decode_elements(es, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::achromatic_mix);
  }
}

TEST(DecodeTest, IgnoresOrderAndPosition) {
  std::mt19937_64 rng(5);
  const PatternSpec spec = synthesize_swatch(mix_of(Hue::yellow_green), RectRegion{0, 0, 40, 40});
  const DecodedMix base = decode_elements(spec.elements, spec.scale);
  auto shuffled = spec.elements;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  for (Element& e : shuffled) e = testing::translated(e, {123.4, -56.7});
  const DecodedMix moved = decode_elements(shuffled, spec.scale);
  EXPECT_EQ(moved.hue, base.hue);
  EXPECT_EQ(moved.mix, base.mix);
  EXPECT_EQ(moved.count, base.count);
}

TEST(ValidateTest, SynthesisOutputPasses) {
  for (Hue h : kAllHues) {
    const PatternSpec spec = synthesize_swatch(mix_of(h), SectorRegion{{0, 0}, 40, 90, 0, 30, 1.0});
    EXPECT_TRUE(validate_legibility(spec, spec.constraints).pass()) << name_of(h);
  }
}

PatternSpec hand_built(std::vector<Element> elements, double period = 6.0) {
  PatternSpec spec;
  spec.region = RectRegion{0, 0, 40, 40};
  spec.mix = mix_of(Hue::yellow);
  spec.layers = {Layer{PrimitiveKind::dot, 3.0, period, {}, 0.0}};
  spec.elements = std::move(elements);
  return spec;
}

TEST(ValidateTest, GapViolation) {
  // Dots 3 mm wide with centres 4 mm apart leave a 1 mm gap.
  const PatternSpec spec = hand_built({dot_element({10, 10}, 3.0), dot_element({14, 10}, 3.0)});
  const LegibilityReport r = validate_legibility(spec, {});
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].kind, ViolationKind::gap);
  EXPECT_NEAR(r.violations[0].measured, 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(r.violations[0].limit, 2.0);
  EXPECT_NEAR(r.violations[0].location.x, 12.0, 1e-12);
  EXPECT_FALSE(r.pass());
}

TEST(ValidateTest, DiameterViolation) {
  const PatternSpec spec = hand_built({dot_element({10, 10}, 1.0), dot_element({20, 10}, 3.0)});
  const LegibilityReport r = validate_legibility(spec, {});
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].kind, ViolationKind::diameter);
  EXPECT_DOUBLE_EQ(r.violations[0].measured, 1.0);
}

TEST(ValidateTest, WidthAndPeriodViolations) {
  PatternSpec spec = hand_built({polyline_element(PrimitiveKind::straight_line, {{0, 0}, {5, 0}}, 0.5)}, 4.0);
  const LegibilityReport r = validate_legibility(spec, {});
  ASSERT_EQ(r.violations.size(), 2u);
  EXPECT_EQ(r.violations[0].kind, ViolationKind::width);
  EXPECT_EQ(r.violations[1].kind, ViolationKind::period);
}

TEST(ValidateTest, LineToLineGap) {
  // Parallel 2 mm strokes 3.5 mm apart centre to centre: 1.5 mm gap.
  const PatternSpec spec = hand_built({polyline_element(PrimitiveKind::straight_line, {{0, 0}, {10, 0}}, 2.0),
                                       polyline_element(PrimitiveKind::straight_line, {{0, 3.5}, {10, 3.5}}, 2.0)});
  const LegibilityReport r = validate_legibility(spec, {});
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_NEAR(r.violations[0].measured, 1.5, 1e-12);
}

}  // namespace
}  // namespace tactile
