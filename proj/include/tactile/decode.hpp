#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tactile/color_wheel.hpp"
#include "tactile/error.hpp"
#include "tactile/geometry.hpp"
#include "tactile/pattern.hpp"

namespace tactile {

inline constexpr double kStraightnessRatio = 0.1;
inline constexpr int kWavyMinSignChanges = 2;
inline constexpr double kCircleRoundness = 0.05;

/// Classifies from the element's geometry alone. Every quantity used here
/// (radii, chord deviation, turning signs) is unchanged by rotation and
/// translation, so a pattern reads the same from any direction.
///
///   dot           closed circular geometry
///   wavy_line     open polyline with >= 2 curvature sign changes
///   straight_line otherwise, if within 0.1 * chord of its chord
inline PrimitiveKind classify_element(const Element& element) {
  if (const auto* c = std::get_if<Circle>(&element.geometry)) {
    if (c->diameter > 0.0) return PrimitiveKind::dot;
    throw Error(ErrorCode::unclassifiable, "circle with non-positive diameter");
  }
  const auto& pts = std::get<Polyline>(element.geometry).points;
  if (pts.size() < 2) throw Error(ErrorCode::unclassifiable, "polyline with fewer than two points");
  const double chord = distance(pts.front(), pts.back());
  const double extent = polyline_length(pts);
  if (extent <= 0.0) throw Error(ErrorCode::unclassifiable, "zero-length polyline");

  // Closed ring: a polygonal circle approximation.
  if (chord <= 1e-9 * extent) {
    if (pts.size() >= 4) {
      Point centroid;
      for (std::size_t i = 0; i + 1 < pts.size(); ++i) centroid = centroid + pts[i];
      centroid = centroid * (1.0 / double(pts.size() - 1));
      double lo = INFINITY;
      double hi = 0.0;
      for (Point p : pts) {
        lo = std::min(lo, distance(p, centroid));
        hi = std::max(hi, distance(p, centroid));
      }
      if (lo > 0.0 && (hi - lo) <= kCircleRoundness * hi) return PrimitiveKind::dot;
    }
    throw Error(ErrorCode::unclassifiable, "closed polyline that is not circular");
  }
  if (curvature_sign_changes(pts) >= kWavyMinSignChanges) return PrimitiveKind::wavy_line;
  if (max_chord_deviation(pts) < kStraightnessRatio * chord) return PrimitiveKind::straight_line;
  throw Error(ErrorCode::unclassifiable, "curved polyline without alternating curvature");
}

struct DecodedMix {
  RYBMix mix;
  Hue hue = Hue::yellow;
  std::array<double, 3> mean_size{};      // indexed by PrimitiveKind
  std::array<std::size_t, 3> count{};     // indexed by PrimitiveKind
};

inline constexpr std::size_t kMinElementsPerKind = 3;

/// Recovers the mix from element sizes by inverting the linear size map per
/// kind, then renormalizing over the kinds present.
inline DecodedMix decode_elements(std::span<const Element> elements, const SizeScale& scale) {
  DecodedMix out;
  std::array<double, 3> total{};
  for (const Element& e : elements) {
    const PrimitiveKind kind = classify_element(e);
    total[slot(kind)] += e.size;
    ++out.count[slot(kind)];
  }
  std::array<double, 3> fraction{};
  double sum = 0.0;
  for (PrimitiveKind kind : kAllKinds) {
    const std::size_t n = out.count[slot(kind)];
    if (n == 0) continue;
    if (n < kMinElementsPerKind) {
      throw Error(ErrorCode::too_few_elements, std::to_string(n) + " " + std::string(name_of(kind)) +
                                                   " element(s); at least 3 are needed");
    }
    out.mean_size[slot(kind)] = total[slot(kind)] / double(n);
    fraction[slot(kind)] = std::clamp(fraction_for_size(kind, out.mean_size[slot(kind)], scale), 0.0, 1.0);
    sum += fraction[slot(kind)];
  }
  if (elements.empty()) throw Error(ErrorCode::too_few_elements, "no elements");
  if (sum <= 0.0) {
    // Every present kind sits at its floor; treat them as equal shares.
    std::size_t present = 0;
    for (PrimitiveKind kind : kAllKinds) present += out.count[slot(kind)] > 0;
    for (PrimitiveKind kind : kAllKinds) fraction[slot(kind)] = out.count[slot(kind)] > 0 ? 1.0 : 0.0;
    sum = double(present);
  }
  out.mix.y = fraction[slot(PrimitiveKind::dot)] / sum;
  out.mix.r = fraction[slot(PrimitiveKind::straight_line)] / sum;
  out.mix.b = fraction[slot(PrimitiveKind::wavy_line)] / sum;
  out.hue = hue_of_mix(out.mix);
  return out;
}

enum class ViolationKind { width, diameter, gap, period };

constexpr std::string_view name_of(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::width: return "width";
    case ViolationKind::diameter: return "diameter";
    case ViolationKind::gap: return "gap";
    case ViolationKind::period: return "period";
  }
  return "?";
}

struct Violation {
  ViolationKind kind = ViolationKind::gap;
  Point location;
  double measured = 0.0;
  double limit = 0.0;
};

struct LegibilityReport {
  std::vector<Violation> violations;

  bool pass() const { return violations.empty(); }
};

// Stored geometry sits on a 1 um grid, which can shave up to ~1.5 um off a
// gap that was exact before quantization.
inline constexpr double kGapTolerance = 2e-3;

namespace detail {

inline std::vector<Point> centerline_of(const Element& e) {
  if (const auto* c = std::get_if<Circle>(&e.geometry)) return {c->center};
  return std::get<Polyline>(e.geometry).points;
}

inline Box box_of(std::span<const Point> pts) {
  Box b = Box::around(pts.front());
  for (Point p : pts) b.expand(p);
  return b;
}

inline Point closest_midpoint(std::span<const Point> a, std::span<const Point> b) {
  double best = INFINITY;
  Point where = a.front();
  for (Point p : a) {
    for (Point q : b) {
      const double d = distance(p, q);
      if (d < best) {
        best = d;
        where = (p + q) * 0.5;
      }
    }
  }
  return where;
}

}  // namespace detail

/// Checks feature sizes, every pairwise clearance, and layer periods against
/// the constraints. Clearance is brute force over the stored centrelines.
inline LegibilityReport validate_legibility(const PatternSpec& spec, const LegibilityConstraints& c) {
  LegibilityReport report;
  for (const Element& e : spec.elements) {
    if (std::holds_alternative<Circle>(e.geometry)) {
      if (e.size < c.min_dot_diameter) {
        report.violations.push_back({ViolationKind::diameter, e.center, e.size, c.min_dot_diameter});
      }
    } else if (e.size < c.min_line_width) {
      report.violations.push_back({ViolationKind::width, e.center, e.size, c.min_line_width});
    }
  }

  std::vector<std::vector<Point>> lines;
  std::vector<Box> boxes;
  lines.reserve(spec.elements.size());
  for (const Element& e : spec.elements) {
    lines.push_back(detail::centerline_of(e));
    boxes.push_back(detail::box_of(lines.back()));
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const double halves = (spec.elements[i].size + spec.elements[j].size) / 2.0;
      if (box_gap(boxes[i], boxes[j]) - halves >= c.min_gap) continue;
      const double gap = polyline_distance(lines[i], lines[j]) - halves;
      if (gap < c.min_gap - kGapTolerance) {
        report.violations.push_back(
            {ViolationKind::gap, detail::closest_midpoint(lines[i], lines[j]), gap, c.min_gap});
      }
    }
  }

  for (const Layer& layer : spec.layers) {
    if (layer.period < c.min_period) {
      report.violations.push_back({ViolationKind::period, layer.phase, layer.period, c.min_period});
    }
  }
  return report;
}

}  // namespace tactile
