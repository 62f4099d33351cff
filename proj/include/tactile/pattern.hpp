#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tactile/color_wheel.hpp"
#include "tactile/error.hpp"
#include "tactile/geometry.hpp"

namespace tactile {

enum class PrimitiveKind : std::uint8_t { dot = 0, straight_line = 1, wavy_line = 2 };

inline constexpr std::array<PrimitiveKind, 3> kAllKinds = {PrimitiveKind::dot, PrimitiveKind::straight_line,
                                                           PrimitiveKind::wavy_line};

/// Dots carry yellow, straight lines red, wavy lines blue.
constexpr Primary bound_primary(PrimitiveKind kind) {
  switch (kind) {
    case PrimitiveKind::dot: return Primary::yellow;
    case PrimitiveKind::straight_line: return Primary::red;
    case PrimitiveKind::wavy_line: return Primary::blue;
  }
  return Primary::yellow;
}

constexpr PrimitiveKind kind_for(Primary primary) {
  switch (primary) {
    case Primary::yellow: return PrimitiveKind::dot;
    case Primary::red: return PrimitiveKind::straight_line;
    case Primary::blue: return PrimitiveKind::wavy_line;
  }
  return PrimitiveKind::dot;
}

constexpr std::string_view name_of(PrimitiveKind kind) {
  switch (kind) {
    case PrimitiveKind::dot: return "dot";
    case PrimitiveKind::straight_line: return "straight_line";
    case PrimitiveKind::wavy_line: return "wavy_line";
  }
  return "?";
}

inline std::optional<PrimitiveKind> kind_from_name(std::string_view name) {
  for (PrimitiveKind k : kAllKinds) {
    if (name_of(k) == name) return k;
  }
  return std::nullopt;
}

constexpr std::size_t slot(PrimitiveKind kind) { return static_cast<std::size_t>(kind); }

struct SizeRange {
  double min_mm = 0.0;
  double max_mm = 0.0;

  friend bool operator==(const SizeRange&, const SizeRange&) = default;
};

/// Dot diameters and stroke widths span [min_mm, max_mm] as a primary's
/// fraction goes from 0 to 1.
struct SizeScale {
  SizeRange dot{1.5, 4.0};
  SizeRange straight_line{1.0, 3.0};
  SizeRange wavy_line{1.0, 3.0};

  const SizeRange& range(PrimitiveKind kind) const {
    switch (kind) {
      case PrimitiveKind::dot: return dot;
      case PrimitiveKind::straight_line: return straight_line;
      case PrimitiveKind::wavy_line: return wavy_line;
    }
    return dot;
  }

  void validate() const {
    for (PrimitiveKind k : kAllKinds) {
      const SizeRange& r = range(k);
      if (!(r.min_mm > 0.0 && r.min_mm < r.max_mm)) {
        throw Error(ErrorCode::invalid_scale, std::string(name_of(k)) + " size range needs 0 < min < max");
      }
    }
  }

  friend bool operator==(const SizeScale&, const SizeScale&) = default;
};

/// Tactile legibility floor. All values in millimetres.
struct LegibilityConstraints {
  double min_line_width = 1.0;
  double min_dot_diameter = 1.5;
  double min_gap = 2.0;
  double min_period = 5.0;

  void validate() const {
    if (!(min_line_width > 0.0 && min_dot_diameter > 0.0 && min_gap > 0.0 && min_period > 0.0)) {
      throw Error(ErrorCode::invalid_constraints, "all legibility limits must be positive");
    }
    if (!(min_period > min_gap)) {
      throw Error(ErrorCode::invalid_constraints, "min_period must exceed min_gap");
    }
  }

  friend bool operator==(const LegibilityConstraints&, const LegibilityConstraints&) = default;
};

/// Linear size map with a legibility floor: s = s_min + f * (s_max - s_min).
inline double size_for_fraction(PrimitiveKind kind, double fraction, const SizeScale& scale) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw Error(ErrorCode::invalid_fraction, "fraction must lie in (0, 1]");
  }
  const SizeRange& r = scale.range(kind);
  return r.min_mm + fraction * (r.max_mm - r.min_mm);
}

/// Inverse of size_for_fraction, unclamped.
inline double fraction_for_size(PrimitiveKind kind, double size_mm, const SizeScale& scale) {
  const SizeRange& r = scale.range(kind);
  return (size_mm - r.min_mm) / (r.max_mm - r.min_mm);
}

struct Circle {
  Point center;
  double diameter = 0.0;

  friend bool operator==(const Circle&, const Circle&) = default;
};

/// Open centreline, stroked with round caps at the element's size.
struct Polyline {
  std::vector<Point> points;

  friend bool operator==(const Polyline&, const Polyline&) = default;
};

using Geometry = std::variant<Circle, Polyline>;

struct Element {
  PrimitiveKind kind = PrimitiveKind::dot;
  Point center;
  double orientation_deg = 0.0;
  double size = 0.0;        // dot diameter or stroke width
  double amplitude = 0.0;   // wavy only
  double wavelength = 0.0;  // wavy only
  Geometry geometry;

  friend bool operator==(const Element&, const Element&) = default;
};

struct Layer {
  PrimitiveKind kind = PrimitiveKind::dot;
  double size = 0.0;
  double period = 0.0;
  Point phase;
  double orientation_deg = 0.0;

  friend bool operator==(const Layer&, const Layer&) = default;
};

struct PatternSpec {
  Region region;
  RYBMix mix;
  Hue hue = Hue::yellow;
  SizeScale scale;
  LegibilityConstraints constraints;
  std::vector<Layer> layers;
  std::vector<Element> elements;

  friend bool operator==(const PatternSpec&, const PatternSpec&) = default;
};

inline double wave_amplitude(double stroke_width) { return 1.5 * stroke_width; }
inline double wave_length(double period) { return 2.0 * period / 3.0; }
/// Centre-to-centre dash length that leaves exactly `gap` between the round
/// caps of consecutive dashes in a row.
inline double dash_length(double period, double stroke_width, double gap) { return period - gap - stroke_width; }

inline constexpr double kPeriodStep = 0.5;
inline constexpr double kClipMargin = 1e-3;
inline constexpr int kWaveSamplesPerWavelength = 32;

namespace detail {

inline std::vector<Point> dash_centerline(const Layer& layer, double gap, Point at) {
  const double len = dash_length(layer.period, layer.size, gap);
  std::vector<Point> pts;
  if (layer.kind == PrimitiveKind::straight_line) {
    pts = {{-len / 2.0, 0.0}, {len / 2.0, 0.0}};
  } else {
    const double lambda = wave_length(layer.period);
    const double amp = wave_amplitude(layer.size);
    const int segments = std::max(16, static_cast<int>(std::ceil(len / (lambda / kWaveSamplesPerWavelength))));
    pts.reserve(static_cast<std::size_t>(segments) + 1);
    for (int k = 0; k <= segments; ++k) {
      const double x = -len / 2.0 + len * k / segments;
      pts.push_back({x, amp * std::cos(2.0 * std::numbers::pi * x / lambda)});
    }
  }
  for (Point& p : pts) p = rotate(p, layer.orientation_deg) + at;
  return pts;
}

// Bisects between an inside point and an outside point, returning a point on
// the inside of the boundary.
inline Point refine_boundary(const Region& region, Point inside, Point outside, double need) {
  for (int it = 0; it < 48; ++it) {
    const Point mid = (inside + outside) * 0.5;
    if (clearance(region, mid) >= need) {
      inside = mid;
    } else {
      outside = mid;
    }
  }
  return inside;
}

/// Splits a centreline into the runs whose stroke stays inside the region.
/// Straight centrelines are densified and their cut points refined; sampled
/// curves are cut at existing vertices.
inline std::vector<std::vector<Point>> clip_centerline(const Region& region, const std::vector<Point>& line,
                                                       double half_width, bool straight) {
  const double need = half_width + kClipMargin;
  std::vector<Point> pts;
  if (straight) {
    const double len = distance(line.front(), line.back());
    const int steps = std::max(1, static_cast<int>(std::ceil(len / 0.1)));
    for (int k = 0; k <= steps; ++k) pts.push_back(line.front() + (line.back() - line.front()) * (double(k) / steps));
  } else {
    pts = line;
  }
  std::vector<char> inside(pts.size());
  bool all_inside = true;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    inside[i] = clearance(region, pts[i]) >= need;
    all_inside = all_inside && inside[i];
  }
  if (all_inside) return {line};

  std::vector<std::vector<Point>> runs;
  std::size_t i = 0;
  while (i < pts.size()) {
    if (!inside[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < pts.size() && inside[j + 1]) ++j;
    std::vector<Point> run;
    if (straight) {
      const Point a = i > 0 ? refine_boundary(region, pts[i], pts[i - 1], need) : pts[i];
      const Point b = j + 1 < pts.size() ? refine_boundary(region, pts[j], pts[j + 1], need) : pts[j];
      run = {a, b};
    } else {
      run.assign(pts.begin() + static_cast<std::ptrdiff_t>(i), pts.begin() + static_cast<std::ptrdiff_t>(j) + 1);
    }
    runs.push_back(std::move(run));
    i = j + 1;
  }
  return runs;
}

inline Point lattice_origin(const Box& box, double period) {
  const double nx = std::floor(box.width() / period);
  const double ny = std::floor(box.height() / period);
  return {box.min_x + (box.width() - nx * period) / 2.0 + period / 2.0,
          box.min_y + (box.height() - ny * period) / 2.0 + period / 2.0};
}

inline Element make_element(const Layer& layer, Point center, Geometry geometry) {
  Element e;
  e.kind = layer.kind;
  e.center = snap_um(center);
  e.orientation_deg = layer.orientation_deg;
  e.size = layer.size;
  if (layer.kind == PrimitiveKind::wavy_line) {
    e.amplitude = snap_um(wave_amplitude(layer.size));
    e.wavelength = snap_um(wave_length(layer.period));
  }
  e.geometry = std::move(geometry);
  return e;
}

/// Centreline distance minus both half-sizes; negative means overlap.
inline double element_clearance(std::span<const Point> a, double size_a, std::span<const Point> b, double size_b) {
  return polyline_distance(a, b) - (size_a + size_b) / 2.0;
}

struct RawElement {
  PrimitiveKind kind;
  std::vector<Point> centerline;  // one point for dots
  double size;
};

inline RawElement raw_element(const Layer& layer, double gap, Point at) {
  if (layer.kind == PrimitiveKind::dot) return {layer.kind, {at}, layer.size};
  return {layer.kind, dash_centerline(layer, gap, at), layer.size};
}

/// Smallest element-to-element clearance of the unclipped, infinite lattice,
/// measured from the elements of one cell against a 5x5 neighbourhood.
inline double lattice_min_clearance(const std::vector<Layer>& layers, double gap) {
  std::vector<RawElement> centre;
  std::vector<std::pair<RawElement, bool>> patch;  // (element, is a centre element)
  for (const Layer& layer : layers) {
    for (int j = -2; j <= 2; ++j) {
      for (int i = -2; i <= 2; ++i) {
        const Point at = layer.phase + Point{i * layer.period, j * layer.period};
        RawElement e = raw_element(layer, gap, at);
        if (i == 0 && j == 0) centre.push_back(e);
        patch.emplace_back(std::move(e), i == 0 && j == 0);
      }
    }
  }
  double best = INFINITY;
  for (std::size_t c = 0; c < centre.size(); ++c) {
    std::size_t seen_centres = 0;
    for (const auto& [other, is_centre] : patch) {
      if (is_centre && seen_centres++ == c) continue;
      best = std::min(best, element_clearance(centre[c].centerline, centre[c].size, other.centerline, other.size));
    }
  }
  return best;
}

inline bool period_feasible(const std::vector<Layer>& layers, const SizeScale& scale,
                            const LegibilityConstraints& constraints) {
  for (const Layer& layer : layers) {
    if (layer.kind == PrimitiveKind::dot) continue;
    const double len = dash_length(layer.period, layer.size, constraints.min_gap);
    if (len < layer.period / 2.0 || len < scale.range(layer.kind).min_mm) return false;
    if (layer.kind == PrimitiveKind::wavy_line &&
        curvature_sign_changes(dash_centerline(layer, constraints.min_gap, {})) < 2) {
      return false;
    }
  }
  // Dash ends sit exactly min_gap apart by construction.
  return lattice_min_clearance(layers, constraints.min_gap) >= constraints.min_gap - 1e-9;
}

inline Region snapped(const Region& region) {
  if (const auto* r = std::get_if<RectRegion>(&region)) {
    return RectRegion{snap_um(r->x), snap_um(r->y), snap_um(r->width), snap_um(r->height)};
  }
  const auto& s = std::get<SectorRegion>(region);
  return SectorRegion{snap_um(s.center),     snap_um(s.inner_radius), snap_um(s.outer_radius),
                      snap_um(s.start_deg),  snap_um(s.end_deg),      snap_um(s.edge_inset)};
}

inline SizeScale snapped(const SizeScale& s) {
  return {{snap_um(s.dot.min_mm), snap_um(s.dot.max_mm)},
          {snap_um(s.straight_line.min_mm), snap_um(s.straight_line.max_mm)},
          {snap_um(s.wavy_line.min_mm), snap_um(s.wavy_line.max_mm)}};
}

inline LegibilityConstraints snapped(const LegibilityConstraints& c) {
  return {snap_um(c.min_line_width), snap_um(c.min_dot_diameter), snap_um(c.min_gap), snap_um(c.min_period)};
}

}  // namespace detail

/// Expands every layer into its clipped elements, layers in stored order
/// (yellow, red, blue), lattice rows bottom to top, columns left to right.
/// Dots that would cross the region boundary are dropped whole; line
/// fragments shorter than the kind's minimum size are dropped, as are wavy
/// fragments that no longer contain two inflections.
inline std::vector<Element> elements_of(const PatternSpec& spec) {
  std::vector<Element> out;
  const Box box = bounds(spec.region);
  const double gap = spec.constraints.min_gap;
  for (const Layer& layer : spec.layers) {
    const double p = layer.period;
    const Point origin = detail::lattice_origin(box, p) + layer.phase;
    const int i0 = static_cast<int>(std::floor((box.min_x - p - origin.x) / p));
    const int i1 = static_cast<int>(std::ceil((box.max_x + p - origin.x) / p));
    const int j0 = static_cast<int>(std::floor((box.min_y - p - origin.y) / p));
    const int j1 = static_cast<int>(std::ceil((box.max_y + p - origin.y) / p));
    const double s_min = spec.scale.range(layer.kind).min_mm;
    for (int j = j0; j <= j1; ++j) {
      for (int i = i0; i <= i1; ++i) {
        const Point at = snap_um(origin + Point{i * p, j * p});
        if (layer.kind == PrimitiveKind::dot) {
          if (clearance(spec.region, at) >= layer.size / 2.0) {
            out.push_back(detail::make_element(layer, at, Circle{at, layer.size}));
          }
          continue;
        }
        const bool straight = layer.kind == PrimitiveKind::straight_line;
        const auto line = detail::dash_centerline(layer, gap, at);
        for (auto& fragment : detail::clip_centerline(spec.region, line, layer.size / 2.0, straight)) {
          for (Point& q : fragment) q = snap_um(q);
          if (fragment.size() < 2 || polyline_length(fragment) < s_min) continue;
          if (!straight && curvature_sign_changes(fragment) < 2) continue;
          out.push_back(detail::make_element(layer, at, Polyline{std::move(fragment)}));
        }
      }
    }
  }
  return out;
}

/// Builds the tactile fill for a one- or two-primary mix. One lattice layer
/// per present primary; a second layer is shifted half a period in both axes.
/// The shared period starts at min_period and grows in 0.5 mm steps until the
/// lattice keeps min_gap everywhere, giving up past 4 * min_period.
inline PatternSpec synthesize_swatch(const RYBMix& mix, const Region& region, const SizeScale& scale = {},
                                     const LegibilityConstraints& constraints = {}) {
  require_normalized(mix);
  if (mix.nonzero_count() > 2) {
    throw Error(ErrorCode::invalid_mix, "at most two primaries can be encoded");
  }
  validate_region(region);
  scale.validate();
  constraints.validate();

  PatternSpec spec;
  spec.region = detail::snapped(region);
  spec.mix = mix;
  spec.hue = hue_of_mix(mix);
  spec.scale = detail::snapped(scale);
  spec.constraints = detail::snapped(constraints);
  spec.scale.validate();
  spec.constraints.validate();

  std::vector<Layer> layers;
  for (Primary p : {Primary::yellow, Primary::red, Primary::blue}) {
    if (mix[p] <= 0.0) continue;
    const PrimitiveKind kind = kind_for(p);
    Layer layer;
    layer.kind = kind;
    layer.size = snap_um(size_for_fraction(kind, mix[p], spec.scale));
    layers.push_back(layer);
  }

  const double p_min = spec.constraints.min_period;
  const double p_max = 4.0 * p_min;
  std::optional<double> chosen;
  for (int k = 0;; ++k) {
    const double p = snap_um(p_min + kPeriodStep * k);
    if (p > p_max + 1e-9) break;
    for (std::size_t n = 0; n < layers.size(); ++n) {
      layers[n].period = p;
      layers[n].phase = n == 0 ? Point{} : snap_um(Point{p / 2.0, p / 2.0});
    }
    if (detail::period_feasible(layers, spec.scale, spec.constraints)) {
      chosen = p;
      break;
    }
  }
  if (!chosen) {
    throw Error(ErrorCode::clearance_infeasible,
                "no lattice period up to " + std::to_string(p_max) + " mm keeps the minimum gap");
  }
  if (area(spec.region) < *chosen * *chosen) {
    throw Error(ErrorCode::region_too_small, "region is smaller than one lattice cell");
  }
  spec.layers = std::move(layers);
  spec.elements = elements_of(spec);
  for (const Layer& layer : spec.layers) {
    const bool present = std::any_of(spec.elements.begin(), spec.elements.end(),
                                     [&](const Element& e) { return e.kind == layer.kind; });
    if (!present) {
      throw Error(ErrorCode::region_too_small,
                  "no " + std::string(name_of(layer.kind)) + " element fits inside the region");
    }
  }
  return spec;
}

}  // namespace tactile
