#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <variant>
#include <vector>

#include "tactile/error.hpp"

namespace tactile {

/// Millimetres, math orientation (y up).
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(Point a, double s) { return {a.x * s, a.y * s}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }

inline double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

/// Wraps an angle into [0, 360).
inline double wrap_deg(double deg) {
  double a = std::fmod(deg, 360.0);
  if (a < 0.0) a += 360.0;
  if (a >= 360.0) a -= 360.0;
  return a;
}

inline Point rotate(Point p, double deg, Point about = {}) {
  const double c = std::cos(deg_to_rad(deg));
  const double s = std::sin(deg_to_rad(deg));
  const Point d = p - about;
  return {about.x + c * d.x - s * d.y, about.y + s * d.x + c * d.y};
}

/// All stored lengths live on a 1 micrometre grid.
inline double snap_um(double mm) {
  const double v = std::round(mm * 1000.0) / 1000.0;
  return v == 0.0 ? 0.0 : v;  // no negative zero
}

inline Point snap_um(Point p) { return {snap_um(p.x), snap_um(p.y)}; }

struct Box {
  double min_x = 0.0;
  double min_y = 0.0;
  double max_x = 0.0;
  double max_y = 0.0;

  double width() const { return max_x - min_x; }
  double height() const { return max_y - min_y; }

  void expand(Point p) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }

  static Box around(Point p) { return {p.x, p.y, p.x, p.y}; }

  friend bool operator==(const Box&, const Box&) = default;
};

inline double box_gap(const Box& a, const Box& b) {
  const double dx = std::max({0.0, a.min_x - b.max_x, b.min_x - a.max_x});
  const double dy = std::max({0.0, a.min_y - b.max_y, b.min_y - a.max_y});
  return std::hypot(dx, dy);
}

inline double point_segment_distance(Point p, Point a, Point b) {
  const Point ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + ab * t);
}

inline bool segments_intersect(Point a, Point b, Point c, Point d) {
  const double d1 = cross(b - a, c - a);
  const double d2 = cross(b - a, d - a);
  const double d3 = cross(d - c, a - c);
  const double d4 = cross(d - c, b - c);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

inline double segment_segment_distance(Point a, Point b, Point c, Point d) {
  if (segments_intersect(a, b, c, d)) return 0.0;
  return std::min({point_segment_distance(a, c, d), point_segment_distance(b, c, d),
                   point_segment_distance(c, a, b), point_segment_distance(d, a, b)});
}

/// Shortest distance between two centrelines; a single point is a degenerate
/// polyline.
inline double polyline_distance(std::span<const Point> p, std::span<const Point> q) {
  if (p.empty() || q.empty()) return INFINITY;
  double best = INFINITY;
  if (p.size() == 1 || q.size() == 1) {
    std::span<const Point> single = p.size() == 1 ? p : q;
    std::span<const Point> other = p.size() == 1 ? q : p;
    if (other.size() == 1) return distance(single[0], other[0]);
    for (std::size_t j = 0; j + 1 < other.size(); ++j) {
      best = std::min(best, point_segment_distance(single[0], other[j], other[j + 1]));
    }
    return best;
  }
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    for (std::size_t j = 0; j + 1 < q.size(); ++j) {
      best = std::min(best, segment_segment_distance(p[i], p[i + 1], q[j], q[j + 1]));
    }
  }
  return best;
}

inline double polyline_length(std::span<const Point> pts) {
  double len = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) len += distance(pts[i], pts[i + 1]);
  return len;
}

/// Number of sign flips of the turning direction along a polyline. Turns
/// smaller than `rel_eps` (relative to the adjoining segment lengths) count as
/// no turn.
inline int curvature_sign_changes(std::span<const Point> pts, double rel_eps = 1e-9) {
  int changes = 0;
  int last = 0;
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    const Point a = pts[i] - pts[i - 1];
    const Point b = pts[i + 1] - pts[i];
    const double c = cross(a, b);
    if (std::abs(c) <= rel_eps * norm(a) * norm(b)) continue;
    const int sign = c > 0 ? 1 : -1;
    if (last != 0 && sign != last) ++changes;
    last = sign;
  }
  return changes;
}

/// Largest perpendicular distance of any vertex from the first-to-last chord.
inline double max_chord_deviation(std::span<const Point> pts) {
  if (pts.size() < 2) return 0.0;
  const Point a = pts.front();
  const Point b = pts.back();
  double worst = 0.0;
  for (Point p : pts) worst = std::max(worst, point_segment_distance(p, a, b));
  return worst;
}

// ---------------------------------------------------------------------------
// Regions

struct RectRegion {
  double x = 0.0;
  double y = 0.0;
  double width = 0.0;
  double height = 0.0;

  friend bool operator==(const RectRegion&, const RectRegion&) = default;
};

/// Annular sector swept counterclockwise from start_deg to end_deg. The two
/// radial edges may be pulled inward by `edge_inset` millimetres (parallel
/// offset), which is how kit pieces get their assembly clearance.
struct SectorRegion {
  Point center;
  double inner_radius = 0.0;
  double outer_radius = 0.0;
  double start_deg = 0.0;
  double end_deg = 0.0;
  double edge_inset = 0.0;

  double span_deg() const { return end_deg - start_deg; }

  friend bool operator==(const SectorRegion&, const SectorRegion&) = default;
};

using Region = std::variant<RectRegion, SectorRegion>;

inline void validate_region(const Region& region) {
  if (const auto* r = std::get_if<RectRegion>(&region)) {
    if (!(r->width > 0.0 && r->height > 0.0)) {
      throw Error(ErrorCode::invalid_region, "rectangle needs positive width and height");
    }
    return;
  }
  const auto& s = std::get<SectorRegion>(region);
  if (!(s.inner_radius >= 0.0 && s.outer_radius > s.inner_radius)) {
    throw Error(ErrorCode::invalid_region, "sector needs 0 <= inner_radius < outer_radius");
  }
  if (!(s.span_deg() > 0.0 && s.span_deg() <= 180.0)) {
    throw Error(ErrorCode::invalid_region, "sector span must lie in (0, 180] degrees");
  }
  if (!(s.edge_inset >= 0.0) || (s.edge_inset > 0.0 && s.edge_inset >= s.inner_radius)) {
    throw Error(ErrorCode::invalid_region, "edge inset must be non-negative and below the inner radius");
  }
}

/// Lower bound on the distance from `p` to the region boundary; positive
/// inside, negative outside. Exact for rectangles.
inline double clearance(const Region& region, Point p) {
  if (const auto* r = std::get_if<RectRegion>(&region)) {
    return std::min({p.x - r->x, r->x + r->width - p.x, p.y - r->y, r->y + r->height - p.y});
  }
  const auto& s = std::get<SectorRegion>(region);
  const Point v = p - s.center;
  const double radius = norm(v);
  const double theta = rad_to_deg(std::atan2(v.y, v.x));
  const double span = s.span_deg();
  const double from_start = wrap_deg(theta - s.start_deg);
  const double radial = std::min(radius - s.inner_radius, s.outer_radius - radius);
  if (from_start > span) {
    const double excess = std::min(from_start - span, 360.0 - from_start);
    return -(radius * std::sin(deg_to_rad(std::min(excess, 90.0))) + s.edge_inset) - 1e-12;
  }
  auto edge = [&](double angle) {
    return angle >= 90.0 ? radius : radius * std::sin(deg_to_rad(angle));
  };
  const double to_edges = std::min(edge(from_start), edge(span - from_start)) - s.edge_inset;
  return std::min(radial, to_edges);
}

inline Box bounds(const Region& region) {
  if (const auto* r = std::get_if<RectRegion>(&region)) {
    return {r->x, r->y, r->x + r->width, r->y + r->height};
  }
  const auto& s = std::get<SectorRegion>(region);
  auto at = [&](double radius, double deg) {
    return s.center + Point{radius * std::cos(deg_to_rad(deg)), radius * std::sin(deg_to_rad(deg))};
  };
  Box box = Box::around(at(s.outer_radius, s.start_deg));
  for (double radius : {s.inner_radius, s.outer_radius}) {
    box.expand(at(radius, s.start_deg));
    box.expand(at(radius, s.end_deg));
  }
  // Axis extremes of the outer arc.
  for (int k = -4; k <= 8; ++k) {
    const double a = 90.0 * k;
    if (a > s.start_deg && a < s.end_deg) box.expand(at(s.outer_radius, a));
  }
  return box;
}

inline double area(const Region& region) {
  if (const auto* r = std::get_if<RectRegion>(&region)) return r->width * r->height;
  const auto& s = std::get<SectorRegion>(region);
  return deg_to_rad(s.span_deg()) / 2.0 * (s.outer_radius * s.outer_radius - s.inner_radius * s.inner_radius);
}

inline constexpr int kArcSegments = 32;

/// Closed boundary polygon (first vertex not repeated), counterclockwise.
/// Sector outlines always have 2 * (kArcSegments + 1) vertices, parametrised
/// from the start edge so congruent sectors produce corresponding vertices.
inline std::vector<Point> outline(const Region& region) {
  if (const auto* r = std::get_if<RectRegion>(&region)) {
    return {{r->x, r->y}, {r->x + r->width, r->y}, {r->x + r->width, r->y + r->height}, {r->x, r->y + r->height}};
  }
  const auto& s = std::get<SectorRegion>(region);
  std::vector<Point> pts;
  pts.reserve(2 * (kArcSegments + 1));
  auto arc = [&](double radius, bool forward) {
    const double trim = radius > 0.0 ? rad_to_deg(std::asin(std::min(1.0, s.edge_inset / radius))) : 0.0;
    const double a0 = s.start_deg + trim;
    const double a1 = s.end_deg - trim;
    for (int k = 0; k <= kArcSegments; ++k) {
      const double t = forward ? double(k) / kArcSegments : 1.0 - double(k) / kArcSegments;
      const double a = deg_to_rad(a0 + t * (a1 - a0));
      pts.push_back(s.center + Point{radius * std::cos(a), radius * std::sin(a)});
    }
  };
  arc(s.outer_radius, true);
  arc(s.inner_radius, false);
  return pts;
}

}  // namespace tactile
