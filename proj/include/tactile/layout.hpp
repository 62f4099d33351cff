#pragma once

#include <array>
#include <string>
#include <vector>

#include "tactile/color_wheel.hpp"
#include "tactile/error.hpp"
#include "tactile/geometry.hpp"
#include "tactile/pattern.hpp"

namespace tactile {

inline constexpr double kSectorSpanDeg = 30.0;
inline constexpr double kAssemblyClearance = 0.5;
inline constexpr double kDefaultInnerRadius = 40.0;
inline constexpr double kDefaultOuterRadius = 90.0;

struct WheelSector {
  Hue hue = Hue::yellow;
  double start_deg = 0.0;  // in [0, 360)
  double end_deg = 0.0;    // start_deg + 30, may exceed 360
  PatternSpec pattern;

  double center_deg() const { return wrap_deg(start_deg + kSectorSpanDeg / 2.0); }
};

/// The fixed wheel: twelve 30 degree sectors around `center`, hue i centred
/// on clock hour i (yellow at 12).
struct WheelLayout {
  Point center;
  double inner_radius = 0.0;
  double outer_radius = 0.0;
  std::vector<WheelSector> sectors;

  SectorRegion sector_region(const WheelSector& s, double edge_inset = 0.0) const {
    return {center, inner_radius, outer_radius, s.start_deg, s.end_deg, edge_inset};
  }
};

/// Builds the wheel. Each sector is filled with its hue's pattern; radial
/// edges are pulled in by half the minimum gap so neighbouring patterns stay
/// min_gap apart across the shared boundary.
inline WheelLayout build_wheel(double inner_radius = kDefaultInnerRadius, double outer_radius = kDefaultOuterRadius,
                               const SizeScale& scale = {}, const LegibilityConstraints& constraints = {}) {
  constraints.validate();
  if (!(inner_radius > 0.0 && outer_radius > inner_radius)) {
    throw Error(ErrorCode::invalid_region, "wheel needs 0 < inner_radius < outer_radius");
  }
  if (outer_radius - inner_radius < 2.0 * constraints.min_period) {
    throw Error(ErrorCode::ring_too_thin, "ring width " + std::to_string(outer_radius - inner_radius) +
                                              " mm is below two minimum periods");
  }
  WheelLayout wheel;
  wheel.inner_radius = snap_um(inner_radius);
  wheel.outer_radius = snap_um(outer_radius);
  for (Hue hue : kAllHues) {
    WheelSector sector;
    sector.hue = hue;
    sector.start_deg = wrap_deg(clock_position(hue).angle_deg - kSectorSpanDeg / 2.0);
    sector.end_deg = sector.start_deg + kSectorSpanDeg;
    try {
      sector.pattern =
          synthesize_swatch(mix_of(hue), wheel.sector_region(sector, constraints.min_gap / 2.0), scale, constraints);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::region_too_small) throw Error(ErrorCode::ring_too_thin, e.what());
      throw;
    }
    wheel.sectors.push_back(std::move(sector));
  }
  return wheel;
}

struct KitPiece {
  Hue hue = Hue::yellow;
  SectorRegion region;         // sector shrunk by the assembly clearance
  std::vector<Point> outline;  // closed polygon of `region`
  PatternSpec pattern;
  std::string label;
};

struct Recess {
  Hue hue = Hue::yellow;
  double center_deg = 0.0;
  SectorRegion region;
  std::vector<Point> outline;
};

/// Tray the pieces are placed into. Every recess has the same shape, so a
/// piece can only be placed correctly by reading its pattern.
struct CaseLayout {
  Point center;
  double inner_radius = 0.0;
  double outer_radius = 0.0;
  std::vector<Recess> recesses;
};

struct Kit {
  std::vector<KitPiece> pieces;
  CaseLayout tray;
};

inline SectorRegion inset_sector(SectorRegion s, double by) {
  s.inner_radius += by;
  s.outer_radius -= by;
  s.edge_inset += by;
  return s;
}

inline Kit build_kit(const WheelLayout& wheel) {
  Kit kit;
  kit.tray.center = wheel.center;
  kit.tray.inner_radius = wheel.inner_radius;
  kit.tray.outer_radius = wheel.outer_radius;
  for (const WheelSector& sector : wheel.sectors) {
    const SectorRegion full = wheel.sector_region(sector);
    KitPiece piece;
    piece.hue = sector.hue;
    piece.region = inset_sector(full, kAssemblyClearance);
    piece.outline = outline(piece.region);
    piece.pattern = synthesize_swatch(sector.pattern.mix, piece.region, sector.pattern.scale,
                                      sector.pattern.constraints);
    piece.label = std::string(name_of(sector.hue));
    kit.pieces.push_back(std::move(piece));

    // A recess is its piece grown back by the same clearance: the sector.
    Recess recess;
    recess.hue = sector.hue;
    recess.center_deg = sector.center_deg();
    recess.region = full;
    recess.outline = outline(full);
    kit.tray.recesses.push_back(std::move(recess));
  }
  return kit;
}

}  // namespace tactile
