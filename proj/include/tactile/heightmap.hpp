#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tactile/error.hpp"
#include "tactile/geometry.hpp"
#include "tactile/layout.hpp"
#include "tactile/pattern.hpp"

namespace tactile {

inline constexpr int kMinDpi = 100;
inline constexpr int kMaxDpi = 1200;
inline constexpr std::uint8_t kRaised = 255;

/// 8-bit height map for swell paper or relief printing: 255 raised, 0 flat.
/// Row 0 is the top of the page.
struct HeightmapRaster {
  int width = 0;
  int height = 0;
  int dpi = 0;
  std::vector<std::uint8_t> pixels;

  std::uint8_t at(int x, int y) const {
    return pixels[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x)];
  }

  /// Binary PGM (P5, maxval 255).
  std::string to_pgm() const {
    std::string out = "P5\n# raised=255 background=0 dpi=" + std::to_string(dpi) + "\n" + std::to_string(width) +
                      " " + std::to_string(height) + "\n255\n";
    out.append(reinterpret_cast<const char*>(pixels.data()), pixels.size());
    return out;
  }
};

inline int pixels_for(double mm, int dpi) {
  return static_cast<int>(std::ceil(mm * dpi / 25.4 - 1e-9));
}

/// Scanline rasterization: a pixel is raised when its centre lies within an
/// element (inside a dot, or within half the stroke of a centreline).
inline HeightmapRaster rasterize(std::span<const Element> elements, const Box& box, int dpi) {
  if (dpi < kMinDpi || dpi > kMaxDpi) {
    throw Error(ErrorCode::dpi_out_of_range, "dpi " + std::to_string(dpi) + " outside [100, 1200]");
  }
  HeightmapRaster r;
  r.dpi = dpi;
  r.width = pixels_for(box.width(), dpi);
  r.height = pixels_for(box.height(), dpi);
  r.pixels.assign(static_cast<std::size_t>(r.width) * static_cast<std::size_t>(r.height), 0);
  const double px = 25.4 / dpi;

  for (const Element& e : elements) {
    std::vector<Point> line;
    if (const auto* c = std::get_if<Circle>(&e.geometry)) {
      line = {c->center};
    } else {
      line = std::get<Polyline>(e.geometry).points;
    }
    const double half = e.size / 2.0;
    Box eb = Box::around(line.front());
    for (Point p : line) eb.expand(p);
    const int col0 = std::max(0, static_cast<int>(std::floor((eb.min_x - half - box.min_x) / px)));
    const int col1 = std::min(r.width - 1, static_cast<int>(std::ceil((eb.max_x + half - box.min_x) / px)));
    const int row0 = std::max(0, static_cast<int>(std::floor((box.max_y - eb.max_y - half) / px)));
    const int row1 = std::min(r.height - 1, static_cast<int>(std::ceil((box.max_y - eb.min_y + half) / px)));
    for (int row = row0; row <= row1; ++row) {
      const double y = box.max_y - (row + 0.5) * px;
      for (int col = col0; col <= col1; ++col) {
        const Point p{box.min_x + (col + 0.5) * px, y};
        bool hit = false;
        if (line.size() == 1) {
          hit = distance(p, line[0]) <= half;
        } else {
          for (std::size_t k = 0; k + 1 < line.size() && !hit; ++k) {
            hit = point_segment_distance(p, line[k], line[k + 1]) <= half;
          }
        }
        if (hit) r.pixels[static_cast<std::size_t>(row) * static_cast<std::size_t>(r.width) + static_cast<std::size_t>(col)] = kRaised;
      }
    }
  }
  return r;
}

inline HeightmapRaster to_heightmap(const PatternSpec& spec, int dpi) {
  return rasterize(spec.elements, bounds(spec.region), dpi);
}

inline HeightmapRaster to_heightmap(const KitPiece& piece, int dpi) {
  return rasterize(piece.pattern.elements, bounds(piece.region), dpi);
}

inline HeightmapRaster to_heightmap(const WheelLayout& wheel, int dpi) {
  std::vector<Element> all;
  for (const WheelSector& s : wheel.sectors) all.insert(all.end(), s.pattern.elements.begin(), s.pattern.elements.end());
  const double r = wheel.outer_radius;
  return rasterize(all, {wheel.center.x - r, wheel.center.y - r, wheel.center.x + r, wheel.center.y + r}, dpi);
}

}  // namespace tactile
