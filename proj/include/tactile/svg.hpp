#pragma once

#include <cstdio>
#include <span>
#include <string>
#include <vector>

#include "tactile/geometry.hpp"
#include "tactile/layout.hpp"
#include "tactile/pattern.hpp"

namespace tactile {

/// SVG 1.1 in millimetre user units. Raised material is black on white;
/// hairlines (region outlines, sector boundaries, cut lines) are light blue
/// and only serve as assembly reference.
struct SvgDocument {
  double width_mm = 0.0;
  double height_mm = 0.0;
  std::string text;
};

inline std::string format_mm(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

namespace detail {

inline constexpr const char* kHairlineColor = "#9ecae1";
inline constexpr const char* kHairlineWidth = "0.100";

/// Maps library coordinates (y up) into the document (y down) with the box's
/// top-left at the origin.
class SvgWriter {
 public:
  SvgWriter(const Box& box, const std::string& comment) : box_(box) {
    out_ += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out_ += "<!-- raised = black fill/stroke on white; light blue hairlines are not raised -->\n";
    if (!comment.empty()) out_ += "<!-- " + comment + " -->\n";
    const std::string w = format_mm(box.width());
    const std::string h = format_mm(box.height());
    out_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w + "mm\" height=\"" + h +
            "mm\" viewBox=\"0 0 " + w + " " + h + "\">\n";
    out_ += "<rect x=\"0.000\" y=\"0.000\" width=\"" + w + "\" height=\"" + h + "\" fill=\"#ffffff\"/>\n";
  }

  std::string x(double v) const { return format_mm(v - box_.min_x); }
  std::string y(double v) const { return format_mm(box_.max_y - v); }

  std::string path_data(std::span<const Point> pts, bool closed) const {
    std::string d;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      d += i == 0 ? "M " : " L ";
      d += x(pts[i].x) + " " + y(pts[i].y);
    }
    if (closed) d += " Z";
    return d;
  }

  void hairline_path(std::span<const Point> pts, bool closed) {
    out_ += "<path d=\"" + path_data(pts, closed) + "\" fill=\"none\" stroke=\"" + kHairlineColor +
            "\" stroke-width=\"" + kHairlineWidth + "\"/>\n";
  }

  void hairline_circle(Point c, double r) {
    out_ += "<circle cx=\"" + x(c.x) + "\" cy=\"" + y(c.y) + "\" r=\"" + format_mm(r) + "\" fill=\"none\" stroke=\"" +
            kHairlineColor + "\" stroke-width=\"" + kHairlineWidth + "\"/>\n";
  }

  void region_outline(const Region& region) {
    if (const auto* r = std::get_if<RectRegion>(&region)) {
      out_ += "<rect x=\"" + x(r->x) + "\" y=\"" + y(r->y + r->height) + "\" width=\"" + format_mm(r->width) +
              "\" height=\"" + format_mm(r->height) + "\" fill=\"none\" stroke=\"" + kHairlineColor +
              "\" stroke-width=\"" + kHairlineWidth + "\"/>\n";
      return;
    }
    hairline_path(outline(region), true);
  }

  void element(const Element& e) {
    if (const auto* c = std::get_if<Circle>(&e.geometry)) {
      out_ += "<circle cx=\"" + x(c->center.x) + "\" cy=\"" + y(c->center.y) + "\" r=\"" +
              format_mm(c->diameter / 2.0) + "\" fill=\"#000000\"/>\n";
      return;
    }
    const auto& pts = std::get<Polyline>(e.geometry).points;
    out_ += "<path d=\"" + path_data(pts, false) + "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"" +
            format_mm(e.size) + "\" stroke-linecap=\"round\" stroke-linejoin=\"round\"/>\n";
  }

  void elements(std::span<const Element> es) {
    for (const Element& e : es) element(e);
  }

  SvgDocument finish() {
    out_ += "</svg>\n";
    return {box_.width(), box_.height(), std::move(out_)};
  }

 private:
  Box box_;
  std::string out_;
};

inline std::string mix_comment(const PatternSpec& spec) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "hue %s, mix y=%.3f r=%.3f b=%.3f", std::string(name_of(spec.hue)).c_str(),
                spec.mix.y, spec.mix.r, spec.mix.b);
  return buf;
}

inline Box wheel_box(Point center, double outer_radius) {
  return {center.x - outer_radius, center.y - outer_radius, center.x + outer_radius, center.y + outer_radius};
}

}  // namespace detail

inline SvgDocument to_svg(const PatternSpec& spec) {
  detail::SvgWriter w(bounds(spec.region), "pattern swatch: " + detail::mix_comment(spec));
  w.region_outline(spec.region);
  w.elements(spec.elements);
  return w.finish();
}

inline SvgDocument to_svg(const WheelLayout& wheel) {
  detail::SvgWriter w(detail::wheel_box(wheel.center, wheel.outer_radius), "color wheel, 12 sectors");
  for (const WheelSector& s : wheel.sectors) w.hairline_path(outline(wheel.sector_region(s)), true);
  for (const WheelSector& s : wheel.sectors) w.elements(s.pattern.elements);
  return w.finish();
}

inline SvgDocument to_svg(const KitPiece& piece) {
  detail::SvgWriter w(bounds(piece.region), "kit piece " + piece.label + "; hairline = cut outline");
  w.hairline_path(piece.outline, true);
  w.elements(piece.pattern.elements);
  return w.finish();
}

inline SvgDocument to_svg(const CaseLayout& tray) {
  detail::SvgWriter w(detail::wheel_box(tray.center, tray.outer_radius), "case with 12 recesses");
  w.hairline_circle(tray.center, tray.outer_radius);
  w.hairline_circle(tray.center, tray.inner_radius);
  for (const Recess& r : tray.recesses) w.hairline_path(r.outline, true);
  return w.finish();
}

}  // namespace tactile
