#pragma once

#include <string>
#include <string_view>

#include "tactile/color_wheel.hpp"
#include "tactile/error.hpp"
#include "tactile/geometry.hpp"
#include "tactile/json_io.hpp"
#include "tactile/pattern.hpp"

namespace tactile {

inline constexpr std::string_view kManifestVersion = "1";

namespace detail {

inline Json region_to_json(const Region& region) {
  if (const auto* r = std::get_if<RectRegion>(&region)) {
    return {{"type", "rect"}, {"x", r->x}, {"y", r->y}, {"width", r->width}, {"height", r->height}};
  }
  const auto& s = std::get<SectorRegion>(region);
  return {{"type", "sector"},         {"center", to_json(s.center)},   {"inner_radius", s.inner_radius},
          {"outer_radius", s.outer_radius}, {"start_deg", s.start_deg}, {"end_deg", s.end_deg},
          {"edge_inset", s.edge_inset}};
}

inline Region region_from_json(const FieldReader& in, const Json& j, const std::string& path) {
  const std::string type = in.string(j, path, "type");
  Region region;
  if (type == "rect") {
    region = RectRegion{in.number(j, path, "x"), in.number(j, path, "y"), in.number(j, path, "width"),
                        in.number(j, path, "height")};
  } else if (type == "sector") {
    region = SectorRegion{in.point(j, path, "center"),   in.number(j, path, "inner_radius"),
                          in.number(j, path, "outer_radius"), in.number(j, path, "start_deg"),
                          in.number(j, path, "end_deg"),  in.number(j, path, "edge_inset")};
  } else {
    in.fail(path + ".type", "unknown region type '" + type + "'");
  }
  try {
    validate_region(region);
  } catch (const Error& e) {
    in.fail(path, e.what());
  }
  return region;
}

inline PrimitiveKind kind_from_json(const FieldReader& in, const Json& j, const std::string& path) {
  const std::string name = in.string(j, path, "kind");
  const auto kind = kind_from_name(name);
  if (!kind) in.fail(path + ".kind", "unknown kind '" + name + "'");
  return *kind;
}

}  // namespace detail

/// Serializes a spec to the version-1 JSON manifest. Keys are written in a
/// fixed order and every length is already on the 1 um grid, so output is
/// byte-stable and re-reading it reproduces the spec exactly.
inline detail::Json manifest_json(const PatternSpec& spec) {
  using detail::Json;
  using detail::to_json;
  Json scale = Json::object();
  for (PrimitiveKind k : kAllKinds) {
    scale[std::string(name_of(k))] = Json::array({spec.scale.range(k).min_mm, spec.scale.range(k).max_mm});
  }
  Json layers = Json::array();
  for (const Layer& l : spec.layers) {
    layers.push_back({{"kind", name_of(l.kind)},
                      {"size", l.size},
                      {"period", l.period},
                      {"phase", to_json(l.phase)},
                      {"orientation_deg", l.orientation_deg}});
  }
  Json elements = Json::array();
  for (const Element& e : spec.elements) {
    Json je = {{"kind", name_of(e.kind)},
               {"center", to_json(e.center)},
               {"orientation_deg", e.orientation_deg},
               {"size", e.size},
               {"amplitude", e.amplitude},
               {"wavelength", e.wavelength}};
    if (const auto* c = std::get_if<Circle>(&e.geometry)) {
      je["circle"] = {{"center", to_json(c->center)}, {"diameter", c->diameter}};
    } else {
      Json pts = Json::array();
      for (Point p : std::get<Polyline>(e.geometry).points) pts.push_back(to_json(p));
      je["polyline"] = std::move(pts);
    }
    elements.push_back(std::move(je));
  }
  return {
      {"version", kManifestVersion},
      {"units", "mm"},
      {"region", detail::region_to_json(spec.region)},
      {"source", {{"mix", {{"y", spec.mix.y}, {"r", spec.mix.r}, {"b", spec.mix.b}}}, {"hue", name_of(spec.hue)}}},
      {"scale", std::move(scale)},
      {"constraints",
       {{"min_line_width", spec.constraints.min_line_width},
        {"min_dot_diameter", spec.constraints.min_dot_diameter},
        {"min_gap", spec.constraints.min_gap},
        {"min_period", spec.constraints.min_period}}},
      {"layers", std::move(layers)},
      {"elements", std::move(elements)},
  };
}

inline std::string write_manifest(const PatternSpec& spec) { return manifest_json(spec).dump(2) + "\n"; }

inline PatternSpec manifest_from_json(const detail::Json& doc) {
  const detail::FieldReader in(ErrorCode::malformed_manifest);
  const std::string version = in.string(doc, "", "version");
  if (version != kManifestVersion) {
    throw Error(ErrorCode::manifest_version_mismatch,
                "manifest version '" + version + "', expected '" + std::string(kManifestVersion) + "'");
  }
  PatternSpec spec;
  spec.region = detail::region_from_json(in, in.member(doc, "", "region"), "region");

  const detail::Json& source = in.member(doc, "", "source");
  const detail::Json& mix = in.member(source, "source", "mix");
  spec.mix = {in.number(mix, "source.mix", "r"), in.number(mix, "source.mix", "y"), in.number(mix, "source.mix", "b")};
  if (!is_normalized(spec.mix)) in.fail("source.mix", "components must lie in [0,1] and sum to 1");
  const std::string hue = in.string(source, "source", "hue");
  const auto parsed_hue = hue_from_name(hue);
  if (!parsed_hue) in.fail("source.hue", "unknown hue '" + hue + "'");
  spec.hue = *parsed_hue;

  const detail::Json& scale = in.member(doc, "", "scale");
  for (PrimitiveKind k : kAllKinds) {
    const std::string key(name_of(k));
    const Point range = in.point(scale, "scale", key.c_str());
    SizeRange& dst = k == PrimitiveKind::dot             ? spec.scale.dot
                     : k == PrimitiveKind::straight_line ? spec.scale.straight_line
                                                         : spec.scale.wavy_line;
    dst = {range.x, range.y};
  }

  const detail::Json& c = in.member(doc, "", "constraints");
  spec.constraints = {in.number(c, "constraints", "min_line_width"), in.number(c, "constraints", "min_dot_diameter"),
                      in.number(c, "constraints", "min_gap"), in.number(c, "constraints", "min_period")};

  const detail::Json& layers = in.array(doc, "", "layers");
  if (layers.empty() || layers.size() > 2) in.fail("layers", "expected one or two layers");
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const std::string path = detail::FieldReader::index("layers", i);
    const detail::Json& jl = layers[i];
    Layer l;
    l.kind = detail::kind_from_json(in, jl, path);
    l.size = in.number(jl, path, "size");
    l.period = in.number(jl, path, "period");
    l.phase = in.point(jl, path, "phase");
    l.orientation_deg = in.number(jl, path, "orientation_deg");
    spec.layers.push_back(l);
  }

  const detail::Json& elements = in.array(doc, "", "elements");
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const std::string path = detail::FieldReader::index("elements", i);
    const detail::Json& je = elements[i];
    Element e;
    e.kind = detail::kind_from_json(in, je, path);
    e.center = in.point(je, path, "center");
    e.orientation_deg = in.number(je, path, "orientation_deg");
    e.size = in.number(je, path, "size");
    e.amplitude = in.number(je, path, "amplitude");
    e.wavelength = in.number(je, path, "wavelength");
    if (je.contains("circle")) {
      const detail::Json& jc = in.member(je, path, "circle");
      e.geometry = Circle{in.point(jc, path + ".circle", "center"), in.number(jc, path + ".circle", "diameter")};
    } else if (je.contains("polyline")) {
      const detail::Json& jp = in.array(je, path, "polyline");
      if (jp.size() < 2) in.fail(path + ".polyline", "expected at least two points");
      Polyline line;
      for (std::size_t k = 0; k < jp.size(); ++k) {
        line.points.push_back(in.point(jp[k], detail::FieldReader::index(path + ".polyline", k)));
      }
      e.geometry = std::move(line);
    } else {
      in.fail(path, "needs a 'circle' or 'polyline' geometry");
    }
    spec.elements.push_back(std::move(e));
  }
  return spec;
}

inline PatternSpec read_manifest(std::string_view text) {
  return manifest_from_json(detail::parse_document(text, ErrorCode::malformed_manifest));
}

}  // namespace tactile
