// Command-line front end: generate swatches, the wheel and the kit; decode,
// validate and score files produced by them.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tactile/tactile.hpp"

namespace fs = std::filesystem;
using tactile::Error;
using tactile::ErrorCode;
using Json = nlohmann::ordered_json;

namespace {

enum Exit : int {
  kOk = 0,
  kFailed = 1,
  kBadInput = 2,
  kAchromatic = 3,
  kSynthesis = 4,
  kDuplicate = 5,
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::achromatic:
    case ErrorCode::achromatic_mix:
      return kAchromatic;
    case ErrorCode::invalid_mix:
    case ErrorCode::region_too_small:
    case ErrorCode::clearance_infeasible:
    case ErrorCode::ring_too_thin:
      return kSynthesis;
    case ErrorCode::duplicate_piece:
      return kDuplicate;
    default:
      return kBadInput;
  }
}

struct Config {
  std::string out;
  std::string out_dir;
  std::vector<std::string> formats;
  bool json = false;
  int dpi = 300;
  std::string radii = "40,90";
  std::string size = "40x40";
  std::optional<double> min_gap;
  std::optional<double> min_line_width;
  std::optional<double> min_dot_diameter;
  std::optional<double> min_period;

  tactile::LegibilityConstraints constraints(tactile::LegibilityConstraints base = {}) const {
    if (min_gap) base.min_gap = *min_gap;
    if (min_line_width) base.min_line_width = *min_line_width;
    if (min_dot_diameter) base.min_dot_diameter = *min_dot_diameter;
    if (min_period) base.min_period = *min_period;
    base.validate();
    return base;
  }
};

[[noreturn]] void bad_input(const std::string& message) { throw Error(ErrorCode::invalid_input, message); }

std::pair<double, double> parse_pair(const std::string& text, char sep, const char* flag) {
  const auto at = text.find(sep);
  if (at == std::string::npos) bad_input(std::string(flag) + " expects A" + sep + "B, got '" + text + "'");
  try {
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    const std::string a = text.substr(0, at);
    const std::string b = text.substr(at + 1);
    const double va = std::stod(a, &used_a);
    const double vb = std::stod(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument(text);
    return {va, vb};
  } catch (const std::logic_error&) {
    bad_input(std::string(flag) + ": cannot parse '" + text + "'");
  }
}

tactile::RYBMix parse_mix(const std::string& text) {
  tactile::RYBMix mix;
  std::stringstream ss(text);
  std::string part;
  bool any = false;
  while (std::getline(ss, part, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) bad_input("--mix entries look like y=0.75, got '" + part + "'");
    const std::string key = part.substr(0, eq);
    double value = 0.0;
    try {
      std::size_t used = 0;
      value = std::stod(part.substr(eq + 1), &used);
      if (used != part.size() - eq - 1) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      bad_input("--mix: cannot parse '" + part + "'");
    }
    if (value < 0.0) bad_input("--mix: negative fraction in '" + part + "'");
    if (key == "y") mix.y = value;
    else if (key == "r") mix.r = value;
    else if (key == "b") mix.b = value;
    else bad_input("--mix keys are y, r, b; got '" + key + "'");
    any = true;
  }
  const double sum = mix.r + mix.y + mix.b;
  if (!any || sum <= 0.0) bad_input("--mix needs at least one positive fraction");
  return {mix.r / sum, mix.y / sum, mix.b / sum};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::malformed_manifest, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& bytes) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << bytes;
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
}

std::string extension_for(const std::string& format) {
  if (format == "svg") return ".svg";
  if (format == "pgm") return ".pgm";
  return ".json";
}

std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string mix_text(const tactile::RYBMix& m) {
  std::string s;
  auto add = [&](const char* key, double v) {
    if (v <= 0.0) return;
    if (!s.empty()) s += ' ';
    s += std::string(key) + ":" + fmt2(v);
  };
  add("y", m.y);
  add("r", m.r);
  add("b", m.b);
  return s;
}

Json mix_json(const tactile::RYBMix& m) { return {{"y", m.y}, {"r", m.r}, {"b", m.b}}; }

std::vector<fs::path> output_paths(const Config& cfg, const std::string& stem, const std::vector<std::string>& formats) {
  std::vector<fs::path> paths;
  for (const std::string& f : formats) {
    if (!cfg.out.empty()) {
      fs::path p(cfg.out);
      if (formats.size() > 1) p.replace_extension(extension_for(f));
      paths.push_back(p);
    } else {
      paths.push_back(fs::path(cfg.out_dir.empty() ? "." : cfg.out_dir) / (stem + extension_for(f)));
    }
  }
  return paths;
}

std::vector<std::string> formats_or(const Config& cfg, std::vector<std::string> fallback) {
  return cfg.formats.empty() ? fallback : cfg.formats;
}

int emit_swatch(const Config& cfg, const tactile::RYBMix& mix, const std::string& stem) {
  const auto [w, h] = parse_pair(cfg.size, 'x', "--size");
  const tactile::PatternSpec spec =
      tactile::synthesize_swatch(mix, tactile::RectRegion{0.0, 0.0, w, h}, {}, cfg.constraints());
  const auto formats = formats_or(cfg, {"svg"});
  const auto paths = output_paths(cfg, stem, formats);
  for (std::size_t i = 0; i < formats.size(); ++i) {
    const std::string& f = formats[i];
    if (f == "svg") write_file(paths[i], tactile::to_svg(spec).text);
    else if (f == "pgm") write_file(paths[i], tactile::to_heightmap(spec, cfg.dpi).to_pgm());
    else write_file(paths[i], tactile::write_manifest(spec));
  }

  if (cfg.json) {
    Json layers = Json::array();
    for (const auto& l : spec.layers) {
      layers.push_back({{"kind", tactile::name_of(l.kind)}, {"size_mm", l.size}, {"period_mm", l.period}});
    }
    Json files = Json::array();
    for (const auto& p : paths) files.push_back(p.string());
    std::cout << Json{{"hue", tactile::name_of(spec.hue)},
                      {"mix", mix_json(spec.mix)},
                      {"layers", layers},
                      {"elements", spec.elements.size()},
                      {"files", files}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "hue: " << tactile::name_of(spec.hue) << "\n";
    std::cout << "mix: " << mix_text(spec.mix) << "\n";
    for (const auto& l : spec.layers) {
      std::cout << "layer: " << tactile::name_of(l.kind) << " size " << tactile::format_mm(l.size) << " mm, period "
                << tactile::format_mm(l.period) << " mm\n";
    }
    std::cout << "elements: " << spec.elements.size() << "\n";
    for (const auto& p : paths) std::cout << "wrote: " << p.string() << "\n";
  }
  return kOk;
}

int cmd_hue(const Config& cfg, const std::string& color) {
  tactile::Hue hue;
  if (auto named = tactile::hue_from_name(color)) {
    hue = *named;
  } else if (auto rgb = tactile::parse_hex_rgb(color)) {
    hue = tactile::rgb_to_hue(*rgb);
  } else {
    bad_input("unrecognised color '" + color + "' (use a wheel hue name or #rrggbb)");
  }
  return emit_swatch(cfg, tactile::mix_of(hue), std::string(tactile::name_of(hue)));
}

int cmd_swatch(const Config& cfg, const std::string& mix_spec) {
  const tactile::RYBMix mix = parse_mix(mix_spec);
  return emit_swatch(cfg, mix, "swatch");
}

tactile::WheelLayout wheel_from(const Config& cfg) {
  const auto [inner, outer] = parse_pair(cfg.radii, ',', "--radii");
  return tactile::build_wheel(inner, outer, {}, cfg.constraints());
}

int cmd_wheel(const Config& cfg) {
  const tactile::WheelLayout wheel = wheel_from(cfg);
  const auto formats = formats_or(cfg, {"svg"});
  const auto paths = output_paths(cfg, "wheel", formats);
  for (std::size_t i = 0; i < formats.size(); ++i) {
    const std::string& f = formats[i];
    if (f == "svg") {
      write_file(paths[i], tactile::to_svg(wheel).text);
    } else if (f == "pgm") {
      write_file(paths[i], tactile::to_heightmap(wheel, cfg.dpi).to_pgm());
    } else {
      Json sectors = Json::array();
      for (const auto& s : wheel.sectors) {
        sectors.push_back({{"hue", tactile::name_of(s.hue)},
                           {"start_deg", s.start_deg},
                           {"end_deg", s.end_deg},
                           {"pattern", tactile::manifest_json(s.pattern)}});
      }
      write_file(paths[i], Json{{"version", tactile::kManifestVersion},
                                {"inner_radius", wheel.inner_radius},
                                {"outer_radius", wheel.outer_radius},
                                {"sectors", sectors}}
                                   .dump(2) +
                               "\n");
    }
  }
  if (cfg.json) {
    Json sectors = Json::array();
    for (const auto& s : wheel.sectors) {
      sectors.push_back({{"hue", tactile::name_of(s.hue)},
                         {"hour", tactile::clock_position(s.hue).hour},
                         {"center_deg", s.center_deg()},
                         {"elements", s.pattern.elements.size()}});
    }
    Json files = Json::array();
    for (const auto& p : paths) files.push_back(p.string());
    std::cout << Json{{"diameter_mm", 2.0 * wheel.outer_radius}, {"sectors", sectors}, {"files", files}}.dump(2)
              << "\n";
  } else {
    std::cout << "wheel: " << tactile::format_mm(2.0 * wheel.outer_radius) << " mm, 12 sectors\n";
    for (const auto& s : wheel.sectors) {
      std::cout << "  " << tactile::clock_position(s.hue).hour << " o'clock  " << tactile::name_of(s.hue) << "\n";
    }
    for (const auto& p : paths) std::cout << "wrote: " << p.string() << "\n";
  }
  return kOk;
}

int cmd_kit(const Config& cfg) {
  const tactile::WheelLayout wheel = wheel_from(cfg);
  const tactile::Kit kit = tactile::build_kit(wheel);
  const fs::path dir(cfg.out_dir.empty() ? "kit" : cfg.out_dir);
  const auto formats = formats_or(cfg, {"svg"});
  if (formats.size() != 1) bad_input("kit writes pieces in exactly one --format");
  const std::string& f = formats.front();

  Json pieces = Json::array();
  std::vector<fs::path> written;
  for (const auto& piece : kit.pieces) {
    char stem[64];
    std::snprintf(stem, sizeof stem, "piece-%02d-%s", tactile::index_of(piece.hue), piece.label.c_str());
    const fs::path path = dir / (std::string(stem) + extension_for(f));
    if (f == "svg") write_file(path, tactile::to_svg(piece).text);
    else if (f == "pgm") write_file(path, tactile::to_heightmap(piece, cfg.dpi).to_pgm());
    else write_file(path, tactile::write_manifest(piece.pattern));
    written.push_back(path);
    pieces.push_back({{"hue", piece.label},
                      {"slot", tactile::index_of(piece.hue)},
                      {"hour", tactile::clock_position(piece.hue).hour},
                      {"file", path.filename().string()}});
  }
  const fs::path case_path = dir / "case.svg";
  write_file(case_path, tactile::to_svg(kit.tray).text);
  written.push_back(case_path);

  const Json index = {{"version", tactile::kManifestVersion},
                      {"inner_radius", wheel.inner_radius},
                      {"outer_radius", wheel.outer_radius},
                      {"assembly_clearance", tactile::kAssemblyClearance},
                      {"case", case_path.filename().string()},
                      {"pieces", pieces}};
  const fs::path index_path = dir / "kit.json";
  write_file(index_path, index.dump(2) + "\n");
  written.push_back(index_path);

  if (cfg.json) {
    Json files = Json::array();
    for (const auto& p : written) files.push_back(p.string());
    std::cout << Json{{"pieces", kit.pieces.size()}, {"recesses", kit.tray.recesses.size()}, {"files", files}}.dump(2)
              << "\n";
  } else {
    std::cout << "kit: " << kit.pieces.size() << " pieces, " << kit.tray.recesses.size() << " recesses\n";
    for (const auto& p : written) std::cout << "wrote: " << p.string() << "\n";
  }
  return kOk;
}

int cmd_decode(const Config& cfg, const std::string& path) {
  const tactile::PatternSpec spec = tactile::read_manifest(read_file(path));
  const tactile::DecodedMix d = tactile::decode_elements(spec.elements, spec.scale);
  if (cfg.json) {
    Json kinds = Json::object();
    for (auto k : tactile::kAllKinds) {
      if (d.count[tactile::slot(k)] == 0) continue;
      kinds[std::string(tactile::name_of(k))] = {{"count", d.count[tactile::slot(k)]},
                                                 {"mean_size_mm", d.mean_size[tactile::slot(k)]}};
    }
    std::cout << Json{{"hue", tactile::name_of(d.hue)}, {"mix", mix_json(d.mix)}, {"kinds", kinds}}.dump(2) << "\n";
  } else {
    std::cout << tactile::name_of(d.hue) << ", " << mix_text(d.mix) << "\n";
    for (auto k : tactile::kAllKinds) {
      if (d.count[tactile::slot(k)] == 0) continue;
      std::cout << "  " << tactile::name_of(k) << ": " << d.count[tactile::slot(k)] << " elements, mean size "
                << tactile::format_mm(d.mean_size[tactile::slot(k)]) << " mm\n";
    }
  }
  return kOk;
}

int cmd_validate(const Config& cfg, const std::string& path) {
  const tactile::PatternSpec spec = tactile::read_manifest(read_file(path));
  const tactile::LegibilityReport report = tactile::validate_legibility(spec, cfg.constraints(spec.constraints));
  if (cfg.json) {
    Json violations = Json::array();
    for (const auto& v : report.violations) {
      violations.push_back({{"kind", tactile::name_of(v.kind)},
                            {"location", {v.location.x, v.location.y}},
                            {"measured_mm", v.measured},
                            {"limit_mm", v.limit}});
    }
    std::cout << Json{{"pass", report.pass()}, {"violations", violations}}.dump(2) << "\n";
  } else if (report.pass()) {
    std::cout << "pass (" << spec.elements.size() << " elements)\n";
  } else {
    std::cout << "FAIL: " << report.violations.size() << " violation(s)\n";
    for (const auto& v : report.violations) {
      std::cout << "  " << tactile::name_of(v.kind) << " at (" << tactile::format_mm(v.location.x) << ", "
                << tactile::format_mm(v.location.y) << "): " << tactile::format_mm(v.measured) << " mm < "
                << tactile::format_mm(v.limit) << " mm\n";
    }
  }
  return report.pass() ? kOk : kFailed;
}

tactile::Session load_session(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::malformed_session, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return tactile::read_session(ss.str());
}

int cmd_score(const Config& cfg, const std::string& answer_path, const std::string& reference_path) {
  const tactile::Session session = load_session(answer_path);
  const tactile::Arrangement reference =
      reference_path.empty() ? tactile::canonical_arrangement() : load_session(reference_path).answer;
  const tactile::ScoreReport r = tactile::score_arrangement(session.answer, reference, session.duration_s);
  if (cfg.json) {
    Json confusions = Json::array();
    for (const auto& c : r.confusions) {
      confusions.push_back({{"slot", c.slot},
                            {"expected", tactile::name_of(c.expected)},
                            {"placed", tactile::name_of(c.placed)},
                            {"distance", c.distance}});
    }
    Json doc = {{"n_correct", r.n_correct},
                {"placed", r.placed()},
                {"total", tactile::kHueCount},
                {"displacement", r.displacement},
                {"confusions", confusions},
                {"duration_s", r.duration_s ? Json(*r.duration_s) : Json(nullptr)}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << r.n_correct << "/" << tactile::kHueCount << " correct (" << r.placed() << " placed)\n";
    if (r.duration_s) std::cout << "duration: " << fmt2(*r.duration_s) << " s\n";
    std::cout << "displacement:";
    for (std::size_t d = 0; d < r.displacement.size(); ++d) std::cout << " " << d << ":" << r.displacement[d];
    std::cout << "\n";
    for (const auto& c : r.confusions) {
      std::cout << "  slot " << c.slot << ": expected " << tactile::name_of(c.expected) << ", placed "
                << tactile::name_of(c.placed) << " (off by " << c.distance << ")\n";
    }
    if (session.notes) std::cout << "notes: " << *session.notes << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tactile color patterns: swatches, color wheel, reconstruction kit"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--out", cfg.out, "Output file (single-file commands)");
  app.add_option("--out-dir", cfg.out_dir, "Output directory");
  app.add_option("--format", cfg.formats, "Output format(s): svg, pgm, manifest")
      ->delimiter(',')
      ->check(CLI::IsMember({"svg", "pgm", "manifest"}));
  app.add_flag("--json", cfg.json, "Machine-readable JSON report on stdout");
  app.add_option("--dpi", cfg.dpi, "Heightmap resolution (100..1200)");
  app.add_option("--radii", cfg.radii, "Wheel inner,outer radius in mm");
  app.add_option("--size", cfg.size, "Swatch WxH in mm");
  app.add_option("--min-gap", cfg.min_gap, "Minimum gap between raised elements (mm)");
  app.add_option("--min-line-width", cfg.min_line_width, "Minimum stroke width (mm)");
  app.add_option("--min-dot-diameter", cfg.min_dot_diameter, "Minimum dot diameter (mm)");
  app.add_option("--min-period", cfg.min_period, "Minimum lattice period (mm)");

  std::string color, mix, manifest, answer, reference;
  auto* hue = app.add_subcommand("hue", "Swatch for a hue name or #rrggbb color");
  hue->add_option("color", color)->required();
  auto* swatch = app.add_subcommand("swatch", "Swatch for an explicit mix");
  swatch->add_option("--mix", mix, "e.g. y=0.75,r=0.25")->required();
  auto* wheel = app.add_subcommand("wheel", "Twelve-hue color wheel");
  auto* kit = app.add_subcommand("kit", "Twelve pieces, case and index");
  auto* decode = app.add_subcommand("decode", "Recover hue and mix from a manifest");
  decode->add_option("manifest", manifest)->required();
  auto* validate = app.add_subcommand("validate", "Check a manifest against legibility limits");
  validate->add_option("manifest", manifest)->required();
  auto* score = app.add_subcommand("score", "Score a reconstruction session");
  score->add_option("answer", answer)->required();
  score->add_option("reference", reference);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*hue) return cmd_hue(cfg, color);
    if (*swatch) return cmd_swatch(cfg, mix);
    if (*wheel) return cmd_wheel(cfg);
    if (*kit) return cmd_kit(cfg);
    if (*decode) return cmd_decode(cfg, manifest);
    if (*validate) return cmd_validate(cfg, manifest);
    if (*score) return cmd_score(cfg, answer, reference);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kFailed;
}
