#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "tactile/error.hpp"

namespace tactile {

/// The twelve wheel hues, indexed clockwise starting from yellow at 12 o'clock.
enum class Hue : std::uint8_t {
  yellow = 0,
  yellow_orange,
  orange,
  red_orange,
  red,
  red_purple,
  purple,
  blue_purple,
  blue,
  blue_green,
  green,
  yellow_green,
};

enum class HueCategory { primary, secondary, tertiary };

enum class Primary : std::uint8_t { yellow = 0, red = 1, blue = 2 };

inline constexpr int kHueCount = 12;

inline constexpr std::array<Hue, kHueCount> kAllHues = {
    Hue::yellow, Hue::yellow_orange, Hue::orange, Hue::red_orange, Hue::red,   Hue::red_purple,
    Hue::purple, Hue::blue_purple,   Hue::blue,   Hue::blue_green, Hue::green, Hue::yellow_green,
};

inline constexpr std::array<std::string_view, kHueCount> kHueNames = {
    "yellow", "yellow_orange", "orange",     "red_orange", "red",   "red_purple",
    "purple", "blue_purple",   "blue",       "blue_green", "green", "yellow_green",
};

constexpr int index_of(Hue hue) { return static_cast<int>(hue); }

inline Hue hue_from_index(int index) {
  if (index < 0 || index >= kHueCount) {
    throw Error(ErrorCode::invalid_hue, "hue index " + std::to_string(index) + " outside 0..11");
  }
  return static_cast<Hue>(index);
}

constexpr std::string_view name_of(Hue hue) { return kHueNames[static_cast<std::size_t>(index_of(hue))]; }

inline std::optional<Hue> hue_from_name(std::string_view name) {
  for (int i = 0; i < kHueCount; ++i) {
    if (kHueNames[static_cast<std::size_t>(i)] == name) return static_cast<Hue>(i);
  }
  return std::nullopt;
}

/// Primaries sit at multiples of 4, secondaries halfway between them, the
/// odd indices are tertiaries.
constexpr HueCategory category_of(Hue hue) {
  const int i = index_of(hue);
  if (i % 2 == 1) return HueCategory::tertiary;
  return i % 4 == 0 ? HueCategory::primary : HueCategory::secondary;
}

constexpr std::string_view name_of(Primary primary) {
  switch (primary) {
    case Primary::yellow: return "yellow";
    case Primary::red: return "red";
    case Primary::blue: return "blue";
  }
  return "?";
}

/// Pigment fractions. Chromatic mixes accepted by the library sum to one.
struct RYBMix {
  double r = 0.0;
  double y = 0.0;
  double b = 0.0;

  double operator[](Primary p) const {
    switch (p) {
      case Primary::yellow: return y;
      case Primary::red: return r;
      case Primary::blue: return b;
    }
    return 0.0;
  }

  int nonzero_count() const { return (r > 0.0) + (y > 0.0) + (b > 0.0); }

  friend bool operator==(const RYBMix&, const RYBMix&) = default;
};

inline constexpr double kMixSumTolerance = 1e-9;

inline bool is_normalized(const RYBMix& mix) {
  for (double v : {mix.r, mix.y, mix.b}) {
    if (!(v >= 0.0 && v <= 1.0)) return false;
  }
  return std::abs(mix.r + mix.y + mix.b - 1.0) <= kMixSumTolerance;
}

inline void require_normalized(const RYBMix& mix) {
  if (!is_normalized(mix)) {
    throw Error(ErrorCode::invalid_mix, "mix components must lie in [0,1] and sum to 1");
  }
}

namespace detail {

// Tertiaries are the equal blend of a primary and its neighbouring secondary,
// which puts them at 3:1 toward the named primary.
inline constexpr std::array<RYBMix, kHueCount> kMixTable = {{
    {0.0, 1.0, 0.0},    // yellow
    {0.25, 0.75, 0.0},  // yellow_orange
    {0.5, 0.5, 0.0},    // orange
    {0.75, 0.25, 0.0},  // red_orange
    {1.0, 0.0, 0.0},    // red
    {0.75, 0.0, 0.25},  // red_purple
    {0.5, 0.0, 0.5},    // purple
    {0.25, 0.0, 0.75},  // blue_purple
    {0.0, 0.0, 1.0},    // blue
    {0.0, 0.25, 0.75},  // blue_green
    {0.0, 0.5, 0.5},    // green
    {0.0, 0.75, 0.25},  // yellow_green
}};

}  // namespace detail

inline RYBMix mix_of(Hue hue) { return detail::kMixTable[static_cast<std::size_t>(index_of(hue))]; }

/// Nearest wheel hue by Euclidean distance in RYB; lowest index wins ties.
/// Throws achromatic_mix when the three components are within 0.05 of each
/// other, since no hue on the wheel represents a grey/brown mix.
inline Hue hue_of_mix(const RYBMix& mix) {
  require_normalized(mix);
  const double hi = std::max({mix.r, mix.y, mix.b});
  const double lo = std::min({mix.r, mix.y, mix.b});
  if (hi - lo <= 0.05) {
    throw Error(ErrorCode::achromatic_mix, "components are within 0.05 of each other");
  }
  int best = 0;
  double best_d2 = INFINITY;
  for (int i = 0; i < kHueCount; ++i) {
    const RYBMix& t = detail::kMixTable[static_cast<std::size_t>(i)];
    const double d2 = (mix.r - t.r) * (mix.r - t.r) + (mix.y - t.y) * (mix.y - t.y) + (mix.b - t.b) * (mix.b - t.b);
    if (d2 < best_d2) {
      best_d2 = d2;
      best = i;
    }
  }
  return static_cast<Hue>(best);
}

struct ClockPosition {
  int hour = 12;           // 1..12
  double angle_deg = 90;   // math convention: 0 at 3 o'clock, counterclockwise
};

inline double clock_angle_deg(int hour) {
  double a = std::fmod(90.0 - 30.0 * (hour % 12), 360.0);
  if (a < 0.0) a += 360.0;
  return a;
}

inline ClockPosition clock_position(Hue hue) {
  const int i = index_of(hue);
  const int hour = i == 0 ? 12 : i;
  return {hour, clock_angle_deg(hour)};
}

struct RGBColor {
  std::uint8_t r8 = 0;
  std::uint8_t g8 = 0;
  std::uint8_t b8 = 0;

  friend bool operator==(const RGBColor&, const RGBColor&) = default;
};

/// Parses "#rrggbb" (case-insensitive, leading '#' optional).
inline std::optional<RGBColor> parse_hex_rgb(std::string_view text) {
  if (!text.empty() && text.front() == '#') text.remove_prefix(1);
  if (text.size() != 6) return std::nullopt;
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  std::array<int, 3> v{};
  for (std::size_t k = 0; k < 3; ++k) {
    const int hi = nibble(text[2 * k]);
    const int lo = nibble(text[2 * k + 1]);
    if (hi < 0 || lo < 0) return std::nullopt;
    v[k] = hi * 16 + lo;
  }
  return RGBColor{static_cast<std::uint8_t>(v[0]), static_cast<std::uint8_t>(v[1]), static_cast<std::uint8_t>(v[2])};
}

namespace detail {

struct Rgb01 {
  double r, g, b;
};

// Corners of the RYB cube, indexed by (red, yellow, blue) bits.
// White, yellow, blue, and the three two-pigment corners follow Gossett and
// Chen; red uses #FE2712.
inline constexpr std::array<Rgb01, 8> kRybCorners = {{
    {1.0, 1.0, 1.0},                          // 000 paper white
    {254.0 / 255.0, 39.0 / 255.0, 18.0 / 255.0},  // 100 red
    {1.0, 1.0, 0.0},                          // 010 yellow
    {1.0, 0.5, 0.0},                          // 110 red + yellow
    {0.163, 0.373, 0.6},                      // 001 blue
    {0.5, 0.0, 0.5},                          // 101 red + blue
    {0.0, 0.66, 0.2},                         // 011 yellow + blue
    {0.2, 0.094, 0.0},                        // 111 all three
}};

inline Rgb01 ryb_cube(double r, double y, double b) {
  Rgb01 out{0, 0, 0};
  for (int bits = 0; bits < 8; ++bits) {
    const double w = ((bits & 1) ? r : 1.0 - r) * ((bits & 2) ? y : 1.0 - y) * ((bits & 4) ? b : 1.0 - b);
    const Rgb01& c = kRybCorners[static_cast<std::size_t>(bits)];
    out.r += w * c.r;
    out.g += w * c.g;
    out.b += w * c.b;
  }
  return out;
}

inline std::uint8_t to_byte(double v) {
  return static_cast<std::uint8_t>(std::clamp(std::floor(v * 255.0 + 0.5), 0.0, 255.0));
}

}  // namespace detail

/// Display color for a hue: trilinear RYB cube lookup at the hue's mix scaled
/// so its dominant pigment is 1.
inline RGBColor canonical_rgb(Hue hue) {
  const RYBMix m = mix_of(hue);
  const double peak = std::max({m.r, m.y, m.b});
  const detail::Rgb01 c = detail::ryb_cube(m.r / peak, m.y / peak, m.b / peak);
  return {detail::to_byte(c.r), detail::to_byte(c.g), detail::to_byte(c.b)};
}

inline constexpr int kAchromaticSaturation = 16;

/// Quantizes an arbitrary color to the wheel. Both input and candidates are
/// compared after scaling to unit component sum, so only chromaticity matters.
inline Hue rgb_to_hue(const RGBColor& color) {
  const int hi = std::max({color.r8, color.g8, color.b8});
  const int lo = std::min({color.r8, color.g8, color.b8});
  if (hi - lo < kAchromaticSaturation) {
    throw Error(ErrorCode::achromatic, "saturation below 16/255");
  }
  auto chroma = [](const RGBColor& c) {
    const double s = double(c.r8) + double(c.g8) + double(c.b8);
    return std::array<double, 3>{c.r8 / s, c.g8 / s, c.b8 / s};
  };
  const auto p = chroma(color);
  int best = 0;
  double best_d2 = INFINITY;
  for (int i = 0; i < kHueCount; ++i) {
    const auto q = chroma(canonical_rgb(static_cast<Hue>(i)));
    const double d2 = (p[0] - q[0]) * (p[0] - q[0]) + (p[1] - q[1]) * (p[1] - q[1]) + (p[2] - q[2]) * (p[2] - q[2]);
    if (d2 < best_d2) {
      best_d2 = d2;
      best = i;
    }
  }
  return static_cast<Hue>(best);
}

}  // namespace tactile
