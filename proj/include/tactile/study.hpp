#pragma once

#include <array>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tactile/color_wheel.hpp"
#include "tactile/error.hpp"
#include "tactile/json_io.hpp"

namespace tactile {

/// Slot i is wheel position i (clockwise from 12 o'clock); each slot holds
/// the piece placed there, or nothing if the task was abandoned early.
using Arrangement = std::array<std::optional<Hue>, kHueCount>;

inline Arrangement canonical_arrangement() {
  Arrangement a;
  for (Hue h : kAllHues) a[static_cast<std::size_t>(index_of(h))] = h;
  return a;
}

inline std::size_t placed_count(const Arrangement& a) {
  std::size_t n = 0;
  for (const auto& s : a) n += s.has_value();
  return n;
}

/// Ring distance between two slots, 0..6.
inline int circular_distance(int a, int b) {
  const int d = std::abs(a - b) % kHueCount;
  return std::min(d, kHueCount - d);
}

struct Confusion {
  Hue expected = Hue::yellow;  // what the reference holds in that slot
  Hue placed = Hue::yellow;    // what the answer put there
  int slot = 0;
  int distance = 0;

  friend bool operator==(const Confusion&, const Confusion&) = default;
};

struct ScoreReport {
  int n_correct = 0;
  std::array<int, 7> displacement{};  // placements per circular distance 0..6
  std::vector<Confusion> confusions;
  std::optional<double> duration_s;

  int placed() const {
    int n = 0;
    for (int c : displacement) n += c;
    return n;
  }
};

namespace detail {

inline void require_unique(const Arrangement& a, ErrorCode code, std::string_view what) {
  std::array<bool, kHueCount> seen{};
  for (const auto& s : a) {
    if (!s) continue;
    auto& flag = seen[static_cast<std::size_t>(index_of(*s))];
    if (flag) throw Error(code, std::string(what) + " places '" + std::string(name_of(*s)) + "' more than once");
    flag = true;
  }
}

}  // namespace detail

/// Scores an answered arrangement. Each placed piece is charged the ring
/// distance from where it was put to where the reference keeps it.
inline ScoreReport score_arrangement(const Arrangement& answer, const Arrangement& reference = canonical_arrangement(),
                                     std::optional<double> duration_s = std::nullopt) {
  detail::require_unique(answer, ErrorCode::duplicate_piece, "answer");
  detail::require_unique(reference, ErrorCode::invalid_reference, "reference");
  if (placed_count(reference) != static_cast<std::size_t>(kHueCount)) {
    throw Error(ErrorCode::invalid_reference, "reference must fill all 12 slots");
  }
  std::array<int, kHueCount> home{};
  for (int s = 0; s < kHueCount; ++s) home[static_cast<std::size_t>(index_of(*reference[static_cast<std::size_t>(s)]))] = s;

  ScoreReport report;
  report.duration_s = duration_s;
  for (int s = 0; s < kHueCount; ++s) {
    const auto& piece = answer[static_cast<std::size_t>(s)];
    if (!piece) continue;
    const int d = circular_distance(s, home[static_cast<std::size_t>(index_of(*piece))]);
    ++report.displacement[static_cast<std::size_t>(d)];
    if (d == 0) {
      ++report.n_correct;
    } else {
      report.confusions.push_back({*reference[static_cast<std::size_t>(s)], *piece, s, d});
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Session files: {"version": "1", "answer": [12 x hue name | null],
//                 "duration_s"?: number, "timestamp"?: string, "notes"?: string}

inline constexpr std::string_view kSessionVersion = "1";

struct Session {
  Arrangement answer;
  std::optional<double> duration_s;
  std::optional<std::string> timestamp;
  std::optional<std::string> notes;
};

inline Session session_from_json(const detail::Json& doc) {
  const detail::FieldReader in(ErrorCode::malformed_session);
  const std::string version = in.string(doc, "", "version");
  if (version != kSessionVersion) in.fail("version", "unsupported session version '" + version + "'");
  const detail::Json& answer = in.array(doc, "", "answer");
  if (answer.size() != static_cast<std::size_t>(kHueCount)) in.fail("answer", "expected 12 entries");
  Session session;
  for (std::size_t i = 0; i < answer.size(); ++i) {
    const detail::Json& v = answer[i];
    if (v.is_null()) continue;
    if (!v.is_string()) in.fail(detail::FieldReader::index("answer", i), "expected hue name or null");
    const auto hue = hue_from_name(v.get<std::string>());
    if (!hue) in.fail(detail::FieldReader::index("answer", i), "unknown hue '" + v.get<std::string>() + "'");
    session.answer[i] = *hue;
  }
  if (doc.contains("duration_s") && !doc["duration_s"].is_null()) {
    session.duration_s = in.number(doc, "", "duration_s");
    if (*session.duration_s < 0.0) in.fail("duration_s", "must be non-negative");
  }
  if (doc.contains("timestamp") && !doc["timestamp"].is_null()) session.timestamp = in.string(doc, "", "timestamp");
  if (doc.contains("notes") && !doc["notes"].is_null()) session.notes = in.string(doc, "", "notes");
  return session;
}

inline Session read_session(std::string_view text) {
  return session_from_json(detail::parse_document(text, ErrorCode::malformed_session));
}

inline std::string write_session(const Session& session) {
  detail::Json answer = detail::Json::array();
  for (const auto& s : session.answer) {
    if (s) {
      answer.push_back(name_of(*s));
    } else {
      answer.push_back(nullptr);
    }
  }
  detail::Json doc = {{"version", kSessionVersion}, {"answer", std::move(answer)}};
  if (session.duration_s) doc["duration_s"] = *session.duration_s;
  if (session.timestamp) doc["timestamp"] = *session.timestamp;
  if (session.notes) doc["notes"] = *session.notes;
  return doc.dump(2) + "\n";
}

}  // namespace tactile
