#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "tactile/error.hpp"
#include "tactile/geometry.hpp"

namespace tactile::detail {

using Json = nlohmann::ordered_json;

/// Line number (1-based) of a byte offset, for parse diagnostics.
inline std::size_t line_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) line += text[i] == '\n';
  return line;
}

/// Parses a document, turning syntax errors into `code` with a line number.
inline Json parse_document(std::string_view text, ErrorCode code) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(code, "line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
}

/// Typed field access that reports the JSON path of whatever is missing or
/// mistyped.
class FieldReader {
 public:
  explicit FieldReader(ErrorCode code) : code_(code) {}

  [[noreturn]] void fail(const std::string& path, const std::string& what) const {
    throw Error(code_, "field '" + path + "': " + what);
  }

  const Json& member(const Json& obj, const std::string& path, const char* key) const {
    if (!obj.is_object()) fail(path, "expected object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(join(path, key), "missing");
    return *it;
  }

  const Json& array(const Json& obj, const std::string& path, const char* key) const {
    const Json& v = member(obj, path, key);
    if (!v.is_array()) fail(join(path, key), "expected array");
    return v;
  }

  double number(const Json& obj, const std::string& path, const char* key) const {
    return number(member(obj, path, key), join(path, key));
  }

  double number(const Json& v, const std::string& path) const {
    if (!v.is_number()) fail(path, "expected number");
    return v.get<double>();
  }

  std::string string(const Json& obj, const std::string& path, const char* key) const {
    const Json& v = member(obj, path, key);
    if (!v.is_string()) fail(join(path, key), "expected string");
    return v.get<std::string>();
  }

  Point point(const Json& v, const std::string& path) const {
    if (!v.is_array() || v.size() != 2) fail(path, "expected [x, y]");
    return {number(v[0], path + "[0]"), number(v[1], path + "[1]")};
  }

  Point point(const Json& obj, const std::string& path, const char* key) const {
    return point(member(obj, path, key), join(path, key));
  }

  static std::string join(const std::string& path, const char* key) {
    return path.empty() ? std::string(key) : path + "." + key;
  }

  static std::string index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

 private:
  ErrorCode code_;
};

inline Json to_json(Point p) { return Json::array({p.x, p.y}); }

}  // namespace tactile::detail
