#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tactile {

enum class ErrorCode {
  invalid_hue,
  invalid_mix,
  achromatic_mix,
  achromatic,
  invalid_fraction,
  invalid_scale,
  invalid_constraints,
  invalid_region,
  region_too_small,
  clearance_infeasible,
  ring_too_thin,
  unclassifiable,
  too_few_elements,
  dpi_out_of_range,
  manifest_version_mismatch,
  malformed_manifest,
  duplicate_piece,
  invalid_reference,
  malformed_session,
  invalid_input,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_hue: return "InvalidHue";
    case ErrorCode::invalid_mix: return "InvalidMix";
    case ErrorCode::achromatic_mix: return "AchromaticMix";
    case ErrorCode::achromatic: return "Achromatic";
    case ErrorCode::invalid_fraction: return "InvalidFraction";
    case ErrorCode::invalid_scale: return "InvalidScale";
    case ErrorCode::invalid_constraints: return "InvalidConstraints";
    case ErrorCode::invalid_region: return "InvalidRegion";
    case ErrorCode::region_too_small: return "RegionTooSmall";
    case ErrorCode::clearance_infeasible: return "ClearanceInfeasible";
    case ErrorCode::ring_too_thin: return "RingTooThin";
    case ErrorCode::unclassifiable: return "Unclassifiable";
    case ErrorCode::too_few_elements: return "TooFewElements";
    case ErrorCode::dpi_out_of_range: return "DpiOutOfRange";
    case ErrorCode::manifest_version_mismatch: return "ManifestVersionMismatch";
    case ErrorCode::malformed_manifest: return "MalformedManifest";
    case ErrorCode::duplicate_piece: return "DuplicatePiece";
    case ErrorCode::invalid_reference: return "InvalidReference";
    case ErrorCode::malformed_session: return "MalformedSession";
    case ErrorCode::invalid_input: return "InvalidInput";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map failure classes without parsing
/// messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tactile
