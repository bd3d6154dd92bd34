#include "typent/error.hpp"

namespace typent {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_dimension: return "invalid-dimension";
    case Errc::normalization_error: return "normalization-error";
    case Errc::reducible_space: return "reducible-space";
    case Errc::range_error: return "range-error";
    case Errc::degenerate_direction: return "degenerate-direction";
    case Errc::unsupported_space: return "unsupported-space";
    case Errc::unsupported_composite: return "unsupported-composite";
    case Errc::inconsistency_error: return "inconsistency-error";
    case Errc::undefined_ratio: return "undefined-ratio";
    case Errc::degenerate_composite: return "degenerate-composite";
    case Errc::empty_face: return "empty-face";
    case Errc::invalid_probe: return "invalid-probe";
    case Errc::cone_error: return "cone-error";
    case Errc::internal_error: return "internal-error";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace typent
