#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace typent {

enum class Errc {
  invalid_dimension,
  normalization_error,
  reducible_space,
  range_error,
  degenerate_direction,
  unsupported_space,
  unsupported_composite,
  inconsistency_error,
  undefined_ratio,
  degenerate_composite,
  empty_face,
  invalid_probe,
  cone_error,
  internal_error,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace typent
