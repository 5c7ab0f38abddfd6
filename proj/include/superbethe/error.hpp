#pragma once

#include <stdexcept>
#include <string>

namespace superbethe {

/// Failure categories shared by every module and mirrored one-to-one by the
/// status codes of the C interface.
enum class Errc {
  invalid_argument = 1,
  pole_at_evaluation_point,
  inexact_field,
  higher_order_pole,
  divergent_limit,
  not_covariant_dominant,
  unknown_label,
  vanishing_normalizer,
  matrix_too_large,
  equal_rank,
  degenerate_denominator,
  no_finite_root,
  dimension_too_large,
  diagonalization_failure,
  arithmetic_overflow,
  config_error,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace superbethe
