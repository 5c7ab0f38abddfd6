#include "superbethe/error.hpp"

namespace superbethe {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::pole_at_evaluation_point: return "pole_at_evaluation_point";
    case Errc::inexact_field: return "inexact_field";
    case Errc::higher_order_pole: return "higher_order_pole";
    case Errc::divergent_limit: return "divergent_limit";
    case Errc::not_covariant_dominant: return "not_covariant_dominant";
    case Errc::unknown_label: return "unknown_label";
    case Errc::vanishing_normalizer: return "vanishing_normalizer";
    case Errc::matrix_too_large: return "matrix_too_large";
    case Errc::equal_rank: return "equal_rank";
    case Errc::degenerate_denominator: return "degenerate_denominator";
    case Errc::no_finite_root: return "no_finite_root";
    case Errc::dimension_too_large: return "dimension_too_large";
    case Errc::diagonalization_failure: return "diagonalization_failure";
    case Errc::arithmetic_overflow: return "arithmetic_overflow";
    case Errc::config_error: return "config_error";
  }
  return "unknown";
}

}  // namespace superbethe
