#include "skein/error.hpp"

namespace skein {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_level: return "invalid-level";
    case ErrorKind::invalid_color: return "invalid-color";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::division_by_zero: return "division-by-zero-in-field";
    case ErrorKind::not_real: return "not-real";
    case ErrorKind::precision_exhausted: return "precision-exhausted";
    case ErrorKind::syntax_error: return "syntax-error";
    case ErrorKind::degree_violation: return "degree-violation";
    case ErrorKind::disconnected: return "disconnected";
    case ErrorKind::non_hyperbolic: return "non-hyperbolic";
    case ErrorKind::index_out_of_range: return "index-out-of-range";
    case ErrorKind::degenerate_cut: return "degenerate-cut";
    case ErrorKind::empty_block_space: return "empty-block-space";
    case ErrorKind::trivially_definite: return "trivially-definite";
    case ErrorKind::missing_curve_type: return "missing-curve-type";
    case ErrorKind::too_many_colorings: return "too-many-colorings";
  }
  return "unknown";
}

}  // namespace skein
