#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skein {

enum class ErrorKind {
  invalid_level,
  invalid_color,
  invalid_argument,
  division_by_zero,
  not_real,
  precision_exhausted,
  syntax_error,
  degree_violation,
  disconnected,
  non_hyperbolic,
  index_out_of_range,
  degenerate_cut,
  empty_block_space,
  trivially_definite,
  missing_curve_type,
  too_many_colorings,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to a stable diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace skein
