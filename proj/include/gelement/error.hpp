#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gelement {

enum class ErrorKind {
  not_a_matroid,
  empty_family,
  has_loops,
  has_coloops,
  invalid_degree,
  dimension_mismatch,
  not_an_lsop,
  lsop_not_found,
  witness_not_found,
  parse_error,
  too_large,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every recoverable failure in the library is reported as an Error carrying
/// its kind, so the CLI can map kinds onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gelement
