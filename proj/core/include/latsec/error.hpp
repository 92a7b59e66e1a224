#pragma once

#include <stdexcept>
#include <string>

namespace latsec {

enum class ErrorKind {
  domain,
  unsupported_rank,
  enumeration_budget,
  containment,
  unsupported_quotient,
  requires_symmetry,
  bit_length,
  unknown_name,
  parse,
  invalid_argument,
};

const char* to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` lets callers (and the CLI)
/// distinguish failure classes without a hierarchy.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace latsec
