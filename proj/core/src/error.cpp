#include "latsec/error.hpp"

namespace latsec {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::unsupported_rank: return "unsupported-rank";
    case ErrorKind::enumeration_budget: return "enumeration-budget";
    case ErrorKind::containment: return "containment";
    case ErrorKind::unsupported_quotient: return "unsupported-quotient";
    case ErrorKind::requires_symmetry: return "requires-symmetry";
    case ErrorKind::bit_length: return "bit-length";
    case ErrorKind::unknown_name: return "unknown-name";
    case ErrorKind::parse: return "parse";
    case ErrorKind::invalid_argument: return "invalid-argument";
  }
  return "unknown";
}

}  // namespace latsec
