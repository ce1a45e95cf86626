#include "error.hpp"

namespace kbgq {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::validation: return "validation";
    case ErrorKind::parse: return "parse";
    case ErrorKind::resource: return "resource";
    case ErrorKind::membership: return "membership";
    case ErrorKind::internal_consistency: return "internal_consistency";
  }
  return "unknown";
}

}  // namespace kbgq
