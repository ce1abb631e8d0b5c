#pragma once

#include <stdexcept>
#include <string>

namespace gln {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SupportMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LambdaMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SideMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LengthMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VersionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CorruptEntry : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when two code paths that must agree produce different values.
struct InternalInconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace gln
