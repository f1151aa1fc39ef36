#pragma once

#include <stdexcept>
#include <string>

namespace lagmesh {

enum class ErrorKind {
  InvalidArgument,
  Convergence,
  Evaluation,
  Divergence,
  IllConditioned,
  IndeterminatePhase,
};

const char* to_string(ErrorKind kind);

/// Single exception type for the library; the kind tells callers (and the
/// CLI exit-code mapping) whether the input was bad or the numerics failed.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

  bool is_validation() const noexcept { return kind_ == ErrorKind::InvalidArgument; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void throw_error(ErrorKind kind, const std::string& what);

inline void require(bool condition, const std::string& what) {
  if (!condition) throw_error(ErrorKind::InvalidArgument, what);
}

}  // namespace lagmesh
