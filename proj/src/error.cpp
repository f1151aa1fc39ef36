#include "lagmesh/error.hpp"

namespace lagmesh {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::Convergence: return "convergence failure";
    case ErrorKind::Evaluation: return "evaluation error";
    case ErrorKind::Divergence: return "divergent matrix element";
    case ErrorKind::IllConditioned: return "ill-conditioned basis";
    case ErrorKind::IndeterminatePhase: return "indeterminate phase";
  }
  return "error";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void throw_error(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace lagmesh
