#ifndef GINDEPTH_ERRORS_HPP
#define GINDEPTH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gindepth {

// Every failure the library raises deliberately carries one of these kinds,
// so callers and tests can branch without parsing message text.
enum class ErrorKind {
  dimension_mismatch,
  field_mismatch,
  overflow,
  singular_matrix,
  degenerate_sampler,
  projection_undefined,
  parse,
  contract,  // caller violated a documented precondition
  unstable,  // a randomized computation failed to stabilize
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace gindepth

#endif
