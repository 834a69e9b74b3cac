#ifndef HOMNARY_ERROR_HPP
#define HOMNARY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace homnary {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Semantic input problems: dimension/field mismatch, division by zero,
/// unknown fixture, violated precondition.
struct InputError : Error {
  using Error::Error;
};

/// Syntax errors carry the 1-based line number of the offending line
/// (0 when the text did not come from a line-oriented source).
struct SyntaxError : InputError {
  SyntaxError(const std::string& msg, int line_number = 0)
      : InputError(line_number > 0 ? "line " + std::to_string(line_number) + ": " + msg : msg),
        line(line_number) {}
  int line;
};

}  // namespace homnary

#endif
