#pragma once

#include <stdexcept>
#include <string>

namespace lieext {

/// Bad caller input: wrong sizes, malformed text, unknown names, violated
/// preconditions. The CLI maps this to exit code 2.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A brute-force check would exceed the configured size cap.
class CapExceeded : public InvalidArgument {
public:
  using InvalidArgument::InvalidArgument;
};

/// Two independent routes to the same answer disagreed. Always a bug.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Floating-point zero flags disagree with the exact rank oracle; the
/// tolerance is unsuitable for the input.
class SpectralMismatch : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidArgument(message);
}

inline void ensure(bool condition, const std::string& message) {
  if (!condition) throw InternalError(message);
}

}  // namespace detail
}  // namespace lieext
