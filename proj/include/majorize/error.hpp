#ifndef MAJORIZE_ERROR_HPP
#define MAJORIZE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace majorize {

/// Raised when caller-supplied data violates an operation's precondition
/// (length mismatch, malformed rational, non-integral exponent in exact mode...).
class InputError : public std::invalid_argument {
public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a computed certificate fails its own re-verification.
/// Seeing one of these means a bug, never a valid answer.
class InvariantError : public std::logic_error {
public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw InputError(msg);
}

inline void ensure(bool cond, const std::string& msg) {
  if (!cond) throw InvariantError(msg);
}

}  // namespace majorize

#endif  // MAJORIZE_ERROR_HPP
