#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace motiondual {

/// Raised when an integer tuple is not a valid SO(n) signature.
class SignatureError : public std::invalid_argument {
public:
  enum class Kind { WrongLength, MonotonicityViolated, NegativeEntry };

  SignatureError(Kind kind, std::size_t index, const std::string& what)
      : std::invalid_argument(what), kind_(kind), index_(index) {}

  Kind kind() const noexcept { return kind_; }
  /// 1-based position of the first violated inequality (0 for WrongLength).
  std::size_t index() const noexcept { return index_; }

private:
  Kind kind_;
  std::size_t index_;
};

/// Arguments live in incompatible groups (e.g. SO(5) vs SO(6)).
class ContextMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class PreconditionViolated : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text or JSON input.
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class UnknownPoint : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

/// An internal cross-check disagreed with a proven statement. Always a bug.
class CertificationFailure : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace motiondual
