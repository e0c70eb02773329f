#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gspec {

/// Base of every library-specific failure.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A dense computation was requested above the configured degree limit.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// A recursively defined series demanded one of its own coefficients at the
/// same degree it was computing.
class ProductivityError : public Error {
 public:
  using Error::Error;
};

/// A recursive placeholder was queried before define_recursive bound it.
class UndefinedSeriesError : public Error {
 public:
  using Error::Error;
};

/// Plethysm with an inner series that has a nonzero constant term while the
/// outer series has unbounded degree.
class CompositionError : public Error {
 public:
  using Error::Error;
};

/// Operands of a Γ-operation live over different groups, or an element is
/// not in the group.
class GroupMismatchError : public Error {
 public:
  using Error::Error;
};

/// A derived count that must be a nonnegative integer was not, which means
/// the input series is not the cycle index of a genuine Γ-species.
class InconsistentSeriesError : public Error {
 public:
  using Error::Error;
};

/// Brute-force enumeration refused because the structure set is too large.
class EnumerationLimitError : public Error {
 public:
  using Error::Error;
};

/// Species-expression syntax error at a byte offset of the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace gspec
