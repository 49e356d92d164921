#ifndef JFUN_ERRORS_HPP
#define JFUN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jfun {

// Base of every error raised by the library. The CLI maps the concrete
// subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A type label that does not match the grammar at all ("Z9", "A", "A-1").
class MalformedTypeError : public Error {
 public:
  using Error::Error;
};

// A well-formed label the library does not support (twisted affine, or
// untwisted affine outside type A without the escape hatch).
class UnsupportedTypeError : public Error {
 public:
  using Error::Error;
};

// Bad user input that is not a type label: cone vectors, option
// combinations, custom matrix documents.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Operands that belong to different rings or root data.
class MismatchError : public Error {
 public:
  using Error::Error;
};

// Exponent arithmetic left the machine-integer range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// evaluate_at hit a vanishing denominator factor.
class PoleError : public Error {
 public:
  using Error::Error;
};

// Something that must never happen did. Always a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

class CacheCorruptError : public Error {
 public:
  using Error::Error;
};

}  // namespace jfun

#endif  // JFUN_ERRORS_HPP
