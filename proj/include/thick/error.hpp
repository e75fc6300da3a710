#ifndef THICK_ERROR_HPP
#define THICK_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thick {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial or description text. `position` is a 0-based offset.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// A precondition of an operation does not hold (ring mismatch, not MCM, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// A configured computational budget was exhausted.
class ResourceError : public Error {
public:
  using Error::Error;
};

}  // namespace thick

#endif
