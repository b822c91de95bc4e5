#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace taut {

/// Malformed expression text; position() is a 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A generator whose indices do not fit the ambient marking count.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Operands built for different ambient marking counts.
class AmbientMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An argument outside an operation's domain (wrong degree, wrong ring, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace taut
