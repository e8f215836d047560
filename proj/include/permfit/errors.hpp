#pragma once

#include <stdexcept>
#include <string>

namespace permfit {

/// Closure or enumeration grew past a configured bound.
class BoundExceeded : public std::runtime_error {
public:
  BoundExceeded(const std::string& what, std::size_t bound)
      : std::runtime_error(what + " (bound " + std::to_string(bound) + ")"),
        bound_(bound) {}

  std::size_t bound() const noexcept { return bound_; }

private:
  std::size_t bound_;
};

/// Structural misuse: mismatched parent groups, quotient by a non-normal
/// subgroup, residual of a class node that is not quotient-stable.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A theorem-level hypothesis (pi-solubility, invariability, ...) does not
/// hold for the given input.
class HypothesisError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `where()` is a character offset (class expressions)
/// or a line number (group files); the message already includes it.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t where)
      : std::runtime_error(what), where_(where) {}

  std::size_t where() const noexcept { return where_; }

private:
  std::size_t where_;
};

}  // namespace permfit
