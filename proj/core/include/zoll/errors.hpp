#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zoll {

/// Argument outside the domain of an operation (bad variable index,
/// arity mismatch, slot out of range, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A polynomial that is not an element of the requested ring
/// (R_d, R, R[t0]).
class MembershipError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed or law-violating base-operad / super-space configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent routes disagreed. Always a bug in this library.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace zoll
