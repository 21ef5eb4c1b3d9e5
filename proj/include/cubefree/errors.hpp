#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cubefree {

/// Input outside the mathematical domain of an operation (e.g. the period of
/// the empty word).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A word literal contained something other than 'a' or 'b'.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, char offending)
      : std::invalid_argument("invalid letter '" + std::string(1, offending) +
                              "' at position " + std::to_string(position)),
        position_(position) {}

  /// 1-based position of the offending character.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Bad option or argument combination (unknown name, odd m, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A precondition of an incremental check was violated.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A configured size or depth bound would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::uint64_t projected)
      : std::runtime_error(what + " (projected " + std::to_string(projected) + ")"),
        projected_(projected) {}

  std::uint64_t projected() const noexcept { return projected_; }

 private:
  std::uint64_t projected_;
};

/// An internal invariant of the construction failed; the result must not be
/// trusted.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cubefree
