#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stringc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad cycle notation, out-of-range points, unknown names.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Two permutations (or a permutation and a group) of different degrees met.
class DegreeMismatch : public Error {
 public:
  DegreeMismatch(std::size_t lhs, std::size_t rhs)
      : Error("degree mismatch: " + std::to_string(lhs) + " vs " +
              std::to_string(rhs)) {}
};

/// An operation would enumerate more elements (or cosets) than allowed.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t needed, std::uint64_t cap)
      : Error(what + ": " + std::to_string(needed) + " exceeds cap " +
              std::to_string(cap)),
        needed_(needed),
        cap_(cap) {}

  std::uint64_t needed() const noexcept { return needed_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t needed_;
  std::uint64_t cap_;
};

/// The caller broke a documented precondition of an operation.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// A result that theory guarantees turned out false. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Default bound on the number of group elements any operation enumerates.
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

}  // namespace stringc
