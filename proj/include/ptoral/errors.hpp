#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ptoral {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Raised when an enumeration would exceed its configured cap.  `reached` is
// the partial size at the moment the cap was hit.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t reached, std::uint64_t cap)
      : Error(what + " (reached " + std::to_string(reached) + ", cap " +
              std::to_string(cap) + ")"),
        reached_(reached),
        cap_(cap) {}

  std::uint64_t reached() const noexcept { return reached_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t reached_;
  std::uint64_t cap_;
};

class NotInvariant : public Error {
 public:
  using Error::Error;
};

class LiftNotFound : public Error {
 public:
  using Error::Error;
};

}  // namespace ptoral
