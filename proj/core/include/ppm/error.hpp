#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ppm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position` is the 1-based token (or line) at fault.
class ParseError : public Error {
  public:
    ParseError(const std::string &message, std::size_t position)
        : Error(message + " (at position " + std::to_string(position) + ")"), position_(position) {}

    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

/// A precondition on an argument was violated (point outside S_sigma, invalid decomposition, ...).
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

/// A configured size limit was exceeded (e.g. exact treewidth on too many vertices).
class LimitExceeded : public Error {
  public:
    using Error::Error;
};

} // namespace ppm
