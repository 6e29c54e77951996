#pragma once

#include <stdexcept>
#include <string>

namespace capitula {

/// Domain error raised by every module; the CLI maps it to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration or search cap was exceeded. Never silently approximated.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace capitula
