#pragma once

#include <stdexcept>
#include <string>

namespace ibelief {

// Base for every error raised by the library. Messages are meant to be shown
// to a user verbatim.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when Dempster's rule meets total conflict (K = 1).
class ConflictError : public Error {
 public:
  ConflictError(const std::string& what, double conflict)
      : Error(what), conflict_(conflict) {}

  double conflict() const { return conflict_; }

 private:
  double conflict_;
};

}  // namespace ibelief
