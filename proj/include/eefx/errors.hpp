#pragma once

#include <stdexcept>
#include <string>

namespace eefx {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad indices, inconsistent shapes, unparsable files.
class InputError : public Error {
 public:
  using Error::Error;
};

// A configured enumeration cap was exceeded.
class SizeError : public Error {
 public:
  using Error::Error;
};

// An internal guarantee failed (closure, final verification, extraction).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace eefx
