#pragma once

#include <stdexcept>
#include <string>

namespace stdlat {

class LatticeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input: singular bases, dimension mismatches,
// dimensions outside an operation's domain.
class InputError : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

// A configured ceiling (candidate count, box volume) was exceeded.
class ResourceError : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

// A result failed its own verification. Never expected; indicates a bug.
class ConsistencyError : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

}  // namespace stdlat
