#pragma once

#include <stdexcept>
#include <string>

namespace galcoh {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid input data: malformed descriptor, ill-defined homomorphism,
/// violated invariant.
class ValidationError : public Error {
public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

/// A resource cap (group size, dimension) was exceeded.
class CapError : public Error {
public:
  explicit CapError(const std::string& what) : Error(what) {}
};

}  // namespace galcoh
