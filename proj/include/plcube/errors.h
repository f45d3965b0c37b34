#pragma once

#include <stdexcept>
#include <string>

namespace plcube {

// Base for every error raised by the library. Callers that only care about
// "something went wrong" catch this; the subclasses name the failure kind.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error { using Error::Error; };
class DegenerateError : public Error { using Error::Error; };
class NotFoundError : public Error { using Error::Error; };
class DomainError : public Error { using Error::Error; };
class UnsupportedDimension : public Error { using Error::Error; };
class ParseError : public Error { using Error::Error; };
class InvalidMapError : public Error { using Error::Error; };

// Raised by braid tracing when a sample tuple is not generic. The message names
// the offending strand pair and time interval; callers usually resample.
class BraidDegeneracy : public Error { using Error::Error; };

}  // namespace plcube
