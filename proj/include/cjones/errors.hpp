#pragma once

#include <stdexcept>
#include <string>

namespace cjones {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// laurent
class NonExactDivision : public Error { using Error::Error; };
class ZeroPolynomial : public Error { using Error::Error; };

// braid
class ParseError : public Error { using Error::Error; };
class InvalidGenerator : public Error { using Error::Error; };

// vertex models / engine
class UnsupportedN : public Error { using Error::Error; };

// qformulas
class NonIntegerIndex : public Error { using Error::Error; };

// numerics
class NoConvergence : public Error { using Error::Error; };
class DegenerateData : public Error { using Error::Error; };
class EmptyInput : public Error { using Error::Error; };

// datastore
class IoError : public Error { using Error::Error; };
class SchemaError : public Error { using Error::Error; };
class VersionError : public Error { using Error::Error; };

}  // namespace cjones
