#pragma once

#include <stdexcept>
#include <string>

namespace qknot {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parsing / argument validation
struct SyntaxError : Error { using Error::Error; };
struct EmptyWordError : Error { using Error::Error; };
struct ArgumentError : Error { using Error::Error; };

// Polynomial layer
struct MissingVariable : Error { using Error::Error; };
struct ZeroPolynomial : Error { using Error::Error; };
struct NotExpressible : Error { using Error::Error; };
struct UnsupportedIdeal : Error { using Error::Error; };

// Numeric classification layer
struct DegeneratePoint : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct NotUnitNorm : Error { using Error::Error; };
struct UnsupportedAlgebra : Error { using Error::Error; };
struct OffVariety : Error { using Error::Error; };
struct ZeroAxisDirection : Error { using Error::Error; };

// I/O
struct IoError : Error { using Error::Error; };

} // namespace qknot
