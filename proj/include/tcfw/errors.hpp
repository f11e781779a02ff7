#pragma once

#include <stdexcept>
#include <string>

namespace tcfw {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// complex_core
class MalformedSimplex : public Error { using Error::Error; };
class LookupError : public Error { using Error::Error; };
class DomainError : public Error { using Error::Error; };

// chain_algebra
class DegreeError : public Error { using Error::Error; };
class Unsupported : public Error { using Error::Error; };
class ContractViolation : public Error { using Error::Error; };

// planner
class SectionInvalid : public Error { using Error::Error; };
class CompressionInvalid : public Error { using Error::Error; };
class FixtureError : public Error { using Error::Error; };
class Inapplicable : public Error { using Error::Error; };

// fibrewise_paths
class NotALift : public Error { using Error::Error; };
class NotAnExtension : public Error { using Error::Error; };

}  // namespace tcfw
