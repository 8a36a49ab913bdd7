#pragma once

#include <stdexcept>
#include <string>

namespace sigma {

class SigmaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad permutation, broken table axioms, bad descriptor.
class ValidationError : public SigmaError {
 public:
  using SigmaError::SigmaError;
};

// A configured resource limit was hit. `limit()` names it.
class BoundExceeded : public SigmaError {
 public:
  BoundExceeded(std::string limit, std::size_t value, std::size_t bound)
      : SigmaError(limit + " exceeded: " + std::to_string(value) + " > " + std::to_string(bound)),
        limit_(std::move(limit)) {}
  const std::string& limit() const noexcept { return limit_; }

 private:
  std::string limit_;
};

class PreconditionError : public SigmaError {
 public:
  using SigmaError::SigmaError;
};

class NotTwoGenerated : public PreconditionError {
 public:
  NotTwoGenerated() : PreconditionError("group is not 2-generated") {}
};

// Something that a theorem guarantees did not happen. Always a defect.
class InternalInconsistency : public SigmaError {
 public:
  using SigmaError::SigmaError;
};

}  // namespace sigma
