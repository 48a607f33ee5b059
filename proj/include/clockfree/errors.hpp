#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

namespace clockfree {

// Input exceeds a documented size cap. The CLI maps this to exit code 3.
class ScaleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed serialized input; offset is the byte position of the fault.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// A hypothesis of an operation does not hold. Carries a witness when one is known.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(const std::string& what, nlohmann::json witness = nullptr)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const nlohmann::json& witness() const { return witness_; }

 private:
  nlohmann::json witness_;
};

}  // namespace clockfree
