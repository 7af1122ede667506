#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kipas {

// Parameter outside the range an operation is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed "ecg v1" input; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// The request is well-formed but beyond what the chosen algorithm supports
// (vertex bound, node budget, unsupported pattern kind).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A FamilyDescriptor violates one of its family's clauses.
class DescriptorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace kipas
