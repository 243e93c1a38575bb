#pragma once

#include <stdexcept>
#include <string>

namespace hoidiag {

/// Input file could not be parsed (bad JSON, wrong schema version, ...).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input parsed but violates a domain invariant (unknown ids, bad boxes, ...).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A metric is not computable on the given input (empty subset, zero GT, ...).
class ComputationError : public std::runtime_error {
 public:
  explicit ComputationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hoidiag
