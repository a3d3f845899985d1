#pragma once

#include <stdexcept>
#include <string>

namespace monoquiv {

// Malformed input text: bad JSON or a document that does not have the
// expected shape.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input that violates a semantic constraint (unknown reference,
// degree < 1, duplicate id, ...). The message names the offending location.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration would produce more items than the configured cap.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace monoquiv
