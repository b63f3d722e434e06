#pragma once

#include <stdexcept>

namespace langfilter {

// Malformed caller input: bad symbols, mismatched alphabets, invalid JSON.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured size or work budget was exceeded.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File system failure while reading or writing.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace langfilter
