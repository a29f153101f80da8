#pragma once

#include <stdexcept>
#include <string>

namespace modhom {

// Malformed input: bad file syntax, out-of-range ids, violated preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured size or state budget would be exceeded.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A self-check that should never fail did.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace modhom
