#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sdsearch {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or violated precondition (CLI exit code 2).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A computed object failed one of its structural checks (CLI exit code 1).
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the configured budget (CLI exit code 3).
class BudgetError : public Error {
 public:
  using Error::Error;
};

namespace budget {

/// Upper bound on the number of items a single enumeration may visit.
/// Read once from SDSEARCH_BUDGET; defaults to 2^28.
std::uint64_t limit();

/// Overrides the limit for the rest of the process (tests, CLI flags).
void set_limit(std::uint64_t value);

/// Largest dimension k whose 2^k codewords fit into the budget.
int max_enumeration_dimension();

/// Throws BudgetError when `count` exceeds the budget.
void require(std::uint64_t count, const std::string& what);

}  // namespace budget

}  // namespace sdsearch
