#pragma once

#include <stdexcept>
#include <string>

namespace ooc {

// Parameters outside every branch a construction or bound supports.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input violates an operation's mathematical precondition.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A search ran out of nodes or wall-clock time before reaching an answer.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ooc
