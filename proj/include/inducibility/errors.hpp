#pragma once

#include <stdexcept>
#include <string>

namespace inducibility {

/// An exact enumeration would exceed the configured work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The stationary equation has no unique probability solution.
class DegenerateKernel : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace inducibility
