#pragma once

#include <cstdint>
#include <string>

#include "orbitlab/errors.hpp"

namespace orbitlab {

/// Hard cap on the number of group elements an enumeration may touch.
struct EnumerationBudget {
  std::uint64_t max_elements = 100'000'000;

  void require(std::uint64_t predicted, const std::string& what) const {
    if (predicted > max_elements)
      throw BudgetExceeded(what + ": " + std::to_string(predicted) + " elements exceed budget of " +
                           std::to_string(max_elements));
  }
};

}  // namespace orbitlab
