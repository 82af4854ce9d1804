#pragma once

#include <stdexcept>

namespace levi {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace levi
