#ifndef COHOMOLIB_BUDGET_HPP
#define COHOMOLIB_BUDGET_HPP

#include "cohomolib/error.hpp"

namespace cohomolib {

// Enumeration bounds. Exceeding a bound raises BudgetExceeded rather than
// silently truncating.
struct Budget {
  int max_gamma = 24;   // largest acting group fed to an enumeration kernel
  int max_target = 128; // largest coefficient group
  int aut_bound = 128;  // largest group whose Aut is enumerated
  int threads = 1;      // inner parallelism; results independent of this

  void check_gamma(int order) const {
    if (order > max_gamma)
      fail("BudgetExceeded", "acting group of order " + std::to_string(order) +
                                 " exceeds bound " + std::to_string(max_gamma));
  }
  void check_target(int order) const {
    if (order > max_target)
      fail("BudgetExceeded", "coefficient group of order " + std::to_string(order) +
                                 " exceeds bound " + std::to_string(max_target));
  }
};

} // namespace cohomolib

#endif
