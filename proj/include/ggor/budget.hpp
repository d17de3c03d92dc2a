#pragma once

#include <chrono>
#include <cstddef>
#include <optional>

namespace ggor {

/// Caps for one Groebner-type computation. Exceeding either cap raises
/// BudgetExceeded from the computation that noticed it.
struct Budget {
  double seconds = 60.0;
  std::size_t max_monomials = 1'000'000;

  /// Defaults, with GGOR_BUDGET_SECONDS / GGOR_MAX_MONOMIALS overrides
  /// read from the environment when set.
  static Budget from_environment();
  static Budget unlimited();
};

/// Running clock for one Budget.
class BudgetClock {
 public:
  explicit BudgetClock(const Budget& budget);

  /// Throws BudgetExceeded when the deadline has passed or `monomials`
  /// is above the cap. `what` names the computation for the message.
  void check(std::size_t monomials, const char* what) const;

  double elapsed_seconds() const;

 private:
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace ggor
