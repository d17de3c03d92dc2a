#include "ggor/budget.hpp"

#include <cstdlib>
#include <limits>
#include <string>

#include "ggor/error.hpp"

namespace ggor {

Budget Budget::from_environment() {
  Budget b;
  if (const char* s = std::getenv("GGOR_BUDGET_SECONDS")) {
    try {
      b.seconds = std::stod(s);
    } catch (const std::exception&) {
      throw DomainError(std::string("bad GGOR_BUDGET_SECONDS: ") + s);
    }
  }
  if (const char* s = std::getenv("GGOR_MAX_MONOMIALS")) {
    try {
      b.max_monomials = std::stoull(s);
    } catch (const std::exception&) {
      throw DomainError(std::string("bad GGOR_MAX_MONOMIALS: ") + s);
    }
  }
  return b;
}

Budget Budget::unlimited() {
  return {std::numeric_limits<double>::infinity(),
          std::numeric_limits<std::size_t>::max()};
}

BudgetClock::BudgetClock(const Budget& budget)
    : budget_(budget), start_(std::chrono::steady_clock::now()) {}

double BudgetClock::elapsed_seconds() const {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
      .count();
}

void BudgetClock::check(std::size_t monomials, const char* what) const {
  if (monomials > budget_.max_monomials)
    throw BudgetExceeded(std::string(what) + ": monomial cap of " +
                         std::to_string(budget_.max_monomials) + " exceeded");
  if (elapsed_seconds() > budget_.seconds)
    throw BudgetExceeded(std::string(what) + ": time budget of " +
                         std::to_string(budget_.seconds) + " s exceeded");
}

}  // namespace ggor
