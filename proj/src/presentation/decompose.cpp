#include <algorithm>

#include "ggor/error.hpp"
#include "ggor/presentation.hpp"

namespace ggor {

Decomposition decompose(const PolyMatrix& b) {
  const std::size_t n = b.cols();
  if (n == 0 || b.rows() != n + 1) throw DomainError("decompose needs an (n+1) x n matrix");
  if (rank(b) != n) throw DomainError("decompose needs rank n");
  const RingPtr& ring = b.ring();

  Decomposition d;
  // B_i = (-1)^i det(B without row i), rows counted from 1.
  auto signed_minors = signed_maximal_minors(b);
  for (auto& m : signed_minors) d.minors.push_back(-m);
  d.total = IdealBasis(ring, std::vector<Polynomial>(d.minors.begin(), d.minors.end() - 1));
  d.y = IdealBasis(ring, d.minors);
  d.y_empty = is_unit_ideal(d.y);
  std::vector<Polynomial> hs;
  for (const auto& e : b.row(n))
    if (!e.is_zero()) hs.push_back(e);
  d.z = IdealBasis(ring, hs);

  const Polynomial& last = d.minors.back();
  if (last.is_zero()) {
    d.regular = false;
  } else if (hs.empty()) {
    d.regular = true;
  } else {
    d.regular = same_ideal(quotient(d.z, last), d.z);
  }
  if (!d.regular) {
    d.verdict = "B_{n+1} is a zero divisor modulo the last row; identity not asserted";
    return d;
  }
  if (hs.empty()) {
    const auto& t = d.total.generators();
    d.identity_verified = std::all_of(t.begin(), t.end(), [](auto& p) { return p.is_zero(); });
  } else {
    d.identity_verified = same_ideal(d.total, intersect(d.y, d.z));
  }
  if (!d.identity_verified)
    d.verdict = "regular, but I differs from I(B) cap (H); height I(B) is not 2";
  else
    d.verdict = d.y_empty ? "regular; I(B) is the unit ideal so I = (H)"
                          : "regular; I = I(B) cap (H)";
  return d;
}

}  // namespace ggor
