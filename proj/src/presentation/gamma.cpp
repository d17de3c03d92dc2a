#include <algorithm>

#include "ggor/error.hpp"
#include "ggor/presentation.hpp"
#include "presentation/subsets.hpp"

namespace ggor {

IdealBasis GammaVector::ideal() const {
  return IdealBasis(source.ring(), components);
}

GammaVector gamma(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n < 2) throw DomainError("gamma needs at least two rows");
  if (m.cols() + 1 < n) throw DomainError("gamma needs at least rows - 1 columns");
  const auto rows = detail::range(n);
  auto cols = detail::first_subset(n - 1);
  do {
    PolyMatrix sub = m.submatrix(rows, cols);
    auto g = signed_maximal_minors(sub);
    if (std::all_of(g.begin(), g.end(), [](const Polynomial& p) { return p.is_zero(); }))
      continue;
    if (rank(m) != n - 1) throw DomainError("gamma needs rank equal to rows - 1");
    Polynomial d = gcd(g);
    for (auto& gi : g) gi = divide_exact(gi, d);
    auto first = std::find_if(g.begin(), g.end(), [](const Polynomial& p) { return !p.is_zero(); });
    const mpq_class lead = first->leading_coeff();
    for (auto& gi : g) gi = gi.scaled(1 / lead);
    GammaVector out{std::move(g), m, cols,
                    "divided by the gcd of the minors; first nonzero component has leading "
                    "coefficient 1"};
    return out;
  } while (detail::next_subset(cols, m.cols()));
  throw DomainError("gamma needs rank equal to rows - 1");
}

}  // namespace ggor
