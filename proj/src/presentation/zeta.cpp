#include "ggor/error.hpp"
#include "ggor/presentation.hpp"

namespace ggor {

ZetaReport zeta(const PolyMatrix& m) {
  PresentationReport report = check_presentation(m);
  if (!report.is_presentation || !report.is_minimal)
    throw DomainError("zeta needs a minimal presentation matrix");
  const std::size_t n = m.rows();
  std::vector<Polynomial> h = report.gamma_transpose->components;
  PolyMatrix work = m;

  // If h_j lies in the ideal of the others, h_j = sum a_i h_i, the basis
  // change v_i = e_i + a_i e_j turns column i into col_i + a_i col_j and
  // sends h_j to zero.
  for (std::size_t j = n; j-- > 0;) {
    if (h[j].is_zero()) continue;
    std::vector<Polynomial> others = h;
    others[j] = Polynomial(m.ring());
    auto a = member_with_cofactors(h[j], IdealBasis(m.ring(), others));
    if (!a) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j || (*a)[i].is_zero()) continue;
      for (std::size_t r = 0; r < n; ++r) work(r, i) += (*a)[i] * work(r, j);
    }
    h[j] = Polynomial(m.ring());
  }

  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < n; ++j)
    if (!h[j].is_zero()) order.push_back(j);
  const std::size_t s = order.size();
  for (std::size_t j = 0; j < n; ++j)
    if (h[j].is_zero()) order.push_back(j);

  std::vector<Polynomial> nonzero;
  for (const auto& hj : report.gamma_transpose->components)
    if (!hj.is_zero()) nonzero.push_back(hj);
  const std::size_t nu_j = minimal_generators(IdealBasis(m.ring(), nonzero)).size();
  if (nu_j != s) throw Error("basis change left a non-minimal generating set");

  ZetaReport out;
  out.nu_I = n;
  out.nu_J = s;
  out.zeta = n - s;
  std::vector<std::size_t> rows(n);
  for (std::size_t r = 0; r < n; ++r) rows[r] = r;
  out.transformed = work.submatrix(rows, order);
  for (std::size_t j : order) out.normalized_rho.push_back(h[j]);
  return out;
}

}  // namespace ggor
