#include "ggor/construct.hpp"
#include "ggor/error.hpp"

namespace ggor {

PropBet prop_bet(const std::vector<Polynomial>& h, const std::vector<Polynomial>& g) {
  if (h.size() != 3 || g.size() != 3) throw DomainError("prop_bet needs three h and three g");
  const RingPtr& ring = h[0].ring();
  for (const auto& p : h)
    if (p.is_zero() || !p.is_homogeneous() || p.is_constant())
      throw DomainError("prop_bet: h must be nonconstant forms");
  for (const auto& p : g)
    if (p.is_zero() || !p.is_homogeneous()) throw DomainError("prop_bet: g must be nonzero forms");
  if (height(IdealBasis(ring, h)) != 3) throw DomainError("prop_bet: h is not a regular sequence");

  PolyMatrix a(ring, 3, 3);
  for (std::size_t i = 0; i < 3; ++i) a(i, i) = g[i];
  PropBet out;
  out.matrix = a * koszul_matrix(h[0], h[1], h[2]);
  out.ideal = IdealBasis(ring, {h[0] * g[1] * g[2], h[1] * g[0] * g[2], h[2] * g[0] * g[1]});

  std::int64_t d = 0, e = 0;
  std::vector<std::int64_t> di, ei;
  for (std::size_t i = 0; i < 3; ++i) {
    di.push_back(*h[i].degree());
    ei.push_back(*g[i].degree());
    d += di.back();
    e += ei.back();
  }
  std::vector<std::int64_t> as, bs;
  for (std::size_t i = 0; i < 3; ++i) {
    as.push_back(e + di[i] - ei[i]);
    bs.push_back(e + d - di[i]);
  }
  out.predicted = BettiSequence(as, bs, e + d);
  return out;
}

HilbertBurchIdeal hilbert_burch_ideal(const HilbertBurchData& data) {
  const std::size_t n = data.b.cols();
  if (n < 3 || data.b.rows() != n + 1) throw DomainError("hilbert_burch_ideal: B must be (n+1) x n with n >= 3");
  const RingPtr& ring = data.b.ring();
  const std::size_t dist = data.row.value_or(n);
  if (dist > n) throw DomainError("hilbert_burch_ideal: distinguished row out of range");

  // Move the distinguished row last.
  PolyMatrix b = data.b.without_row(dist).vconcat(
      PolyMatrix::row_vector(ring, data.b.row(dist)));

  std::vector<Polynomial> h{b(n, 0), b(n, 1), b(n, 2)};
  for (std::size_t j = 0; j < n; ++j) {
    if (j < 3 && b(n, j).is_zero())
      throw DomainError("hilbert_burch_ideal: h_" + std::to_string(j + 1) + " is zero");
    if (j >= 3 && !b(n, j).is_zero())
      throw DomainError("hilbert_burch_ideal: distinguished row is not (h1, h2, h3, 0, ..., 0)");
  }
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (b(i, j).is_unit()) throw DomainError("hilbert_burch_ideal: B has a unit entry");
  if (height(IdealBasis(ring, h)) != 3)
    throw DomainError("hilbert_burch_ideal: (h1, h2, h3) is not a regular sequence");
  if (rank(b) != n) throw DomainError("hilbert_burch_ideal: rank B is not n");

  HilbertBurchIdeal out;
  out.decomposition = decompose(b);
  const auto& d = out.decomposition;
  if (!d.y_empty && height(d.y) < 2)
    throw DomainError("hilbert_burch_ideal: I(B) has height below 2");
  out.ideal = d.total;

  PolyMatrix a(ring, n, 3), c(ring, n, n - 3);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < 3; ++j) a(i, j) = b(i, j);
    for (std::size_t j = 3; j < n; ++j) c(i, j - 3) = b(i, j);
  }
  PolyMatrix ak = a * koszul_matrix(h[0], h[1], h[2]);
  out.m = n == 3 ? ak : ak.hconcat(c);

  auto report = check_presentation(out.m);
  if (!report.is_presentation || !report.is_minimal)
    throw Error("hilbert_burch_ideal: (AK|C) is not a minimal presentation matrix (" +
                to_string(report.failure_reason) + ")");
  // gamma(M) must be a constant multiple of (B_1, ..., B_n).
  const auto& g = report.gamma->components;
  std::optional<Polynomial> ratio;
  for (std::size_t i = 0; i < n; ++i) {
    if (d.minors[i].is_zero() != g[i].is_zero()) throw Error("hilbert_burch_ideal: gamma differs from the minors");
    if (g[i].is_zero()) continue;
    if (!ratio) ratio = divide_exact(d.minors[i], g[i]);
    if (!ratio->is_unit() || d.minors[i] != *ratio * g[i])
      throw Error("hilbert_burch_ideal: gamma differs from the minors");
  }
  out.zeta = zeta(out.m).zeta;
  if (out.zeta != n - 3) throw Error("hilbert_burch_ideal: zeta is not n - 3");
  if (d.regular && !d.identity_verified)
    throw Error("hilbert_burch_ideal: I differs from I(B) cap (h1, h2, h3)");
  return out;
}

}  // namespace ggor
