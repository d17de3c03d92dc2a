#include <algorithm>
#include <numeric>

#include "ggor/construct.hpp"
#include "ggor/error.hpp"

namespace ggor {

BettiSequence sequence_of(const GradedResolution& res) {
  if (res.shifts.size() != 4 || res.shifts[3].size() != 1 ||
      res.shifts[1].size() != res.shifts[2].size())
    throw DomainError("resolution is not of the shape 0 -> R(-s) -> F_2 -> F_1 -> R");
  return BettiSequence(res.shifts[1], res.shifts[2], res.shifts[3][0]);
}

PolyMatrix sort_graded(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  const auto g = gamma(m).components;
  std::vector<std::optional<std::int64_t>> a(n), b(m.cols());
  for (std::size_t i = 0; i < n; ++i) {
    if (!g[i].is_zero() && !g[i].is_homogeneous()) throw DomainError("sort_graded: gamma is not homogeneous");
    if (!g[i].is_zero()) a[i] = *g[i].degree();
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const Polynomial& e = m(i, j);
        if (e.is_zero()) continue;
        if (!e.is_homogeneous()) throw DomainError("sort_graded: entry is not homogeneous");
        if (a[i] && !b[j]) b[j] = *a[i] + *e.degree(), changed = true;
        else if (b[j] && !a[i]) a[i] = *b[j] - *e.degree(), changed = true;
      }
  }
  if (std::any_of(a.begin(), a.end(), [](auto& v) { return !v; }) ||
      std::any_of(b.begin(), b.end(), [](auto& v) { return !v; }))
    throw DomainError("sort_graded: twists are not determined by the entries");

  std::vector<std::size_t> rows(n), cols(m.cols());
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);
  std::stable_sort(rows.begin(), rows.end(), [&](auto x, auto y) { return *a[x] < *a[y]; });
  std::stable_sort(cols.begin(), cols.end(), [&](auto x, auto y) { return *b[x] > *b[y]; });
  PolyMatrix out(m.ring(), n, m.cols());
  Shifts as, bs;
  for (std::size_t i = 0; i < n; ++i) {
    as.push_back(*a[rows[i]]);
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(rows[i], cols[j]);
  }
  for (auto j : cols) bs.push_back(*b[j]);
  out.set_shifts(as, bs);
  if (!check_graded(out)) throw DomainError("sort_graded: inconsistent entry degrees");
  return out;
}

ConstructionCheck verify_construction(const Construction& c) {
  ConstructionCheck out;
  auto report = check_presentation(c.matrix);
  out.is_presentation = report.is_presentation;
  if (!out.is_presentation) {
    out.detail = "not a presentation matrix: " + to_string(report.failure_reason);
    return out;
  }
  auto res = minimal_free_resolution(report.gamma->ideal());
  try {
    out.resolved = sequence_of(res);
  } catch (const DomainError& e) {
    out.detail = e.what();
    return out;
  }
  out.matches = *out.resolved == c.predicted;
  out.detail = out.matches ? "resolution matches " + c.predicted.to_string()
                           : "resolved " + out.resolved->to_string() + ", predicted " +
                                 c.predicted.to_string();
  return out;
}

std::vector<std::string> fresh_names(const RingPtr& ring, const std::string& prefix,
                                     std::size_t count, std::size_t first) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < count; ++k) {
    std::string name = prefix + "_" + std::to_string(first + k);
    if (ring->index_of(name)) throw DomainError("fresh variable " + name + " already in the ring");
    out.push_back(std::move(name));
  }
  return out;
}

PolyMatrix koszul_matrix(const Polynomial& h1, const Polynomial& h2, const Polynomial& h3) {
  const RingPtr& r = h1.ring();
  Polynomial zero(r);
  return PolyMatrix(r, {{zero, h3, -h2}, {-h3, zero, h1}, {h2, -h1, zero}});
}

}  // namespace ggor
