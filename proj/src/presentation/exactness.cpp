#include <algorithm>

#include "ggor/error.hpp"
#include "ggor/presentation.hpp"
#include "presentation/subsets.hpp"

namespace ggor {
namespace {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  auto idx = detail::first_subset(k);
  do out.push_back(idx);
  while (k > 0 && detail::next_subset(idx, n));
  return out;
}

// Propagates degrees through nonzero entries until nothing changes.
void propagate(const PolyMatrix& m, std::vector<std::optional<std::int64_t>>& a,
               std::vector<std::optional<std::int64_t>>& b) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const Polynomial& e = m(i, j);
        if (e.is_zero()) continue;
        const std::int64_t d = *e.degree();
        if (a[i] && !b[j]) {
          b[j] = *a[i] + d;
          changed = true;
        } else if (b[j] && !a[i]) {
          a[i] = *b[j] - d;
          changed = true;
        }
      }
  }
}

}  // namespace

std::vector<Polynomial> minors_of_size(const PolyMatrix& m, std::size_t r) {
  const auto rs = subsets(m.rows(), r);
  const auto cs = subsets(m.cols(), r);
  std::vector<Polynomial> out(rs.size() * cs.size(), Polynomial(m.ring()));
  const auto total = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t t = 0; t < total; ++t) {
    const auto k = static_cast<std::size_t>(t);
    out[k] = minor(m, rs[k / cs.size()], cs[k % cs.size()]);
  }
  return out;
}

std::vector<Polynomial> minors_of_size_serial(const PolyMatrix& m, std::size_t r) {
  std::vector<Polynomial> out;
  for (const auto& rows : subsets(m.rows(), r))
    for (const auto& cols : subsets(m.cols(), r)) out.push_back(minor(m, rows, cols));
  return out;
}

GradedResolution build_resolution(const PolyMatrix& m) {
  PresentationReport report = check_presentation(m);
  if (!report.is_presentation)
    throw DomainError("not a presentation matrix: " + to_string(report.failure_reason));
  const std::size_t n = m.rows();
  const auto& g = report.gamma->components;
  const auto& h = report.gamma_transpose->components;
  auto homogeneous = [](const Polynomial& p) { return p.is_zero() || p.is_homogeneous(); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!homogeneous(m(i, j))) throw DomainError("grading: matrix entry is not homogeneous");
  if (!std::all_of(g.begin(), g.end(), homogeneous) || !std::all_of(h.begin(), h.end(), homogeneous))
    throw DomainError("grading: gamma is not homogeneous");

  std::vector<std::optional<std::int64_t>> a(n), b(n);
  for (std::size_t i = 0; i < n; ++i)
    if (!g[i].is_zero()) a[i] = *g[i].degree();
  propagate(m, a, b);
  std::optional<std::int64_t> s;
  for (std::size_t j = 0; j < n; ++j)
    if (b[j] && !h[j].is_zero()) {
      s = *b[j] + *h[j].degree();
      break;
    }
  if (!s || std::any_of(a.begin(), a.end(), [](auto& v) { return !v; }) ||
      std::any_of(b.begin(), b.end(), [](auto& v) { return !v; }))
    throw DomainError("grading: shifts are not determined by the entries");

  Shifts as, bs;
  for (auto& v : a) as.push_back(*v);
  for (auto& v : b) bs.push_back(*v);
  std::int64_t sum_a = 0, sum_b = 0;
  for (auto v : as) sum_a += v;
  for (auto v : bs) sum_b += v;
  if (sum_b - sum_a != *s) throw DomainError("grading: s differs from sum b - sum a");

  GradedResolution res;
  res.shifts = {{0}, as, bs, {*s}};
  res.maps = {PolyMatrix::row_vector(m.ring(), g), m, PolyMatrix::column_vector(m.ring(), h)};
  for (std::size_t k = 0; k < res.maps.size(); ++k) {
    res.maps[k].set_shifts(res.shifts[k], res.shifts[k + 1]);
    if (!check_graded(res.maps[k])) throw DomainError("grading: inconsistent entry degrees");
  }
  res.minimal = std::all_of(res.maps.begin(), res.maps.end(),
                            [](const PolyMatrix& p) { return p.entries_in_maximal_ideal(); });
  if (!verify_exactness(res).exact) throw Error("assembled complex is not exact");
  return res;
}

ExactnessReport verify_exactness(const GradedResolution& res) {
  ExactnessReport report;
  report.composites_zero = res.is_complex();
  if (!report.composites_zero) return report;
  const std::size_t len = res.maps.size();
  // r_len = rank F_len and r_k = rank F_k - r_{k+1}; F_k is the source of phi_k.
  std::vector<long long> expected(len + 2, 0);
  for (std::size_t k = len; k >= 1; --k)
    expected[k] = static_cast<long long>(res.maps[k - 1].cols()) - expected[k + 1];
  report.exact = true;
  for (std::size_t k = 1; k <= len; ++k) {
    const PolyMatrix& phi = res.maps[k - 1];
    ExactnessStage st;
    st.index = k;
    st.rank = rank(phi);
    st.rank_ok = expected[k] >= 0 && st.rank == static_cast<std::size_t>(expected[k]);
    st.expected_rank = expected[k] >= 0 ? static_cast<std::size_t>(expected[k]) : 0;
    st.required_height = static_cast<int>(k);
    if (st.rank_ok) {
      IdealBasis minors(phi.ring(), st.rank == 0 ? std::vector<Polynomial>{}
                                                  : minors_of_size(phi, st.rank));
      if (st.rank == 0 || is_unit_ideal(minors)) {
        st.height_ok = true;
      } else {
        st.height = height(minors);
        st.height_ok = *st.height >= st.required_height;
      }
    }
    report.exact = report.exact && st.rank_ok && st.height_ok;
    report.stages.push_back(st);
  }
  return report;
}

}  // namespace ggor
