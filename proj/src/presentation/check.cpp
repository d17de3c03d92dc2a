#include <algorithm>

#include "ggor/error.hpp"
#include "ggor/presentation.hpp"
#include "presentation/subsets.hpp"

namespace ggor {

std::string to_string(PresentationFailure f) {
  switch (f) {
    case PresentationFailure::None: return "none";
    case PresentationFailure::NotSquare: return "not square";
    case PresentationFailure::RankNotSubmaximal: return "rank is not n-1";
    case PresentationFailure::CofactorNotProportional:
      return "cofactor matrix is not a multiple of (g_i h_j)";
    case PresentationFailure::CofactorUnitNotConstant:
      return "cofactor factor u is not a nonzero constant";
    case PresentationFailure::HeightJTooSmall: return "height of J is less than 3";
  }
  return "unknown";
}

PresentationReport check_presentation(const PolyMatrix& m) {
  PresentationReport report;
  if (!m.is_square() || m.rows() < 2) {
    report.failure_reason = PresentationFailure::NotSquare;
    return report;
  }
  const std::size_t n = m.rows();
  if (rank(m) != n - 1) {
    report.failure_reason = PresentationFailure::RankNotSubmaximal;
    return report;
  }
  report.gamma = gamma(m);
  report.gamma_transpose = gamma(m.transpose());
  report.is_minimal = m.entries_in_maximal_ideal();
  const auto& g = report.gamma->components;
  const auto& h = report.gamma_transpose->components;
  for (std::size_t j = 0; j < n; ++j)
    if (h[j].is_zero()) report.zero_components.push_back(j);

  const PolyMatrix c = cofactor_matrix(m);
  std::optional<Polynomial> u;
  for (std::size_t i = 0; i < n && !u; ++i)
    for (std::size_t j = 0; j < n && !u; ++j) {
      Polynomial gh = g[i] * h[j];
      if (gh.is_zero()) continue;
      u = try_divide(c(i, j), gh);
      if (!u) {
        report.failure_reason = PresentationFailure::CofactorNotProportional;
        return report;
      }
    }
  if (!u) throw Error("gamma vectors vanish although rank is n-1");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(c(i, j) == *u * g[i] * h[j])) {
        report.failure_reason = PresentationFailure::CofactorNotProportional;
        return report;
      }
  report.cofactor_unit = u;
  if (!u->is_unit()) {
    report.failure_reason = PresentationFailure::CofactorUnitNotConstant;
    return report;
  }
  // Over a polynomial ring depth and height of J agree.
  IdealBasis j_ideal = report.gamma_transpose->ideal();
  if (is_unit_ideal(j_ideal)) {
    report.J_is_unit = true;
  } else {
    report.height_J = height(j_ideal);
    if (*report.height_J < 3) {
      report.failure_reason = PresentationFailure::HeightJTooSmall;
      return report;
    }
  }
  report.is_presentation = true;
  return report;
}

RectPresentationReport check_presentation_rect_report(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n < 2 || m.cols() + 1 < n || rank(m) != n - 1)
    throw DomainError("rectangular presentation test needs rank rows - 1");
  RectPresentationReport report{false, gamma(m), std::nullopt, false};
  ModuleBasis syz = syzygies(report.gamma.ideal());
  ModuleBasis columns = ModuleBasis::columns_of(m);
  columns.shifts.reset();
  report.is_presentation = std::all_of(syz.generators.begin(), syz.generators.end(),
                                       [&](const Vector& v) { return module_member(v, columns); });

  const auto rows = detail::range(n);
  auto cols = detail::first_subset(n - 1);
  do {
    auto minors = signed_maximal_minors(m.submatrix(rows, cols));
    if (gcd(minors).is_unit()) {
      report.hilbert_burch_columns = cols;
      break;
    }
  } while (detail::next_subset(cols, m.cols()));
  report.is_minimal = report.is_presentation && m.entries_in_maximal_ideal() &&
                      !(report.hilbert_burch_columns && m.cols() > n - 1);
  return report;
}

bool check_presentation_rect(const PolyMatrix& m) {
  return check_presentation_rect_report(m).is_presentation;
}

}  // namespace ggor
