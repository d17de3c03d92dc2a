#include "ggor/error.hpp"
#include "ggor/groebner.hpp"

namespace ggor {
namespace {

void apply_shifts(GradedResolution& res) {
  for (std::size_t k = 0; k < res.maps.size(); ++k)
    res.maps[k].set_shifts(res.shifts[k], res.shifts[k + 1]);
}

// Finds a nonzero constant entry in maps[k], k >= 1.
bool find_unit(const GradedResolution& res, std::size_t& k, std::size_t& i, std::size_t& j) {
  for (k = 1; k < res.maps.size(); ++k) {
    const PolyMatrix& m = res.maps[k];
    for (i = 0; i < m.rows(); ++i)
      for (j = 0; j < m.cols(); ++j)
        if (m(i, j).is_unit()) return true;
  }
  return false;
}

std::vector<std::size_t> all_but(std::size_t n, std::size_t skip) {
  std::vector<std::size_t> idx;
  for (std::size_t a = 0; a < n; ++a)
    if (a != skip) idx.push_back(a);
  return idx;
}

std::vector<std::size_t> all(std::size_t n) { return all_but(n, n); }

}  // namespace

bool GradedResolution::is_complex() const {
  for (std::size_t k = 0; k + 1 < maps.size(); ++k)
    if (!(maps[k] * maps[k + 1]).is_zero()) return false;
  return true;
}

GradedResolution minimalize(const GradedResolution& input) {
  GradedResolution res = input;
  for (auto& m : res.maps) m.clear_shifts();
  std::size_t k, i, j;
  while (find_unit(res, k, i, j)) {
    PolyMatrix& phi = res.maps[k];
    const mpq_class c = phi(i, j).constant_term();
    PolyMatrix updated = phi;
    for (std::size_t a = 0; a < phi.rows(); ++a) {
      if (phi(a, j).is_zero()) continue;
      for (std::size_t b = 0; b < phi.cols(); ++b)
        if (!phi(i, b).is_zero()) updated(a, b) -= (phi(a, j) * phi(i, b)).scaled(1 / c);
    }
    phi = updated.submatrix(all_but(phi.rows(), i), all_but(phi.cols(), j));
    PolyMatrix& left = res.maps[k - 1];
    left = left.submatrix(all(left.rows()), all_but(left.cols(), i));
    if (k + 1 < res.maps.size()) {
      PolyMatrix& right = res.maps[k + 1];
      right = right.submatrix(all_but(right.rows(), j), all(right.cols()));
    }
    res.shifts[k].erase(res.shifts[k].begin() + static_cast<std::ptrdiff_t>(i));
    res.shifts[k + 1].erase(res.shifts[k + 1].begin() + static_cast<std::ptrdiff_t>(j));
    while (!res.maps.empty() && res.maps.back().cols() == 0) {
      res.maps.pop_back();
      res.shifts.pop_back();
    }
  }
  apply_shifts(res);
  res.minimal = true;
  for (const auto& m : res.maps)
    if (!m.entries_in_maximal_ideal()) res.minimal = false;
  return res;
}

GradedResolution minimal_free_resolution(const IdealBasis& ideal, std::size_t max_length,
                                         const Budget& budget) {
  if (!ideal.is_homogeneous()) throw DomainError("resolution of a non-homogeneous ideal");
  if (is_unit_ideal(ideal)) throw UnitIdealError();
  GradedResolution res;
  res.shifts.push_back({0});
  IdealBasis gens = minimal_generators(ideal);
  if (gens.size() == 0 || max_length == 0) {
    res.minimal = true;
    return res;
  }
  res.maps.push_back(PolyMatrix::row_vector(ideal.ring(), gens.generators()));
  Shifts a;
  for (const auto& g : gens.generators()) a.push_back(*g.degree());
  res.shifts.push_back(a);

  ModuleBasis current = minimal_generators(syzygies(gens, budget));
  while (!current.generators.empty() && res.maps.size() < max_length) {
    PolyMatrix m = current.to_matrix();
    res.shifts.push_back(*m.col_shifts());
    m.clear_shifts();
    res.maps.push_back(std::move(m));
    if (res.maps.size() == max_length) break;
    current = minimal_generators(syzygies(current, budget));
  }
  return minimalize(res);
}

}  // namespace ggor
