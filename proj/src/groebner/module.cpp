#include <algorithm>
#include <numeric>

#include "engine.hpp"
#include "ggor/error.hpp"
#include "ggor/groebner.hpp"

namespace ggor {

using detail::GbEngine;
using detail::ModPoly;

namespace {

Shifts shifts_or_zero(const ModuleBasis& m) {
  return m.shifts ? *m.shifts : Shifts(m.rank, 0);
}

void check_module(const ModuleBasis& m) {
  if (!m.ring) throw DomainError("module without a ring");
  if (m.shifts && m.shifts->size() != m.rank) throw DomainError("module shifts do not match rank");
  for (const auto& v : m.generators)
    if (v.size() != m.rank) throw DomainError("module generator has the wrong length");
}

bool is_homogeneous_vector(const ModuleBasis& m, const Vector& v) {
  Shifts w = shifts_or_zero(m);
  std::optional<std::int64_t> d;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!v[i].is_homogeneous()) return false;
    std::int64_t e = *v[i].degree() + w[i];
    if (d && *d != e) return false;
    d = e;
  }
  return true;
}

// Syzygies recorded by a tagged run over the given generators.
std::vector<Vector> tagged_syzygies(const RingPtr& ring, std::size_t rank, const Shifts& shifts,
                                    const std::vector<ModPoly>& gens, const Budget& budget) {
  GbEngine e(ring, rank, shifts, {true, true, false}, budget);
  for (const auto& g : gens) e.add_generator(g);
  e.complete();
  std::vector<Vector> out;
  for (const auto& s : e.syzygies()) out.push_back(detail::to_vector(ring, s, gens.size()));
  return out;
}

ModuleBasis syzygy_module(const RingPtr& ring, std::vector<Vector> syz,
                          const std::vector<std::optional<std::int64_t>>& degrees) {
  ModuleBasis out;
  out.ring = ring;
  out.rank = degrees.size();
  out.generators = std::move(syz);
  if (std::all_of(degrees.begin(), degrees.end(), [](const auto& d) { return d.has_value(); })) {
    Shifts s;
    for (const auto& d : degrees) s.push_back(*d);
    out.shifts = std::move(s);
  }
  return out;
}

}  // namespace

PolyMatrix ModuleBasis::to_matrix() const {
  PolyMatrix m(ring, rank, generators.size());
  for (std::size_t j = 0; j < generators.size(); ++j)
    for (std::size_t i = 0; i < rank; ++i) m(i, j) = generators[j][i];
  if (shifts) {
    Shifts cols;
    for (const auto& v : generators) cols.push_back(degree_of(v).value_or(0));
    m.set_shifts(*shifts, std::move(cols));
  }
  return m;
}

ModuleBasis ModuleBasis::columns_of(const PolyMatrix& m) {
  ModuleBasis out;
  out.ring = m.ring();
  out.rank = m.rows();
  for (std::size_t j = 0; j < m.cols(); ++j) out.generators.push_back(m.column(j));
  if (m.row_shifts()) out.shifts = *m.row_shifts();
  return out;
}

std::optional<std::int64_t> ModuleBasis::degree_of(const Vector& v) const {
  Shifts w = shifts_or_zero(*this);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return *v[i].degree() + w[i];
  return std::nullopt;
}

ModuleBasis syzygies(const IdealBasis& ideal, const Budget& budget) {
  std::vector<ModPoly> gens;
  std::vector<std::optional<std::int64_t>> degrees;
  for (const auto& g : ideal.generators()) {
    gens.push_back(detail::from_vector(*ideal.ring(), {g}));
    degrees.push_back(g.is_homogeneous() ? g.degree() : std::nullopt);
  }
  auto syz = tagged_syzygies(ideal.ring(), 1, {0}, gens, budget);
  return syzygy_module(ideal.ring(), std::move(syz), degrees);
}

ModuleBasis syzygies(const ModuleBasis& module, const Budget& budget) {
  check_module(module);
  std::vector<ModPoly> gens;
  std::vector<std::optional<std::int64_t>> degrees;
  for (const auto& v : module.generators) {
    gens.push_back(detail::from_vector(*module.ring, v));
    degrees.push_back(is_homogeneous_vector(module, v) ? module.degree_of(v) : std::nullopt);
  }
  auto syz = tagged_syzygies(module.ring, module.rank, shifts_or_zero(module), gens, budget);
  return syzygy_module(module.ring, std::move(syz), degrees);
}

std::vector<Vector> module_groebner_basis(const ModuleBasis& module, const Budget& budget) {
  check_module(module);
  GbEngine e(module.ring, module.rank, shifts_or_zero(module), {}, budget);
  for (const auto& v : module.generators) e.add_generator(detail::from_vector(*module.ring, v));
  e.complete();
  std::vector<Vector> out;
  for (const auto& g : e.reduced_basis()) out.push_back(detail::to_vector(module.ring, g, module.rank));
  return out;
}

bool module_member(const Vector& v, const ModuleBasis& module) {
  check_module(module);
  if (v.size() != module.rank) throw DomainError("vector length differs from module rank");
  GbEngine e(module.ring, module.rank, shifts_or_zero(module), {});
  for (const auto& g : module.generators) e.add_generator(detail::from_vector(*module.ring, g));
  e.complete();
  return e.reduce(detail::from_vector(*module.ring, v), false).empty();
}

IdealBasis minimal_generators(const IdealBasis& ideal) {
  if (!ideal.is_homogeneous()) throw DomainError("minimal generators of a non-homogeneous ideal");
  ModuleBasis m;
  m.ring = ideal.ring();
  m.rank = 1;
  m.shifts = Shifts{0};
  for (const auto& g : ideal.generators()) m.generators.push_back({g});
  ModuleBasis kept = minimal_generators(m);
  std::vector<Polynomial> out;
  for (auto& v : kept.generators) out.push_back(std::move(v.front()));
  return IdealBasis(ideal.ring(), std::move(out));
}

ModuleBasis minimal_generators(const ModuleBasis& module) {
  check_module(module);
  struct Cand {
    std::int64_t degree;
    std::size_t index;
  };
  std::vector<Cand> cands;
  for (std::size_t k = 0; k < module.generators.size(); ++k) {
    const auto& v = module.generators[k];
    if (!is_homogeneous_vector(module, v))
      throw DomainError("minimal generators of a non-homogeneous module");
    if (auto d = module.degree_of(v)) cands.push_back({*d, k});
  }
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Cand& a, const Cand& b) { return a.degree < b.degree; });

  ModuleBasis out;
  out.ring = module.ring;
  out.rank = module.rank;
  out.shifts = module.shifts;
  GbEngine e(module.ring, module.rank, shifts_or_zero(module), {});
  for (const auto& c : cands) {
    e.complete(c.degree);
    ModPoly v = detail::from_vector(*module.ring, module.generators[c.index]);
    if (e.reduce(v, false).empty()) continue;
    e.add_generator(std::move(v));
    out.generators.push_back(module.generators[c.index]);
  }
  return out;
}

}  // namespace ggor
