#include <algorithm>

#include "engine.hpp"
#include "ggor/error.hpp"
#include "ggor/groebner.hpp"

namespace ggor {

using detail::GbEngine;
using detail::ModPoly;

namespace {

ModPoly as_mod(const Polynomial& p) { return detail::from_vector(*p.ring(), {p}); }

Polynomial as_poly(const RingPtr& ring, const ModPoly& p) {
  return detail::to_vector(ring, p, 1).front();
}

GbEngine ideal_engine(const IdealBasis& ideal, bool tags, const Budget& budget) {
  GbEngine e(ideal.ring(), 1, {0}, {tags, false, !tags}, budget);
  for (const auto& g : ideal.generators()) e.add_generator(as_mod(g));
  e.complete();
  return e;
}

std::string fresh_name(const Ring& ring, std::string base) {
  while (ring.index_of(base)) base += "_";
  return base;
}

}  // namespace

IdealBasis::IdealBasis(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), gens_(std::move(generators)) {
  if (!ring_) throw DomainError("ideal without a ring");
  for (auto& g : gens_) {
    if (!g.ring()) g = Polynomial(ring_);
    else if (!g.ring()->same_as(*ring_)) throw RingMismatch();
  }
}

bool IdealBasis::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

IdealBasis IdealBasis::in_ring(const RingPtr& target) const {
  std::vector<Polynomial> g;
  g.reserve(gens_.size());
  for (const auto& p : gens_) g.push_back(p.in_ring(target));
  return IdealBasis(target, std::move(g));
}

const std::vector<Polynomial>& IdealBasis::groebner(const Budget& budget) const {
  std::call_once(cache_->once, [&] {
    GbEngine e = ideal_engine(*this, false, budget);
    for (const auto& g : e.reduced_basis()) cache_->basis.push_back(as_poly(ring_, g));
  });
  return cache_->basis;
}

IdealBasis groebner_basis(const IdealBasis& ideal, const Budget& budget) {
  return IdealBasis(ideal.ring(), ideal.groebner(budget));
}

Polynomial normal_form(const Polynomial& p, const IdealBasis& ideal) {
  if (p.ring() && !p.ring()->same_as(*ideal.ring())) throw RingMismatch();
  const auto& gb = ideal.groebner();
  const Ring& ring = *ideal.ring();
  std::vector<ModPoly> basis;
  for (const auto& g : gb) basis.push_back(as_mod(g));
  ModPoly f = as_mod(p), rem;
  while (!f.empty()) {
    const ModPoly* div = nullptr;
    for (const auto& g : basis)
      if (g.front().mono.divides(f.front().mono)) {
        div = &g;
        break;
      }
    if (!div) {
      rem.push_back(std::move(f.front()));
      f.erase(f.begin());
      continue;
    }
    Monomial q = f.front().mono / div->front().mono;
    mpq_class c = f.front().coeff / div->front().coeff;
    f = detail::add_scaled(ring, f, -c, q, *div);
  }
  return as_poly(ideal.ring(), rem);
}

bool member(const Polynomial& p, const IdealBasis& ideal) {
  return normal_form(p, ideal).is_zero();
}

std::optional<std::vector<Polynomial>> member_with_cofactors(const Polynomial& p,
                                                             const IdealBasis& ideal) {
  if (p.ring() && !p.ring()->same_as(*ideal.ring())) throw RingMismatch();
  GbEngine e = ideal_engine(ideal, true, Budget::from_environment());
  ModPoly tag;
  if (!e.reduce(as_mod(p), true, &tag).empty()) return std::nullopt;
  return detail::to_vector(ideal.ring(), tag, ideal.size());
}

bool contains(const IdealBasis& outer, const IdealBasis& inner) {
  return std::all_of(inner.generators().begin(), inner.generators().end(),
                     [&](const Polynomial& g) { return member(g, outer); });
}

bool same_ideal(const IdealBasis& a, const IdealBasis& b) {
  if (!a.ring()->same_as(*b.ring())) throw RingMismatch();
  return a.groebner() == b.groebner();
}

bool is_unit_ideal(const IdealBasis& ideal) {
  const auto& gb = ideal.groebner();
  return gb.size() == 1 && gb.front().is_unit();
}

IdealBasis intersect(const IdealBasis& a, const IdealBasis& b) {
  if (!a.ring()->same_as(*b.ring())) throw RingMismatch();
  const Ring& base = *a.ring();
  std::vector<std::string> vars{fresh_name(base, "t")};
  vars.insert(vars.end(), base.variables().begin(), base.variables().end());
  RingPtr big = make_ring(vars, MonomialOrder::Elimination, 1);
  Polynomial t = Polynomial::variable(big, 0);
  Polynomial one_minus_t = Polynomial::constant(big, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * f.in_ring(big));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.in_ring(big));
  IdealBasis joint(big, std::move(gens));
  std::vector<Polynomial> out;
  for (const auto& g : joint.groebner())
    if (g.degree_in(0) <= 0) out.push_back(g.in_ring(a.ring()));
  return IdealBasis(a.ring(), std::move(out));
}

IdealBasis quotient(const IdealBasis& ideal, const Polynomial& f) {
  if (f.is_zero()) throw DomainError("quotient by the zero polynomial");
  IdealBasis meet = intersect(ideal, IdealBasis(ideal.ring(), {f}));
  std::vector<Polynomial> out;
  for (const auto& g : meet.generators()) out.push_back(divide_exact(g, f));
  return IdealBasis(ideal.ring(), std::move(out));
}

}  // namespace ggor
