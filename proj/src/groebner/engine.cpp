#include "engine.hpp"

#include <algorithm>

#include "ggor/error.hpp"

namespace ggor::detail {

int compare_terms(const Ring& ring, const MTerm& a, const MTerm& b) {
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return ring.compare(a.mono, b.mono);
}

ModPoly add_scaled(const Ring& ring, const ModPoly& p, const mpq_class& c, const Monomial& m,
                   const ModPoly& q) {
  ModPoly out;
  out.reserve(p.size() + q.size());
  std::size_t i = 0, j = 0;
  while (i < p.size() || j < q.size()) {
    if (j == q.size()) {
      out.push_back(p[i++]);
      continue;
    }
    MTerm t{q[j].comp, q[j].mono * m, q[j].coeff * c};
    if (i == p.size()) {
      out.push_back(std::move(t));
      ++j;
      continue;
    }
    int cmp = compare_terms(ring, p[i], t);
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.push_back(std::move(t));
      ++j;
    } else {
      mpq_class s = p[i].coeff + t.coeff;
      if (s != 0) out.push_back({t.comp, std::move(t.mono), std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

ModPoly scale(const ModPoly& p, const mpq_class& c) {
  ModPoly out = p;
  for (auto& t : out) t.coeff *= c;
  return out;
}

ModPoly make_monic(const ModPoly& p, mpq_class* factor) {
  if (p.empty()) return p;
  mpq_class inv = 1 / p.front().coeff;
  if (factor) *factor = inv;
  return scale(p, inv);
}

ModPoly from_vector(const Ring& ring, const Vector& v) {
  ModPoly out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].ring() && !v[i].ring()->same_as(ring)) throw RingMismatch();
    for (const auto& t : v[i].terms())
      out.push_back({static_cast<std::uint32_t>(i), t.mono, t.coeff});
  }
  return out;
}

Vector to_vector(const RingPtr& ring, const ModPoly& p, std::size_t rank) {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : p) parts.at(t.comp).push_back({t.mono, t.coeff});
  Vector v;
  v.reserve(rank);
  for (auto& terms : parts) v.emplace_back(ring, std::move(terms));
  return v;
}

ModPoly unit_vector(std::size_t nvars, std::size_t comp) {
  return {MTerm{static_cast<std::uint32_t>(comp), Monomial(nvars), 1}};
}

GbEngine::GbEngine(RingPtr ring, std::size_t rank, Shifts shifts, Options options,
                   const Budget& budget)
    : ring_(std::move(ring)),
      rank_(rank),
      shifts_(std::move(shifts)),
      opt_(options),
      clock_(budget) {
  if (shifts_.empty()) shifts_.assign(rank_, 0);
  if (shifts_.size() != rank_) throw DomainError("shift vector length differs from module rank");
  if (rank_ != 1 || opt_.track_tags || opt_.record_syzygies) opt_.product_criterion = false;
}

std::int64_t GbEngine::degree_of(const ModPoly& p) const {
  std::int64_t d = 0;
  bool first = true;
  for (const auto& t : p) {
    std::int64_t e = t.mono.degree() + shifts_[t.comp];
    if (first || e > d) d = e;
    first = false;
  }
  return d;
}

std::int64_t GbEngine::sugar_of(const ModPoly& p) const { return degree_of(p); }

void GbEngine::add_generator(ModPoly v) {
  for (const auto& t : v)
    if (t.comp >= rank_) throw DomainError("generator component out of range");
  std::size_t slot = num_inputs_++;
  std::int64_t sugar = v.empty() ? 0 : sugar_of(v);
  pending_.push_back(std::move(v));
  queue_.push_back({sugar, true, slot, 0, Monomial(), 0});
}

const GbEngine::Element* GbEngine::find_reducer(const MTerm& t) const {
  const std::uint64_t mask = t.mono.support_mask();
  for (const auto& e : basis_) {
    if (e.redundant) continue;
    const MTerm& lt = e.poly.front();
    if (lt.comp != t.comp || (e.mask & ~mask) != 0) continue;
    if (lt.mono.divides(t.mono)) return &e;
  }
  return nullptr;
}

ModPoly GbEngine::reduce(const ModPoly& v, bool full, ModPoly* tag) const {
  const Ring& ring = *ring_;
  ModPoly p = v, rem;
  while (!p.empty()) {
    const Element* g = find_reducer(p.front());
    if (!g) {
      if (!full) {
        rem.insert(rem.end(), p.begin(), p.end());
        break;
      }
      rem.push_back(std::move(p.front()));
      p.erase(p.begin());
      continue;
    }
    const MTerm& lg = g->poly.front();
    Monomial q = p.front().mono / lg.mono;
    mpq_class c = p.front().coeff / lg.coeff;
    if (tag && !g->tag.empty()) *tag = add_scaled(ring, *tag, c, q, g->tag);
    p = add_scaled(ring, p, -c, q, g->poly);
  }
  return rem;
}

void GbEngine::insert(ModPoly p, ModPoly tag, std::int64_t sugar) {
  mpq_class f;
  p = make_monic(p, &f);
  if (!tag.empty()) tag = scale(tag, f);
  const MTerm& lt = p.front();
  const std::size_t n = basis_.size();

  struct Cand {
    std::size_t i;
    Monomial lcm;
    bool coprime;
    bool keep = true;
  };
  std::vector<Cand> cands;
  for (std::size_t i = 0; i < n; ++i) {
    const Element& e = basis_[i];
    if (e.redundant || e.poly.front().comp != lt.comp) continue;
    const Monomial& li = e.poly.front().mono;
    Monomial l = Monomial::lcm(li, lt.mono);
    bool coprime = l.degree() == li.degree() + lt.mono.degree();
    cands.push_back({i, std::move(l), coprime});
  }

  // Criterion B_k on the queued pairs.
  std::erase_if(queue_, [&](const Item& it) {
    if (it.is_generator || it.comp != lt.comp || !lt.mono.divides(it.lcm)) return false;
    Monomial li = Monomial::lcm(basis_[it.i].poly.front().mono, lt.mono);
    Monomial lj = Monomial::lcm(basis_[it.j].poly.front().mono, lt.mono);
    return !(li == it.lcm) && !(lj == it.lcm);
  });

  // Criterion M: drop pairs whose lcm is properly divisible by another.
  for (auto& c : cands)
    for (const auto& d : cands)
      if (&c != &d && d.lcm.divides(c.lcm) && !(d.lcm == c.lcm)) {
        c.keep = false;
        break;
      }
  // Criterion F: one pair per lcm; the product criterion discards the class.
  for (std::size_t a = 0; a < cands.size(); ++a) {
    if (!cands[a].keep) continue;
    bool class_coprime = cands[a].coprime;
    for (std::size_t b = a + 1; b < cands.size(); ++b)
      if (cands[b].keep && cands[b].lcm == cands[a].lcm) {
        class_coprime = class_coprime || cands[b].coprime;
        cands[b].keep = false;
      }
    if (opt_.product_criterion && class_coprime) cands[a].keep = false;
  }

  for (auto& e : basis_)
    if (!e.redundant && e.poly.front().comp == lt.comp && lt.mono.divides(e.poly.front().mono))
      e.redundant = true;

  for (const auto& c : cands) {
    if (!c.keep) continue;
    const Element& e = basis_[c.i];
    std::int64_t si = e.sugar + (c.lcm.degree() - e.poly.front().mono.degree());
    std::int64_t sn = sugar + (c.lcm.degree() - lt.mono.degree());
    queue_.push_back({std::max(si, sn), false, c.i, n, c.lcm, lt.comp});
  }

  monomials_ += p.size() + tag.size();
  std::uint64_t mask = lt.mono.support_mask();
  basis_.push_back({std::move(p), std::move(tag), sugar, mask, false});
}

std::size_t GbEngine::pick_next() const {
  const Ring& ring = *ring_;
  std::size_t best = 0;
  for (std::size_t k = 1; k < queue_.size(); ++k) {
    const Item& a = queue_[k];
    const Item& b = queue_[best];
    if (a.sugar != b.sugar) {
      if (a.sugar < b.sugar) best = k;
      continue;
    }
    if (a.is_generator != b.is_generator) {
      if (a.is_generator) best = k;
      continue;
    }
    if (a.is_generator) {
      if (a.i < b.i) best = k;
      continue;
    }
    if (a.comp != b.comp) {
      if (a.comp > b.comp) best = k;
      continue;
    }
    int c = ring.compare(a.lcm, b.lcm);
    if (c < 0 || (c == 0 && std::pair(a.j, a.i) < std::pair(b.j, b.i))) best = k;
  }
  return best;
}

void GbEngine::process(const Item& item) {
  const Ring& ring = *ring_;
  const bool tags = opt_.track_tags || opt_.record_syzygies;
  ModPoly s, stag;
  if (item.is_generator) {
    s = std::move(pending_[item.i]);
    pending_[item.i].clear();
    if (tags) stag = unit_vector(ring.num_vars(), item.i);
  } else {
    const Element& a = basis_[item.i];
    const Element& b = basis_[item.j];
    Monomial ma = item.lcm / a.poly.front().mono;
    Monomial mb = item.lcm / b.poly.front().mono;
    s = add_scaled(ring, {}, 1, ma, a.poly);
    s = add_scaled(ring, s, -1, mb, b.poly);
    if (tags) {
      stag = add_scaled(ring, {}, 1, ma, a.tag);
      stag = add_scaled(ring, stag, -1, mb, b.tag);
    }
  }
  ModPoly acc;
  ModPoly r = reduce(s, true, tags ? &acc : nullptr);
  if (tags) stag = add_scaled(ring, stag, -1, Monomial(ring.num_vars()), acc);
  if (r.empty()) {
    if (opt_.record_syzygies && !stag.empty()) syzygies_.push_back(std::move(stag));
    return;
  }
  std::int64_t sugar = std::max(item.sugar, sugar_of(r));
  insert(std::move(r), std::move(stag), sugar);
}

void GbEngine::complete(std::optional<std::int64_t> max_degree) {
  while (!queue_.empty()) {
    std::size_t k = pick_next();
    if (max_degree && queue_[k].sugar > *max_degree) break;
    Item item = std::move(queue_[k]);
    queue_.erase(queue_.begin() + static_cast<std::ptrdiff_t>(k));
    clock_.check(monomials_, "groebner basis");
    process(item);
  }
}

std::vector<ModPoly> GbEngine::reduced_basis() const {
  const Ring& ring = *ring_;
  std::vector<ModPoly> out;
  for (const auto& e : basis_) {
    if (e.redundant) continue;
    ModPoly tail(e.poly.begin() + 1, e.poly.end());
    ModPoly r = reduce(tail, true);
    ModPoly g{e.poly.front()};
    g.insert(g.end(), r.begin(), r.end());
    out.push_back(make_monic(g));
  }
  std::sort(out.begin(), out.end(), [&](const ModPoly& a, const ModPoly& b) {
    return compare_terms(ring, a.front(), b.front()) < 0;
  });
  return out;
}

}  // namespace ggor::detail
