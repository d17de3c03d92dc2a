#include "ggor/ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "ggor/error.hpp"

namespace ggor {

Ring::Ring(std::vector<std::string> variables, MonomialOrder order,
           std::size_t elimination_block)
    : vars_(std::move(variables)), order_(order), block_(elimination_block) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty()) throw DomainError("empty variable name");
    if (!seen.insert(v).second) throw DomainError("duplicate variable " + v);
  }
  if (order_ == MonomialOrder::Elimination && block_ > vars_.size())
    throw DomainError("elimination block larger than the variable list");
  if (order_ != MonomialOrder::Elimination) block_ = 0;
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                  std::size_t hi) {
  std::int64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int Ring::compare(const Monomial& a, const Monomial& b) const {
  switch (order_) {
    case MonomialOrder::Grevlex: {
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
      return 0;
    }
    case MonomialOrder::Lex:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      }
      return 0;
    case MonomialOrder::Elimination: {
      int c = grevlex_range(a, b, 0, block_);
      if (c != 0) return c;
      return grevlex_range(a, b, block_, a.size());
    }
  }
  return 0;
}

bool Ring::same_as(const Ring& other) const {
  return this == &other || (vars_ == other.vars_ && order_ == other.order_ &&
                            block_ == other.block_);
}

RingPtr make_ring(std::vector<std::string> variables, MonomialOrder order,
                  std::size_t elimination_block) {
  return std::make_shared<const Ring>(std::move(variables), order,
                                      elimination_block);
}

RingPtr union_ring(const RingPtr& a, const RingPtr& b) {
  std::vector<std::string> vars = a->variables();
  for (const auto& v : b->variables())
    if (!a->index_of(v)) vars.push_back(v);
  return make_ring(std::move(vars), a->order(), a->elimination_block());
}

RingPtr extend_ring(const RingPtr& base,
                    const std::vector<std::string>& extra) {
  std::vector<std::string> vars = base->variables();
  for (const auto& v : extra) {
    if (base->index_of(v))
      throw DomainError("fresh variable " + v + " already in the ring");
    vars.push_back(v);
  }
  return make_ring(std::move(vars), base->order(), base->elimination_block());
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<std::int32_t> exps) : exps_(std::move(exps)) {
  for (auto e : exps_) {
    if (e < 0) throw DomainError("negative exponent");
    degree_ += e;
  }
}

std::uint64_t Monomial::support_mask() const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0) mask |= std::uint64_t{1} << (i % 64);
  return mask;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) {
    r.exps_[i] -= b.exps_[i];
    if (r.exps_[i] < 0) throw DomainError("monomial does not divide");
  }
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r.degree_ = 0;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r.degree_ = 0;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) {
    r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t index,
                            std::int32_t power) {
  Monomial m(num_vars);
  m.exps_.at(index) = power;
  m.degree_ = power;
  return m;
}

// -------------------------------------------------------------- Polynomial

namespace {

// Sorts descending and merges equal monomials.
void canonicalize(const Ring& ring, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return ring.compare(a.mono, b.mono) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms = std::move(out);
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.mono.size() != ring_->num_vars())
      throw DomainError("monomial length does not match the ring");
  canonicalize(*ring_, terms_);
}

Polynomial Polynomial::constant(RingPtr ring, const mpq_class& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({Monomial(ring->num_vars()), c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Polynomial p(ring);
  p.terms_.push_back({Monomial::variable(ring->num_vars(), index), 1});
  return p;
}

Polynomial Polynomial::term(RingPtr ring, Monomial mono, const mpq_class& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({std::move(mono), c});
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

std::optional<std::int64_t> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  std::int64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

mpq_class Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one())
    return terms_.back().coeff;
  return 0;
}

std::int32_t Polynomial::degree_in(std::size_t var) const {
  std::int32_t d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

void Polynomial::check_same_ring(const Polynomial& other) const {
  if (!ring_ || !other.ring_ || !ring_->same_as(*other.ring_))
    throw RingMismatch();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::add_scaled(const mpq_class& c, const Monomial& m,
                                  const Polynomial& q) const {
  check_same_ring(q);
  if (c == 0 || q.is_zero()) return *this;
  const Ring& ring = *ring_;
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + q.terms_.size());
  std::size_t i = 0, j = 0;
  const bool shift = !m.is_one();
  while (i < terms_.size() || j < q.terms_.size()) {
    if (j == q.terms_.size()) {
      r.terms_.push_back(terms_[i++]);
      continue;
    }
    Monomial qm = shift ? q.terms_[j].mono * m : q.terms_[j].mono;
    int cmp = i < terms_.size() ? ring.compare(terms_[i].mono, qm) : -1;
    if (cmp > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.push_back({std::move(qm), c * q.terms_[j].coeff});
      ++j;
    } else {
      mpq_class s = terms_[i].coeff + c * q.terms_[j].coeff;
      if (s != 0) r.terms_.push_back({std::move(qm), std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  return a.add_scaled(1, Monomial(a.ring_ ? a.ring_->num_vars() : 0), b);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a.add_scaled(-1, Monomial(a.ring_ ? a.ring_->num_vars() : 0), b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_ring(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  if (a.terms_.size() == 1)
    return b.times_monomial(a.terms_[0].mono).scaled(a.terms_[0].coeff);
  if (b.terms_.size() == 1)
    return a.times_monomial(b.terms_[0].mono).scaled(b.terms_[0].coeff);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
  Polynomial r(a.ring_);
  canonicalize(*a.ring_, prod);
  r.terms_ = std::move(prod);
  return r;
}

Polynomial Polynomial::scaled(const mpq_class& c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
  Polynomial r = *this;
  // Multiplying by a monomial preserves the order of terms.
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  mpq_class inv = 1 / leading_coeff();
  return scaled(inv);
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (ring_ && ring_->same_as(*target)) {
    Polynomial r = *this;
    r.ring_ = target;
    return r;
  }
  std::vector<std::size_t> map(ring_->num_vars());
  std::vector<bool> used(ring_->num_vars(), false);
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (t.mono[i] != 0) used[i] = true;
  for (std::size_t i = 0; i < ring_->num_vars(); ++i) {
    auto idx = target->index_of(ring_->variables()[i]);
    if (!idx) {
      if (used[i])
        throw DomainError("variable " + ring_->variables()[i] +
                          " missing from target ring");
      map[i] = SIZE_MAX;
    } else {
      map[i] = *idx;
    }
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<std::int32_t> e(target->num_vars(), 0);
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (t.mono[i] != 0) e[map[i]] = t.mono[i];
    out.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial(target, std::move(out));
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& values) const {
  if (values.size() != ring_->num_vars())
    throw DomainError("substitution needs one value per variable");
  RingPtr target = values.empty() ? ring_ : values.front().ring();
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial term = constant(target, t.coeff);
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (t.mono[i] != 0) term = term * values[i].pow(static_cast<unsigned>(t.mono[i]));
    result += term;
  }
  return result;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    mpq_class c = t.coeff;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool wrote = false;
    if (c != 1 || t.mono.is_one()) {
      out << c.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (wrote) out << "*";
      out << ring_->variables()[i];
      if (t.mono[i] > 1) out << "^" << t.mono[i];
      wrote = true;
    }
  }
  return out.str();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.ring_ && b.ring_ && !a.ring_->same_as(*b.ring_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coeff != b.terms_[i].coeff ||
        !(a.terms_[i].mono == b.terms_[i].mono))
      return false;
  }
  return true;
}

// ---------------------------------------------------------------- division

std::optional<Polynomial> try_divide(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw DomainError("division by zero polynomial");
  if (p.ring() && q.ring() && !p.ring()->same_as(*q.ring())) throw RingMismatch();
  const RingPtr& ring = q.ring();
  if (q.is_monomial()) {
    const Term& lt = q.leading_term();
    std::vector<Term> out;
    out.reserve(p.num_terms());
    for (const auto& t : p.terms()) {
      if (!lt.mono.divides(t.mono)) return std::nullopt;
      out.push_back({t.mono / lt.mono, t.coeff / lt.coeff});
    }
    Polynomial r(ring);
    r = Polynomial(ring, std::move(out));
    return r;
  }
  Polynomial rem = p;
  std::vector<Term> quot;
  const Term& lt = q.leading_term();
  mpq_class inv = 1 / lt.coeff;
  while (!rem.is_zero()) {
    const Term& rt = rem.leading_term();
    if (!lt.mono.divides(rt.mono)) return std::nullopt;
    Monomial m = rt.mono / lt.mono;
    mpq_class c = rt.coeff * inv;
    quot.push_back({m, c});
    rem = rem.add_scaled(-c, m, q);
  }
  return Polynomial(ring, std::move(quot));
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& q) {
  auto r = try_divide(p, q);
  if (!r) throw DomainError("inexact polynomial division");
  return *std::move(r);
}

}  // namespace ggor
