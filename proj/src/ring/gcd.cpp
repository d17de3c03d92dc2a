#include <algorithm>
#include <optional>

#include "ggor/error.hpp"
#include "ggor/ring.hpp"

namespace ggor {
namespace {

// Coefficients of p viewed as a univariate polynomial in `var`; entry k
// multiplies var^k and does not involve var.
std::vector<Polynomial> coefficients_in(const Polynomial& p, std::size_t var) {
  std::int32_t d = p.degree_in(var);
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(std::max(d, 0) + 1));
  for (const auto& t : p.terms()) {
    std::vector<std::int32_t> e(t.mono.exponents().begin(), t.mono.exponents().end());
    auto k = static_cast<std::size_t>(e[var]);
    e[var] = 0;
    buckets[k].push_back({Monomial(std::move(e)), t.coeff});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.emplace_back(p.ring(), std::move(b));
  return out;
}

Polynomial content_in(const Polynomial& p, std::size_t var) {
  auto cs = coefficients_in(p, var);
  cs.erase(std::remove_if(cs.begin(), cs.end(),
                          [](const Polynomial& c) { return c.is_zero(); }),
           cs.end());
  return gcd(cs);
}

Polynomial primitive_part_in(const Polynomial& p, std::size_t var) {
  if (p.is_zero()) return p;
  return divide_exact(p, content_in(p, var)).monic();
}

Polynomial leading_coeff_in(const Polynomial& p, std::size_t var) {
  return coefficients_in(p, var).back();
}

// Pseudo-remainder of a by b with respect to `var`.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b,
                            std::size_t var) {
  const std::int32_t db = b.degree_in(var);
  const Polynomial lcb = leading_coeff_in(b, var);
  Polynomial r = a;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    std::int32_t dr = r.degree_in(var);
    Polynomial lcr = leading_coeff_in(r, var);
    Monomial shift = Monomial::variable(a.ring()->num_vars(), var, dr - db);
    r = lcb * r - (lcr * b).times_monomial(shift);
  }
  return r;
}

Monomial monomial_content(const Polynomial& p) {
  Monomial m = p.leading_monomial();
  for (const auto& t : p.terms()) m = Monomial::gcd(m, t.mono);
  return m;
}

std::vector<bool> support(const Polynomial& p) {
  std::vector<bool> s(p.ring()->num_vars(), false);
  for (const auto& t : p.terms())
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (t.mono[i] != 0) s[i] = true;
  return s;
}

using Univariate = std::vector<mpq_class>;  // coefficient k multiplies var^k

// p with every variable except `var` replaced by point[i].
Univariate image(const Polynomial& p, std::size_t var, const std::vector<mpq_class>& point) {
  Univariate out(static_cast<std::size_t>(std::max(p.degree_in(var), 0) + 1), 0);
  for (const auto& t : p.terms()) {
    mpq_class c = t.coeff;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (i == var || t.mono[i] == 0) continue;
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), point[i].get_num_mpz_t(), static_cast<unsigned long>(t.mono[i]));
      mpz_pow_ui(den.get_mpz_t(), point[i].get_den_mpz_t(), static_cast<unsigned long>(t.mono[i]));
      c *= mpq_class(num, den);
    }
    out[static_cast<std::size_t>(t.mono[var])] += c;
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

// Degree of the univariate gcd by the Euclidean algorithm.
std::size_t univariate_gcd_degree(Univariate a, Univariate b) {
  auto trim = [](Univariate& u) {
    while (!u.empty() && u.back() == 0) u.pop_back();
  };
  trim(a);
  trim(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    while (a.size() >= b.size()) {
      mpq_class f = a.back() / b.back();
      const std::size_t shift = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
      a.pop_back();
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// True when the images certify that p and q have no common factor of
// positive degree in any variable. The image gcd has at least the degree
// of the true gcd whenever the leading coefficient of p does not vanish.
bool coprime_by_images(const Polynomial& p, const Polynomial& q, const std::vector<bool>& common) {
  const std::size_t nv = p.ring()->num_vars();
  std::vector<mpq_class> point(nv);
  for (std::size_t i = 0; i < nv; ++i) point[i] = static_cast<long>(3 + 7 * i + (i * i) % 5);
  for (std::size_t v = 0; v < nv; ++v) {
    if (!common[v]) continue;
    Univariate ip = image(p, v, point), iq = image(q, v, point);
    if (static_cast<std::int32_t>(ip.size()) - 1 != p.degree_in(v)) return false;
    if (univariate_gcd_degree(std::move(ip), std::move(iq)) != 0) return false;
  }
  return true;
}

// Heuristic gcd over the integers: evaluate one variable at a large
// integer xi, recurse, recover the result from its xi-adic digits and
// accept it only if it divides both inputs.

mpz_class max_norm(const Polynomial& p) {
  mpz_class m = 0;
  for (const auto& t : p.terms()) m = std::max(m, mpz_class(abs(t.coeff.get_num())));
  return m;
}

// Scaled to integer coefficients with content 1.
Polynomial integer_primitive(const Polynomial& p) {
  if (p.is_zero()) return p;
  mpz_class den = 1, num = 0;
  for (const auto& t : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
  }
  return p.scaled(mpq_class(den, num));
}

Polynomial evaluate_at(const Polynomial& p, std::size_t var, const mpz_class& xi) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), xi.get_mpz_t(), static_cast<unsigned long>(t.mono[var]));
    std::vector<std::int32_t> e(t.mono.exponents().begin(), t.mono.exponents().end());
    e[var] = 0;
    terms.push_back({Monomial(std::move(e)), t.coeff * pw});
  }
  return Polynomial(p.ring(), std::move(terms));
}

mpz_class symmetric_mod(const mpz_class& c, const mpz_class& xi) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
  if (2 * r > xi) r -= xi;
  return r;
}

mpz_class integer_content(const Polynomial& p) {
  mpz_class c = 0;
  for (const auto& t : p.terms()) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.coeff.get_num_mpz_t());
  return c;
}

// Inputs have integer coefficients and are nonzero.
std::optional<Polynomial> heuristic_gcd(const Polynomial& p_in, const Polynomial& q_in) {
  if (p_in.is_zero() || q_in.is_zero()) return std::nullopt;
  const RingPtr& ring = p_in.ring();
  mpz_class content;
  mpz_gcd(content.get_mpz_t(), integer_content(p_in).get_mpz_t(),
          integer_content(q_in).get_mpz_t());
  const Polynomial p = integer_primitive(p_in), q = integer_primitive(q_in);
  std::optional<std::size_t> var;
  for (const auto* f : {&p, &q})
    for (const auto& t : f->terms())
      for (std::size_t i = 0; i < t.mono.size(); ++i)
        if (t.mono[i] != 0 && (!var || i > *var)) var = i;
  if (!var) return Polynomial::constant(ring, mpq_class(content));
  mpz_class xi = 2 * std::min(max_norm(p), max_norm(q)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    auto image = heuristic_gcd(evaluate_at(p, *var, xi), evaluate_at(q, *var, xi));
    if (image && !image->is_zero()) {
      std::vector<Term> terms;
      Polynomial rest = *image;
      for (std::int32_t power = 0; !rest.is_zero(); ++power) {
        std::vector<Term> digit;
        for (const auto& t : rest.terms()) {
          mpz_class c = symmetric_mod(t.coeff.get_num(), xi);
          if (c != 0) digit.push_back({t.mono, mpq_class(c)});
        }
        Polynomial d(ring, digit);
        rest = (rest - d).scaled(mpq_class(1) / mpq_class(xi));
        for (auto& t : digit) {
          std::vector<std::int32_t> e(t.mono.exponents().begin(), t.mono.exponents().end());
          e[*var] = power;
          terms.push_back({Monomial(std::move(e)), t.coeff});
        }
      }
      Polynomial g = integer_primitive(Polynomial(ring, std::move(terms)));
      if (!g.is_zero() && try_divide(p, g) && try_divide(q, g)) return g.scaled(mpq_class(content));
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

// gcd of nonzero polynomials without monomial content.
Polynomial gcd_core(const Polynomial& p, const Polynomial& q) {
  const RingPtr& ring = p.ring();
  if (p.is_constant() || q.is_constant()) return Polynomial::constant(ring, 1);
  auto sp = support(p), sq = support(q);
  {
    std::vector<bool> common(sp.size());
    for (std::size_t v = 0; v < sp.size(); ++v) common[v] = sp[v] && sq[v];
    if (coprime_by_images(p, q, common)) return Polynomial::constant(ring, 1);
  }
  if (auto g = heuristic_gcd(integer_primitive(p), integer_primitive(q))) return g->monic();
  for (std::size_t v = 0; v < sp.size(); ++v) {
    if (sp[v] && !sq[v]) return gcd(content_in(p, v), q);
    if (sq[v] && !sp[v]) return gcd(p, content_in(q, v));
  }
  std::size_t var = 0;
  for (std::size_t v = sp.size(); v-- > 0;) {
    if (sp[v]) {
      var = v;
      break;
    }
  }
  Polynomial cp = content_in(p, var), cq = content_in(q, var);
  Polynomial c = gcd(cp, cq);
  Polynomial a = divide_exact(p, cp), b = divide_exact(q, cq);
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  for (;;) {
    Polynomial r = pseudo_remainder(a, b, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) {
      b = Polynomial::constant(ring, 1);
      break;
    }
    a = std::move(b);
    b = primitive_part_in(r, var);
  }
  return (c * primitive_part_in(b, var)).monic();
}

}  // namespace

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  if (p.ring() && q.ring() && !p.ring()->same_as(*q.ring())) throw RingMismatch();
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  const RingPtr& ring = p.ring();
  if (p.is_constant() || q.is_constant()) return Polynomial::constant(ring, 1);
  Monomial mp = monomial_content(p), mq = monomial_content(q);
  Monomial g = Monomial::gcd(mp, mq);
  Polynomial mono = Polynomial::term(ring, g, 1);
  if (p.is_monomial() || q.is_monomial()) return mono;
  Polynomial p1 = divide_exact(p, Polynomial::term(ring, mp, 1));
  Polynomial q1 = divide_exact(q, Polynomial::term(ring, mq, 1));
  return (gcd_core(p1, q1) * mono).monic();
}

Polynomial gcd(std::span<const Polynomial> ps) {
  if (ps.empty()) throw DomainError("gcd of an empty list");
  Polynomial g = ps.front().monic();
  for (std::size_t i = 1; i < ps.size(); ++i) {
    if (g.is_unit()) break;
    g = gcd(g, ps[i]);
  }
  return g;
}

}  // namespace ggor
