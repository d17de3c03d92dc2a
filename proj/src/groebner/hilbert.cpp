#include <gmpxx.h>

#include <algorithm>
#include <limits>

#include "ggor/error.hpp"
#include "ggor/groebner.hpp"

namespace ggor {
namespace {

using Support = std::vector<std::size_t>;

// Minimal sets of variables, each hit by any cover of the leading ideal.
std::vector<Support> minimal_supports(const std::vector<Polynomial>& gb) {
  std::vector<Support> sets;
  for (const auto& g : gb) {
    Support s;
    const Monomial& m = g.leading_monomial();
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) s.push_back(i);
    sets.push_back(std::move(s));
  }
  std::sort(sets.begin(), sets.end(), [](const Support& a, const Support& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<Support> minimal;
  for (const auto& s : sets) {
    bool dominated = std::any_of(minimal.begin(), minimal.end(), [&](const Support& m) {
      return std::includes(s.begin(), s.end(), m.begin(), m.end());
    });
    if (!dominated) minimal.push_back(s);
  }
  return minimal;
}

// Branch and bound for the smallest set of variables meeting every support.
void min_cover(const std::vector<Support>& sets, std::vector<bool>& chosen, std::size_t size,
               std::size_t& best) {
  if (size >= best) return;
  const Support* open = nullptr;
  for (const auto& s : sets) {
    if (std::any_of(s.begin(), s.end(), [&](std::size_t v) { return chosen[v]; })) continue;
    if (!open || s.size() < open->size()) open = &s;
  }
  if (!open) {
    best = size;
    return;
  }
  if (size + 1 >= best) return;
  for (std::size_t v : *open) {
    chosen[v] = true;
    min_cover(sets, chosen, size + 1, best);
    chosen[v] = false;
  }
}

using Series = std::vector<mpz_class>;

void add_into(Series& a, const Series& b, std::size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] += b[k];
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (auto& g : gens) {
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& m) { return m.divides(g); }))
      out.push_back(std::move(g));
  }
  return out;
}

// Numerator of the Hilbert series of R/(gens), gens minimal.
Series numerator(const std::vector<Monomial>& gens, std::size_t nvars) {
  if (gens.empty()) return {1};
  std::vector<int> uses(nvars, 0);
  for (const auto& g : gens)
    for (std::size_t i = 0; i < nvars; ++i)
      if (g[i] > 0) ++uses[i];
  auto pivot = std::max_element(uses.begin(), uses.end());
  if (*pivot <= 1) {
    Series s{1};
    for (const auto& g : gens) {
      Series next(s.size() + static_cast<std::size_t>(g.degree()), 0);
      for (std::size_t k = 0; k < s.size(); ++k) {
        next[k] += s[k];
        next[k + static_cast<std::size_t>(g.degree())] -= s[k];
      }
      s = std::move(next);
    }
    return s;
  }
  const auto x = static_cast<std::size_t>(pivot - uses.begin());
  Monomial xm = Monomial::variable(nvars, x);
  // N(I) = N(I + (x)) + t N(I : x)
  std::vector<Monomial> plus{xm}, colon;
  for (const auto& g : gens) {
    if (g[x] == 0) plus.push_back(g);
    colon.push_back(g[x] > 0 ? g / xm : g);
  }
  Series n = numerator(minimalize(std::move(plus)), nvars);
  add_into(n, numerator(minimalize(std::move(colon)), nvars), 1);
  while (n.size() > 1 && n.back() == 0) n.pop_back();
  return n;
}

long long to_ll(const mpz_class& v) {
  if (!v.fits_slong_p()) throw DomainError("Hilbert function value overflows");
  return v.get_si();
}

}  // namespace

int dimension(const IdealBasis& ideal) {
  if (is_unit_ideal(ideal)) return -1;
  const auto nvars = ideal.ring()->num_vars();
  auto sets = minimal_supports(ideal.groebner());
  std::vector<bool> chosen(nvars, false);
  std::size_t best = nvars + 1;
  min_cover(sets, chosen, 0, best);
  return static_cast<int>(nvars - best);
}

int height(const IdealBasis& ideal) {
  int d = dimension(ideal);
  if (d < 0) throw UnitIdealError();
  return static_cast<int>(ideal.ring()->num_vars()) - d;
}

bool grade_at_least(const IdealBasis& ideal, int c) {
  int d = dimension(ideal);
  return d < 0 || static_cast<int>(ideal.ring()->num_vars()) - d >= c;
}

std::vector<long long> hilbert_numerator(const IdealBasis& ideal) {
  if (!ideal.is_homogeneous()) throw DomainError("Hilbert series of a non-homogeneous ideal");
  std::vector<Monomial> leads;
  for (const auto& g : ideal.groebner()) leads.push_back(g.leading_monomial());
  Series s = numerator(minimalize(std::move(leads)), ideal.ring()->num_vars());
  std::vector<long long> out;
  for (const auto& c : s) out.push_back(to_ll(c));
  return out;
}

long long hilbert_function(const IdealBasis& ideal, std::int64_t degree) {
  auto num = hilbert_numerator(ideal);
  if (degree < 0) return 0;
  const auto r = static_cast<long>(ideal.ring()->num_vars());
  mpz_class total = 0;
  for (std::size_t k = 0; k < num.size(); ++k) {
    long m = static_cast<long>(degree) - static_cast<long>(k);
    if (m < 0) break;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(m + r - 1),
                 static_cast<unsigned long>(r - 1));
    total += b * mpz_class(static_cast<long>(num[k]));
  }
  return to_ll(total);
}

}  // namespace ggor
