#pragma once

// Shared helpers for unit and acceptance tests: seeded random polynomials
// and matrices, and small parsing shortcuts.

#include <random>
#include <string>
#include <vector>

#include "ggor/matrices.hpp"
#include "ggor/ring.hpp"

namespace ggor::testing {

inline RingPtr ring_of(std::initializer_list<const char*> names) {
  return make_ring(std::vector<std::string>(names.begin(), names.end()));
}

inline Polynomial P(const RingPtr& r, const std::string& s) { return parse(s, r); }

inline PolyMatrix matrix(const RingPtr& r, const std::vector<std::vector<std::string>>& rows) {
  return PolyMatrix::parse(r, rows);
}

/// Random polynomial with small integer coefficients and exponents.
inline Polynomial random_poly(std::mt19937_64& rng, const RingPtr& r, int max_terms,
                              int max_exp, int coeff_range = 5) {
  std::uniform_int_distribution<int> nt(0, max_terms), ex(0, max_exp),
      co(-coeff_range, coeff_range);
  std::vector<Term> terms;
  for (int k = nt(rng); k > 0; --k) {
    std::vector<std::int32_t> e(r->num_vars());
    for (auto& v : e) v = ex(rng);
    int c = co(rng);
    if (c) terms.push_back({Monomial(std::move(e)), mpq_class(c)});
  }
  return Polynomial(r, std::move(terms));
}

/// Random homogeneous form of the given degree.
inline Polynomial random_form(std::mt19937_64& rng, const RingPtr& r, int degree,
                              int max_terms, int coeff_range = 3) {
  std::uniform_int_distribution<int> nt(1, max_terms), co(-coeff_range, coeff_range);
  std::uniform_int_distribution<std::size_t> var(0, r->num_vars() - 1);
  std::vector<Term> terms;
  for (int k = nt(rng); k > 0; --k) {
    std::vector<std::int32_t> e(r->num_vars(), 0);
    for (int d = 0; d < degree; ++d) ++e[var(rng)];
    int c = co(rng);
    if (c) terms.push_back({Monomial(std::move(e)), mpq_class(c)});
  }
  return Polynomial(r, std::move(terms));
}

/// Random monomial of the given degree with coefficient +-1.
inline Polynomial random_monomial(std::mt19937_64& rng, const RingPtr& r, int degree) {
  std::uniform_int_distribution<std::size_t> var(0, r->num_vars() - 1);
  std::vector<std::int32_t> e(r->num_vars(), 0);
  for (int d = 0; d < degree; ++d) ++e[var(rng)];
  return Polynomial::term(r, Monomial(std::move(e)), rng() % 2 ? 1 : -1);
}

inline PolyMatrix random_matrix(std::mt19937_64& rng, const RingPtr& r, std::size_t rows,
                                std::size_t cols, int max_terms, int max_exp) {
  PolyMatrix m(r, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_poly(rng, r, max_terms, max_exp);
  return m;
}

}  // namespace ggor::testing
