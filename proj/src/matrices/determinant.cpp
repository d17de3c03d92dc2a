#include <limits>
#include <numeric>

#include "ggor/error.hpp"
#include "ggor/matrices.hpp"

namespace ggor {
namespace {

using Grid = std::vector<std::vector<Polynomial>>;

Grid to_grid(const PolyMatrix& m) {
  Grid g(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) g[i] = m.row(i);
  return g;
}

// Cost of an entry as a pivot: degree first, then term count.
std::pair<std::int64_t, std::size_t> pivot_cost(const Polynomial& p) {
  return {*p.degree(), p.num_terms()};
}

struct Elimination {
  std::size_t rank = 0;
  bool odd_permutation = false;
  Polynomial last_pivot;
};

// Fraction-free Gaussian elimination with full pivoting. After step k the
// entries g[i][j], i, j > k, are (k+2)-minors of the permuted input, so
// every division by the previous pivot is exact.
Elimination bareiss(Grid& g, const RingPtr& ring) {
  const std::size_t rows = g.size();
  const std::size_t cols = rows ? g[0].size() : 0;
  Elimination e;
  Polynomial prev = Polynomial::constant(ring, 1);
  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    std::size_t pr = rows, pc = cols;
    std::pair<std::int64_t, std::size_t> best{std::numeric_limits<std::int64_t>::max(), 0};
    for (std::size_t i = k; i < rows; ++i)
      for (std::size_t j = k; j < cols; ++j) {
        if (g[i][j].is_zero()) continue;
        auto c = pivot_cost(g[i][j]);
        if (pr == rows || c < best) {
          best = c;
          pr = i;
          pc = j;
        }
      }
    if (pr == rows) break;
    if (pr != k) {
      std::swap(g[pr], g[k]);
      e.odd_permutation = !e.odd_permutation;
    }
    if (pc != k) {
      for (auto& row : g) std::swap(row[pc], row[k]);
      e.odd_permutation = !e.odd_permutation;
    }
    const Polynomial& piv = g[k][k];
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        Polynomial v = piv * g[i][j] - g[i][k] * g[k][j];
        g[i][j] = prev.is_unit() ? v.scaled(1 / prev.leading_coeff()) : divide_exact(v, prev);
      }
      g[i][k] = Polynomial(ring);
    }
    prev = piv;
    ++e.rank;
  }
  e.last_pivot = prev;
  return e;
}

Polynomial expand(const PolyMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  const RingPtr& ring = m.ring();
  if (row == m.rows()) return Polynomial::constant(ring, 1);
  Polynomial acc(ring);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Polynomial& a = m(row, cols[k]);
    if (a.is_zero()) continue;
    std::size_t c = cols[k];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    Polynomial sub = expand(m, cols, row + 1);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
    if (k % 2) acc -= a * sub;
    else acc += a * sub;
  }
  return acc;
}

void require_square(const PolyMatrix& m, const char* what) {
  if (!m.is_square()) throw DomainError(std::string(what) + ": matrix is not square");
}

}  // namespace

Polynomial det(const PolyMatrix& m) {
  require_square(m, "det");
  if (m.rows() == 0) return Polynomial::constant(m.ring(), 1);
  if (m.rows() <= 2) return det_by_expansion(m);
  Grid g = to_grid(m);
  Elimination e = bareiss(g, m.ring());
  if (e.rank < m.rows()) return Polynomial(m.ring());
  return e.odd_permutation ? -e.last_pivot : e.last_pivot;
}

Polynomial det_by_expansion(const PolyMatrix& m) {
  require_square(m, "det");
  std::vector<std::size_t> cols(m.cols());
  std::iota(cols.begin(), cols.end(), 0);
  return expand(m, cols, 0);
}

Polynomial minor(const PolyMatrix& m, std::span<const std::size_t> rows,
                 std::span<const std::size_t> cols) {
  if (rows.size() != cols.size()) throw DomainError("minor: index sets differ in size");
  for (auto i : rows)
    if (i >= m.rows()) throw DomainError("minor: row index out of range");
  for (auto j : cols)
    if (j >= m.cols()) throw DomainError("minor: column index out of range");
  return det(m.submatrix(rows, cols));
}

std::size_t rank(const PolyMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Grid g = to_grid(m);
  return bareiss(g, m.ring()).rank;
}

PolyMatrix cofactor_matrix_serial(const PolyMatrix& m) {
  require_square(m, "cofactor_matrix");
  const std::size_t n = m.rows();
  PolyMatrix c(m.ring(), n, n);
  if (n == 1) {
    c(0, 0) = Polynomial::constant(m.ring(), 1);
    return c;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial d = det(m.without(i, j));
      c(i, j) = (i + j) % 2 ? -d : d;
    }
  return c;
}

PolyMatrix cofactor_matrix(const PolyMatrix& m) {
  require_square(m, "cofactor_matrix");
  const std::size_t n = m.rows();
  if (n <= 1) return cofactor_matrix_serial(m);
  PolyMatrix c(m.ring(), n, n);
  const auto total = static_cast<std::int64_t>(n * n);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k < total; ++k) {
    const auto i = static_cast<std::size_t>(k) / n, j = static_cast<std::size_t>(k) % n;
    Polynomial d = det(m.without(i, j));
    c(i, j) = (i + j) % 2 ? -d : d;
  }
  return c;
}

std::vector<Polynomial> signed_maximal_minors_serial(const PolyMatrix& n) {
  if (n.rows() != n.cols() + 1)
    throw DomainError("signed_maximal_minors: expected an n x (n-1) matrix");
  std::vector<Polynomial> g;
  g.reserve(n.rows());
  for (std::size_t i = 0; i < n.rows(); ++i) {
    Polynomial d = det(n.without_row(i));
    g.push_back(i % 2 ? -d : d);
  }
  return g;
}

std::vector<Polynomial> signed_maximal_minors(const PolyMatrix& n) {
  if (n.rows() != n.cols() + 1)
    throw DomainError("signed_maximal_minors: expected an n x (n-1) matrix");
  std::vector<Polynomial> g(n.rows(), Polynomial(n.ring()));
  const auto total = static_cast<std::int64_t>(n.rows());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k < total; ++k) {
    const auto i = static_cast<std::size_t>(k);
    Polynomial d = det(n.without_row(i));
    g[i] = i % 2 ? -d : d;
  }
  return g;
}

}  // namespace ggor
