#include <numeric>

#include "ggor/error.hpp"
#include "ggor/matrices.hpp"

namespace ggor {
namespace {

// Pfaffian of the principal submatrix on `idx` (even length), expanding
// along its first index.
Polynomial pf(const PolyMatrix& m, std::vector<std::size_t> idx) {
  const RingPtr& ring = m.ring();
  if (idx.empty()) return Polynomial::constant(ring, 1);
  const std::size_t first = idx.front();
  Polynomial acc(ring);
  for (std::size_t k = 1; k < idx.size(); ++k) {
    const Polynomial& a = m(first, idx[k]);
    if (a.is_zero()) continue;
    std::vector<std::size_t> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t l = 1; l < idx.size(); ++l)
      if (l != k) rest.push_back(idx[l]);
    Polynomial sub = pf(m, std::move(rest));
    if (k % 2) acc += a * sub;
    else acc -= a * sub;
  }
  return acc;
}

void require_alternating(const PolyMatrix& m) {
  if (!is_alternating(m)) throw DomainError("matrix is not alternating");
}

}  // namespace

bool is_alternating(const PolyMatrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!m(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (!(m(i, j) == -m(j, i))) return false;
  }
  return true;
}

Polynomial pfaffian(const PolyMatrix& m) {
  require_alternating(m);
  if (m.rows() % 2) throw DomainError("pfaffian: odd size");
  std::vector<std::size_t> idx(m.rows());
  std::iota(idx.begin(), idx.end(), 0);
  return pf(m, std::move(idx));
}

std::vector<Polynomial> pfaffians(const PolyMatrix& m) {
  require_alternating(m);
  if (m.rows() % 2 == 0) throw DomainError("pfaffians: even size");
  std::vector<Polynomial> out;
  for (std::size_t h = 0; h < m.rows(); ++h) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != h) idx.push_back(i);
    Polynomial p = pf(m, std::move(idx));
    out.push_back(h % 2 ? -p : p);
  }
  return out;
}

}  // namespace ggor
