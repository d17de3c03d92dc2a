#include <numeric>

#include "ggor/construct.hpp"
#include "ggor/error.hpp"

namespace ggor {
namespace {

Polynomial var_power(const RingPtr& ring, const std::string& name, std::int64_t e) {
  auto idx = ring->index_of(name);
  if (!idx) throw DomainError("unknown variable " + name);
  std::vector<std::int32_t> exps(ring->num_vars(), 0);
  exps[*idx] = static_cast<std::int32_t>(e);
  return Polynomial::term(ring, Monomial(std::move(exps)), 1);
}

std::uint64_t support(const std::vector<Polynomial>& ps) {
  std::uint64_t mask = 0;
  for (const auto& p : ps)
    for (const auto& t : p.terms()) mask |= t.mono.support_mask();
  return mask;
}

}  // namespace

PolyMatrix lift_matrix(const PolyMatrix& m, const std::vector<std::int64_t>& u,
                       std::vector<std::string> fresh) {
  const std::size_t n = m.rows();
  if (u.size() != n) throw DomainError("lift_matrix: u must have one entry per row");
  for (auto x : u)
    if (x < 0) throw DomainError("lift_matrix: negative exponent");
  if (fresh.empty()) fresh = fresh_names(m.ring(), "y", n);
  if (fresh.size() != n) throw DomainError("lift_matrix: need one fresh variable per row");
  for (const auto& name : fresh)
    if (m.ring()->index_of(name)) throw DomainError("lift_matrix: variable " + name + " collides");
  auto report = check_presentation(m);
  if (!report.is_presentation || !report.is_minimal)
    throw DomainError("lift_matrix: input is not a minimal presentation matrix");

  RingPtr ring = extend_ring(m.ring(), fresh);
  PolyMatrix out = m.in_ring(ring);
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial y = var_power(ring, fresh[i], u[i]);
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = out(i, j) * y;
  }
  if (m.row_shifts() && m.col_shifts()) {
    const std::int64_t total = std::accumulate(u.begin(), u.end(), std::int64_t{0});
    Shifts a = *m.row_shifts(), b = *m.col_shifts();
    for (std::size_t i = 0; i < n; ++i) a[i] += total - u[i];
    for (auto& x : b) x += total;
    out.set_shifts(a, b);
  }
  return out;
}

PolyMatrix BidiagonalMatrix::to_matrix() const {
  const std::size_t n = size();
  if (n < 3 || superdiag.size() != n) throw DomainError("bidiagonal matrix needs size >= 3");
  PolyMatrix m(diag[0].ring(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = diag[i];
    m(i, (i + 1) % n) = superdiag[i];
  }
  return m;
}

BidiagonalMatrix BidiagonalMatrix::from_matrix(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (!m.is_square() || n < 3) throw DomainError("bidiagonal matrix needs to be square of size >= 3");
  BidiagonalMatrix out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && j != (i + 1) % n && !m(i, j).is_zero())
        throw DomainError("matrix is not bidiagonal");
    out.diag.push_back(m(i, i));
    out.superdiag.push_back(m(i, (i + 1) % n));
  }
  return out;
}

BidiagonalMatrix star_product(const BidiagonalMatrix& m, const BidiagonalMatrix& n) {
  if (m.size() != n.size() || m.size() < 3) throw DomainError("star_product: size mismatch");
  std::vector<Polynomial> mm = m.diag, nn = n.diag;
  mm.insert(mm.end(), m.superdiag.begin(), m.superdiag.end());
  nn.insert(nn.end(), n.superdiag.begin(), n.superdiag.end());
  if (support(mm) & support(nn)) throw DomainError("star_product: factors share variables");
  BidiagonalMatrix t;
  for (std::size_t i = 0; i < m.size(); ++i) {
    t.diag.push_back(m.diag[i] * n.diag[i]);
    t.superdiag.push_back(-(m.superdiag[i] * n.superdiag[i]));
  }
  return t;
}

BidiagonalMatrix base_bidiagonal(const RingPtr& ring, std::size_t n, std::size_t t,
                                 const std::string& prefix) {
  if (n < 3 || t < 1 || 2 * t >= n) throw DomainError("base_bidiagonal needs 1 <= t < n/2");
  const std::size_t a = n - 1 - t;
  auto x = [&](std::size_t i) { return var_power(ring, prefix + "_" + std::to_string(i % n + 1), 1); };
  // g_i = x_i ... x_{i+a-1}; column j links g_{j-1} and g_j through
  // x_{j+a-1} g_{j-1} = x_{j-1} g_j.
  BidiagonalMatrix out;
  for (std::size_t i = 0; i < n; ++i) {
    out.diag.push_back(-x(i + n - 1));
    out.superdiag.push_back(x(i + a));
  }
  return out;
}

Construction homogeneous_matrix(std::size_t n, std::int64_t a, std::int64_t b) {
  Verdict v = classify_homogeneous(n, a, b);
  if (v.status != Essentiality::Essential)
    throw DomainError("homogeneous_matrix: " + BettiSequence::homogeneous(n, a, b).to_string() +
                      " is " + to_string(v.status) + " (" + v.rule + ")");
  const std::int64_t gap = b - a, s = static_cast<std::int64_t>(n) * gap, sigma = s - b;
  const auto cap = static_cast<std::int64_t>(n % 2 == 1 ? (n - 1) / 2 : (n - 2) / 2);
  // Star factors each add 1 to b - a and between 1 and cap to s - b; lifts
  // add 1 to b - a and keep s - b.
  const std::int64_t factors = std::min(gap, sigma);
  const std::int64_t lifts = gap - factors;
  if (sigma > factors * cap) throw Error("homogeneous_matrix: s - b out of the constructive range");

  std::vector<std::int64_t> ts(static_cast<std::size_t>(factors), 1);
  for (std::int64_t left = sigma - factors, k = 0; left > 0; ++k) {
    const std::int64_t add = std::min(left, cap - 1);
    ts[static_cast<std::size_t>(k)] += add;
    left -= add;
  }
  std::vector<std::string> names;
  for (std::int64_t k = 1; k <= factors; ++k)
    for (std::size_t i = 1; i <= n; ++i) names.push_back("v" + std::to_string(k) + "_" + std::to_string(i));
  RingPtr ring = make_ring(names);

  BidiagonalMatrix acc = base_bidiagonal(ring, n, static_cast<std::size_t>(ts[0]), "v1");
  for (std::int64_t k = 1; k < factors; ++k)
    acc = star_product(acc, base_bidiagonal(ring, n, static_cast<std::size_t>(ts[k]),
                                            "v" + std::to_string(k + 1)));
  Construction out;
  out.matrix = acc.to_matrix();
  const std::int64_t a0 = static_cast<std::int64_t>(n) * factors - sigma - factors;
  out.matrix.set_shifts(Shifts(n, a0), Shifts(n, a0 + factors));

  std::string witness = "star product of " + std::to_string(factors) + " base matrices with s-b = (";
  for (std::size_t k = 0; k < ts.size(); ++k) witness += (k ? "," : "") + std::to_string(ts[k]);
  witness += ")";
  for (std::int64_t k = 1; k <= lifts; ++k)
    out.matrix = lift_matrix(out.matrix, std::vector<std::int64_t>(n, 1),
                             fresh_names(out.matrix.ring(), "w" + std::to_string(k), n));
  if (lifts > 0) witness += ", lifted " + std::to_string(lifts) + " times with u = 1";
  out.predicted = BettiSequence::homogeneous(n, a, b);
  out.witness = witness;
  return out;
}

}  // namespace ggor
