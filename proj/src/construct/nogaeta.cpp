#include "ggor/construct.hpp"
#include "ggor/error.hpp"

namespace ggor {
namespace {

Polynomial var_power(const RingPtr& ring, const std::string& name, std::int64_t e) {
  std::vector<std::int32_t> exps(ring->num_vars(), 0);
  exps[*ring->index_of(name)] = static_cast<std::int32_t>(e);
  return Polynomial::term(ring, Monomial(std::move(exps)), 1);
}

// First prefix pair (y, z), (y2, z2), ... whose names are all unused.
std::pair<std::string, std::string> free_prefixes(const RingPtr& ring, std::size_t lo, std::size_t hi) {
  for (std::size_t k = 1;; ++k) {
    std::string y = k == 1 ? "y" : "y" + std::to_string(k), z = k == 1 ? "z" : "z" + std::to_string(k);
    bool clash = false;
    for (std::size_t i = lo; i <= hi && !clash; ++i)
      clash = ring->index_of(y + "_" + std::to_string(i)) || ring->index_of(z + "_" + std::to_string(i));
    if (!clash) return {y, z};
  }
}

Construction realize_n3(const BettiSequence& seq) {
  Verdict v = classify_n3(seq);
  if (v.status != Essentiality::Essential)
    throw DomainError("realize: " + seq.to_string() + " is not essential (" + v.witness + ")");
  RingPtr ring = make_ring({"x", "y", "z", "u", "v", "w"});
  std::int64_t sum_a = seq.a[0] + seq.a[1] + seq.a[2];
  std::vector<Polynomial> h, g;
  for (std::size_t j = 0; j < 3; ++j) {
    h.push_back(var_power(ring, ring->variables()[j], seq.s - seq.b[j]));
    g.push_back(var_power(ring, ring->variables()[3 + j], sum_a - seq.a[j] - seq.b[j]));
  }
  auto pb = prop_bet(h, g);
  Construction out;
  out.matrix = sort_graded(pb.matrix);
  out.predicted = pb.predicted;
  out.witness = "diag(g) K(h) with " + v.witness;
  if (!(out.predicted == seq)) throw Error("realize: prop_bet predicts " + out.predicted.to_string());
  return out;
}

}  // namespace

Construction nogaeta_extend(const Construction& inner, const BettiSequence& outer, std::size_t t) {
  const std::size_t n = outer.size();
  if (t < 4 || t > n) throw DomainError("nogaeta_extend: t must satisfy 4 <= t <= n");
  auto a = [&](std::size_t i) { return outer.a[i - 1]; };
  auto b = [&](std::size_t j) { return outer.b[j - 1]; };
  if (b(n + 2 - t) > a(t)) throw DomainError("nogaeta_extend: b_{n+2-t} > a_t");
  if (!outer.consistent()) throw DomainError("nogaeta_extend: condition 1 fails");
  std::int64_t d = 0;
  for (std::size_t i = t; i <= n; ++i) {
    if (b(n + 1 - i) <= a(i)) throw DomainError("nogaeta_extend: condition 3 fails at i = " + std::to_string(i));
    d += b(n + 1 - i) - a(i);
  }
  std::vector<std::int64_t> ra, rb;
  for (std::size_t i = 1; i < t; ++i) ra.push_back(a(i) - d);
  for (std::size_t j = n + 2 - t; j <= n; ++j) rb.push_back(b(j) - d);
  BettiSequence reduced(ra, rb, outer.s - d);
  if (!(inner.predicted == reduced) || inner.matrix.rows() != t - 1 || !inner.matrix.is_square())
    throw DomainError("nogaeta_extend: inner matrix does not realize " + reduced.to_string());

  const PolyMatrix& mi = inner.matrix;
  const std::size_t off = n + 1 - t;  // 0-based column of the inner block
  for (std::size_t i = 0; i + 1 < t; ++i)
    for (std::size_t j = 0; j + 1 < t; ++j) {
      const Polynomial& e = mi(i, j);
      if (!e.is_zero() && (!e.is_homogeneous() || *e.degree() != b(off + j + 1) - a(i + 1)))
        throw DomainError("nogaeta_extend: inner entry degrees do not match the outer twists");
    }

  auto [py, pz] = free_prefixes(mi.ring(), t - 1, n);
  auto ys = fresh_names(mi.ring(), py, n - t + 1, t - 1);  // y_{t-1} .. y_{n-1}
  auto zs = fresh_names(mi.ring(), pz, n - t + 1, t);      // z_t .. z_n
  std::vector<std::string> extra = ys;
  extra.insert(extra.end(), zs.begin(), zs.end());
  RingPtr ring = extend_ring(mi.ring(), extra);

  PolyMatrix m(ring, n, n);
  PolyMatrix lifted = mi.in_ring(ring);
  for (std::size_t i = 0; i + 1 < t; ++i)
    for (std::size_t j = 0; j + 1 < t; ++j) m(i, off + j) = lifted(i, j);
  for (std::size_t i = t - 1; i <= n - 1; ++i)  // i + j = n
    m(i - 1, n - i - 1) = var_power(ring, ys[i - (t - 1)], b(n - i) - a(i));
  for (std::size_t i = t; i <= n; ++i)  // i + j = n + 1
    m(i - 1, n - i) = var_power(ring, zs[i - t], b(n + 1 - i) - a(i));
  m.set_shifts(outer.a, outer.b);
  if (!check_graded(m)) throw Error("nogaeta_extend: assembled matrix is not graded");
  auto report = check_presentation(m);
  if (!report.is_presentation || !report.is_minimal)
    throw Error("nogaeta_extend: assembled matrix is not a minimal presentation (" +
                to_string(report.failure_reason) + ")");

  Construction out;
  out.matrix = m;
  out.predicted = outer;
  out.witness = "block extension at t=" + std::to_string(t) + ", d=" + std::to_string(d) +
                " of [" + inner.witness + "]";
  return out;
}

Construction realize(const BettiSequence& seq) {
  Verdict v = classify(seq);
  if (v.status != Essentiality::Essential)
    throw DomainError("realize: " + seq.to_string() + " is " + to_string(v.status));
  if (seq.size() == 3) return realize_n3(seq);
  GaetaReduction red = classify_gaeta_reduce(seq);
  const BettiSequence& r = red.residue;
  Construction cur;
  if (r.size() == 3) {
    cur = realize_n3(r);
  } else if (r.is_homogeneous()) {
    cur = homogeneous_matrix(r.size(), r.a.front(), r.b.front());
  } else {
    throw DomainError("realize: no construction for the residue " + r.to_string());
  }
  for (std::size_t k = red.steps.size(); k-- > 0;) {
    const BettiSequence& outer = k == 0 ? seq : red.steps[k - 1].result;
    cur = nogaeta_extend(cur, outer, red.steps[k].t);
  }
  return cur;
}

}  // namespace ggor
