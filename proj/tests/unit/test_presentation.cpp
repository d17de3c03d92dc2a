#include <doctest.h>

#include <algorithm>
#include <bit>

#include "ggor/error.hpp"
#include "ggor/presentation.hpp"
#include "support.hpp"

using namespace ggor;
using namespace ggor::testing;

namespace {

RingPtr seven() { return ring_of({"x", "y", "z", "t", "u", "v", "w"}); }

PolyMatrix four_cycle(const RingPtr& r) {
  return matrix(r, {{"y", "-x", "0", "0"},
                    {"0", "z", "-y", "0"},
                    {"0", "0", "t", "-z"},
                    {"-t", "0", "0", "x"}});
}

PolyMatrix koszul(const Polynomial& a, const Polynomial& b, const Polynomial& c) {
  Polynomial zero(a.ring());
  return PolyMatrix(a.ring(), {{zero, c, -b}, {-c, zero, a}, {b, -a, zero}});
}

PolyMatrix diagonal(const std::vector<Polynomial>& d) {
  PolyMatrix m(d.front().ring(), d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

// a = c * b for a nonzero constant c.
bool proportional_by_unit(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  if (a.size() != b.size()) return false;
  std::optional<Polynomial> c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() != b[i].is_zero()) return false;
    if (a[i].is_zero()) continue;
    if (!c) {
      c = try_divide(a[i], b[i]);
      if (!c || !c->is_unit()) return false;
    }
    if (!(a[i] == *c * b[i])) return false;
  }
  return c.has_value();
}

// Determinant one integer matrix: product of unit lower and upper triangles.
PolyMatrix unimodular(std::mt19937_64& rng, const RingPtr& r, std::size_t n) {
  PolyMatrix lower = PolyMatrix::identity(r, n), upper = PolyMatrix::identity(r, n);
  std::uniform_int_distribution<int> co(-2, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = Polynomial::constant(r, co(rng));
      upper(j, i) = Polynomial::constant(r, co(rng));
    }
  return lower * upper;
}

std::vector<std::int64_t> sorted(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("gamma: examples") {
  auto r = seven();
  auto g = gamma(four_cycle(r));
  CHECK(g.components ==
        std::vector<Polynomial>{P(r, "z*t"), P(r, "x*t"), P(r, "x*y"), P(r, "y*z")});
  CHECK(gamma(four_cycle(r).transpose()).components ==
        std::vector<Polynomial>{P(r, "x"), P(r, "y"), P(r, "z"), P(r, "t")});

  auto k = koszul(P(r, "x"), P(r, "y"), P(r, "z"));
  CHECK(gamma(k).components == std::vector<Polynomial>{P(r, "x"), P(r, "y"), P(r, "z")});
  CHECK(gamma(k.transpose()).components == gamma(k).components);
  CHECK(proportional_by_unit(gamma(k).components, pfaffians(k)));

  // Oracle: cofactor expansion of the 3x2 column submatrix by hand.
  auto ak = diagonal({P(r, "u"), P(r, "v"), P(r, "w")}) * k;
  CHECK(proportional_by_unit(gamma(ak).components,
                             {P(r, "x*v*w"), P(r, "y*u*w"), P(r, "z*u*v")}));

  CHECK_THROWS_AS(gamma(PolyMatrix(r, 3, 3)), DomainError);
  CHECK_THROWS_AS(gamma(PolyMatrix::identity(r, 3)), DomainError);
}

TEST_CASE("check_presentation: examples") {
  auto r = seven();
  auto rep = check_presentation(four_cycle(r));
  CHECK(rep.is_presentation);
  CHECK(rep.cofactor_unit->is_unit());
  CHECK(rep.height_J == 4);
  CHECK(rep.is_minimal);
  CHECK(rep.zero_components.empty());

  auto tr = check_presentation(four_cycle(r).transpose());
  CHECK_FALSE(tr.is_presentation);
  CHECK(tr.failure_reason == PresentationFailure::HeightJTooSmall);
  CHECK(tr.height_J == 2);

  auto k = check_presentation(koszul(P(r, "x"), P(r, "y"), P(r, "z")));
  CHECK(k.is_presentation);
  CHECK(k.gamma->components == k.gamma_transpose->components);
  CHECK(k.cofactor_unit->is_unit());

  CHECK(check_presentation(PolyMatrix(r, 2, 3)).failure_reason == PresentationFailure::NotSquare);
  CHECK(check_presentation(PolyMatrix::identity(r, 3)).failure_reason ==
        PresentationFailure::RankNotSubmaximal);
  // Koszul on a sequence of height 2: cofactors factor, J too small.
  auto low = check_presentation(koszul(P(r, "x"), P(r, "y"), P(r, "x+y")));
  CHECK(low.failure_reason == PresentationFailure::HeightJTooSmall);
}

TEST_CASE("check_presentation_rect") {
  auto r = seven();
  CHECK(check_presentation_rect(four_cycle(r)));
  CHECK_FALSE(check_presentation_rect(four_cycle(r).transpose()));

  auto hb = matrix(r, {{"x", "0"}, {"-y", "z"}, {"0", "-t"}});
  auto extra = hb.hconcat(PolyMatrix::column_vector(
      r, {P(r, "x*u"), P(r, "-y*u + z*v"), P(r, "-t*v")}));
  auto rep = check_presentation_rect_report(extra);
  CHECK(rep.is_presentation);
  REQUIRE(rep.hilbert_burch_columns);
  CHECK(*rep.hilbert_burch_columns == std::vector<std::size_t>{0, 1});
  CHECK_FALSE(rep.is_minimal);
  CHECK(check_presentation_rect_report(hb).is_minimal);
  CHECK_THROWS_AS(check_presentation_rect(PolyMatrix::identity(r, 3)), DomainError);
}

TEST_CASE("build_resolution: Betti data") {
  auto r = seven();
  auto res = build_resolution(four_cycle(r));
  CHECK(res.shifts[1] == Shifts{2, 2, 2, 2});
  CHECK(sorted(res.shifts[2]) == Shifts{3, 3, 3, 3});
  CHECK(res.shifts[3] == Shifts{4});
  CHECK(res.minimal);
  // Oracle: the Groebner-based minimal resolution of I_M.
  auto direct = minimal_free_resolution(gamma(four_cycle(r)).ideal());
  REQUIRE(direct.shifts.size() == 4);
  CHECK(sorted(direct.shifts[1]) == Shifts{2, 2, 2, 2});
  CHECK(sorted(direct.shifts[2]) == Shifts{3, 3, 3, 3});
  CHECK(direct.shifts[3] == Shifts{4});

  auto kz = build_resolution(koszul(P(r, "x"), P(r, "y"), P(r, "z")));
  CHECK(kz.shifts[1] == Shifts{1, 1, 1});
  CHECK(kz.shifts[2] == Shifts{2, 2, 2});
  CHECK(kz.shifts[3] == Shifts{3});

  auto bet = diagonal({P(r, "u"), P(r, "v"), P(r, "w")}) *
             koszul(P(r, "x"), P(r, "y^2"), P(r, "z^3"));
  auto rb = build_resolution(bet);
  CHECK(rb.shifts[1] == Shifts{3, 4, 5});
  CHECK(sorted(rb.shifts[2]) == Shifts{6, 7, 8});
  CHECK(rb.shifts[3] == Shifts{9});

  CHECK_THROWS_AS(build_resolution(four_cycle(r).transpose()), DomainError);
  // Inhomogeneous entries cannot be graded.
  CHECK_THROWS_AS(build_resolution(koszul(P(r, "x"), P(r, "y"), P(r, "z + t^2"))), DomainError);
}

TEST_CASE("verify_exactness") {
  auto r = seven();
  auto res = build_resolution(koszul(P(r, "x"), P(r, "y"), P(r, "z")));
  auto rep = verify_exactness(res);
  CHECK(rep.composites_zero);
  CHECK(rep.exact);
  REQUIRE(rep.stages.size() == 3);
  CHECK(rep.stages[0].expected_rank == 1);
  CHECK(rep.stages[1].expected_rank == 2);
  CHECK(rep.stages[2].expected_rank == 1);
  CHECK(rep.stages[2].height == 3);

  CHECK(verify_exactness(build_resolution(four_cycle(r))).exact);

  auto broken = res;
  broken.maps[1](0, 1) = Polynomial(r);
  auto bad = verify_exactness(broken);
  CHECK_FALSE(bad.composites_zero);
  CHECK_FALSE(bad.exact);
  CHECK(bad.stages.empty());

  // A complex that is not exact: the Koszul map squared on a height-2 sequence.
  auto low = res;
  low.maps[0] = PolyMatrix::row_vector(r, {P(r, "x"), P(r, "y"), P(r, "0")});
  low.maps[1] = koszul(P(r, "x"), P(r, "y"), P(r, "0"));
  low.maps[2] = PolyMatrix::column_vector(r, {P(r, "x"), P(r, "y"), P(r, "0")});
  auto lr = verify_exactness(low);
  CHECK(lr.composites_zero);
  CHECK_FALSE(lr.exact);
}

TEST_CASE("zeta: examples") {
  auto r = seven();
  auto k = zeta(koszul(P(r, "x"), P(r, "y"), P(r, "z")));
  CHECK(k.nu_I == 3);
  CHECK(k.nu_J == 3);
  CHECK(k.zeta == 0);
  auto c = zeta(four_cycle(r));
  CHECK(c.zeta == 0);
  CHECK(c.nu_J == 4);

  CHECK_THROWS_AS(zeta(four_cycle(r).transpose()), DomainError);
}

TEST_CASE("decompose: examples") {
  auto r = ring_of({"x", "y", "z", "u", "v", "w"});
  auto b = matrix(r, {{"u", "0", "0"}, {"0", "v", "0"}, {"0", "0", "w"}, {"x", "y", "z"}});
  auto d = decompose(b);
  CHECK(d.regular);
  CHECK(d.identity_verified);
  CHECK_FALSE(d.y_empty);
  CHECK(same_ideal(d.total, IdealBasis(r, {P(r, "x*v*w"), P(r, "y*u*w"), P(r, "z*u*v")})));
  CHECK(same_ideal(d.y, IdealBasis(r, {P(r, "x*v*w"), P(r, "y*u*w"), P(r, "z*u*v"),
                                        P(r, "u*v*w")})));
  // Oracle: intersection computed directly.
  auto xyz = IdealBasis(r, {P(r, "x"), P(r, "y"), P(r, "z")});
  CHECK(same_ideal(d.total, intersect(d.y, xyz)));
  // (x,y,z) cap (vw,uw,uv) is strictly larger: it contains x*u*v.
  auto pairs = IdealBasis(r, {P(r, "v*w"), P(r, "u*w"), P(r, "u*v")});
  CHECK(member(P(r, "x*u*v"), intersect(xyz, pairs)));
  CHECK_FALSE(member(P(r, "x*u*v"), d.total));

  auto bx = matrix(r, {{"u", "0", "0"}, {"0", "v", "0"}, {"0", "0", "x"}, {"x", "y", "z"}});
  auto dx = decompose(bx);
  CHECK_FALSE(dx.regular);
  CHECK_FALSE(dx.identity_verified);

  auto bi = matrix(r, {{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}, {"x", "y", "z"}});
  auto di = decompose(bi);
  CHECK(di.regular);
  CHECK(di.y_empty);
  CHECK(di.identity_verified);
  CHECK(same_ideal(di.total, xyz));
  CHECK(same_ideal(di.z, xyz));

  CHECK_THROWS_AS(decompose(PolyMatrix(r, 3, 3)), DomainError);
  CHECK_THROWS_AS(decompose(PolyMatrix(r, 4, 3)), DomainError);
}

TEST_CASE("property: gamma annihilates M and does not depend on the column subset") {
  std::mt19937_64 rng(101);
  auto r = ring_of({"x", "y", "z", "t"});
  int checked = 0;
  for (int k = 0; k < 200; ++k) {
    std::size_t n = 2 + rng() % 3;
    auto base = random_matrix(rng, r, n, n - 1, 2, 1);
    if (rank(base) != n - 1) continue;
    auto mix = random_matrix(rng, r, n - 1, 1 + rng() % 2, 2, 1);
    auto m = base.hconcat(base * mix);
    auto g = gamma(m);
    CHECK((PolyMatrix::row_vector(r, g.components) * m).is_zero());
    // Every rank n-1 column subset gives the same vector up to a unit.
    std::vector<std::size_t> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = i;
    for (std::uint32_t mask = 0; mask < (1u << m.cols()); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != n - 1) continue;
      std::vector<std::size_t> cols;
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (mask >> c & 1u) cols.push_back(c);
      auto minors = signed_maximal_minors(m.submatrix(rows, cols));
      if (std::all_of(minors.begin(), minors.end(), [](auto& p) { return p.is_zero(); }))
        continue;
      auto d = gcd(minors);
      for (auto& p : minors) p = divide_exact(p, d);
      CHECK(proportional_by_unit(g.components, minors));
    }
    ++checked;
  }
  CHECK(checked > 150);
}

TEST_CASE("property: row annihilators are multiples of gamma") {
  std::mt19937_64 rng(102);
  auto r = ring_of({"x", "y", "z"});
  for (int k = 0; k < 200; ++k) {
    std::size_t n = 2 + rng() % 3;
    auto m = random_matrix(rng, r, n, n - 1, 2, 1);
    if (rank(m) != n - 1) continue;
    auto g = gamma(m).components;
    auto lambda = random_poly(rng, r, 3, 2);
    std::vector<Polynomial> v;
    for (auto& gi : g) v.push_back(lambda * gi);
    CHECK((PolyMatrix::row_vector(r, v) * m).is_zero());
    auto first = std::find_if(g.begin(), g.end(), [](auto& p) { return !p.is_zero(); });
    auto recovered = try_divide(v[static_cast<std::size_t>(first - g.begin())], *first);
    REQUIRE(recovered);
    CHECK(*recovered == lambda);
  }
}

TEST_CASE("property: constant changes of basis preserve presentation matrices") {
  std::mt19937_64 rng(103);
  auto r = seven();
  const std::vector<PolyMatrix> bases{
      four_cycle(r), koszul(P(r, "x"), P(r, "y"), P(r, "z")),
      diagonal({P(r, "u"), P(r, "v"), P(r, "w")}) * koszul(P(r, "x"), P(r, "y^2"), P(r, "z"))};
  const bool transpose_presents[] = {false, true, false};
  for (int k = 0; k < 200; ++k) {
    const auto& base = bases[static_cast<std::size_t>(k) % bases.size()];
    const std::size_t n = base.rows();
    auto m = unimodular(rng, r, n) * base * unimodular(rng, r, n);
    auto rep = check_presentation(m);
    REQUIRE(rep.is_presentation);
    // Cofactor identity checked directly.
    auto c = cofactor_matrix(m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        CHECK(c(i, j) ==
              *rep.cofactor_unit * rep.gamma->components[i] * rep.gamma_transpose->components[j]);
    CHECK(same_ideal(rep.gamma->ideal(), gamma(base).ideal()));
    if (n % 2 == 0) CHECK(height(rep.gamma->ideal()) == 2);
    // Mixing rows of different degrees destroys the grading of the third base.
    if (k < 30 && k % 3 != 2) CHECK(verify_exactness(build_resolution(m)).exact);
    CHECK(check_presentation(m.transpose()).is_presentation ==
          transpose_presents[static_cast<std::size_t>(k) % bases.size()]);
  }
}

TEST_CASE("property: alternating odd matrices have gamma = gamma^T = pfaffians") {
  std::mt19937_64 rng(104);
  auto r = ring_of({"x", "y", "z", "t", "u"});
  int checked = 0;
  for (int k = 0; k < 200; ++k) {
    std::size_t n = k % 4 == 0 ? 5 : 3;
    PolyMatrix m(r, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        m(i, j) = random_form(rng, r, 1 + static_cast<int>(rng() % 2), 3);
        m(j, i) = -m(i, j);
      }
    auto p = pfaffians(m);
    if (std::all_of(p.begin(), p.end(), [](auto& q) { return q.is_zero(); })) continue;
    auto g = gamma(m).components;
    CHECK(g == gamma(m.transpose()).components);
    auto d = gcd(p);
    for (auto& q : p) q = divide_exact(q, d);
    CHECK(proportional_by_unit(g, p));
    ++checked;
  }
  CHECK(checked > 150);
}

TEST_CASE("property: zero components of gamma(M^T) match rank drops") {
  std::mt19937_64 rng(105);
  auto r = ring_of({"x", "y", "z"});
  int zeros = 0;
  for (int k = 0; k < 200; ++k) {
    std::size_t n = 3 + rng() % 2;
    auto left = random_matrix(rng, r, n, n - 1, 2, 1);
    PolyMatrix right(r, n - 1, n);
    for (std::size_t i = 0; i < n - 1; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rng() % 3 == 0) right(i, j) = random_poly(rng, r, 2, 1);
    auto m = left * right;
    if (rank(m) != n - 1) continue;
    auto h = gamma(m.transpose()).components;
    for (std::size_t j = 0; j < n; ++j) {
      bool drop = rank(m.without_col(j)) < n - 1;
      CHECK(h[j].is_zero() == drop);
      zeros += drop;
    }
  }
  CHECK(zeros > 0);
}

TEST_CASE("property: build_resolution output passes verify_exactness and zeta is consistent") {
  std::mt19937_64 rng(106);
  auto r = ring_of({"x", "y", "z", "t", "u", "v"});
  for (int k = 0; k < 200; ++k) {
    // Koszul on monomial powers of a regular sequence, scaled by a diagonal.
    std::vector<Polynomial> h, g;
    for (std::size_t i = 0; i < 3; ++i) {
      auto e = static_cast<unsigned>(1 + rng() % 3);
      h.push_back(Polynomial::variable(r, i).pow(e));
      g.push_back(random_monomial(rng, r, static_cast<int>(rng() % 2)));
    }
    auto m = diagonal(g) * koszul(h[0], h[1], h[2]);
    auto rep = check_presentation(m);
    if (!rep.is_presentation) {
      // J = (h) always has height 3; a factor shared by two g_i survives in u.
      CHECK(rep.failure_reason == PresentationFailure::CofactorUnitNotConstant);
      continue;
    }
    if (k < 60) CHECK(verify_exactness(build_resolution(m)).exact);
    if (rep.is_minimal) {
      auto z = zeta(m);
      CHECK(z.zeta == z.nu_I - z.nu_J);
      CHECK(z.zeta <= z.nu_I - 3);
      CHECK((z.transformed * PolyMatrix::column_vector(r, z.normalized_rho)).is_zero());
    }
  }
}

TEST_CASE("parallel minors match the serial reference") {
  std::mt19937_64 rng(107);
  auto r = ring_of({"x", "y", "z"});
  for (int k = 0; k < 20; ++k) {
    auto m = random_matrix(rng, r, 2 + rng() % 3, 2 + rng() % 3, 2, 1);
    std::size_t s = 1 + rng() % std::min(m.rows(), m.cols());
    CHECK(minors_of_size(m, s) == minors_of_size_serial(m, s));
  }
}
