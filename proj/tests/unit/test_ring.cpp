#include <doctest.h>

#include "ggor/error.hpp"
#include "support.hpp"

using namespace ggor;
using namespace ggor::testing;

namespace {

RingPtr sixteen_vars() {
  std::vector<std::string> v;
  for (int i = 1; i <= 3; ++i) v.push_back("x" + std::to_string(i));
  for (int i = 1; i <= 5; ++i) v.push_back("y" + std::to_string(i));
  for (int i = 1; i <= 8; ++i) v.push_back("z" + std::to_string(i));
  return make_ring(v);
}

}  // namespace

TEST_CASE("parse: basic denotations") {
  auto r = ring_of({"x", "y", "z"});
  auto p = P(r, "x*y - 2*z^2");
  CHECK(p.num_terms() == 2);
  CHECK(P(r, "0").is_zero());
  CHECK(P(r, "3/2").constant_term() == mpq_class(3, 2));
  CHECK(P(r, "(x+y)^2") == P(r, "x^2 + 2*x*y + y^2"));
  CHECK(P(r, "-x") == -P(r, "x"));
  CHECK(P(r, " x *  y ") == P(r, "y*x"));
}

TEST_CASE("parse: sixteen-variable monomial") {
  auto r = sixteen_vars();
  auto p = P(r, "-x3*y4*y5*z4*z5");
  REQUIRE(p.num_terms() == 1);
  CHECK(*p.degree() == 5);
  CHECK(p.leading_coeff() == -1);
}

TEST_CASE("parse: errors carry positions") {
  auto r = ring_of({"x", "y", "z"});
  CHECK_THROWS_AS(P(r, "x y"), ParseError);
  CHECK_THROWS_AS(P(r, "x + w"), ParseError);
  CHECK_THROWS_AS(P(r, "x +"), ParseError);
  CHECK_THROWS_AS(P(r, "(x"), ParseError);
  CHECK_THROWS_AS(P(r, "x^"), ParseError);
  try {
    P(r, "x + w");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("arithmetic examples") {
  auto r = ring_of({"x", "y", "z"});
  CHECK(P(r, "x+y") * P(r, "x-y") == P(r, "x^2-y^2"));
  CHECK(P(r, "x+y") + Polynomial(r) == P(r, "x+y"));
  auto r6 = ring_of({"x", "y", "z", "u", "v", "w"});
  CHECK(P(r6, "x") * P(r6, "v") * P(r6, "w") == P(r6, "x*v*w"));
  CHECK(P(r, "x - 1").pow(3) == P(r, "x^3 - 3*x^2 + 3*x - 1"));
  CHECK(P(r, "x").pow(0) == P(r, "1"));
}

TEST_CASE("mismatched rings are rejected") {
  auto a = ring_of({"x", "y"});
  auto b = ring_of({"y", "x"});
  CHECK_THROWS_AS(P(a, "x") + P(b, "x"), RingMismatch);
  CHECK_THROWS_AS(gcd(P(a, "x"), P(b, "x")), RingMismatch);
}

TEST_CASE("degree, homogeneity, constant term") {
  auto r = ring_of({"x", "y", "z", "u", "v", "w"});
  CHECK(*P(r, "x*v*w").degree() == 3);
  CHECK_FALSE(Polynomial(r).degree().has_value());
  CHECK(P(r, "x^2 + y*z").is_homogeneous());
  CHECK_FALSE(P(r, "x + y*z").is_homogeneous());
  CHECK(P(r, "3/2 + x").constant_term() == mpq_class(3, 2));
}

TEST_CASE("gcd examples") {
  auto r = ring_of({"x", "y", "z"});
  CHECK(gcd(P(r, "x^2*y"), P(r, "x*y^2")) == P(r, "x*y"));
  CHECK(gcd(P(r, "x+y"), P(r, "x-y")) == P(r, "1"));
  CHECK(gcd(P(r, "x^2-y^2"), P(r, "x^2+2*x*y+y^2")) == P(r, "x+y"));
  CHECK(gcd(P(r, "-2*x"), Polynomial(r)) == P(r, "x"));
  CHECK(gcd(Polynomial(r), Polynomial(r)).is_zero());
  CHECK(gcd(P(r, "(x*y+z)^2*(x-z)"), P(r, "(x*y+z)*(y^2+1)")) == P(r, "x*y+z"));
}

TEST_CASE("monomial orders") {
  auto g = make_ring({"x", "y", "z"});
  // grevlex: x*z < y^2 since the last variable breaks the tie.
  CHECK(P(g, "x*z + y^2").leading_monomial() == P(g, "y^2").leading_monomial());
  auto l = make_ring({"x", "y", "z"}, MonomialOrder::Lex);
  CHECK(P(l, "x*z + y^2").leading_monomial() == P(l, "x*z").leading_monomial());
  CHECK(P(l, "x + y^5").leading_monomial() == P(l, "x").leading_monomial());
  auto e = make_ring({"t", "x", "y"}, MonomialOrder::Elimination, 1);
  CHECK(P(e, "t + x^3").leading_monomial() == P(e, "t").leading_monomial());
  CHECK(P(e, "x*y + y^2").leading_monomial() == P(e, "x*y").leading_monomial());
}

TEST_CASE("ring change and substitution") {
  auto r = ring_of({"x", "y"});
  auto big = extend_ring(r, {"t"});
  CHECK(big->num_vars() == 3);
  CHECK_THROWS_AS(extend_ring(r, {"x"}), DomainError);
  auto p = P(r, "x*y + 1").in_ring(big);
  CHECK(p == P(big, "x*y + 1"));
  CHECK_THROWS_AS(P(big, "t").in_ring(r), DomainError);
  auto t = ring_of({"t"});
  auto x = P(r, "x^2 - y").substitute({P(t, "t"), P(t, "t^2")});
  CHECK(x.is_zero());
}

TEST_CASE("exact division") {
  auto r = ring_of({"x", "y", "z"});
  CHECK(divide_exact(P(r, "x^2-y^2"), P(r, "x+y")) == P(r, "x-y"));
  CHECK_FALSE(try_divide(P(r, "x^2+y"), P(r, "x")).has_value());
  CHECK_THROWS_AS(divide_exact(P(r, "x"), P(r, "y")), DomainError);
}

TEST_CASE("property: ring axioms on random polynomials") {
  std::mt19937_64 rng(20240611);
  auto r = ring_of({"x", "y", "z"});
  for (int k = 0; k < 200; ++k) {
    auto p = random_poly(rng, r, 4, 3), q = random_poly(rng, r, 4, 3), s = random_poly(rng, r, 4, 3);
    CHECK((p + q) + s == p + (q + s));
    CHECK((p * q) * s == p * (q * s));
    CHECK(p * (q + s) == p * q + p * s);
    CHECK(p * q == q * p);
    CHECK(p + q == q + p);
    CHECK((p - p).is_zero());
  }
}

TEST_CASE("property: render/parse round trip") {
  std::mt19937_64 rng(7);
  auto r = ring_of({"x", "y", "z", "w"});
  for (int k = 0; k < 200; ++k) {
    auto p = random_poly(rng, r, 5, 3).scaled(mpq_class(1, 1 + static_cast<int>(rng() % 4)));
    CHECK(parse(p.to_string(), r) == p);
  }
}

TEST_CASE("property: gcd divides both operands") {
  std::mt19937_64 rng(99);
  auto r = ring_of({"x", "y", "z"});
  for (int k = 0; k < 200; ++k) {
    auto common = random_form(rng, r, 1 + static_cast<int>(rng() % 2), 3);
    auto a = random_form(rng, r, 1 + static_cast<int>(rng() % 2), 3);
    auto b = random_form(rng, r, 1 + static_cast<int>(rng() % 2), 3);
    auto p = common * a, q = common * b;
    auto g = gcd(p, q);
    if (p.is_zero() && q.is_zero()) {
      CHECK(g.is_zero());
      continue;
    }
    CHECK(try_divide(p, g).has_value());
    CHECK(try_divide(q, g).has_value());
    if (!common.is_zero()) CHECK(try_divide(g, common.monic()).has_value());
    CHECK(g.leading_coeff() == 1);
  }
}

TEST_CASE("property: products of forms are forms") {
  std::mt19937_64 rng(5);
  auto r = ring_of({"x", "y", "z"});
  for (int k = 0; k < 200; ++k) {
    int d = 1 + static_cast<int>(rng() % 3), e = 1 + static_cast<int>(rng() % 3);
    auto p = random_form(rng, r, d, 4), q = random_form(rng, r, e, 4);
    if (p.is_zero() || q.is_zero()) continue;
    auto pq = p * q;
    CHECK(pq.is_homogeneous());
    CHECK(*pq.degree() == d + e);
  }
}
