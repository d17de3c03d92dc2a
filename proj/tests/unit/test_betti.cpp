#include <doctest.h>

#include <random>

#include "ggor/betti.hpp"
#include "ggor/error.hpp"

using namespace ggor;

namespace {

using Seq = BettiSequence;

// Independent restatement of the general necessary conditions, used to
// catch contradictory verdicts.
bool passes_necessary(const Seq& q) {
  const std::size_t n = q.size();
  auto a = [&](std::size_t i) { return q.a[i - 1]; };
  auto b = [&](std::size_t j) { return q.b[j - 1]; };
  if (a(1) <= 0 || b(n) <= 0 || !q.consistent() || q.s <= b(1)) return false;
  for (std::size_t i = 1; i <= n; ++i)
    if (a(i) >= b(n + 1 - i)) return false;
  return a(2) < b(n) && a(3) < b(n - 1) && b(n - 2) < q.s && q.s <= a(1) + a(2) + a(3);
}

long long binom(long long m, long long k) {
  if (m < k || k < 0) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (m - k + i) / i;
  return r;
}

Seq random_consistent(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::int64_t> a(n), b(n);
  for (auto& v : a) v = 1 + static_cast<std::int64_t>(rng() % 5);
  for (auto& v : b) v = 2 + static_cast<std::int64_t>(rng() % 7);
  std::int64_t s = 0;
  for (auto v : b) s += v;
  for (auto v : a) s -= v;
  return Seq(a, b, s);
}

}  // namespace

TEST_CASE("sequence basics") {
  Seq q({3, 1, 2}, {1, 3, 2}, 0);
  CHECK(q.a == std::vector<std::int64_t>{1, 2, 3});
  CHECK(q.b == std::vector<std::int64_t>{3, 2, 1});
  CHECK(parse_betti("(3,4,5; 8,7,6; 9)") == Seq({3, 4, 5}, {8, 7, 6}, 9));
  CHECK(parse_betti("1,1,1;2,2,2;3").to_string() == "(1,1,1;2,2,2;3)");
  CHECK_THROWS_AS(parse_betti("(1,1;2;3)"), DomainError);
  CHECK_THROWS_AS(parse_betti("(1,x,1;2,2,2;3)"), DomainError);
  CHECK(Seq({3, 4, 5}, {8, 7, 6}, 9).c() == std::vector<std::int64_t>{1, 2, 3});
  CHECK(Seq::homogeneous(4, 3, 5) == Seq({3, 3, 3, 3}, {5, 5, 5, 5}, 8));
}

TEST_CASE("classify_n3 examples") {
  auto v = classify_n3(parse_betti("(1,1,1;2,2,2;3)"));
  CHECK(v.status == Essentiality::Essential);
  v = classify_n3(parse_betti("(2,2,2;3,3,3;3)"));
  CHECK(v.status == Essentiality::NotEssential);
  CHECK(v.witness.find("condition 2") != std::string::npos);
  v = classify_n3(parse_betti("(3,4,5;8,7,6;9)"));
  CHECK(v.status == Essentiality::Essential);
  CHECK(v.witness == "c=(1,2,3) t=(1,1,1)");
  CHECK(classify_n3(parse_betti("(1,1,1;2,2,2;4)")).rule == "condition 1");
  CHECK_THROWS_AS(classify_n3(parse_betti("(1,1,1,1;2,2,2,2;4)")), DomainError);
}

TEST_CASE("Gaeta reduction examples") {
  auto r = classify_gaeta_reduce(parse_betti("(2,2,2,3;4,3,3,3;4)"));
  REQUIRE(r.steps.size() == 1);
  CHECK(r.steps[0].t == 4);
  CHECK(r.steps[0].d == 1);
  CHECK(r.residue == parse_betti("(1,1,1;2,2,2;3)"));
  CHECK(r.verdict.status == Essentiality::Essential);

  r = classify_gaeta_reduce(Seq::homogeneous(4, 3, 5));
  CHECK(r.steps.empty());
  CHECK(r.residue == Seq::homogeneous(4, 3, 5));
  CHECK(r.verdict.status == Essentiality::Unknown);

  // t = 4 is available (b_2 = 3 <= a_4 = 3) but b_1 = 3 <= a_4 breaks condition 3.
  r = classify_gaeta_reduce(Seq({1, 2, 2, 3}, {3, 3, 3, 3}, 4));
  CHECK(r.verdict.status == Essentiality::NotEssential);
  CHECK(r.verdict.witness.find("condition 3") != std::string::npos);

  CHECK_THROWS_AS(classify_gaeta_reduce(parse_betti("(1,1,1;2,2,2;3)")), DomainError);
}

TEST_CASE("homogeneous rule examples") {
  CHECK(classify_homogeneous(4, 3, 5).status == Essentiality::NotEssential);
  CHECK(classify_homogeneous(4, 5, 8).status == Essentiality::Unknown);
  CHECK(classify_homogeneous(5, 3, 4).status == Essentiality::Essential);
  CHECK(classify_homogeneous(6, 3, 4).status == Essentiality::Essential);
  CHECK(classify_homogeneous(3, 1, 2).status == Essentiality::Essential);
  CHECK(classify_homogeneous(5, 1, 2).status == Essentiality::NotEssential);
  CHECK_THROWS_AS(classify_homogeneous(4, 5, 5), DomainError);
  CHECK_THROWS_AS(classify_homogeneous(2, 1, 2), DomainError);
}

TEST_CASE("classify pipeline") {
  auto v = classify(Seq::homogeneous(4, 3, 5));
  CHECK(v.status == Essentiality::NotEssential);
  CHECK(v.rule == "homogeneous even strictness");
  v = classify(Seq::homogeneous(4, 5, 8));
  CHECK(v.status == Essentiality::Unknown);
  CHECK(v.witness.find("catalog") != std::string::npos);
  CHECK(classify(parse_betti("(2,2,2,3;4,3,3,3;4)")).status == Essentiality::Essential);
  CHECK(classify(parse_betti("(0,1,1;2,2,2;4)")).rule == "positivity");
  CHECK(classify(Seq::homogeneous(6, 3, 4)).status == Essentiality::Essential);
}

TEST_CASE("Hilbert function from Betti data") {
  CHECK(hilbert_from_betti(Seq::homogeneous(4, 3, 5), 6, 3) == 0);
  CHECK(hilbert_from_betti(Seq::homogeneous(4, 5, 8), 10, 3) == 6);
  for (int d = 0; d < 6; ++d) CHECK(hilbert_from_betti(Seq(), d, 3) == binom(d + 2, 2));
  // (x,y,z) in three variables: only degree 0 survives.
  auto ci = parse_betti("(1,1,1;2,2,2;3)");
  CHECK(hilbert_from_betti(ci, 0, 3) == 1);
  for (int d = 1; d < 8; ++d) CHECK(hilbert_from_betti(ci, d, 3) == 0);
}

TEST_CASE("lift examples") {
  auto ci = parse_betti("(1,1,1;2,2,2;3)");
  CHECK(lift(ci, {0, 0, 0}) == ci);
  CHECK(lift(ci, {1, 1, 1}) == Seq::homogeneous(3, 3, 5));
  CHECK(lift(parse_betti("(3,4,5;8,7,6;9)"), {1, 0, 0}) == parse_betti("(3,5,6;9,8,7;10)"));
  CHECK_THROWS_AS(lift(ci, {1, 1}), DomainError);
  CHECK_THROWS_AS(lift(ci, {1, -1, 0}), DomainError);
}

TEST_CASE("recover from degree matrix") {
  DegreeMatrix ones;
  ones.entries.assign(6, std::vector<std::int64_t>(6, 1));
  CHECK(recover_from_degree_matrix(ones, 0, 2) == Seq::homogeneous(6, 3, 4));
  CHECK(recover_from_degree_matrix(ones, 0, 1) == Seq::homogeneous(6, 4, 5));
  CHECK_THROWS_AS(recover_from_degree_matrix(ones, 6, 1), DomainError);

  // Round trip from d_ij = b_j - a_i.
  Seq q = parse_betti("(3,4,5;8,7,6;9)");
  DegreeMatrix d;
  d.entries.assign(3, std::vector<std::int64_t>(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) d.entries[i][j] = q.b[j] - q.a[i];
  for (std::size_t r = 0; r < 3; ++r) CHECK(recover_from_degree_matrix(d, r, q.s - q.b[r]) == q);
}

TEST_CASE("minimal sequences") {
  CHECK(is_minimal_sequence(parse_betti("(1,1,1;2,2,2;3)")).status == Minimality::Minimal);
  auto m = is_minimal_sequence(Seq::homogeneous(3, 3, 5));
  CHECK(m.status == Minimality::NotMinimal);
  CHECK(m.candidates.size() == 3);
  bool found = false;
  for (std::size_t k = 0; k < 3; ++k)
    if (m.candidates[k] == Seq({2, 2, 3}, {4, 4, 4}, 5))
      found = m.verdicts[k].status == Essentiality::Essential;
  CHECK(found);
}

TEST_CASE("property: both reduction strategies agree") {
  std::mt19937_64 rng(505);
  int non_trivial = 0;
  while (non_trivial < 200) {
    auto q = random_consistent(rng, 4 + rng() % 4);
    auto big = classify_gaeta_reduce(q, ReductionStrategy::LargestT);
    auto small = classify_gaeta_reduce(q, ReductionStrategy::SmallestT);
    CHECK(big.verdict.status == small.verdict.status);
    if (big.verdict.status != Essentiality::NotEssential) {
      CHECK(big.residue == small.residue);
      CHECK(big.total_shift == small.total_shift);
    }
    non_trivial += !big.steps.empty();
  }
}

TEST_CASE("property: reduction steps follow the block formula") {
  std::mt19937_64 rng(61);
  int checked = 0;
  while (checked < 200) {
    auto q = random_consistent(rng, 4 + rng() % 3);
    auto red = classify_gaeta_reduce(q);
    Seq prev = q;
    for (const auto& step : red.steps) {
      const std::size_t n = prev.size(), t = step.t;
      std::int64_t d = 0;
      for (std::size_t i = t; i <= n; ++i) d += prev.b[n - i] - prev.a[i - 1];
      CHECK(step.d == d);
      CHECK(step.result.size() == t - 1);
      CHECK(step.result.s == prev.s - d);
      CHECK(step.result.consistent());
      prev = step.result;
      ++checked;
    }
  }
}

TEST_CASE("property: no contradictory verdicts") {
  // Every decided-Essential verdict must satisfy the necessary conditions,
  // and the n = 3 rule must agree with the pipeline.
  std::mt19937_64 rng(7);
  int cases = 0, essential = 0;
  for (int k = 0; k < 3000; ++k) {
    auto q = random_consistent(rng, 3 + rng() % 4);
    auto v = classify(q);
    ++cases;
    if (v.status == Essentiality::Essential) {
      ++essential;
      CHECK(passes_necessary(q));
    }
    if (q.size() == 3) CHECK(classify_n3(q).status == v.status);
  }
  for (std::size_t n = 3; n <= 9; ++n)
    for (std::int64_t a = 1; a <= 10; ++a)
      for (std::int64_t b = a + 1; b <= 12; ++b) {
        auto h = classify_homogeneous(n, a, b);
        auto p = classify(Seq::homogeneous(n, a, b));
        ++cases;
        CHECK(h.status == p.status);
        if (h.status == Essentiality::Essential) CHECK(passes_necessary(Seq::homogeneous(n, a, b)));
      }
  CHECK(cases >= 200);
  CHECK(essential > 0);
}

TEST_CASE("property: Hilbert function at s-2 matches the closed form where na < (n-1)b") {
  int cases = 0;
  for (long long n = 3; n <= 8; ++n)
    for (long long a = 1; a <= 8; ++a)
      for (long long b = a + 1; b <= 8; ++b) {
        if (!(n * a < (n - 1) * b)) continue;
        long long s = n * (b - a);
        long long closed = n * (b - a) * (a * (n + 1) - b * (n - 1)) / 2;
        CHECK(hilbert_from_betti(Seq::homogeneous(n, a, b), s - 2, 3) == closed);
        ++cases;
      }
  CHECK(cases >= 100);
}

TEST_CASE("property: lift shifts every twist consistently") {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 200; ++k) {
    auto q = random_consistent(rng, 3 + rng() % 4);
    std::vector<std::int64_t> u(q.size());
    std::int64_t U = 0;
    for (auto& x : u) U += (x = static_cast<std::int64_t>(rng() % 3));
    auto l = lift(q, u);
    CHECK(l.consistent() == q.consistent());
    CHECK(l.s == q.s + U);
    std::int64_t sum_a = 0, sum_la = 0;
    for (auto x : q.a) sum_a += x;
    for (auto x : l.a) sum_la += x;
    CHECK(sum_la == sum_a + static_cast<std::int64_t>(q.size() - 1) * U);
    if (q.consistent() && q.size() == 3 && classify_n3(q).status == Essentiality::Essential)
      CHECK(classify_n3(l).status == Essentiality::Essential);
  }
}
