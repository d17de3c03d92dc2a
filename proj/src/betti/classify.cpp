#include <numeric>
#include <sstream>

#include "ggor/betti.hpp"
#include "ggor/error.hpp"

namespace ggor {
namespace {

Verdict essential(std::string rule, std::string witness = {}) {
  return {Essentiality::Essential, std::move(rule), std::move(witness)};
}
Verdict not_essential(std::string rule, std::string witness) {
  return {Essentiality::NotEssential, std::move(rule), std::move(witness)};
}
Verdict unknown(std::string rule, std::string witness) {
  return {Essentiality::Unknown, std::move(rule), std::move(witness)};
}

std::string join(const std::vector<std::int64_t>& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

// 1-based accessors matching the usual indexing of the twists.
struct View {
  const BettiSequence& seq;
  std::int64_t a(std::size_t i) const { return seq.a[i - 1]; }
  std::int64_t b(std::size_t j) const { return seq.b[j - 1]; }
  std::size_t n() const { return seq.size(); }
};

// Twists of a resolution of a proper homogeneous ideal are positive and
// the ranks force s = sum b - sum a.
std::optional<Verdict> basic_conditions(const BettiSequence& seq) {
  if (seq.size() < 3) return not_essential("shape", "fewer than three generators");
  if (seq.a.front() <= 0 || seq.b.back() <= 0 || seq.s <= 0)
    return not_essential("positivity", "a nonpositive twist");
  if (!seq.consistent()) return not_essential("condition 1", "s != sum b - sum a");
  return std::nullopt;
}

// c_j = s - b_j is the degree of a nonzero entry of the last map.
std::optional<Verdict> last_map_positive(const BettiSequence& seq) {
  if (seq.s <= seq.b.front()) return not_essential("positivity", "s <= b_1");
  return std::nullopt;
}

// Necessary conditions for any minimal presentation matrix:
// a_i < b_{n+1-i}, a_2 < b_n, a_3 < b_{n-1} and b_{n-2} < s <= a_1 + a_2 + a_3.
std::optional<Verdict> necessary_conditions(const BettiSequence& seq) {
  View v{seq};
  const std::size_t n = v.n();
  if (auto p = last_map_positive(seq)) return p;
  for (std::size_t i = 1; i <= n; ++i)
    if (v.a(i) >= v.b(n + 1 - i))
      return not_essential("necessary", "a_" + std::to_string(i) + " >= b_" + std::to_string(n + 1 - i));
  if (v.a(2) >= v.b(n)) return not_essential("necessary", "a_2 >= b_n");
  if (v.a(3) >= v.b(n - 1)) return not_essential("necessary", "a_3 >= b_{n-1}");
  if (v.b(n - 2) >= seq.s) return not_essential("necessary", "b_{n-2} >= s");
  if (seq.s > v.a(1) + v.a(2) + v.a(3)) return not_essential("necessary", "s > a_1 + a_2 + a_3");
  return std::nullopt;
}

}  // namespace

Verdict classify_n3(const BettiSequence& seq) {
  if (seq.size() != 3) throw DomainError("classify_n3 needs three generators");
  if (auto v = basic_conditions(seq)) return *v;
  View v{seq};
  const std::int64_t sum_a = v.a(1) + v.a(2) + v.a(3);
  if (!(sum_a < v.b(2) + v.b(3))) return not_essential("n=3", "condition 2: sum a >= b_2 + b_3");
  for (std::size_t j = 1; j <= 3; ++j)
    if (v.a(j) + v.b(j) > sum_a)
      return not_essential("n=3", "condition 3: a_" + std::to_string(j) + " + b_" +
                                      std::to_string(j) + " > sum a");
  std::vector<std::int64_t> t;
  for (std::size_t j = 1; j <= 3; ++j) t.push_back(sum_a - v.a(j) - v.b(j));
  return essential("n=3", "c=" + join(seq.c()) + " t=" + join(t));
}

GaetaReduction classify_gaeta_reduce(const BettiSequence& seq, ReductionStrategy strategy) {
  if (seq.size() < 4) throw DomainError("Gaeta reduction needs at least four generators");
  GaetaReduction out;
  BettiSequence cur = seq;
  for (;;) {
    out.residue = cur;
    if (auto v = basic_conditions(cur)) {
      out.verdict = *v;
      return out;
    }
    if (cur.size() == 3) {
      out.verdict = classify_n3(cur);
      return out;
    }
    View v{cur};
    const std::size_t n = v.n();
    std::optional<std::size_t> t;
    for (std::size_t cand = 4; cand <= n; ++cand) {
      if (v.b(n + 2 - cand) > v.a(cand)) continue;
      if (!t || strategy == ReductionStrategy::LargestT) t = cand;
      if (strategy == ReductionStrategy::SmallestT) break;
    }
    if (!t) {
      if (auto nv = necessary_conditions(cur)) {
        out.verdict = *nv;
        return out;
      }
      out.verdict = unknown("Gaeta residue", "no reduction applies to " + cur.to_string());
      return out;
    }
    std::int64_t d = 0;
    for (std::size_t i = *t; i <= n; ++i) {
      if (v.b(n + 1 - i) <= v.a(i)) {
        out.verdict = not_essential("reduction", "condition 3: b_" + std::to_string(n + 1 - i) +
                                                     " <= a_" + std::to_string(i) + " at t=" +
                                                     std::to_string(*t));
        return out;
      }
      d += v.b(n + 1 - i) - v.a(i);
    }
    std::vector<std::int64_t> a, b;
    for (std::size_t i = 1; i < *t; ++i) a.push_back(v.a(i) - d);
    for (std::size_t j = n + 2 - *t; j <= n; ++j) b.push_back(v.b(j) - d);
    cur = BettiSequence(a, b, cur.s - d);
    out.total_shift += d;
    out.steps.push_back({*t, d, cur});
  }
}

Verdict classify_homogeneous(std::size_t n, std::int64_t a, std::int64_t b) {
  if (n < 3 || a <= 0 || a >= b) throw DomainError("homogeneous rule needs n >= 3 and 0 < a < b");
  const auto nn = static_cast<std::int64_t>(n);
  const std::int64_t lower = nn * a, mid = (nn - 1) * b, upper = (nn + 1) * a;
  if (n % 2 == 1) {
    if (lower < mid && mid <= upper) return essential("homogeneous odd", "na < (n-1)b <= (n+1)a");
    return not_essential("homogeneous odd", "na < (n-1)b <= (n+1)a fails");
  }
  if (!(lower < mid)) return not_essential("homogeneous even", "na < (n-1)b fails");
  if (!(mid < upper))
    return not_essential("homogeneous even strictness",
                         "(n-1)b < (n+1)a fails; H(s-2) would vanish, forcing an Artinian "
                         "Gorenstein quotient with an even number of generators");
  // (n-1)b <= na + (n-2)(b-a)/2, doubled to stay in integers.
  if (2 * mid <= 2 * lower + (nn - 2) * (b - a))
    return essential("homogeneous even sufficiency", "(n-1)b <= na + (n-2)(b-a)/2");
  return unknown("homogeneous even gap", "necessary bounds hold, sufficiency bound fails");
}

const std::vector<CatalogEntry>& essential_catalog() {
  static const std::vector<CatalogEntry> catalog{
      {BettiSequence::homogeneous(4, 5, 8),
       "essential by an explicit height-2 ideal in 16 variables; run "
       "verify-paper-example closing-remark"},
  };
  return catalog;
}

Verdict classify(const BettiSequence& seq) {
  if (auto v = basic_conditions(seq)) return *v;
  if (seq.size() == 3) return classify_n3(seq);
  GaetaReduction red = classify_gaeta_reduce(seq);
  if (red.verdict.status != Essentiality::Unknown) {
    if (!red.steps.empty())
      red.verdict.witness += " (after reducing to " + red.residue.to_string() + ")";
    return red.verdict;
  }
  Verdict v = red.verdict;
  const BettiSequence& r = red.residue;
  if (r.is_homogeneous() && r.a.front() > 0 && r.a.front() < r.b.front()) {
    v = classify_homogeneous(r.size(), r.a.front(), r.b.front());
    if (!red.steps.empty()) v.witness += " (on residue " + r.to_string() + ")";
  }
  if (v.status == Essentiality::Unknown) {
    for (const auto& entry : essential_catalog())
      if (entry.sequence == seq || entry.sequence == r) v.witness += "; catalog: " + entry.note;
  }
  return v;
}

MinimalityVerdict is_minimal_sequence(const BettiSequence& seq) {
  MinimalityVerdict out;
  bool any_essential = false, any_unknown = false;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    std::vector<std::int64_t> a = seq.a, b = seq.b;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (i != k) --a[i];
    for (auto& bj : b) --bj;
    BettiSequence cand(a, b, seq.s - 1);
    Verdict v = classify(cand);
    any_essential |= v.status == Essentiality::Essential;
    any_unknown |= v.status == Essentiality::Unknown;
    out.candidates.push_back(std::move(cand));
    out.verdicts.push_back(std::move(v));
  }
  out.status = any_essential ? Minimality::NotMinimal
               : any_unknown ? Minimality::Unknown
                             : Minimality::Minimal;
  return out;
}

}  // namespace ggor
