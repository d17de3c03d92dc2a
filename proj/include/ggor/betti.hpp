#pragma once

// Graded Betti sequences (a_1..a_n; b_1..b_n; s) of length-3 resolutions
// 0 -> R(-s) -> (+)R(-b_j) -> (+)R(-a_i) -> R, and the integer rules that
// decide whether such a sequence is essential.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ggor/matrices.hpp"

namespace ggor {

struct BettiSequence {
  std::vector<std::int64_t> a;  // ascending
  std::vector<std::int64_t> b;  // descending
  std::int64_t s = 0;

  BettiSequence() = default;
  /// Sorts a ascending and b descending. Throws DomainError on unequal lengths.
  BettiSequence(std::vector<std::int64_t> a, std::vector<std::int64_t> b, std::int64_t s);
  /// (a^n; b^n; n(b - a)).
  static BettiSequence homogeneous(std::size_t n, std::int64_t a, std::int64_t b);

  std::size_t size() const { return a.size(); }
  /// s == sum b - sum a.
  bool consistent() const;
  /// c_j = s - b_j, ascending.
  std::vector<std::int64_t> c() const;
  /// Every a_i equal and every b_j equal.
  bool is_homogeneous() const;
  /// b_{n+2-i} > a_i for 2 <= i <= n, plus consistency.
  bool is_gaeta() const;
  /// "(1,1,1;2,2,2;3)".
  std::string to_string() const;

  friend bool operator==(const BettiSequence&, const BettiSequence&) = default;
};

/// Parses "(1,1,1;2,2,2;3)" (parentheses and spaces optional).
BettiSequence parse_betti(const std::string& text);

enum class Essentiality { Essential, NotEssential, Unknown };
std::string to_string(Essentiality e);

struct Verdict {
  Essentiality status = Essentiality::Unknown;
  /// Name of the deciding rule.
  std::string rule;
  /// Violated condition, construction parameters or explanatory note.
  std::string witness;
};

/// Exact rule for n = 3. Essential witnesses carry c_j = s - b_j and
/// t_j = sum a - a_j - b_j, the parameters of the product construction.
Verdict classify_n3(const BettiSequence& seq);

enum class ReductionStrategy { LargestT, SmallestT };

struct ReductionStep {
  std::size_t t = 0;      // 1-based, t >= 4
  std::int64_t d = 0;
  BettiSequence result;   // sequence after this step
};

struct GaetaReduction {
  BettiSequence residue;
  std::int64_t total_shift = 0;
  std::vector<ReductionStep> steps;
  Verdict verdict;
};

/// Repeatedly strips the block of a non-Gaeta sequence at some t >= 4
/// with b_{n+2-t} <= a_t. The verdict is decided when a condition fails or
/// the residue has length 3, and Unknown for longer Gaeta residues.
GaetaReduction classify_gaeta_reduce(const BettiSequence& seq,
                                     ReductionStrategy strategy = ReductionStrategy::LargestT);

/// (a^n; b^n; n(b-a)). Odd n: exact. Even n: necessary strict bound and
/// sufficient bound, Unknown in between. Throws DomainError unless
/// n >= 3 and 0 < a < b.
Verdict classify_homogeneous(std::size_t n, std::int64_t a, std::int64_t b);

/// Full pipeline: positivity and general necessary conditions, n = 3 rule,
/// Gaeta reduction, homogeneous rules on the residue, catalog notes.
Verdict classify(const BettiSequence& seq);

/// Sequences known to be essential from an explicit ideal but outside every
/// rule above, with a note on how to verify them.
struct CatalogEntry {
  BettiSequence sequence;
  std::string note;
};
const std::vector<CatalogEntry>& essential_catalog();

/// Alternating sum of binom(degree - shift + v - 1, v - 1) over the twists,
/// with binom(m, k) = 0 for m < k. An empty sequence stands for the zero
/// ideal and gives dim R_degree.
long long hilbert_from_betti(const BettiSequence& seq, std::int64_t degree, std::size_t num_vars);

/// (a_i + U - u_i; b_j + U; s + U) with U = sum u, re-sorted. The index i
/// refers to the sorted position. Throws DomainError on length mismatch
/// or negative u_i.
BettiSequence lift(const BettiSequence& seq, const std::vector<std::int64_t>& u);

/// s = sum d_ii, b_j = s + d_rj - d_rr - c_r, a_i = s - d_ir - c_r, with a
/// 0-based row index r. Throws DomainError if r is out of range or D is not
/// square.
BettiSequence recover_from_degree_matrix(const DegreeMatrix& d, std::size_t r, std::int64_t c_r);

enum class Minimality { Minimal, NotMinimal, Unknown };
std::string to_string(Minimality m);

struct MinimalityVerdict {
  Minimality status = Minimality::Unknown;
  /// One verdict per decremented candidate, in order of the kept index.
  std::vector<BettiSequence> candidates;
  std::vector<Verdict> verdicts;
};

/// Minimal when every candidate (one a_k kept, all other twists minus one)
/// is not essential.
MinimalityVerdict is_minimal_sequence(const BettiSequence& seq);

}  // namespace ggor
