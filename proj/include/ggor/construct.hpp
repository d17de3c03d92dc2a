#pragma once

// Explicit matrices and ideals realizing prescribed Betti sequences:
// diag(g) times a Koszul matrix, Hilbert-Burch matrices with a
// distinguished row, lifting by fresh variables, bidiagonal matrices and
// their star product, the homogeneous induction and the block extension
// of non-Gaeta sequences.

#include <optional>
#include <string>
#include <vector>

#include "ggor/betti.hpp"
#include "ggor/groebner.hpp"
#include "ggor/matrices.hpp"
#include "ggor/presentation.hpp"

namespace ggor {

/// A square presentation matrix together with the sequence it is built to
/// realize. Rows are sorted by ascending a_i and columns by descending b_j,
/// and the matrix carries the matching shifts.
struct Construction {
  PolyMatrix matrix;
  BettiSequence predicted;
  std::string witness;
};

/// Twists of a length-3 resolution 0 -> R(-s) -> F_2 -> F_1 -> R.
/// Throws DomainError for any other shape.
BettiSequence sequence_of(const GradedResolution& res);

/// Reorders rows and columns of a graded presentation matrix so that the
/// twists read (a ascending; b descending) and sets the shifts.
PolyMatrix sort_graded(const PolyMatrix& m);

struct ConstructionCheck {
  bool is_presentation = false;
  std::optional<BettiSequence> resolved;  // from minimal_free_resolution of I_M
  bool matches = false;
  std::string detail;
};

/// Presentation test plus an independent minimal resolution of I_M.
ConstructionCheck verify_construction(const Construction& c);

// ---- n = 3 --------------------------------------------------------------

struct PropBet {
  PolyMatrix matrix;  // diag(g) * K(h)
  IdealBasis ideal;   // (h_1 g_2 g_3, h_2 g_1 g_3, h_3 g_1 g_2)
  BettiSequence predicted;
};

/// h must generate a height-3 ideal and consist of forms; g nonzero forms.
/// With d_i = deg h_i and e_i = deg g_i, d = sum d_i, e = sum e_i the
/// prediction is (e + d_i - e_i; e + d - d_i; e + d).
PropBet prop_bet(const std::vector<Polynomial>& h, const std::vector<Polynomial>& g);

/// The Koszul matrix [[0, h3, -h2], [-h3, 0, h1], [h2, -h1, 0]].
PolyMatrix koszul_matrix(const Polynomial& h1, const Polynomial& h2, const Polynomial& h3);

// ---- Hilbert-Burch matrices with a distinguished row ----------------------

struct HilbertBurchData {
  PolyMatrix b;                       // (n+1) x n
  std::optional<std::size_t> row;     // distinguished row; default last
};

struct HilbertBurchIdeal {
  IdealBasis ideal;        // (B_1, ..., B_n) with the sign (-1)^i
  PolyMatrix m;            // (A K | C)
  std::size_t zeta = 0;    // always n - 3
  Decomposition decomposition;
};

/// Checks the shape H = (h1, h2, h3, 0, ..., 0), height (h) = 3, rank n,
/// no unit entries and height I(B) >= 2, then builds M = (AK | C) and
/// verifies it is a minimal presentation of I with zeta = n - 3. Throws
/// DomainError naming the failed hypothesis, Error if a verification fails.
HilbertBurchIdeal hilbert_burch_ideal(const HilbertBurchData& data);

// ---- Lifting --------------------------------------------------------------

/// y_1, ..., y_n style names: prefix + "_" + index starting at `first`.
/// Throws DomainError if any name already exists in `ring`.
std::vector<std::string> fresh_names(const RingPtr& ring, const std::string& prefix,
                                     std::size_t count, std::size_t first = 1);

/// Row i scaled by y_i^{u_i} over the ring extended by `fresh` (default
/// y_1..y_n). Then gamma(M')_i = gamma(M)_i * prod_{j != i} y_j^{u_j} and
/// the twists follow betti::lift. Requires a minimal presentation matrix.
PolyMatrix lift_matrix(const PolyMatrix& m, const std::vector<std::int64_t>& u,
                       std::vector<std::string> fresh = {});

// ---- Bidiagonal matrices --------------------------------------------------

/// Nonzero entries only at (i, i) and (i, i+1), indices mod n.
struct BidiagonalMatrix {
  std::vector<Polynomial> diag;
  std::vector<Polynomial> superdiag;  // superdiag[n-1] sits at (n-1, 0)

  std::size_t size() const { return diag.size(); }
  PolyMatrix to_matrix() const;
  /// Throws DomainError if m is not square of size >= 3 or has entries
  /// off the two cyclic diagonals.
  static BidiagonalMatrix from_matrix(const PolyMatrix& m);
};

/// t_ii = m_ii n_ii, t_{i,i+1} = -m_{i,i+1} n_{i,i+1}. Requires equal sizes
/// and disjoint variable supports.
BidiagonalMatrix star_product(const BidiagonalMatrix& m, const BidiagonalMatrix& n);

/// Monomial bidiagonal presentation of (a^n; (a+1)^n; n) with s - b = t,
/// a = n - 1 - t, in the variables prefix_1..prefix_n: g_i is the product
/// of a cyclically consecutive variables. Requires 1 <= t and 2t < n.
BidiagonalMatrix base_bidiagonal(const RingPtr& ring, std::size_t n, std::size_t t,
                                 const std::string& prefix);

/// Realizes (a^n; b^n; n(b-a)) when classify_homogeneous decides it
/// Essential: star product of b-a base matrices when s - b >= b - a,
/// otherwise a star product of s - b base matrices lifted by u = 1. The
/// witness records the path. Throws DomainError otherwise.
Construction homogeneous_matrix(std::size_t n, std::int64_t a, std::int64_t b);

// ---- Non-Gaeta block extension ---------------------------------------------

/// Embeds the (t-1) x (t-1) inner matrix in the top-right block and places
/// y_i^{b_j - a_i} on i + j = n and z_i^{b_j - a_i} on i + j = n + 1 (1-based)
/// in fresh variables. `inner` must be sorted as by sort_graded and realize
/// the reduced sequence of `outer` at t. Throws DomainError on violated
/// hypotheses.
Construction nogaeta_extend(const Construction& inner, const BettiSequence& outer, std::size_t t);

/// Builds a realization of any sequence the classifier decides Essential
/// without a catalog entry: n = 3 directly, reductions through
/// nogaeta_extend, homogeneous residues through homogeneous_matrix.
Construction realize(const BettiSequence& seq);

}  // namespace ggor
