#pragma once

// Presentation matrices: the vector gamma(M), the presentation test, the
// length-3 resolution it determines, zeta(I) and the decomposition of
// ideals given by Hilbert-Burch matrices with a distinguished row.

#include <optional>
#include <string>
#include <vector>

#include "ggor/groebner.hpp"
#include "ggor/matrices.hpp"

namespace ggor {

/// gamma(M) = (g_1, ..., g_n): signed maximal minors of an n x (n-1)
/// column submatrix of rank n-1, divided by their gcd. The first nonzero
/// component is scaled to leading coefficient 1.
struct GammaVector {
  std::vector<Polynomial> components;
  PolyMatrix source;
  std::vector<std::size_t> columns;  // columns of `source` used
  std::string normalization_note;

  /// The ideal I_M generated by the components.
  IdealBasis ideal() const;
};

/// Requires rank(m) = rows - 1 and rows >= 2. Throws DomainError otherwise.
GammaVector gamma(const PolyMatrix& m);

enum class PresentationFailure {
  None,
  NotSquare,
  RankNotSubmaximal,
  CofactorNotProportional,
  CofactorUnitNotConstant,
  HeightJTooSmall,
};
std::string to_string(PresentationFailure f);

struct PresentationReport {
  bool is_presentation = false;
  std::optional<GammaVector> gamma;
  std::optional<GammaVector> gamma_transpose;
  /// u with cofactor(M) = u * (g_i h_j).
  std::optional<Polynomial> cofactor_unit;
  /// Height of J = (gamma(M^T)); nullopt when J is the unit ideal.
  std::optional<int> height_J;
  bool J_is_unit = false;
  bool is_minimal = false;
  /// Indices j with h_j = 0.
  std::vector<std::size_t> zero_components;
  PresentationFailure failure_reason = PresentationFailure::None;
};

/// Decides whether a square matrix is a presentation matrix: rank n-1,
/// cofactor matrix u * (g_i h_j) with u a nonzero constant, height J >= 3.
PresentationReport check_presentation(const PolyMatrix& m);

struct RectPresentationReport {
  bool is_presentation = false;
  GammaVector gamma;
  /// Columns of an n x (n-1) submatrix with coprime maximal minors, if any;
  /// its presence makes the presentation non-minimal when m > n - 1.
  std::optional<std::vector<std::size_t>> hilbert_burch_columns;
  bool is_minimal = false;
};

/// Every syzygy of gamma(M) lies in the column module of M.
RectPresentationReport check_presentation_rect_report(const PolyMatrix& m);
bool check_presentation_rect(const PolyMatrix& m);

/// 0 -> R(-s) -> (+)R(-b_j) -> (+)R(-a_i) -> R for a graded presentation
/// matrix. Throws DomainError if m is not a presentation matrix or the
/// grading is inconsistent.
GradedResolution build_resolution(const PolyMatrix& m);

struct ExactnessStage {
  std::size_t index = 0;  // k of phi_k, 1-based
  std::size_t rank = 0;
  std::size_t expected_rank = 0;
  bool rank_ok = false;
  std::optional<int> height;  // nullopt: unit ideal of minors
  int required_height = 0;
  bool height_ok = false;
};

struct ExactnessReport {
  bool composites_zero = false;
  bool exact = false;
  std::vector<ExactnessStage> stages;
};

/// Buchsbaum-Eisenbud criterion: rank phi_k + rank phi_{k+1} = rank F_k and
/// height I_{rank phi_k}(phi_k) >= k for every k.
ExactnessReport verify_exactness(const GradedResolution& res);

/// All r x r minors of m, row subsets outermost, both in lexicographic
/// order. Parallel.
std::vector<Polynomial> minors_of_size(const PolyMatrix& m, std::size_t r);
std::vector<Polynomial> minors_of_size_serial(const PolyMatrix& m, std::size_t r);

struct ZetaReport {
  std::size_t nu_I = 0;
  std::size_t nu_J = 0;
  std::size_t zeta = 0;
  /// (h_1, ..., h_s, 0, ..., 0) after the change of basis.
  std::vector<Polynomial> normalized_rho;
  /// M after the matching column operations and permutation.
  PolyMatrix transformed;
};

/// Requires a minimal presentation matrix.
ZetaReport zeta(const PolyMatrix& m);

struct Decomposition {
  std::vector<Polynomial> minors;  // B_1, ..., B_{n+1} with sign (-1)^i
  IdealBasis total;                // (B_1, ..., B_n)
  IdealBasis z;                    // entries of the last row
  IdealBasis y;                    // I(B), all maximal minors
  bool y_empty = false;            // I(B) is the unit ideal
  bool regular = false;            // B_{n+1} regular modulo z
  bool identity_verified = false;  // total == y cap z, checked when regular
  std::string verdict;
};

/// b is (n+1) x n of rank n; its last row is the distinguished row H.
Decomposition decompose(const PolyMatrix& b);

}  // namespace ggor
