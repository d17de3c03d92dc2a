#pragma once

// Exact linear algebra over the polynomial ring.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ggor/ring.hpp"

namespace ggor {

using Shifts = std::vector<std::int64_t>;

/// Dense matrix of polynomials with optional grading. When shifts are
/// present, entry (i, j) is expected to be zero or homogeneous of degree
/// col_shift[j] - row_shift[i]; check_graded() verifies this.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  PolyMatrix(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows);

  static PolyMatrix identity(RingPtr ring, std::size_t n);
  /// Parses row-major polynomial texts.
  static PolyMatrix parse(const RingPtr& ring,
                          const std::vector<std::vector<std::string>>& rows);
  /// 1 x n row or n x 1 column built from a vector.
  static PolyMatrix row_vector(RingPtr ring, const std::vector<Polynomial>& v);
  static PolyMatrix column_vector(RingPtr ring, const std::vector<Polynomial>& v);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Polynomial& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  Polynomial& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }

  std::vector<Polynomial> row(std::size_t i) const;
  std::vector<Polynomial> column(std::size_t j) const;

  const std::optional<Shifts>& row_shifts() const { return row_shifts_; }
  const std::optional<Shifts>& col_shifts() const { return col_shifts_; }
  void set_shifts(Shifts row_shifts, Shifts col_shifts);
  void clear_shifts();

  PolyMatrix transpose() const;
  PolyMatrix submatrix(std::span<const std::size_t> rows,
                       std::span<const std::size_t> cols) const;
  PolyMatrix without(std::size_t row, std::size_t col) const;
  PolyMatrix without_row(std::size_t row) const;
  PolyMatrix without_col(std::size_t col) const;
  /// Columns of *this followed by the columns of `right`.
  PolyMatrix hconcat(const PolyMatrix& right) const;
  /// Rows of *this followed by the rows of `below`.
  PolyMatrix vconcat(const PolyMatrix& below) const;

  PolyMatrix in_ring(const RingPtr& target) const;
  PolyMatrix scaled(const Polynomial& c) const;

  bool is_zero() const;
  /// No nonzero entry has a nonzero constant term.
  bool entries_in_maximal_ideal() const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  /// Entry-wise equality; shifts are ignored.
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Polynomial> entries_;
  std::optional<Shifts> row_shifts_, col_shifts_;
};

/// d_ij = col_shift_j - row_shift_i.
struct DegreeMatrix {
  std::vector<std::vector<std::int64_t>> entries;

  std::size_t rows() const { return entries.size(); }
  std::size_t cols() const { return entries.empty() ? 0 : entries[0].size(); }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries[i][j]; }
  /// d_ij >= d_{i+1,j} and d_ij >= d_{i,j+1}.
  bool is_monotone() const;
};

/// Fraction-free (Bareiss) determinant with lowest-degree pivoting.
Polynomial det(const PolyMatrix& m);
/// Laplace expansion along the first row; reference implementation.
Polynomial det_by_expansion(const PolyMatrix& m);

Polynomial minor(const PolyMatrix& m, std::span<const std::size_t> rows,
                 std::span<const std::size_t> cols);

/// C_ij = (-1)^(i+j) * det(m without row i and column j). Entries are
/// computed in parallel with OpenMP when available.
PolyMatrix cofactor_matrix(const PolyMatrix& m);
/// Single-threaded reference for cofactor_matrix.
PolyMatrix cofactor_matrix_serial(const PolyMatrix& m);

/// For an n x (n-1) matrix N: g_i = (-1)^i * det(N without row i),
/// 0-based i, i.e. the usual (-1)^(i+1) with 1-based rows. Parallel.
std::vector<Polynomial> signed_maximal_minors(const PolyMatrix& n);
std::vector<Polynomial> signed_maximal_minors_serial(const PolyMatrix& n);

/// Rank over the fraction field.
std::size_t rank(const PolyMatrix& m);

bool is_alternating(const PolyMatrix& m);
/// Pfaffian of an even-size alternating matrix (expansion along row 0).
Polynomial pfaffian(const PolyMatrix& m);
/// Submaximal pfaffians p_h = (-1)^h Pf(m without row/col h), 0-based h,
/// of an odd-size alternating matrix; the vector (p_h) annihilates m.
std::vector<Polynomial> pfaffians(const PolyMatrix& m);

DegreeMatrix degree_matrix(const PolyMatrix& m);
/// Every nonzero entry homogeneous of degree col_shift_j - row_shift_i.
bool check_graded(const PolyMatrix& m);

}  // namespace ggor
