#include <sstream>

#include "ggor/error.hpp"
#include "ggor/matrices.hpp"

namespace ggor {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)),
      rows_(rows),
      cols_(cols),
      entries_(rows * cols, Polynomial(ring_)) {}

PolyMatrix::PolyMatrix(RingPtr ring,
                       const std::vector<std::vector<Polynomial>>& rows)
    : ring_(std::move(ring)), rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("ragged matrix rows");
    for (const auto& p : r) {
      if (p.ring() && !p.ring()->same_as(*ring_)) throw RingMismatch();
      entries_.push_back(p.ring() ? p : Polynomial(ring_));
    }
  }
}

PolyMatrix PolyMatrix::identity(RingPtr ring, std::size_t n) {
  PolyMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Polynomial::constant(ring, 1);
  return m;
}

PolyMatrix PolyMatrix::parse(const RingPtr& ring,
                             const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Polynomial>> polys;
  for (const auto& r : rows) {
    auto& out = polys.emplace_back();
    for (const auto& s : r) out.push_back(ggor::parse(s, ring));
  }
  return PolyMatrix(ring, polys);
}

PolyMatrix PolyMatrix::row_vector(RingPtr ring, const std::vector<Polynomial>& v) {
  return PolyMatrix(std::move(ring), std::vector<std::vector<Polynomial>>{v});
}

PolyMatrix PolyMatrix::column_vector(RingPtr ring, const std::vector<Polynomial>& v) {
  PolyMatrix m(ring, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

std::vector<Polynomial> PolyMatrix::row(std::size_t i) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<Polynomial> PolyMatrix::column(std::size_t j) const {
  std::vector<Polynomial> c;
  c.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
  return c;
}

void PolyMatrix::set_shifts(Shifts row_shifts, Shifts col_shifts) {
  if (row_shifts.size() != rows_ || col_shifts.size() != cols_)
    throw DomainError("shift vector length does not match matrix size");
  row_shifts_ = std::move(row_shifts);
  col_shifts_ = std::move(col_shifts);
}

void PolyMatrix::clear_shifts() {
  row_shifts_.reset();
  col_shifts_.reset();
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  if (row_shifts_) {
    // Transposing a graded map negates the grading.
    Shifts r, c;
    for (auto s : *col_shifts_) r.push_back(-s);
    for (auto s : *row_shifts_) c.push_back(-s);
    t.set_shifts(std::move(r), std::move(c));
  }
  return t;
}

PolyMatrix PolyMatrix::submatrix(std::span<const std::size_t> rows,
                                 std::span<const std::size_t> cols) const {
  PolyMatrix s(ring_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
  if (row_shifts_) {
    Shifts r, c;
    for (auto i : rows) r.push_back((*row_shifts_)[i]);
    for (auto j : cols) c.push_back((*col_shifts_)[j]);
    s.set_shifts(std::move(r), std::move(c));
  }
  return s;
}

namespace {
std::vector<std::size_t> all_but(std::size_t n, std::size_t skip) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i)
    if (i != skip) idx.push_back(i);
  return idx;
}
std::vector<std::size_t> all(std::size_t n) { return all_but(n, n); }
}  // namespace

PolyMatrix PolyMatrix::without(std::size_t row, std::size_t col) const {
  return submatrix(all_but(rows_, row), all_but(cols_, col));
}
PolyMatrix PolyMatrix::without_row(std::size_t row) const {
  return submatrix(all_but(rows_, row), all(cols_));
}
PolyMatrix PolyMatrix::without_col(std::size_t col) const {
  return submatrix(all(rows_), all_but(cols_, col));
}

PolyMatrix PolyMatrix::hconcat(const PolyMatrix& right) const {
  if (rows_ != right.rows_) throw DomainError("hconcat: row counts differ");
  PolyMatrix m(ring_, rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) m(i, cols_ + j) = right(i, j);
  }
  return m;
}

PolyMatrix PolyMatrix::vconcat(const PolyMatrix& below) const {
  if (cols_ != below.cols_) throw DomainError("vconcat: column counts differ");
  PolyMatrix m(ring_, rows_ + below.rows_, cols_);
  for (std::size_t j = 0; j < cols_; ++j) {
    for (std::size_t i = 0; i < rows_; ++i) m(i, j) = (*this)(i, j);
    for (std::size_t i = 0; i < below.rows_; ++i) m(rows_ + i, j) = below(i, j);
  }
  return m;
}

PolyMatrix PolyMatrix::in_ring(const RingPtr& target) const {
  PolyMatrix m(target, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k].in_ring(target);
  m.row_shifts_ = row_shifts_;
  m.col_shifts_ = col_shifts_;
  return m;
}

PolyMatrix PolyMatrix::scaled(const Polynomial& c) const {
  PolyMatrix m = *this;
  for (auto& e : m.entries_) e = e * c;
  return m;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool PolyMatrix::entries_in_maximal_ideal() const {
  for (const auto& e : entries_)
    if (e.constant_term() != 0) return false;
  return true;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product: size mismatch");
  PolyMatrix c(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      Polynomial s(a.ring_);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& x = a(i, k);
        const auto& y = b(k, j);
        if (!x.is_zero() && !y.is_zero()) s += x * y;
      }
      c(i, j) = std::move(s);
    }
  return c;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix sum: size mismatch");
  PolyMatrix c = a;
  for (std::size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] += b.entries_[k];
  return c;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix difference: size mismatch");
  PolyMatrix c = a;
  for (std::size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] -= b.entries_[k];
  return c;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string PolyMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    out << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out << ", ";
      out << (*this)(i, j).to_string();
    }
    out << "]\n";
  }
  return out.str();
}

bool DegreeMatrix::is_monotone() const {
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) {
      if (i + 1 < rows() && entries[i][j] < entries[i + 1][j]) return false;
      if (j + 1 < cols() && entries[i][j] < entries[i][j + 1]) return false;
    }
  return true;
}

DegreeMatrix degree_matrix(const PolyMatrix& m) {
  if (!m.row_shifts() || !m.col_shifts())
    throw DomainError("degree matrix needs row and column shifts");
  DegreeMatrix d;
  d.entries.assign(m.rows(), std::vector<std::int64_t>(m.cols(), 0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      d.entries[i][j] = (*m.col_shifts())[j] - (*m.row_shifts())[i];
  return d;
}

bool check_graded(const PolyMatrix& m) {
  DegreeMatrix d = degree_matrix(m);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& e = m(i, j);
      if (e.is_zero()) continue;
      if (!e.is_homogeneous() || *e.degree() != d(i, j)) return false;
    }
  return true;
}

}  // namespace ggor
