#pragma once

// Sparse multivariate polynomials with exact rational coefficients.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ggor {

enum class MonomialOrder {
  Grevlex,
  Lex,
  /// Product order: the first `elimination_block` variables compared by
  /// grevlex first, ties broken by grevlex on the remaining variables.
  Elimination,
};

class Monomial;

/// Ordered variable names plus a monomial order. Shared by every
/// polynomial built over it; immutable.
class Ring {
 public:
  Ring(std::vector<std::string> variables,
       MonomialOrder order = MonomialOrder::Grevlex,
       std::size_t elimination_block = 0);

  std::size_t num_vars() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  MonomialOrder order() const { return order_; }
  std::size_t elimination_block() const { return block_; }

  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Three-way comparison of monomials: >0 when a is larger.
  int compare(const Monomial& a, const Monomial& b) const;

  /// Same variables and order.
  bool same_as(const Ring& other) const;

 private:
  std::vector<std::string> vars_;
  MonomialOrder order_;
  std::size_t block_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> variables,
                  MonomialOrder order = MonomialOrder::Grevlex,
                  std::size_t elimination_block = 0);

/// Exponent vector with its cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<std::int32_t> exps);

  std::size_t size() const { return exps_.size(); }
  std::int32_t operator[](std::size_t i) const { return exps_[i]; }
  std::span<const std::int32_t> exponents() const { return exps_; }
  std::int64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  /// Bit i set when some variable with index = i (mod 64) occurs.
  std::uint64_t support_mask() const;

  bool divides(const Monomial& other) const;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  static Monomial variable(std::size_t num_vars, std::size_t index,
                           std::int32_t power = 1);

 private:
  std::vector<std::int32_t> exps_;
  std::int64_t degree_ = 0;
};

struct Term {
  Monomial mono;
  mpq_class coeff;
};

/// Element of Q[x_1..x_r]. Terms are kept strictly descending in the
/// ring's monomial order with no zero coefficients, so equal
/// polynomials have identical term lists.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Builds from arbitrary terms: sorts, merges, drops zeros.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const mpq_class& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, Monomial mono, const mpq_class& c);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Nonzero constant.
  bool is_unit() const { return is_constant() && !is_zero(); }
  bool is_monomial() const { return terms_.size() == 1; }

  /// Total degree of the highest-degree term; nullopt for zero.
  std::optional<std::int64_t> degree() const;
  bool is_homogeneous() const;
  mpq_class constant_term() const;

  /// Requires nonzero.
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const mpq_class& leading_coeff() const { return terms_.front().coeff; }

  /// Largest exponent of variable `var`; -1 for zero.
  std::int32_t degree_in(std::size_t var) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  Polynomial scaled(const mpq_class& c) const;
  Polynomial times_monomial(const Monomial& m) const;
  Polynomial pow(unsigned exponent) const;
  /// this + c * m * q, by merging.
  Polynomial add_scaled(const mpq_class& c, const Monomial& m,
                        const Polynomial& q) const;
  /// Scaled so the leading coefficient is 1 (zero stays zero).
  Polynomial monic() const;

  /// Same polynomial expressed over `target`, matching variables by name.
  /// Throws DomainError if a used variable is missing from `target`.
  Polynomial in_ring(const RingPtr& target) const;

  /// Substitute polynomial values (all over one ring) for every variable.
  Polynomial substitute(const std::vector<Polynomial>& values) const;

  /// Canonical ASCII rendering, re-parseable by parse().
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_same_ring(const Polynomial& other) const;
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Parses polynomial text (integer/rational literals, identifiers,
/// + - * ^ and parentheses; explicit '*' required).
Polynomial parse(std::string_view text, const RingPtr& ring);

/// Exact quotient p / q. Throws DomainError if q does not divide p.
Polynomial divide_exact(const Polynomial& p, const Polynomial& q);
/// Quotient when q | p, nullopt otherwise.
std::optional<Polynomial> try_divide(const Polynomial& p, const Polynomial& q);

/// Greatest common divisor normalized to leading coefficient 1;
/// gcd(p, 0) = monic(p), gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& p, const Polynomial& q);
Polynomial gcd(std::span<const Polynomial> ps);

/// Ring whose variables are those of `a` followed by the ones of `b` not
/// already in `a`; order taken from `a`.
RingPtr union_ring(const RingPtr& a, const RingPtr& b);
/// `base` with `extra` appended. Throws DomainError on a name collision.
RingPtr extend_ring(const RingPtr& base, const std::vector<std::string>& extra);

}  // namespace ggor
