#pragma once

// Groebner bases of ideals and submodules of free modules, with the
// derived operations: membership, dimension, Hilbert functions,
// intersections, syzygies and minimal graded free resolutions.

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "ggor/budget.hpp"
#include "ggor/matrices.hpp"
#include "ggor/ring.hpp"

namespace ggor {

/// Element of R^r, one polynomial per component.
using Vector = std::vector<Polynomial>;

/// Ideal given by generators. The reduced Groebner basis for the ring's
/// order is computed on first use and shared between copies.
class IdealBasis {
 public:
  IdealBasis() = default;
  IdealBasis(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  /// Every generator homogeneous (zero allowed).
  bool is_homogeneous() const;
  /// Same generators over `target` (which may use another order).
  IdealBasis in_ring(const RingPtr& target) const;

  /// Reduced, monic, ascending by leading monomial.
  const std::vector<Polynomial>& groebner(const Budget& budget = Budget::from_environment()) const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> basis;
  };
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Submodule of R^rank generated by vectors. Shifts give the degrees of
/// the free basis elements, so component i of a homogeneous vector of
/// degree d has polynomial degree d - shifts[i].
struct ModuleBasis {
  RingPtr ring;
  std::size_t rank = 0;
  std::vector<Vector> generators;
  std::optional<Shifts> shifts;

  /// Generators as the columns of a rank x size matrix.
  PolyMatrix to_matrix() const;
  static ModuleBasis columns_of(const PolyMatrix& m);
  /// Degree of a homogeneous vector under the shifts (0 shifts if absent);
  /// nullopt for the zero vector.
  std::optional<std::int64_t> degree_of(const Vector& v) const;
};

/// 0 <- F_0 <- F_1 <- ... with maps[k] : F_{k+1} -> F_k and shifts[k] the
/// twists of F_k. maps[0] is the 1 x n row of ideal generators.
struct GradedResolution {
  std::vector<PolyMatrix> maps;
  std::vector<Shifts> shifts;
  bool minimal = false;

  std::size_t length() const { return maps.size(); }
  /// Every composite maps[k] * maps[k+1] is the zero matrix.
  bool is_complex() const;
};

IdealBasis groebner_basis(const IdealBasis& ideal,
                          const Budget& budget = Budget::from_environment());

Polynomial normal_form(const Polynomial& p, const IdealBasis& ideal);
bool member(const Polynomial& p, const IdealBasis& ideal);
/// c with p = sum c_i * generators_i, or nullopt when p is not in the ideal.
std::optional<std::vector<Polynomial>> member_with_cofactors(const Polynomial& p,
                                                             const IdealBasis& ideal);
/// Every generator of `inner` lies in `outer`.
bool contains(const IdealBasis& outer, const IdealBasis& inner);
bool same_ideal(const IdealBasis& a, const IdealBasis& b);
bool is_unit_ideal(const IdealBasis& ideal);

/// Krull dimension of R/I; -1 for the unit ideal.
int dimension(const IdealBasis& ideal);
/// num_vars - dim(R/I). Throws UnitIdealError for the unit ideal.
int height(const IdealBasis& ideal);
/// height >= c, treating the unit ideal as having infinite height.
bool grade_at_least(const IdealBasis& ideal, int c);

/// Coefficients of the Hilbert series numerator of R/I over (1-t)^r.
std::vector<long long> hilbert_numerator(const IdealBasis& ideal);
/// dim_k (R/I)_degree for homogeneous I.
long long hilbert_function(const IdealBasis& ideal, std::int64_t degree);

IdealBasis intersect(const IdealBasis& a, const IdealBasis& b);
/// (I : f). Throws DomainError for f = 0.
IdealBasis quotient(const IdealBasis& ideal, const Polynomial& f);

/// First syzygies of the given generators, as a submodule of R^size.
ModuleBasis syzygies(const IdealBasis& ideal, const Budget& budget = Budget::from_environment());
ModuleBasis syzygies(const ModuleBasis& module, const Budget& budget = Budget::from_environment());

/// Reduced Groebner basis of a submodule (POT order).
std::vector<Vector> module_groebner_basis(const ModuleBasis& module,
                                          const Budget& budget = Budget::from_environment());
bool module_member(const Vector& v, const ModuleBasis& module);

/// Minimal homogeneous generators, chosen from the given ones by
/// ascending degree and input order.
IdealBasis minimal_generators(const IdealBasis& ideal);
/// Module version; requires shifts (zero shifts assumed when absent).
ModuleBasis minimal_generators(const ModuleBasis& module);

/// Minimal graded free resolution of R/I, at most max_length maps.
GradedResolution minimal_free_resolution(const IdealBasis& ideal, std::size_t max_length = 16,
                                         const Budget& budget = Budget::from_environment());
/// Cancels unit entries until no entry has a nonzero constant term.
GradedResolution minimalize(const GradedResolution& res);

}  // namespace ggor
