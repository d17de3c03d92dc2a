#pragma once

// Buchberger engine for submodules of R^rank (rank 1 = ideals) with
// position-over-term order, Gebauer-Moeller pair criteria, sugar
// selection and optional tags recording each element as a combination of
// the input generators.

#include <cstdint>
#include <optional>
#include <vector>

#include "ggor/budget.hpp"
#include "ggor/groebner.hpp"
#include "ggor/ring.hpp"

namespace ggor::detail {

struct MTerm {
  std::uint32_t comp;
  Monomial mono;
  mpq_class coeff;
};

/// Module element: terms strictly descending in POT order, no zeros.
using ModPoly = std::vector<MTerm>;

/// POT comparison: the lower component index is the larger one.
int compare_terms(const Ring& ring, const MTerm& a, const MTerm& b);

/// p + c * m * q, merged.
ModPoly add_scaled(const Ring& ring, const ModPoly& p, const mpq_class& c, const Monomial& m,
                   const ModPoly& q);
ModPoly scale(const ModPoly& p, const mpq_class& c);
ModPoly make_monic(const ModPoly& p, mpq_class* factor = nullptr);

ModPoly from_vector(const Ring& ring, const Vector& v);
Vector to_vector(const RingPtr& ring, const ModPoly& p, std::size_t rank);
ModPoly unit_vector(std::size_t nvars, std::size_t comp);

class GbEngine {
 public:
  struct Options {
    bool track_tags = false;
    bool record_syzygies = false;
    bool product_criterion = true;  // only honoured for rank 1 without tags
  };

  GbEngine(RingPtr ring, std::size_t rank, Shifts shifts, Options options,
           const Budget& budget = Budget::from_environment());

  /// Queues an input generator; its tag is the unit vector at its input index.
  void add_generator(ModPoly v);
  std::size_t num_generators() const { return num_inputs_; }

  /// Processes queued generators and pairs of sugar <= max_degree.
  void complete(std::optional<std::int64_t> max_degree = std::nullopt);
  bool is_complete() const { return queue_.empty(); }

  /// Reduces v; with `full` every term is reduced, otherwise only the
  /// lead. When `tag` is given it receives the accumulated multiplier
  /// combination, so that v - remainder = sum tag_k * input_k.
  ModPoly reduce(const ModPoly& v, bool full, ModPoly* tag = nullptr) const;

  /// Inter-reduced monic basis, ascending by leading term.
  std::vector<ModPoly> reduced_basis() const;

  /// Tags of zero reductions; each annihilates the input generators.
  const std::vector<ModPoly>& syzygies() const { return syzygies_; }

  std::int64_t degree_of(const ModPoly& p) const;

 private:
  struct Element {
    ModPoly poly;
    ModPoly tag;
    std::int64_t sugar;
    std::uint64_t mask;
    bool redundant = false;
  };
  struct Item {
    std::int64_t sugar;
    bool is_generator;
    std::size_t i, j;  // pair indices, or the generator slot in i
    Monomial lcm;
    std::uint32_t comp;
  };

  void insert(ModPoly p, ModPoly tag, std::int64_t sugar);
  const Element* find_reducer(const MTerm& t) const;
  std::size_t pick_next() const;
  void process(const Item& item);
  std::int64_t sugar_of(const ModPoly& p) const;

  RingPtr ring_;
  std::size_t rank_;
  Shifts shifts_;
  Options opt_;
  BudgetClock clock_;
  std::size_t num_inputs_ = 0;
  std::vector<ModPoly> pending_;  // queued generators by slot
  std::vector<ModPoly> pending_tags_;
  std::vector<Element> basis_;
  std::vector<Item> queue_;
  std::vector<ModPoly> syzygies_;
  std::size_t monomials_ = 0;
};

}  // namespace ggor::detail
