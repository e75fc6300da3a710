#ifndef THICK_GROEBNER_HPP
#define THICK_GROEBNER_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "thick/poly.hpp"

namespace thick {

/// Process-wide cap on S-pairs handled by one Buchberger run (default 100000).
std::size_t default_spair_budget();
void set_default_spair_budget(std::size_t budget);

struct ModTerm {
  std::uint32_t comp;
  Monomial mono;
  FieldElem coeff;
};

/// Sparse element of S^rank, terms strictly decreasing in the
/// position-over-term order: a smaller component index is larger, ties are
/// broken by the ring order.
using ModVec = std::vector<ModTerm>;

ModVec to_modvec(const std::vector<Poly>& column, std::uint32_t offset = 0);
std::vector<Poly> from_modvec(const ModVec& v, const RingPtr& ring, std::size_t rank, std::uint32_t offset = 0);

/// Incremental Buchberger engine over a free module S^rank.
///
/// Pairs are chosen by the normal strategy (smallest lcm first) and filtered
/// with the Gebauer-Moeller criteria; the coprime-leading-term criterion is
/// only applied when rank == 1.
class GroebnerEngine {
public:
  GroebnerEngine(RingPtr ring, std::size_t rank, std::size_t budget = default_spair_budget());

  /// Adds a generator. The basis is not complete until complete() runs.
  void insert(const ModVec& v);
  void complete();

  /// Full normal form with respect to the current basis.
  ModVec reduce(ModVec v) const;
  /// Reduced, monic basis sorted by increasing leading term.
  std::vector<ModVec> reduced_basis() const;

  std::size_t spairs_processed() const { return processed_; }
  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }

private:
  struct Pair {
    std::size_t i, j;
    std::uint32_t comp;
    Monomial lcm;
  };

  void update(std::size_t h);
  ModVec spoly(const Pair& p) const;
  const ModVec* find_reducer(std::uint32_t comp, const Monomial& m) const;

  RingPtr ring_;
  std::size_t rank_;
  std::size_t budget_;
  std::size_t processed_ = 0;
  std::vector<ModVec> polys_;
  std::vector<char> active_;
  std::vector<std::vector<std::size_t>> by_comp_;
  std::vector<Pair> pairs_;
};

/// Compares module terms in the position-over-term order.
int compare_pot(const MonomialOrder& ord, const ModTerm& a, const ModTerm& b);
/// S-vector of two monic basis elements with leading terms in the same component.
ModVec s_vector(const MonomialOrder& ord, const ModVec& f, const ModVec& g);

/// Submodule of S^rank with a lazily computed, cached reduced Groebner basis.
class SubmoduleGB {
public:
  SubmoduleGB(RingPtr ring, std::size_t rank, std::vector<std::vector<Poly>> gens);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const std::vector<std::vector<Poly>>& generators() const { return gens_; }

  const std::vector<ModVec>& basis() const;
  std::vector<Poly> normal_form(const std::vector<Poly>& v) const;
  bool contains(const std::vector<Poly>& v) const;

private:
  struct Cache;
  RingPtr ring_;
  std::size_t rank_;
  std::vector<std::vector<Poly>> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Ideal of a polynomial ring S with a cached reduced Groebner basis.
/// Equality is equality of reduced bases.
class Ideal {
public:
  explicit Ideal(RingPtr ring, std::vector<Poly> gens = {});

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }
  /// Reduced monic basis, sorted by increasing leading monomial.
  const std::vector<Poly>& groebner_basis() const;

  Poly normal_form(const Poly& f) const;
  bool contains(const Poly& f) const { return normal_form(f).is_zero(); }
  bool contains(const Ideal& other) const;
  bool is_unit() const;
  bool is_zero() const;
  bool is_homogeneous() const;

  std::string to_string() const;

  friend bool operator==(const Ideal& a, const Ideal& b);

private:
  struct Cache;
  RingPtr ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
/// {g : g * f in a}.
Ideal ideal_colon(const Ideal& a, const Poly& f);
Ideal ideal_colon(const Ideal& a, const Ideal& b);

/// Krull dimension of S/I from the combinatorics of the leading-term ideal;
/// -1 for the unit ideal.
int dimension(const Ideal& ideal);

/// Kernel of R^{gens.size()} -> R^rank, e_j -> gens[j], where R = S/relations.
/// Computed in S by adjoining relations * e_i. Returned generators have
/// entries reduced modulo `relations`; zero vectors are dropped.
SubmoduleGB module_syzygies(const std::vector<std::vector<Poly>>& gens, std::size_t rank, const Ideal& relations);

/// Coefficients c with sum_j c_j * columns[j] == target modulo `relations`,
/// or nullopt when the target is not in the span.
std::optional<std::vector<Poly>> lift(const std::vector<Poly>& target, const std::vector<std::vector<Poly>>& columns,
                                      const Ideal& relations);

}  // namespace thick

#endif
