#ifndef THICK_RING_HPP
#define THICK_RING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "thick/groebner.hpp"
#include "thick/matrix.hpp"

namespace thick {

/// A registered homogeneous prime of R, given by generators in S that
/// contain the defining ideal.
struct PrimeId {
  std::string name;
  Ideal gens;
  /// Primality was established by the linear-generator check rather than
  /// taken on trust from the ring description.
  bool certified = false;
};

struct RingFlags {
  bool is_hypersurface = false;
  bool is_gorenstein = false;
  /// Locally an abstract hypersurface on the punctured spectrum. Asserted by
  /// the ring description except where it follows from is_hypersurface.
  bool lci_punctured = false;
  bool is_regular = false;
};

/// What a ring description asserts; unset entries are derived where possible.
struct FlagAssertions {
  std::optional<bool> gorenstein;
  std::optional<bool> lci_punctured;
};

class SpecSubset;
class RingPres;
using RingRef = std::shared_ptr<const RingPres>;

/// Graded-local ring R = S/I with a finite registry of homogeneous primes.
/// The registry is capped at 64 primes so subsets fit a bit mask.
class RingPres : public std::enable_shared_from_this<RingPres> {
public:
  struct PrimeInput {
    std::string name;
    std::vector<Poly> gens;
  };

  /// Validates and builds a ring. The maximal ideal is added to the registry
  /// (under the name "m") when no registered prime equals it.
  static RingRef make(std::string name, RingPtr base, std::vector<Poly> relations, std::vector<PrimeInput> registry,
                      FlagAssertions flags = {});

  const std::string& name() const { return name_; }
  const RingPtr& base() const { return base_; }
  const Ideal& defining() const { return defining_; }
  /// Minimal homogeneous generators of the defining ideal.
  const std::vector<Poly>& minimal_relations() const { return minimal_relations_; }
  int dim() const { return dim_; }
  const RingFlags& flags() const { return flags_; }

  const std::vector<PrimeId>& primes() const { return primes_; }
  std::size_t maximal_index() const { return maximal_; }
  std::optional<std::size_t> prime_index(const std::string& name) const;
  /// primes()[i] is contained in primes()[j].
  bool prime_contained(std::size_t i, std::size_t j) const { return (up_[i] >> j) & 1u; }
  /// Mask of registry primes containing primes()[i], i.e. V(p_i).
  std::uint64_t upset(std::size_t i) const { return up_[i]; }
  /// Mask of registry primes containing the ideal J (J ⊇ I not required).
  std::uint64_t primes_containing(const Ideal& j) const;

  const Ideal& jacobian() const { return jacobian_; }
  const SpecSubset& singular_locus() const;
  bool is_singular() const { return !flags_.is_regular; }

  /// Polynomial ring modulo nothing, used for depth over S.
  Ideal zero_ideal() const { return Ideal(base_); }
  Ideal maximal_ideal() const { return primes_[maximal_].gens; }

  /// Which provenance each flag came from, for reports.
  const std::vector<std::string>& notes() const { return notes_; }

private:
  RingPres() = default;

  std::string name_;
  RingPtr base_;
  Ideal defining_{nullptr};
  std::vector<Poly> minimal_relations_;
  int dim_ = 0;
  RingFlags flags_;
  std::vector<PrimeId> primes_;
  std::vector<std::uint64_t> up_;
  std::size_t maximal_ = 0;
  Ideal jacobian_{nullptr};
  std::shared_ptr<SpecSubset> sing_;
  std::vector<std::string> notes_;
};

/// Greedy minimal generators of a homogeneous ideal, scanned by degree.
std::vector<Poly> minimal_generators(const Ideal& ideal);

/// Specialization-closed subset of the registry, stored as its member mask.
class SpecSubset {
public:
  SpecSubset(RingRef ring, std::uint64_t members);
  static SpecSubset empty(RingRef ring) { return SpecSubset(std::move(ring), 0); }
  /// Union of V(p) over the given registry indices.
  static SpecSubset closure_of(RingRef ring, const std::vector<std::size_t>& primes);
  static SpecSubset closure_of_mask(RingRef ring, std::uint64_t primes);

  const RingRef& ring() const { return ring_; }
  std::uint64_t members() const { return members_; }
  /// Containment-minimal members, sorted by prime name.
  std::vector<std::size_t> basis() const;
  std::vector<std::size_t> member_indices() const;

  bool is_empty() const { return members_ == 0; }
  bool contains_prime(std::size_t index) const { return (members_ >> index) & 1u; }
  bool contains_subset(const SpecSubset& other) const;
  SpecSubset unite(const SpecSubset& other) const;
  SpecSubset intersect(const SpecSubset& other) const;

  /// "{name, ...}" listing the basis.
  std::string to_string() const;

  friend bool operator==(const SpecSubset& a, const SpecSubset& b);

private:
  RingRef ring_;
  std::uint64_t members_;
};

/// All distinct specialization-closed subsets of `bound`, the empty set first,
/// then by size and member mask.
std::vector<SpecSubset> enumerate_spec_closed_in(const RingRef& ring, const SpecSubset& bound);

/// Jacobian matrix of the given polynomials (rows = polynomials).
Matrix jacobian_matrix(const RingPtr& base, const std::vector<Poly>& gens);

}  // namespace thick

#endif
