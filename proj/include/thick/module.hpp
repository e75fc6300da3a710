#ifndef THICK_MODULE_HPP
#define THICK_MODULE_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "thick/matrix.hpp"
#include "thick/ring.hpp"

namespace thick {

/// Finitely generated R-module coker(A : R^cols -> R^rows). Rows are
/// generators, columns relations. Entries are kept in normal form modulo I.
///
/// Copies share a synchronized cache of derived data (minimal form,
/// resolution prefix, Fitting ideals, loci), so repeated queries are cheap.
class ModulePres {
public:
  ModulePres(RingRef ring, Matrix matrix);

  static ModulePres free(const RingRef& ring, std::size_t rank);
  static ModulePres zero(const RingRef& ring) { return free(ring, 0); }
  /// R/J for J generated by `gens` (in S).
  static ModulePres cyclic(const RingRef& ring, const std::vector<Poly>& gens);
  /// R/p for a registry prime.
  static ModulePres quotient_by_prime(const RingRef& ring, std::size_t prime);
  /// The residue field k = R/m.
  static ModulePres residue_field(const RingRef& ring) { return quotient_by_prime(ring, ring->maximal_index()); }

  const RingRef& ring() const { return ring_; }
  const Matrix& matrix() const { return matrix_; }
  std::size_t rows() const { return matrix_.rows(); }
  std::size_t cols() const { return matrix_.cols(); }
  /// Every entry has zero constant term.
  bool is_minimal() const { return entries_in_maximal_ideal(matrix_); }

  std::string to_string() const { return matrix_.to_string(); }

  struct Cache;
  Cache& cache() const { return *cache_; }

private:
  RingRef ring_;
  Matrix matrix_;
  std::shared_ptr<Cache> cache_;
};

ModulePres minimalize(const ModulePres& m);
ModulePres direct_sum(const ModulePres& a, const ModulePres& b);

/// Minimal free resolution prefix: differentials[k-1] is f_k : F_k -> F_{k-1}
/// and betti[k] = rank F_k.
struct Resolution {
  std::vector<Matrix> differentials;
  std::vector<std::size_t> betti;
};

Resolution resolution(const ModulePres& m, std::size_t steps);
/// Omega^n M, minimally presented.
ModulePres syzygy(const ModulePres& m, std::size_t n);

bool is_free(const ModulePres& m);
/// Number of generators of the minimal presentation.
std::size_t num_generators(const ModulePres& m);
bool is_zero_module(const ModulePres& m);

struct ProjDim {
  bool finite;
  std::size_t value;  // meaningful when finite
  std::string to_string() const { return finite ? "finite(" + std::to_string(value) + ")" : "infinite"; }
};

/// Requires a Gorenstein ring: pd M < infinity iff Omega^d M is free.
ProjDim pd_finite(const ModulePres& m);

/// Fitt_0 ⊆ ... ⊆ Fitt_r = R for the minimal presentation with r rows.
/// Each ideal lives in S and contains the defining ideal.
const std::vector<Ideal>& fitting_chain(const ModulePres& m);

/// Whether M_p is free, for the registry prime with the given index.
bool free_at(const ModulePres& m, std::size_t prime);
SpecSubset nonfree_locus(const ModulePres& m);

/// Hom(M, R), presented through the kernel of the transposed presentation.
ModulePres dual(const ModulePres& m);
/// Removes every free direct summand; the result has no surjection onto R.
ModulePres strip_free_summands(const ModulePres& m);
/// Omega^{-1} M = dual(Omega^1(dual M)) with free summands stripped.
/// Requires a Gorenstein ring and, when `check` is set, an MCM module.
ModulePres cosyzygy(const ModulePres& m, bool check = true);

struct DepthInfo {
  bool zero;
  int depth;  // -1 for the zero module
  int dim;    // -1 for the zero module
  bool mcm;
};

/// Depth from Auslander-Buchsbaum over S, dimension from I + Fitt_0.
DepthInfo depth_info(const ModulePres& m);
inline bool is_mcm(const ModulePres& m) { return depth_info(m).mcm; }

/// Q(M) = V(Omega^d M); requires a Gorenstein ring.
SpecSubset q_locus(const ModulePres& m);

/// An R-linear map coker(A) -> coker(B) given on generators by a
/// rows(B) x rows(A) matrix.
struct ModuleMap {
  ModulePres source;
  ModulePres target;
  Matrix matrix;
};

/// Checks the map sends relations to relations.
bool is_well_defined(const ModuleMap& f);
/// Empty string when 0 -> A -> B -> C -> 0 is exact, otherwise the first failure.
std::string check_short_exact(const ModuleMap& inj, const ModuleMap& surj);

/// Image of a matrix (columns as generators) presented minimally.
ModulePres image_module(const RingRef& ring, const Matrix& a);

void require_gorenstein(const RingRef& ring, const char* what);

}  // namespace thick

#endif
