#ifndef THICK_COMPLEX_HPP
#define THICK_COMPLEX_HPP

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "thick/module.hpp"

namespace thick {

/// Homologically indexed complex of finite free modules, d_i : F_i -> F_{i-1}.
/// Ranks outside [lo, hi] are zero. Only the stored window is known; the
/// complex may continue above hi (free models are extended on demand).
struct FreeComplex {
  int lo = 0;
  std::vector<std::size_t> ranks;  // ranks[i - lo]
  std::map<int, Matrix> diffs;      // diffs[i] for lo < i <= hi

  int hi() const { return lo + static_cast<int>(ranks.size()) - 1; }
  std::size_t rank(int i) const;
  /// d_i, or the appropriately shaped zero matrix.
  Matrix diff(const RingPtr& base, int i) const;
};

class ComplexHandle;
struct ComplexMap;

/// Immutable handle on a bounded complex built from the node grammar
/// Delta(M) | Free | Shift(X, k) | Cone(map). Free models are memoized.
class ComplexHandle {
public:
  static ComplexHandle delta(const ModulePres& m);
  /// `complex` must satisfy d_{i} d_{i+1} = 0 modulo I; checked.
  static ComplexHandle free(const RingRef& ring, FreeComplex complex);
  static ComplexHandle shift(const ComplexHandle& x, int k);
  static ComplexHandle cone(const ComplexMap& f);

  const RingRef& ring() const;
  /// A priori homology range: H_i = 0 outside [bottom, top].
  int top() const;
  int bottom() const;

  /// Free model F with F_i = 0 for i < bottom(), computed through degree `upto`.
  FreeComplex free_model(int upto) const;

  struct Node;
  const Node& node() const { return *node_; }

private:
  explicit ComplexHandle(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Chain map between free models. Components for the listed degrees are
/// given; components in higher degrees are lifted through the target model,
/// and missing lower degrees are zero.
struct ComplexMap {
  ComplexHandle source;
  ComplexHandle target;
  std::map<int, Matrix> components;

  /// Components through degree `upto`, checking d^Y phi_i = phi_{i-1} d^X.
  std::map<int, Matrix> lifted(int upto) const;
};

/// H_i(X) as a minimally presented module.
ModulePres homology(const ComplexHandle& x, int i);
/// Greatest i with H_i(X) != 0, or nullopt for the zero object.
std::optional<int> sup(const ComplexHandle& x);

/// W(X): primes where X has infinite projective dimension. Gorenstein only.
SpecSubset w_locus(const ComplexHandle& x);
bool is_perfect(const ComplexHandle& x);
/// Q_R(X), an MCM module without free summands (zero for perfect X).
ModulePres stabilize(const ComplexHandle& x);

}  // namespace thick

#endif
