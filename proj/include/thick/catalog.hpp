#ifndef THICK_CATALOG_HPP
#define THICK_CATALOG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thick/module.hpp"
#include "thick/ring.hpp"

namespace thick {

struct CatalogSequence {
  std::string sub, mid, quot;
  ModuleMap inj, surj;
};

/// Indecomposable MCM modules named by labels, with the syzygy action on
/// labels and label decompositions of samples.
struct IndecomposableTable {
  std::vector<std::string> labels;
  std::vector<std::string> free_labels;
  std::map<std::string, std::string> module_of;                  // label -> sample name
  std::map<std::string, std::optional<std::string>> omega;       // nullopt: Omega is 0
  std::map<std::string, std::vector<std::string>> decompositions;  // sample -> labels
};

struct CatalogRing {
  RingRef ring;
  int default_case = 1;
  std::vector<std::string> notes;
  std::vector<std::pair<std::string, ModulePres>> samples;
  std::vector<CatalogSequence> sequences;
  std::optional<IndecomposableTable> indecomposables;

  const ModulePres& sample(const std::string& name) const;
  bool has_sample(const std::string& name) const;
};

/// Directory holding the catalog JSON files; THICK_CATALOG_DIR overrides
/// the build-time default.
std::string catalog_dir();
std::vector<std::string> catalog_names();

/// Loads and validates a catalog entry (cached). Every sequence must be
/// exact and the indecomposable table must agree with engine syzygies;
/// otherwise this throws.
const CatalogRing& load_catalog(const std::string& name);

enum class LatticeSetting { stable, cm };

/// Label sets closed under the Omega action, its inverse and two-of-three on
/// catalog sequences whose terms all decompose into labels. In the stable
/// setting free labels count as zero and are omitted; in the CM setting the
/// free labels are always present.
std::vector<std::vector<std::string>> brute_force_thick_lattice(const CatalogRing& c, LatticeSetting setting);

struct LatticeCheck {
  LatticeSetting setting;
  std::size_t lattice_count = 0;
  std::size_t subset_count = 0;
  bool loci_distinct = false;
  bool loci_match = false;
  bool pass = false;
  std::vector<std::string> detail;
};

/// Compares label-level lattice counts with specialization-closed subsets of
/// Sing, and the engine loci of the closed sets with those subsets.
std::vector<LatticeCheck> cross_check_lattice(const CatalogRing& c);

}  // namespace thick

#endif
