#ifndef THICK_CLASSIFY_HPP
#define THICK_CLASSIFY_HPP

#include <string>
#include <variant>
#include <vector>

#include "thick/complex.hpp"
#include "thick/io.hpp"
#include "thick/module.hpp"

namespace thick {

/// B: stable CM, C: CM, D: finitely generated modules, E: derived category.
enum class Setting { B, C, D, E };

std::string setting_name(Setting s);
/// Accepts "B".."E" and the aliases stCM, CM, MOD, DER.
Setting parse_setting(const std::string& s);

/// Modules for B/C/D, complexes for E.
using Object = std::variant<ModulePres, ComplexHandle>;

/// Whether loci classify thick subcategories here: case 1 needs a hypersurface;
/// case 2 needs a singular Gorenstein ring that is locally a hypersurface on
/// the punctured spectrum. Empty when they hold, otherwise the reason.
std::string hypotheses_failure(const RingRef& ring, int case_number);

/// Finitely generated thick subcategory given by generators; the base
/// objects of the setting and case are implied.
struct ThickDescriptor {
  Setting setting;
  RingRef ring;
  int case_number = 1;
  std::vector<Object> generators;
  std::vector<std::string> notes;
};

/// Validates generator kinds and, for B/C, that generators are MCM.
ThickDescriptor make_descriptor(Setting s, RingRef ring, int case_number, std::vector<Object> generators);
ThickDescriptor descriptor_from_json(const Json& j, const RingRef& ctx);

/// R for C/D/E, plus Omega^d k (B/C) or k (D/E) in case 2.
std::vector<Object> base_objects(Setting s, const RingRef& ring, int case_number);

/// lSupp (B), V (C), Q (D) or W (E) of a single object.
SpecSubset object_locus(Setting s, const Object& obj);
SpecSubset locus(const ThickDescriptor& t);

/// Generators {R/p} (D, Delta-embedded for E) or {Omega^d R/p} (B, C) over
/// the basis of phi, which must lie in Sing(R).
ThickDescriptor inverse_descriptor(Setting s, const RingRef& ring, const SpecSubset& phi, int case_number);

enum class Verdict { in, out, not_decidable };
std::string verdict_name(Verdict v);

struct Membership {
  Verdict verdict;
  std::string reason;
};

Membership membership(const ThickDescriptor& t, const Object& obj);

/// Moves generators to an adjacent setting (B-C-D-E) preserving the locus.
ThickDescriptor transport(const ThickDescriptor& t, Setting to);

struct ClassificationReport {
  Json json;
  bool pass = true;
};

/// Round trips locus(inverse_descriptor(phi)) = phi over every closed phi in
/// Sing and every setting, plus transport round trips on catalog-style
/// fixtures. Runs even when the case hypotheses fail and records the flag.
ClassificationReport verify_roundtrips(const RingRef& ring, int case_number,
                                       const std::vector<std::vector<ModulePres>>& fixtures);

/// Loci along every directed path of the diagram for each fixture, embedded
/// in every setting, plus membership spot checks between settings.
ClassificationReport diagram_check(const RingRef& ring, int case_number,
                                   const std::vector<std::vector<ModulePres>>& fixtures);

Json descriptor_to_json(const ThickDescriptor& t);

}  // namespace thick

#endif
