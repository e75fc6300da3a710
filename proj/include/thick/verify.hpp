#ifndef THICK_VERIFY_HPP
#define THICK_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "thick/groebner.hpp"
#include "thick/io.hpp"
#include "thick/module.hpp"

namespace thick {

namespace oracle {

// These avoid the Groebner engine: plain linear algebra and division over
// their own sparse representation, so they can disagree with it.

/// Membership of a homogeneous f in the ideal of homogeneous gens over F_p,
/// by solving for cofactors of the exact degree needed.
bool bounded_membership(const Poly& f, const std::vector<Poly>& gens);

/// Empty when every S-polynomial of the reduced basis reduces to zero, every
/// generator reduces to zero and the basis is reduced; otherwise the failure.
std::string check_groebner_basis(const Ideal& ideal);
std::string check_groebner_basis(const SubmoduleGB& gb);

/// Whether M_p is free, by pivoting on entries outside p (units of R_p) and
/// testing the leftover entries for vanishing in R_p.
bool localized_free(const ModulePres& m, std::size_t prime);

struct MembershipInstance {
  std::vector<Poly> gens;
  Poly f;
  bool constructed_member;
};

/// Random homogeneous instance over F_p with cofactor degrees at most 6.
MembershipInstance random_membership_instance(std::mt19937_64& rng, std::uint32_t p);

}  // namespace oracle

struct VerifyOptions {
  std::uint64_t seed = 20240601;
  std::optional<std::string> ring;  // restrict to one catalog ring
  std::size_t membership_instances = 60;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = true;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
};

inline constexpr int kCriteria = 10;

CriterionResult run_criterion(int id, const VerifyOptions& opts);
std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts);
Json to_json(const CriterionResult& r);

}  // namespace thick

#endif
