#ifndef THICK_TESTS_SUPPORT_HPP
#define THICK_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "thick/groebner.hpp"
#include "thick/parse.hpp"
#include "thick/poly.hpp"
#include "thick/ring.hpp"
#include "thick/module.hpp"

namespace thick::test {

inline RingPtr ring_of(std::uint32_t p, std::vector<std::string> vars) {
  return make_poly_ring(p ? Field::prime(p) : Field::rationals(), std::move(vars));
}

inline Poly P(const RingPtr& r, const std::string& s) { return parse_poly(s, r); }

inline Ideal ideal_of(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Poly> g;
  for (auto s : gens) g.push_back(parse_poly(s, r));
  return Ideal(r, g);
}

inline std::vector<std::string> gb_strings(const Ideal& i) {
  std::vector<std::string> out;
  for (const auto& g : i.groebner_basis()) out.push_back(g.to_string());
  return out;
}

// Builds R = S/(relations) with the given named primes.
inline RingRef make_test_ring(const std::string& name, std::uint32_t p, std::vector<std::string> vars,
                              std::vector<std::string> relations,
                              std::vector<std::pair<std::string, std::vector<std::string>>> primes,
                              FlagAssertions flags = {}, std::vector<unsigned> weights = {}) {
  auto base = make_poly_ring(Field::prime(p), std::move(vars), {}, std::move(weights));
  std::vector<Poly> rel;
  for (auto& r : relations) rel.push_back(parse_poly(r, base));
  std::vector<RingPres::PrimeInput> reg;
  for (auto& [n, gens] : primes) {
    RingPres::PrimeInput in{n, {}};
    for (auto& g : gens) in.gens.push_back(parse_poly(g, base));
    reg.push_back(std::move(in));
  }
  return RingPres::make(name, base, rel, reg, flags);
}

inline RingRef node_ring() {
  return make_test_ring("NODE", 5, {"x", "y"}, {"x*y"}, {{"px", {"x"}}, {"py", {"y"}}, {"m", {"x", "y"}}});
}
inline RingRef regular1_ring() { return make_test_ring("REGULAR1", 5, {"x"}, {}, {{"zero", {}}, {"m", {"x"}}}); }
inline RingRef dualnum_ring() { return make_test_ring("DUALNUM", 5, {"x"}, {"x^2"}, {{"m", {"x"}}}); }
inline RingRef ribbon_ring() {
  return make_test_ring("RIBBON", 2, {"x", "y"}, {"x^2"}, {{"px", {"x"}}, {"m", {"x", "y"}}});
}
inline RingRef quad2_ring() {
  return make_test_ring("QUAD2", 5, {"x", "y"}, {"x^2", "y^2"}, {{"m", {"x", "y"}}}, {true, true});
}
inline RingRef cusp_ring() {
  return make_test_ring("CUSP", 5, {"x", "y"}, {"x^2 - y^3"}, {{"p0", {"x^2 - y^3"}}, {"m", {"x", "y"}}}, {},
                        {3, 2});
}
inline RingRef whitney3_ring() {
  return make_test_ring("WHITNEY3", 5, {"x", "y", "z"}, {"x^2"},
                        {{"px", {"x"}}, {"pxy", {"x", "y"}}, {"pxz", {"x", "z"}}, {"pxyz", {"x", "y + z"}},
                         {"m", {"x", "y", "z"}}});
}

inline ModulePres module_of(const RingRef& r, std::vector<std::vector<std::string>> rows) {
  std::vector<std::vector<Poly>> m;
  for (auto& row : rows) {
    m.emplace_back();
    for (auto& e : row) m.back().push_back(parse_poly(e, r->base()));
  }
  return ModulePres(r, Matrix::from_rows(r->base(), m));
}

inline std::string locus_names(const SpecSubset& s) { return s.to_string(); }

}  // namespace thick::test

#endif
