#include <doctest.h>

#include "support.hpp"
#include "thick/catalog.hpp"
#include "thick/error.hpp"
#include "thick/io.hpp"

using namespace thick;
using namespace thick::test;

TEST_CASE("load: examples") {
  CHECK(load_catalog("NODE").ring->singular_locus().to_string() == "{m}");
  CHECK(load_catalog("REGULAR1").ring->singular_locus().is_empty());
  CHECK(load_catalog("RIBBON").ring->primes().size() == 2);
  CHECK_THROWS_AS(load_catalog("NOPE"), DomainError);
}

TEST_CASE("load: every catalog ring validates") {
  for (const auto& n : catalog_names()) {
    INFO(n);
    const auto& c = load_catalog(n);
    CHECK(c.ring->name() == n);
    CHECK_FALSE(c.samples.empty());
    CHECK(c.has_sample("R"));
    CHECK(c.has_sample("k"));
  }
  CHECK(load_catalog("QUAD2").default_case == 2);
  CHECK(load_catalog("WHITNEY3").ring->dim() == 2);
  CHECK(load_catalog("CUSP").indecomposables.has_value());
}

TEST_CASE("brute_force_thick_lattice: examples") {
  using V = std::vector<std::vector<std::string>>;
  const auto& node = load_catalog("NODE");
  CHECK(brute_force_thick_lattice(node, LatticeSetting::stable) == V{{}, {"Rx", "Ry"}});
  CHECK(brute_force_thick_lattice(node, LatticeSetting::cm) == V{{"R"}, {"R", "Rx", "Ry"}});
  CHECK(brute_force_thick_lattice(load_catalog("DUALNUM"), LatticeSetting::stable) == V{{}, {"k"}});
  CHECK(brute_force_thick_lattice(load_catalog("CUSP"), LatticeSetting::stable).size() == 2);
  CHECK_THROWS_AS(brute_force_thick_lattice(load_catalog("RIBBON"), LatticeSetting::stable), DomainError);
}

TEST_CASE("cross_check_lattice: examples") {
  for (auto n : {"NODE", "DUALNUM", "CUSP"}) {
    INFO(n);
    for (const auto& chk : cross_check_lattice(load_catalog(n))) {
      CHECK(chk.lattice_count == 2);
      CHECK(chk.subset_count == 2);
      CHECK(chk.pass);
    }
  }
}

TEST_CASE("catalog exact sequences are genuinely checked") {
  const auto& node = load_catalog("NODE");
  for (const auto& s : node.sequences) CHECK(check_short_exact(s.inj, s.surj).empty());
  // Swapping the maps of the first sequence breaks it.
  const auto& s = node.sequences.front();
  ModuleMap wrong{s.surj.target, s.mid == "R" ? s.inj.target : s.inj.target, s.inj.matrix};
  CHECK_FALSE(check_short_exact(wrong, s.surj).empty());
}

TEST_CASE("io: references and descriptions") {
  auto k = resolve_module("catalog:NODE/k", nullptr);
  CHECK(k.matrix().to_string() == "[x, y]");
  auto ring = resolve_ring("catalog:NODE");
  auto j = Json::parse(R"({"matrix": [["x", "0"], ["y", "x"]]})");
  auto m = module_from_json(j, ring);
  CHECK(m.rows() == 2);
  auto c = complex_from_json(Json::parse(R"({"kind": "shift", "by": 2, "of": {"kind": "delta", "module": "catalog:NODE/Rx"}})"),
                             ring);
  CHECK(c.top() == 2);
  auto f = complex_from_json(Json::parse(R"({"kind": "free", "range": [0, 1], "diffs": {"1": [["x"]]}})"), ring);
  CHECK(f.free_model(1).rank(1) == 1);
  auto cone = complex_from_json(Json::parse(R"({"kind": "cone", "map": {"source": {"kind": "delta", "module": "catalog:NODE/R"},
      "target": {"kind": "delta", "module": "catalog:NODE/Rx"}, "components": {"0": [["1"]]}}})"),
                                ring);
  CHECK(cone.top() == 1);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"kind": "blob"})"), ring), ParseError);
  CHECK_THROWS_AS(module_from_json(Json::parse(R"({"matrix": [["x", "q"]]})"), ring), ParseError);
  auto r = ring_from_json(Json::parse(R"({"field": {"char": 5}, "vars": ["x","y"], "relations": ["x*y"],
      "primes": [{"name": "px", "gens": ["x"]}], "flags": {"gorenstein": true}})"));
  CHECK(r->flags().is_hypersurface);
  CHECK(r->primes().size() == 2);
}
