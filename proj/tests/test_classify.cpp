#include <doctest.h>

#include <random>

#include "support.hpp"
#include "thick/catalog.hpp"
#include "thick/classify.hpp"
#include "thick/error.hpp"

using namespace thick;
using namespace thick::test;

namespace {

ModulePres quotient(const RingRef& r, const std::string& prime) {
  return ModulePres::quotient_by_prime(r, *r->prime_index(prime));
}

std::vector<std::string> generator_strings(const ThickDescriptor& t) {
  std::vector<std::string> out;
  for (const auto& g : t.generators) out.push_back(std::get<ModulePres>(g).to_string());
  return out;
}

}  // namespace

TEST_CASE("locus: examples") {
  auto node = node_ring();
  auto k = ModulePres::residue_field(node);
  auto der = make_descriptor(Setting::E, node, 1, {ComplexHandle::delta(k)});
  CHECK(locus(der).to_string() == "{m}");

  auto cm = make_descriptor(Setting::C, node, 1, {});
  CHECK(locus(cm).is_empty());

  auto ribbon = ribbon_ring();
  auto mod = make_descriptor(Setting::D, ribbon, 1, {quotient(ribbon, "px")});
  CHECK(locus(mod) == SpecSubset::closure_of(ribbon, {*ribbon->prime_index("px")}));
  CHECK(locus(mod).member_indices().size() == ribbon->primes().size());
}

TEST_CASE("descriptors validate kinds and MCM generators") {
  auto node = node_ring();
  auto k = ModulePres::residue_field(node);
  CHECK_THROWS_AS(make_descriptor(Setting::E, node, 1, {k}), DomainError);
  CHECK_THROWS_AS(make_descriptor(Setting::D, node, 1, {ComplexHandle::delta(k)}), DomainError);
  CHECK_THROWS_AS(make_descriptor(Setting::C, node, 1, {k}), DomainError);
  CHECK_THROWS_AS(make_descriptor(Setting::D, node, 3, {}), DomainError);
  CHECK_THROWS_AS(make_descriptor(Setting::D, node, 1, {ModulePres::residue_field(ribbon_ring())}), DomainError);

  auto q = quad2_ring();
  auto t = make_descriptor(Setting::B, q, 2, {});
  CHECK(t.notes.size() == 1);
  CHECK(locus(t).to_string() == "{m}");
}

TEST_CASE("descriptor_from_json") {
  Json j = Json::parse(R"({"setting":"MOD","case":1,"ring":"catalog:NODE","generators":["catalog:NODE/k"]})");
  auto t = descriptor_from_json(j, nullptr);
  CHECK(t.setting == Setting::D);
  CHECK(locus(t).to_string() == "{m}");

  Json e = Json::parse(R"({"setting":"E","ring":"catalog:NODE",
                           "generators":[{"kind":"delta","module":"catalog:NODE/Rx"}]})");
  CHECK(locus(descriptor_from_json(e, nullptr)).to_string() == "{m}");
  CHECK_THROWS_AS(descriptor_from_json(Json::parse(R"({"setting":"X","ring":"catalog:NODE"})"), nullptr), ParseError);
  CHECK(parse_setting("stCM") == Setting::B);
  CHECK(parse_setting("DER") == Setting::E);
}

TEST_CASE("inverse_descriptor: examples") {
  auto node = node_ring();
  auto sing = node->singular_locus();
  auto t = inverse_descriptor(Setting::D, node, sing, 1);
  REQUIRE(t.generators.size() == 1);
  CHECK(std::get<ModulePres>(t.generators[0]).to_string() == ModulePres::residue_field(node).to_string());
  CHECK(locus(t).to_string() == "{m}");

  for (auto s : {Setting::B, Setting::C, Setting::D, Setting::E}) {
    auto e = inverse_descriptor(s, node, SpecSubset::empty(node), 1);
    CHECK(e.generators.empty());
    CHECK(locus(e).is_empty());
  }

  auto ribbon = ribbon_ring();
  auto phi = SpecSubset::closure_of(ribbon, {*ribbon->prime_index("px")});
  auto c = inverse_descriptor(Setting::C, ribbon, phi, 1);
  REQUIRE(c.generators.size() == 1);
  auto g = std::get<ModulePres>(c.generators[0]);
  CHECK(num_generators(g) == 1);
  CHECK(fitting_chain(g)[0] == fitting_chain(quotient(ribbon, "px"))[0]);
  CHECK(locus(c) == phi);

  CHECK_THROWS_AS(inverse_descriptor(Setting::D, node, SpecSubset::closure_of(node, {*node->prime_index("px")}), 1),
                  DomainError);
  auto q = quad2_ring();
  CHECK_THROWS_AS(inverse_descriptor(Setting::D, q, SpecSubset::empty(q), 2), DomainError);
}

TEST_CASE("membership: examples") {
  auto node = node_ring();
  auto cm = make_descriptor(Setting::C, node, 1, {quotient(node, "px")});
  CHECK(membership(cm, quotient(node, "py")).verdict == Verdict::in);

  auto perfects = make_descriptor(Setting::E, node, 1, {});
  CHECK(membership(perfects, ComplexHandle::delta(ModulePres::residue_field(node))).verdict == Verdict::out);
  CHECK(membership(perfects, ComplexHandle::delta(ModulePres::free(node, 2))).verdict == Verdict::in);

  auto q = quad2_ring();
  auto t = make_descriptor(Setting::D, q, 1, {});
  auto m = membership(t, ModulePres::residue_field(q));
  CHECK(m.verdict == Verdict::not_decidable);
  CHECK(m.reason.find("hypersurface") != std::string::npos);

  // Non-MCM modules are never in a CM-setting subcategory.
  CHECK(membership(cm, ModulePres::residue_field(node)).verdict == Verdict::out);
  CHECK_THROWS_AS(membership(cm, ComplexHandle::delta(ModulePres::free(node, 1))), DomainError);
}

TEST_CASE("transport: examples") {
  auto node = node_ring();
  auto k = ModulePres::residue_field(node);
  auto d = make_descriptor(Setting::D, node, 1, {k});
  auto c = transport(d, Setting::C);
  REQUIRE(c.generators.size() == 1);
  auto mm = std::get<ModulePres>(c.generators[0]);
  CHECK(num_generators(mm) == 2);
  CHECK(nonfree_locus(mm) == q_locus(k));
  CHECK(locus(c).to_string() == "{m}");

  auto empty = transport(make_descriptor(Setting::C, node, 1, {}), Setting::D);
  CHECK(empty.generators.empty());
  CHECK(locus(empty).is_empty());

  auto rx = quotient(node, "px");
  auto e = make_descriptor(Setting::E, node, 1, {ComplexHandle::delta(rx)});
  auto back = transport(e, Setting::D);
  CHECK(generator_strings(back) == std::vector<std::string>{rx.to_string()});
  CHECK(locus(back).to_string() == "{m}");

  CHECK_THROWS_AS(transport(d, Setting::B), DomainError);
  CHECK_THROWS_AS(transport(d, Setting::D), DomainError);
}

TEST_CASE("verify_roundtrips: examples") {
  auto node = node_ring();
  auto k = ModulePres::residue_field(node);
  auto r = verify_roundtrips(node, 1, {{k}, {quotient(node, "px")}, {}});
  CHECK(r.pass);
  CHECK(r.json["subset_count"] == 2);
  CHECK(r.json["hypotheses"]["hold"] == true);

  auto ribbon = ribbon_ring();
  auto rr = verify_roundtrips(ribbon, 1, {{quotient(ribbon, "px")}, {ModulePres::residue_field(ribbon)}});
  CHECK(rr.pass);
  CHECK(rr.json["subset_count"] == 3);

  auto q = quad2_ring();
  auto rq = verify_roundtrips(q, 2, {});
  CHECK(rq.pass);
  CHECK(rq.json["subset_count"] == 1);

  // Case-1 semantics over a non-hypersurface: the flag is recorded but the
  // round trips still hold.
  auto rq1 = verify_roundtrips(q, 1, {});
  CHECK(rq1.pass);
  CHECK(rq1.json["hypotheses"]["hold"] == false);
}

TEST_CASE("diagram_check: examples") {
  auto node = node_ring();
  auto r = diagram_check(node, 1, {{ModulePres::residue_field(node)}, {quotient(node, "px")}, {}});
  CHECK(r.pass);
  for (const auto& f : r.json["fixtures"]) {
    std::string expected = f["fixture"] == "{}" ? "{}" : "{m}";
    CHECK(f["locus"] == expected);
    for (const auto& [from, row] : f["paths"].items())
      for (const auto& [to, l] : row.items()) CHECK(l == expected);
  }

  auto ribbon = ribbon_ring();
  auto rr = diagram_check(ribbon, 1, {{quotient(ribbon, "px")}});
  CHECK(rr.pass);
  CHECK(rr.json["fixtures"][0]["locus"] == "{px}");
}

TEST_CASE("classify properties: locus inside Sing, closure moves, monotone membership") {
  std::mt19937 rng(20260);
  for (const auto& name : catalog_names()) {
    const auto& c = load_catalog(name);
    const auto& ring = c.ring;
    auto sing = ring->singular_locus();
    std::vector<ModulePres> mods;
    for (const auto& [n, m] : c.samples) mods.push_back(m);
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<Object> gens;
      std::vector<ModulePres> chosen;
      for (const auto& m : mods)
        if (rng() % 3 == 0) {
          gens.emplace_back(m);
          chosen.push_back(m);
        }
      auto t = make_descriptor(Setting::D, ring, 1, gens);
      auto l = locus(t);
      CHECK(sing.contains_subset(l));

      // Closure moves: syzygies, sums and catalog extensions of generators.
      auto moved = gens;
      for (const auto& m : chosen) moved.emplace_back(syzygy(m, 1));
      if (chosen.size() >= 2) moved.emplace_back(direct_sum(chosen[0], chosen[1]));
      for (const auto& s : c.sequences) {
        bool sub_in = std::any_of(chosen.begin(), chosen.end(), [&](const ModulePres& m) { return m.to_string() == c.sample(s.sub).to_string(); });
        bool quot_in = std::any_of(chosen.begin(), chosen.end(), [&](const ModulePres& m) { return m.to_string() == c.sample(s.quot).to_string(); });
        if (sub_in && quot_in) moved.emplace_back(c.sample(s.mid));
      }
      CHECK(locus(make_descriptor(Setting::D, ring, 1, moved)) == l);

      if (!hypotheses_failure(ring, 1).empty()) continue;
      for (const auto& g : chosen) CHECK(membership(t, g).verdict == Verdict::in);
      auto bigger = gens;
      bigger.emplace_back(mods[rng() % mods.size()]);
      auto tb = make_descriptor(Setting::D, ring, 1, bigger);
      for (const auto& m : mods)
        if (membership(t, m).verdict == Verdict::in) CHECK(membership(tb, m).verdict == Verdict::in);
    }
  }
}

TEST_CASE("transport preserves loci on catalog fixtures") {
  for (const auto& name : {"NODE", "RIBBON", "DUALNUM", "CUSP", "REGULAR1"}) {
    const auto& c = load_catalog(name);
    std::vector<std::vector<ModulePres>> fixtures{{}};
    for (const auto& [n, m] : c.samples) fixtures.push_back({m});
    auto r = verify_roundtrips(c.ring, c.default_case, fixtures);
    CHECK_MESSAGE(r.pass, name);
  }
}
