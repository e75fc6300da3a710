#include "thick/classify.hpp"

#include <algorithm>

#include "thick/error.hpp"

namespace thick {

namespace {

constexpr Setting kSettings[] = {Setting::B, Setting::C, Setting::D, Setting::E};

int index_of(Setting s) { return static_cast<int>(s); }

bool is_module_setting(Setting s) { return s != Setting::E; }

const ModulePres& as_module(const Object& o) {
  if (auto m = std::get_if<ModulePres>(&o)) return *m;
  throw DomainError("expected a module, got a complex");
}

const ComplexHandle& as_complex(const Object& o) {
  if (auto c = std::get_if<ComplexHandle>(&o)) return *c;
  throw DomainError("expected a complex, got a module");
}

const RingRef& ring_of(const Object& o) {
  return std::visit([](const auto& x) -> const RingRef& { return x.ring(); }, o);
}

void check_kind(Setting s, const Object& o) {
  if (is_module_setting(s))
    as_module(o);
  else
    as_complex(o);
}

std::size_t dim_of(const RingRef& r) { return static_cast<std::size_t>(r->dim()); }

}  // namespace

std::string setting_name(Setting s) {
  switch (s) {
    case Setting::B: return "B";
    case Setting::C: return "C";
    case Setting::D: return "D";
    case Setting::E: return "E";
  }
  return "?";
}

Setting parse_setting(const std::string& s) {
  if (s == "B" || s == "stCM") return Setting::B;
  if (s == "C" || s == "CM") return Setting::C;
  if (s == "D" || s == "MOD") return Setting::D;
  if (s == "E" || s == "DER") return Setting::E;
  throw ParseError("unknown setting '" + s + "'", 0);
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::in: return "in";
    case Verdict::out: return "out";
    case Verdict::not_decidable: return "not_decidable";
  }
  return "?";
}

std::string hypotheses_failure(const RingRef& ring, int case_number) {
  const auto& f = ring->flags();
  if (case_number == 1) return f.is_hypersurface ? "" : "case 1 requires a hypersurface ring";
  if (case_number == 2) {
    if (!f.is_gorenstein) return "case 2 requires a Gorenstein ring";
    if (!ring->is_singular()) return "case 2 requires a singular ring";
    if (!f.lci_punctured) return "case 2 requires a local hypersurface on the punctured spectrum";
    return "";
  }
  return "case must be 1 or 2";
}

std::vector<Object> base_objects(Setting s, const RingRef& ring, int case_number) {
  std::vector<Object> out;
  auto r = ModulePres::free(ring, 1);
  if (s == Setting::C || s == Setting::D) out.emplace_back(r);
  if (s == Setting::E) out.emplace_back(ComplexHandle::delta(r));
  if (case_number == 2) {
    auto k = ModulePres::residue_field(ring);
    switch (s) {
      case Setting::B: out.emplace_back(strip_free_summands(syzygy(k, dim_of(ring)))); break;
      case Setting::C: out.emplace_back(syzygy(k, dim_of(ring))); break;
      case Setting::D: out.emplace_back(k); break;
      case Setting::E: out.emplace_back(ComplexHandle::delta(k)); break;
    }
  }
  return out;
}

ThickDescriptor make_descriptor(Setting s, RingRef ring, int case_number, std::vector<Object> generators) {
  if (case_number != 1 && case_number != 2) throw DomainError("case must be 1 or 2");
  ThickDescriptor t{s, std::move(ring), case_number, std::move(generators), {}};
  for (const auto& g : t.generators) {
    check_kind(s, g);
    if (ring_of(g) != t.ring) throw DomainError("generator lives over a different ring");
    if ((s == Setting::B || s == Setting::C) && !is_zero_module(as_module(g)) && !is_mcm(as_module(g)))
      throw DomainError("setting " + setting_name(s) + " generators must be maximal Cohen-Macaulay");
  }
  if (case_number == 2)
    t.notes.push_back(s == Setting::B || s == Setting::C ? "case 2: base object Omega^d k adjoined"
                                                         : "case 2: base object k adjoined");
  return t;
}

ThickDescriptor descriptor_from_json(const Json& j, const RingRef& ctx) {
  RingRef ring = ctx;
  if (j.contains("ring")) {
    const auto& r = j.at("ring");
    ring = r.is_string() ? resolve_ring(r.get<std::string>()) : ring_from_json(r);
  }
  if (!ring) throw ParseError("descriptor has no ring", 0);
  if (!j.contains("setting")) throw ParseError("descriptor: missing key 'setting'", 0);
  Setting s = parse_setting(j.at("setting").get<std::string>());
  std::vector<Object> gens;
  for (const auto& g : j.value("generators", Json::array())) {
    if (s == Setting::E)
      gens.emplace_back(complex_from_json(g, ring));
    else
      gens.emplace_back(module_from_json(g, ring));
  }
  return make_descriptor(s, ring, j.value("case", 1), std::move(gens));
}

SpecSubset object_locus(Setting s, const Object& obj) {
  switch (s) {
    case Setting::B:
    case Setting::C: return nonfree_locus(as_module(obj));
    case Setting::D: return q_locus(as_module(obj));
    case Setting::E: return w_locus(as_complex(obj));
  }
  throw DomainError("unknown setting");
}

SpecSubset locus(const ThickDescriptor& t) {
  SpecSubset out = SpecSubset::empty(t.ring);
  for (const auto& g : t.generators) out = out.unite(object_locus(t.setting, g));
  for (const auto& b : base_objects(t.setting, t.ring, t.case_number)) out = out.unite(object_locus(t.setting, b));
  return out;
}

ThickDescriptor inverse_descriptor(Setting s, const RingRef& ring, const SpecSubset& phi, int case_number) {
  if (phi.ring() != ring) throw DomainError("subset belongs to a different ring");
  if (!ring->singular_locus().contains_subset(phi)) throw DomainError("subset is not contained in Sing(R)");
  if (case_number == 2 && phi.is_empty()) throw DomainError("case 2 needs a nonempty subset");
  std::vector<Object> gens;
  for (auto p : phi.basis()) {
    auto rp = ModulePres::quotient_by_prime(ring, p);
    switch (s) {
      case Setting::B: gens.emplace_back(strip_free_summands(syzygy(rp, dim_of(ring)))); break;
      case Setting::C: gens.emplace_back(syzygy(rp, dim_of(ring))); break;
      case Setting::D: gens.emplace_back(rp); break;
      case Setting::E: gens.emplace_back(ComplexHandle::delta(rp)); break;
    }
  }
  return make_descriptor(s, ring, case_number, std::move(gens));
}

Membership membership(const ThickDescriptor& t, const Object& obj) {
  check_kind(t.setting, obj);
  if (ring_of(obj) != t.ring) throw DomainError("object lives over a different ring");
  auto why = hypotheses_failure(t.ring, t.case_number);
  if (!why.empty()) return {Verdict::not_decidable, why};
  if (t.setting == Setting::B || t.setting == Setting::C) {
    const auto& m = as_module(obj);
    if (!is_zero_module(m) && !is_mcm(m)) return {Verdict::out, "not maximal Cohen-Macaulay"};
  }
  auto lo = object_locus(t.setting, obj);
  auto lt = locus(t);
  if (lt.contains_subset(lo)) return {Verdict::in, "locus " + lo.to_string() + " inside " + lt.to_string()};
  return {Verdict::out, "locus " + lo.to_string() + " not inside " + lt.to_string()};
}

ThickDescriptor transport(const ThickDescriptor& t, Setting to) {
  if (std::abs(index_of(t.setting) - index_of(to)) != 1)
    throw DomainError("settings " + setting_name(t.setting) + " and " + setting_name(to) + " are not adjacent");
  std::vector<Object> gens;
  for (const auto& g : t.generators) {
    if (t.setting == Setting::B && to == Setting::C) {
      gens.push_back(g);
    } else if (t.setting == Setting::C && to == Setting::B) {
      auto s = strip_free_summands(as_module(g));
      if (!is_zero_module(s)) gens.emplace_back(s);
    } else if (t.setting == Setting::C && to == Setting::D) {
      gens.push_back(g);
    } else if (t.setting == Setting::D && to == Setting::C) {
      auto s = syzygy(as_module(g), dim_of(t.ring));
      if (!is_zero_module(s)) gens.emplace_back(s);
    } else if (t.setting == Setting::D && to == Setting::E) {
      gens.emplace_back(ComplexHandle::delta(as_module(g)));
    } else {
      auto s = stabilize(as_complex(g));
      if (!is_zero_module(s)) gens.emplace_back(s);
    }
  }
  return make_descriptor(to, t.ring, t.case_number, std::move(gens));
}

Json descriptor_to_json(const ThickDescriptor& t) {
  Json gens = Json::array();
  for (const auto& g : t.generators) {
    if (auto m = std::get_if<ModulePres>(&g))
      gens.push_back(Json{{"matrix", matrix_to_json(m->matrix())}});
    else
      gens.push_back(Json{{"kind", "complex"}});
  }
  return Json{{"setting", setting_name(t.setting)},
              {"case", t.case_number},
              {"ring", t.ring->name()},
              {"generators", gens},
              {"notes", t.notes}};
}

namespace {

// Transports along the chain B - C - D - E to `to`.
ThickDescriptor move_to(ThickDescriptor t, Setting to) {
  while (t.setting != to) {
    int step = index_of(to) > index_of(t.setting) ? 1 : -1;
    t = transport(t, static_cast<Setting>(index_of(t.setting) + step));
  }
  return t;
}

ThickDescriptor module_descriptor(const RingRef& ring, int case_number, const std::vector<ModulePres>& g) {
  return make_descriptor(Setting::D, ring, case_number, std::vector<Object>(g.begin(), g.end()));
}

std::string fixture_name(const std::vector<ModulePres>& g) {
  std::string s;
  for (const auto& m : g) s += (s.empty() ? "" : ", ") + m.to_string();
  return "{" + s + "}";
}

Json hypotheses_json(const RingRef& ring, int case_number) {
  auto why = hypotheses_failure(ring, case_number);
  return Json{{"hold", why.empty()}, {"reason", why}};
}

}  // namespace

ClassificationReport verify_roundtrips(const RingRef& ring, int case_number,
                                       const std::vector<std::vector<ModulePres>>& fixtures) {
  ClassificationReport rep;
  auto subsets = enumerate_spec_closed_in(ring, ring->singular_locus());
  if (case_number == 2) subsets.erase(subsets.begin());
  Json rows = Json::array();
  for (const auto& phi : subsets) {
    Json per = Json::object();
    for (auto s : kSettings) {
      auto t = inverse_descriptor(s, ring, phi, case_number);
      auto l = locus(t);
      bool ok = l == phi;
      rep.pass = rep.pass && ok;
      per[setting_name(s)] = Json{{"generators", t.generators.size()}, {"locus", l.to_string()}, {"pass", ok}};
    }
    rows.push_back(Json{{"phi", phi.to_string()}, {"settings", per}});
  }

  // Each fixture is walked through every adjacent transport in both directions.
  Json walks = Json::array();
  for (const auto& g : fixtures) {
    auto start = module_descriptor(ring, case_number, g);
    auto expected = locus(start);
    const std::vector<std::pair<Setting, std::vector<Setting>>> paths = {
        {Setting::D, {Setting::C, Setting::B, Setting::C, Setting::D, Setting::E, Setting::D}},
        {Setting::E, {Setting::D, Setting::C, Setting::B}},
        {Setting::B, {Setting::C, Setting::D, Setting::E}},
    };
    Json steps = Json::array();
    bool ok_all = true;
    for (const auto& [from, path] : paths) {
      auto t = move_to(start, from);
      std::string trail = setting_name(from);
      for (auto s : path) {
        t = transport(t, s);
        trail += "->" + setting_name(s);
        bool ok = locus(t) == expected;
        ok_all = ok_all && ok;
        steps.push_back(Json{{"path", trail}, {"locus", locus(t).to_string()}, {"pass", ok}});
      }
    }
    rep.pass = rep.pass && ok_all;
    walks.push_back(Json{{"fixture", fixture_name(g)}, {"locus", expected.to_string()}, {"steps", steps}, {"pass", ok_all}});
  }
  rep.json = Json{{"ring", ring->name()},
                  {"case", case_number},
                  {"hypotheses", hypotheses_json(ring, case_number)},
                  {"subset_count", subsets.size()},
                  {"subsets", rows},
                  {"transports", walks},
                  {"pass", rep.pass}};
  return rep;
}

ClassificationReport diagram_check(const RingRef& ring, int case_number,
                                   const std::vector<std::vector<ModulePres>>& fixtures) {
  ClassificationReport rep;
  Json out = Json::array();
  std::vector<ModulePres> probes;
  for (const auto& g : fixtures) probes.insert(probes.end(), g.begin(), g.end());
  for (const auto& g : fixtures) {
    auto d = module_descriptor(ring, case_number, g);
    auto expected = locus(d);
    // Embed the fixture in every setting, then read the locus after moving
    // to every setting: 16 paths into the subsets of Sing.
    Json matrix = Json::object();
    bool ok_all = true;
    for (auto from : kSettings) {
      auto start = move_to(d, from);
      Json row = Json::object();
      for (auto to : kSettings) {
        auto l = locus(move_to(start, to));
        bool ok = l == expected;
        ok_all = ok_all && ok;
        row[setting_name(to)] = l.to_string();
      }
      matrix[setting_name(from)] = row;
    }
    // Membership spot checks: restricting W^-1 to modules gives Q^-1, and
    // restricting Q^-1 to CM gives V^-1.
    auto e = move_to(d, Setting::E);
    auto c = move_to(d, Setting::C);
    Json spots = Json::array();
    for (const auto& m : probes) {
      auto md = membership(d, m);
      auto me = membership(e, ComplexHandle::delta(m));
      bool ok = md.verdict == me.verdict;
      Json spot{{"object", m.to_string()}, {"D", verdict_name(md.verdict)}, {"E", verdict_name(me.verdict)}};
      if (is_mcm(m)) {
        auto mc = membership(c, m);
        spot["C"] = verdict_name(mc.verdict);
        ok = ok && mc.verdict == md.verdict;
      }
      spot["pass"] = ok;
      ok_all = ok_all && ok;
      spots.push_back(spot);
    }
    rep.pass = rep.pass && ok_all;
    out.push_back(Json{{"fixture", fixture_name(g)},
                       {"locus", expected.to_string()},
                       {"paths", matrix},
                       {"membership", spots},
                       {"pass", ok_all}});
  }
  rep.json = Json{{"ring", ring->name()},
                  {"case", case_number},
                  {"hypotheses", hypotheses_json(ring, case_number)},
                  {"fixtures", out},
                  {"pass", rep.pass}};
  return rep;
}

}  // namespace thick
