// Command-line front end: catalog, ring, module, complex, classify, verify.
#include <CLI11.hpp>

#include <functional>
#include <iostream>

#include "thick/catalog.hpp"
#include "thick/classify.hpp"
#include "thick/complex.hpp"
#include "thick/error.hpp"
#include "thick/io.hpp"
#include "thick/verify.hpp"

using namespace thick;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kResource = 3 };

struct Result {
  Json json;
  bool ok = true;
};

struct Args {
  std::string format = "text";
  std::uint64_t seed = VerifyOptions{}.seed;
  std::size_t spair_budget = 0;
  std::string ring;
  std::string module;
  std::string ref;
  std::size_t n = 1;
  std::size_t steps = 4;
  int case_number = 0;
  std::string to;
  std::string object;
  std::vector<std::string> fixtures;
  int criterion = 0;
};

// --- rendering ---------------------------------------------------------

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

bool all_scalars(const Json& j) {
  return std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
}

bool is_matrix(const Json& j) {
  return j.is_array() && !j.empty() &&
         std::all_of(j.begin(), j.end(), [](const Json& r) { return r.is_array() && all_scalars(r); });
}

std::string inline_text(const Json& j) {
  std::string s = "[";
  if (is_matrix(j)) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) s += "; ";
      for (std::size_t k = 0; k < j[i].size(); ++k) s += (k ? ", " : "") + scalar_text(j[i][k]);
    }
  } else {
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + scalar_text(j[i]);
  }
  return s + "]";
}

void render(std::ostream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_primitive()) {
        out << pad << k << ": " << scalar_text(v) << "\n";
      } else if (v.is_array() && (all_scalars(v) || is_matrix(v))) {
        out << pad << k << ": " << inline_text(v) << "\n";
      } else {
        out << pad << k << ":\n";
        render(out, v, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (e.is_primitive()) {
        out << pad << "- " << scalar_text(e) << "\n";
      } else if (is_matrix(e) || (e.is_array() && all_scalars(e))) {
        out << pad << "- " << inline_text(e) << "\n";
      } else {
        out << pad << "-\n";
        render(out, e, indent + 2);
      }
    }
  } else {
    out << pad << scalar_text(j) << "\n";
  }
}

// --- inputs ------------------------------------------------------------

Json inline_or_file(const std::string& ref) {
  if (!ref.empty() && ref.front() == '{') {
    try {
      return Json::parse(ref);
    } catch (const Json::parse_error& e) {
      throw ParseError(std::string("inline JSON: ") + e.what(), e.byte);
    }
  }
  return read_json_file(ref);
}

RingRef ring_context(const Args& a) { return a.ring.empty() ? nullptr : resolve_ring(a.ring); }

ModulePres module_arg(const Args& a) {
  const std::string& ref = a.module.empty() ? a.ref : a.module;
  if (ref.empty()) throw ParseError("a module reference is required (--module or positional)", 0);
  auto ctx = ring_context(a);
  if (!ref.empty() && ref.front() == '{') return module_from_json(inline_or_file(ref), ctx);
  auto m = resolve_module(ref, ctx);
  if (ctx && m.ring() != ctx) throw DomainError("module " + ref + " does not live over " + a.ring);
  return m;
}

ComplexHandle complex_ref(const std::string& ref, const RingRef& ctx) {
  if (ref.rfind("catalog:", 0) == 0) return ComplexHandle::delta(resolve_module(ref, ctx));
  return complex_from_json(inline_or_file(ref), ctx);
}

ThickDescriptor descriptor_arg(const Args& a) {
  if (a.ref.empty()) throw ParseError("a descriptor (file or inline JSON) is required", 0);
  return descriptor_from_json(inline_or_file(a.ref), ring_context(a));
}

struct RingWithDefaults {
  RingRef ring;
  int case_number = 1;
  std::vector<std::vector<ModulePres>> fixtures;
};

// Ring plus case and fixtures; catalog rings default to their case and samples.
RingWithDefaults classify_inputs(const Args& a) {
  if (a.ring.empty()) throw ParseError("--ring is required", 0);
  RingWithDefaults out;
  out.ring = resolve_ring(a.ring);
  out.fixtures.push_back({});
  if (a.ring.rfind("catalog:", 0) == 0) {
    const auto& c = load_catalog(a.ring.substr(8, a.ring.find('/', 8) - 8));
    out.case_number = c.default_case;
    if (a.fixtures.empty())
      for (const auto& [n, m] : c.samples) out.fixtures.push_back({m});
  }
  if (a.case_number) out.case_number = a.case_number;
  for (const auto& f : a.fixtures) {
    std::vector<ModulePres> g;
    std::size_t start = 0;
    while (start <= f.size()) {
      auto end = f.find(',', start);
      auto part = f.substr(start, end == std::string::npos ? std::string::npos : end - start);
      if (!part.empty()) g.push_back(resolve_module(part, out.ring));
      if (end == std::string::npos) break;
      start = end + 1;
    }
    out.fixtures.push_back(std::move(g));
  }
  return out;
}

// --- commands ----------------------------------------------------------

Json ring_info(const RingRef& r) {
  Json primes = Json::array();
  for (const auto& p : r->primes()) {
    Json gens = Json::array();
    for (const auto& g : p.gens.generators()) gens.push_back(g.to_string());
    primes.push_back(Json{{"name", p.name}, {"gens", gens}, {"certified", p.certified}});
  }
  Json rel = Json::array();
  for (const auto& g : r->minimal_relations()) rel.push_back(g.to_string());
  const auto& f = r->flags();
  return Json{{"name", r->name()},
              {"field", r->base()->field().to_string()},
              {"vars", r->base()->vars()},
              {"relations", rel},
              {"dim", r->dim()},
              {"flags",
               {{"regular", f.is_regular},
                {"hypersurface", f.is_hypersurface},
                {"gorenstein", f.is_gorenstein},
                {"lci_punctured", f.lci_punctured}}},
              {"primes", primes},
              {"sing", to_json(r->singular_locus())},
              {"notes", r->notes()}};
}

Json locus_json(const SpecSubset& s) {
  Json j = to_json(s);
  j["display"] = s.to_string();
  return j;
}

Result module_pd(const Args& a) { return {Json{{"pd", pd_finite(module_arg(a)).to_string()}}}; }

Result module_syzygy(const Args& a) {
  auto s = syzygy(module_arg(a), a.n);
  return {Json{{"n", a.n}, {"generators", num_generators(s)}, {"matrix", matrix_to_json(s.matrix())}}};
}

Result module_resolve(const Args& a) {
  auto res = resolution(module_arg(a), a.steps);
  Json diffs = Json::array();
  for (const auto& d : res.differentials) diffs.push_back(matrix_to_json(d));
  return {Json{{"steps", a.steps}, {"betti", res.betti}, {"differentials", diffs}}};
}

Result module_locus(const Args& a) {
  auto m = module_arg(a);
  Json j{{"nonfree_locus", locus_json(nonfree_locus(m))}, {"mcm", is_mcm(m)}};
  if (m.ring()->flags().is_gorenstein)
    j["q_locus"] = locus_json(q_locus(m));
  else
    j["q_locus"] = nullptr;
  return {j};
}

Result module_fitting(const Args& a) {
  Json chain = Json::array();
  for (const auto& i : fitting_chain(module_arg(a))) chain.push_back(i.to_string());
  return {Json{{"fitting", chain}}};
}

ComplexHandle complex_arg(const Args& a) {
  if (a.ref.empty()) throw ParseError("a complex reference is required", 0);
  return complex_ref(a.ref, ring_context(a));
}

Result complex_locus(const Args& a) { return {Json{{"w_locus", locus_json(w_locus(complex_arg(a)))}}}; }

Result complex_stabilize(const Args& a) {
  auto x = complex_arg(a);
  auto s = stabilize(x);
  return {Json{{"zero", is_zero_module(s)},
               {"matrix", matrix_to_json(s.matrix())},
               {"nonfree_locus", locus_json(nonfree_locus(s))},
               {"w_locus", locus_json(w_locus(x))}}};
}

Result complex_sup(const Args& a) {
  auto s = sup(complex_arg(a));
  return {Json{{"sup", s ? Json(*s) : Json(nullptr)}}};
}

Result classify_locus(const Args& a) {
  auto t = descriptor_arg(a);
  return {Json{{"setting", setting_name(t.setting)},
               {"case", t.case_number},
               {"ring", t.ring->name()},
               {"locus", locus_json(locus(t))},
               {"notes", t.notes}}};
}

Result classify_member(const Args& a) {
  auto t = descriptor_arg(a);
  if (a.object.empty()) throw ParseError("--object is required", 0);
  Object obj = t.setting == Setting::E ? Object(complex_ref(a.object, t.ring))
                                       : Object(a.object.front() == '{' ? module_from_json(inline_or_file(a.object), t.ring)
                                                                        : resolve_module(a.object, t.ring));
  auto m = membership(t, obj);
  return {Json{{"verdict", verdict_name(m.verdict)}, {"reason", m.reason}}};
}

Result classify_transport(const Args& a) {
  auto t = descriptor_arg(a);
  if (a.to.empty()) throw ParseError("--to is required", 0);
  auto moved = transport(t, parse_setting(a.to));
  auto before = locus(t), after = locus(moved);
  Json j = descriptor_to_json(moved);
  j["locus_before"] = before.to_string();
  j["locus_after"] = after.to_string();
  j["preserved"] = before == after;
  return {j, before == after};
}

Result classify_roundtrip(const Args& a) {
  auto in = classify_inputs(a);
  auto rep = verify_roundtrips(in.ring, in.case_number, in.fixtures);
  auto n = rep.json["subset_count"].get<std::size_t>();
  rep.json["summary"] = std::to_string(n) + " subsets verified" + (rep.pass ? "" : ", FAILED");
  return {rep.json, rep.pass};
}

Result classify_diagram(const Args& a) {
  auto in = classify_inputs(a);
  auto rep = diagram_check(in.ring, in.case_number, in.fixtures);
  rep.json["summary"] = std::to_string(in.fixtures.size()) + " fixtures checked" + (rep.pass ? "" : ", FAILED");
  return {rep.json, rep.pass};
}

Result verify_all(const Args& a) {
  VerifyOptions o;
  o.seed = a.seed;
  if (!a.ring.empty()) {
    auto name = a.ring.rfind("catalog:", 0) == 0 ? a.ring.substr(8) : a.ring;
    auto names = catalog_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
      throw DomainError("verify --ring takes a catalog ring name, got '" + a.ring + "'");
    o.ring = name;
  }
  Json out = Json::array();
  bool ok = true;
  for (int id = 1; id <= kCriteria; ++id) {
    if (a.criterion && a.criterion != id) continue;
    auto r = run_criterion(id, o);
    ok = ok && r.pass;
    out.push_back(to_json(r));
  }
  return {Json{{"seed", a.seed}, {"criteria", out}, {"pass", ok}}, ok};
}

Result catalog_list(const Args&) {
  Json out = Json::array();
  for (const auto& n : catalog_names()) {
    const auto& c = load_catalog(n);
    Json samples = Json::array();
    for (const auto& [s, m] : c.samples) samples.push_back(s);
    out.push_back(Json{{"name", n}, {"dim", c.ring->dim()}, {"case", c.default_case}, {"samples", samples},
                       {"indecomposables", c.indecomposables.has_value()}});
  }
  return {Json{{"rings", out}}};
}

void print_error(const Args& a, const std::string& kind, const std::string& msg, std::optional<std::size_t> pos = {}) {
  if (a.format == "json") {
    Json e{{"kind", kind}, {"message", msg}};
    if (pos) e["position"] = *pos;
    std::cout << Json{{"error", e}}.dump(2) << "\n";
  } else {
    std::cerr << "error (" << kind << "): " << msg << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thick subcategories over graded-local rings: loci, stabilization, classification checks"};
  app.require_subcommand(1);
  Args a;
  app.add_option("--format", a.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", a.seed, "Seed for randomized checks");
  app.add_option("--spair-budget", a.spair_budget, "Cap on S-pairs per Groebner computation");

  std::function<Result(const Args&)> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, auto fn) {
    auto* sub = parent->add_subcommand(name, help);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  auto module_opts = [&](CLI::App* s) {
    s->add_option("ref", a.ref, "Module reference: catalog:NAME/sample, file, or inline JSON");
    s->add_option("--module", a.module, "Module reference");
    s->add_option("--ring", a.ring, "Ring reference: catalog:NAME or file");
  };

  auto* cat = app.add_subcommand("catalog", "Built-in rings");
  cat->require_subcommand(1);
  leaf(cat, "list", "List catalog rings", catalog_list);

  auto* ring = app.add_subcommand("ring", "Ring presentations");
  ring->require_subcommand(1);
  leaf(ring, "info", "Show flags, primes and singular locus",
       [](const Args& x) {
         Json j = ring_info(resolve_ring(x.ref));
         if (x.ref.rfind("catalog:", 0) == 0) j["catalog_notes"] = load_catalog(x.ref.substr(8)).notes;
         return Result{j};
       })
      ->add_option("ref", a.ref, "Ring reference")
      ->required();

  auto* mod = app.add_subcommand("module", "Module computations");
  mod->require_subcommand(1);
  module_opts(leaf(mod, "pd", "Finite or infinite projective dimension", module_pd));
  auto* syz = leaf(mod, "syzygy", "n-th syzygy module", module_syzygy);
  module_opts(syz);
  syz->add_option("--n", a.n, "Syzygy index");
  auto* res = leaf(mod, "resolve", "Minimal free resolution prefix", module_resolve);
  module_opts(res);
  res->add_option("--steps", a.steps, "Number of differentials");
  module_opts(leaf(mod, "locus", "Nonfree locus and Q-locus", module_locus));
  module_opts(leaf(mod, "fitting", "Fitting ideals", module_fitting));

  auto* cx = app.add_subcommand("complex", "Complex computations");
  cx->require_subcommand(1);
  auto complex_opts = [&](CLI::App* s) {
    s->add_option("ref", a.ref, "Complex: JSON file, inline JSON, or catalog:NAME/sample for Delta M")->required();
    s->add_option("--ring", a.ring, "Ring reference");
  };
  complex_opts(leaf(cx, "locus", "W-locus", complex_locus));
  complex_opts(leaf(cx, "stabilize", "Stabilization to an MCM module", complex_stabilize));
  complex_opts(leaf(cx, "sup", "Highest nonzero homology degree", complex_sup));

  auto* cl = app.add_subcommand("classify", "Thick-subcategory descriptors");
  cl->require_subcommand(1);
  auto desc_opts = [&](CLI::App* s) {
    s->add_option("descriptor", a.ref, "Descriptor: JSON file or inline JSON")->required();
    s->add_option("--ring", a.ring, "Ring used when the descriptor has none");
  };
  desc_opts(leaf(cl, "locus", "Locus of a descriptor", classify_locus));
  auto* mem = leaf(cl, "member", "Membership of an object", classify_member);
  desc_opts(mem);
  mem->add_option("--object", a.object, "Object reference")->required();
  auto* tr = leaf(cl, "transport", "Move a descriptor to an adjacent setting", classify_transport);
  desc_opts(tr);
  tr->add_option("--to", a.to, "Target setting (B, C, D, E)")->required();
  auto ring_case = [&](CLI::App* s) {
    s->add_option("--ring", a.ring, "Ring reference")->required();
    s->add_option("--case", a.case_number, "Classification case (1 or 2)")->check(CLI::Range(1, 2));
    s->add_option("--fixture", a.fixtures, "Comma-separated module references forming one generator set");
  };
  ring_case(leaf(cl, "roundtrip", "Round trips over every closed subset of Sing", classify_roundtrip));
  ring_case(leaf(cl, "diagram", "Loci along every path of the diagram", classify_diagram));

  auto* ver = app.add_subcommand("verify", "Acceptance suite");
  ver->require_subcommand(1);
  auto* all = leaf(ver, "all", "Run every acceptance criterion", verify_all);
  all->add_option("--ring", a.ring, "Restrict to one catalog ring");
  all->add_option("--criterion", a.criterion, "Run a single criterion")->check(CLI::Range(1, kCriteria));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (a.spair_budget) set_default_spair_budget(a.spair_budget);

  try {
    auto r = action(a);
    if (a.format == "json")
      std::cout << r.json.dump(2) << "\n";
    else
      render(std::cout, r.json, 0);
    return r.ok ? kOk : kCheckFailed;
  } catch (const ResourceError& e) {
    print_error(a, "resource", e.what());
    return kResource;
  } catch (const ParseError& e) {
    print_error(a, "parse", e.what(), e.position());
    return kUsage;
  } catch (const DomainError& e) {
    print_error(a, "domain", e.what());
    return kUsage;
  } catch (const Error& e) {
    print_error(a, "error", e.what());
    return kCheckFailed;
  }
}
