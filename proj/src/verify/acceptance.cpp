#include <algorithm>
#include <sstream>

#include "thick/catalog.hpp"
#include "thick/classify.hpp"
#include "thick/complex.hpp"
#include "thick/error.hpp"
#include "thick/verify.hpp"

namespace thick {

namespace {

struct Recorder {
  CriterionResult& r;
  void expect(bool ok, const std::string& what) {
    ++r.checks;
    if (!ok) {
      r.pass = false;
      r.failures.push_back(what);
    }
  }
  void note(const std::string& s) { r.notes.push_back(s); }
};

bool in_scope(const VerifyOptions& o, const std::string& name) { return !o.ring || *o.ring == name; }

std::vector<std::string> rings_in_scope(const VerifyOptions& o) {
  std::vector<std::string> out;
  for (const auto& n : catalog_names())
    if (in_scope(o, n)) out.push_back(n);
  return out;
}

std::string label(const std::string& ring, const std::string& sample) { return ring + "/" + sample; }

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream s;
  s << "(";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ")";
  return s.str();
}

// Same module, presented with an extra trivial summand and redundant columns.
ModulePres padded(const ModulePres& m, std::mt19937_64& rng) {
  const auto& base = m.ring()->base();
  Matrix a = block_diagonal(m.matrix(), Matrix::identity(base, 1));
  std::vector<Column> extra;
  if (m.matrix().cols() > 0) {
    auto j = rng() % m.matrix().cols();
    auto col = a.column(j);
    auto v = Poly::variable(base, rng() % base->nvars());
    Column scaled, shifted;
    for (const auto& e : col) {
      scaled.push_back(e * Poly::constant(base, 2));
      shifted.push_back(e * v);
    }
    extra = {scaled, shifted};
  }
  return ModulePres(m.ring(), hconcat(a, Matrix::from_columns(base, a.rows(), extra)));
}

bool spec_closed(const SpecSubset& s) {
  const auto& r = s.ring();
  for (auto i : s.member_indices())
    for (std::size_t j = 0; j < r->primes().size(); ++j)
      if (r->prime_contained(i, j) && !s.contains_prime(j)) return false;
  return true;
}

std::vector<std::vector<ModulePres>> single_fixtures(const CatalogRing& c) {
  std::vector<std::vector<ModulePres>> out{{}};
  for (const auto& [n, m] : c.samples) out.push_back({m});
  return out;
}

void criterion1(Recorder& rec, const VerifyOptions& o) {
  std::mt19937_64 rng(o.seed);
  std::size_t members = 0, agree = 0;
  for (std::size_t t = 0; t < o.membership_instances; ++t) {
    auto inst = oracle::random_membership_instance(rng, 5);
    Ideal ideal(inst.f.ring(), inst.gens);
    bool engine = ideal.contains(inst.f);
    bool brute = oracle::bounded_membership(inst.f, inst.gens);
    members += brute;
    agree += engine == brute;
    rec.expect(engine == brute, "membership instance " + std::to_string(t) + ": engine " + std::to_string(engine) +
                                    ", linear solver " + std::to_string(brute) + " for " + inst.f.to_string());
    if (inst.constructed_member) rec.expect(brute, "constructed member rejected in instance " + std::to_string(t));
    auto why = oracle::check_groebner_basis(ideal);
    rec.expect(why.empty(), "instance " + std::to_string(t) + ": " + why);
  }
  rec.expect(members >= 10 && o.membership_instances - members >= 10,
             "membership instances are too one-sided to be informative");
  rec.note(std::to_string(agree) + "/" + std::to_string(o.membership_instances) + " membership instances agree (" +
           std::to_string(members) + " members)");

  std::size_t bases = 0;
  auto check = [&](const std::string& what, const std::string& why) {
    ++bases;
    rec.expect(why.empty(), what + ": " + why);
  };
  for (const auto& name : rings_in_scope(o)) {
    const auto& c = load_catalog(name);
    const auto& r = c.ring;
    check(name + " defining ideal", oracle::check_groebner_basis(r->defining()));
    check(name + " Jacobian ideal", oracle::check_groebner_basis(r->jacobian()));
    for (const auto& p : r->primes()) check(name + " prime " + p.name, oracle::check_groebner_basis(p.gens));
    for (const auto& [s, m] : c.samples) {
      const auto& fit = fitting_chain(m);
      for (std::size_t j = 0; j < fit.size(); ++j)
        check(label(name, s) + " Fitt_" + std::to_string(j), oracle::check_groebner_basis(fit[j]));
      auto syz = module_syzygies(m.matrix().columns(), m.matrix().rows(), r->defining());
      check(label(name, s) + " syzygy module", oracle::check_groebner_basis(syz));
    }
  }
  rec.note(std::to_string(bases) + " catalog Groebner bases checked by S-polynomial reduction");
}

void criterion2(Recorder& rec, const VerifyOptions& o) {
  std::mt19937_64 rng(o.seed + 2);
  for (const auto& name : rings_in_scope(o)) {
    const auto& c = load_catalog(name);
    const auto& rel = c.ring->defining();
    for (const auto& [s, m] : c.samples) {
      auto res = resolution(m, 6);
      const auto& d = res.differentials;
      rec.expect(d.size() == 6, label(name, s) + ": resolution has " + std::to_string(d.size()) + " differentials");
      for (std::size_t k = 0; k < d.size(); ++k) {
        rec.expect(entries_in_maximal_ideal(d[k]), label(name, s) + ": f_" + std::to_string(k + 1) + " is not minimal");
        if (k + 1 < d.size()) {
          rec.expect((d[k] * d[k + 1]).reduced(rel).is_zero(),
                     label(name, s) + ": f_" + std::to_string(k + 1) + " f_" + std::to_string(k + 2) + " != 0");
          bool exact = true;
          for (const auto& z : kernel_matrix(d[k], rel).columns()) exact = exact && in_column_span(z, d[k + 1], rel);
          rec.expect(exact, label(name, s) + ": not exact at F_" + std::to_string(k + 1));
        }
      }
      rec.expect(resolution(padded(m, rng), 4).betti == resolution(m, 4).betti,
                 label(name, s) + ": Betti numbers change under trivial padding");
    }
  }
  auto expect_betti = [&](const std::string& ring, std::size_t steps, std::vector<std::size_t> want) {
    if (!in_scope(o, ring)) return;
    auto got = resolution(load_catalog(ring).sample("k"), steps).betti;
    rec.expect(got == want, ring + ": betti(k) = " + join(got) + ", expected " + join(want));
    rec.note(ring + ": betti(k) = " + join(got));
  };
  expect_betti("NODE", 5, {1, 2, 2, 2, 2, 2});
  expect_betti("REGULAR1", 2, {1, 1, 0});
}

void criterion3(Recorder& rec, const VerifyOptions& o) {
  const std::vector<std::pair<std::string, std::string>> want = {
      {"REGULAR1", "finite(1)"}, {"DUALNUM", "infinite"}, {"NODE", "infinite"}, {"RIBBON", "infinite"}, {"QUAD2", "infinite"}};
  for (const auto& [ring, v] : want) {
    if (!in_scope(o, ring)) continue;
    auto got = pd_finite(load_catalog(ring).sample("k")).to_string();
    rec.expect(got == v, ring + ": pd(k) = " + got + ", expected " + v);
    rec.note(ring + ": pd(k) = " + got);
  }
  // Auslander-Buchsbaum on every sample of finite projective dimension.
  for (const auto& name : rings_in_scope(o)) {
    const auto& c = load_catalog(name);
    for (const auto& [s, m] : c.samples) {
      auto pd = pd_finite(m);
      if (!pd.finite || is_zero_module(m)) continue;
      auto di = depth_info(m);
      rec.expect(static_cast<int>(pd.value) + di.depth == c.ring->dim(),
                 label(name, s) + ": pd + depth != dim R");
    }
  }
}

void criterion4(Recorder& rec, const VerifyOptions& o) {
  std::mt19937_64 rng(o.seed + 4);
  for (const auto& name : rings_in_scope(o)) {
    const auto& c = load_catalog(name);
    const auto& r = c.ring;
    const auto d = static_cast<std::size_t>(r->dim());
    const auto& sing = r->singular_locus();
    for (const auto& [s, m] : c.samples) {
      const auto q = q_locus(m);
      const auto l = label(name, s);
      rec.expect(sing.contains_subset(q), l + ": Q(M) not inside Sing");
      rec.expect(spec_closed(q), l + ": Q(M) not specialization-closed");
      rec.expect(q == q_locus(syzygy(m, 1)), l + ": Q(M) != Q(Omega M)");
      rec.expect(q == nonfree_locus(syzygy(m, d)), l + ": Q(M) != V(Omega^d M)");
      if (is_mcm(m)) rec.expect(q == nonfree_locus(m), l + ": MCM but Q(M) != V(M)");
      for (std::size_t i = 0; i < r->primes().size(); ++i) {
        rec.expect(free_at(m, i) == oracle::localized_free(m, i),
                   l + ": freeness at " + r->primes()[i].name + " disagrees with the localization oracle");
        auto od = syzygy(m, d);
        rec.expect(free_at(od, i) == oracle::localized_free(od, i),
                   l + ": freeness of Omega^d M at " + r->primes()[i].name + " disagrees with the localization oracle");
      }
      auto pm = padded(m, rng);
      const auto& fa = fitting_chain(m);
      const auto& fb = fitting_chain(pm);
      bool same = fa.size() == fb.size();
      for (std::size_t j = 0; same && j < fa.size(); ++j) same = fa[j] == fb[j];
      rec.expect(same, l + ": Fitting ideals change under trivial padding");
    }
    for (std::size_t i = 0; i < c.samples.size(); ++i)
      for (std::size_t j = i; j < c.samples.size(); ++j) {
        const auto& [a, ma] = c.samples[i];
        const auto& [b, mb] = c.samples[j];
        rec.expect(q_locus(direct_sum(ma, mb)) == q_locus(ma).unite(q_locus(mb)),
                   name + ": Q(" + a + " + " + b + ") != Q(" + a + ") u Q(" + b + ")");
      }
    for (const auto& seq : c.sequences) {
      auto qa = q_locus(c.sample(seq.sub)), qb = q_locus(c.sample(seq.mid)), qc = q_locus(c.sample(seq.quot));
      const auto what = name + ": sequence " + seq.sub + " -> " + seq.mid + " -> " + seq.quot;
      rec.expect(qb.unite(qc).contains_subset(qa), what + ": two-of-three fails for the submodule");
      rec.expect(qa.unite(qc).contains_subset(qb), what + ": two-of-three fails for the middle term");
      rec.expect(qa.unite(qb).contains_subset(qc), what + ": two-of-three fails for the quotient");
    }
  }
}

void criterion5(Recorder& rec, const VerifyOptions& o) {
  for (const auto& name : rings_in_scope(o)) {
    const auto& r = load_catalog(name).ring;
    for (auto i : r->singular_locus().member_indices()) {
      auto q = q_locus(ModulePres::quotient_by_prime(r, i));
      auto v = SpecSubset::closure_of(r, {i});
      rec.expect(q == v, name + ": Q(R/" + r->primes()[i].name + ") = " + q.to_string() + ", expected " + v.to_string());
    }
  }
}

void criterion6(Recorder& rec, const VerifyOptions& o) {
  for (const auto& name : rings_in_scope(o)) {
    const auto& c = load_catalog(name);
    const auto& r = c.ring;
    const auto& base = r->base();
    std::vector<std::pair<std::string, ComplexHandle>> fixtures;
    for (const auto& [s, m] : c.samples) {
      auto dm = ComplexHandle::delta(m);
      rec.expect(w_locus(dm) == q_locus(m), label(name, s) + ": W(Delta M) != Q(M)");
      fixtures.emplace_back("Delta " + s, dm);
      fixtures.emplace_back("Sigma Delta " + s, ComplexHandle::shift(dm, 1));
      fixtures.emplace_back("Sigma^-1 Delta " + s, ComplexHandle::shift(dm, -1));
    }
    auto dr = ComplexHandle::delta(ModulePres::free(r, 1));
    std::vector<std::pair<std::string, ComplexHandle>> perfect{
        {"Delta R", dr},
        {"Sigma^2 Delta R^2", ComplexHandle::shift(ComplexHandle::delta(ModulePres::free(r, 2)), 2)},
        {"cone(x: R -> R)",
         ComplexHandle::cone(ComplexMap{dr, dr, {{0, Matrix::from_rows(base, {{Poly::variable(base, 0)}})}}})}};
    for (const auto& [n, x] : perfect) {
      rec.expect(is_zero_module(stabilize(x)), name + ": stabilize(" + n + ") != 0");
      rec.expect(w_locus(x).is_empty(), name + ": W(" + n + ") is not empty");
    }
    fixtures.insert(fixtures.end(), perfect.begin(), perfect.end());
    if (c.has_sample("Rx"))
      fixtures.emplace_back("cone(R -> R/(x))", ComplexHandle::cone(ComplexMap{
                                                    dr, ComplexHandle::delta(c.sample("Rx")), {{0, Matrix::identity(base, 1)}}}));
    for (const auto& [n, x] : fixtures) {
      auto st = stabilize(x);
      rec.expect(is_zero_module(st) || is_mcm(st), name + ": stabilize(" + n + ") is not MCM");
      rec.expect(nonfree_locus(st) == w_locus(x), name + ": V(stabilize(" + n + ")) != W(" + n + ")");
    }
  }
}

std::size_t expected_subsets(const std::string& ring) {
  if (ring == "NODE") return 2;
  if (ring == "RIBBON") return 3;
  if (ring == "QUAD2") return 1;
  return 0;  // no fixed expectation
}

void criterion7(Recorder& rec, const VerifyOptions& o) {
  for (const auto& name : rings_in_scope(o)) {
    const auto& c = load_catalog(name);
    auto rep = verify_roundtrips(c.ring, c.default_case, single_fixtures(c));
    std::size_t n = rep.json["subset_count"].get<std::size_t>();
    rec.expect(rep.pass, name + ": a round trip failed");
    if (auto want = expected_subsets(name))
      rec.expect(n == want, name + ": " + std::to_string(n) + " subsets, expected " + std::to_string(want));
    if (name == "WHITNEY3") rec.expect(n >= 6, name + ": only " + std::to_string(n) + " subsets");
    rec.note(name + " (case " + std::to_string(c.default_case) + "): " + std::to_string(n) + " subsets x 4 settings");
  }
}

void criterion8(Recorder& rec, const VerifyOptions& o) {
  for (const auto& name : {"NODE", "RIBBON"}) {
    if (!in_scope(o, name)) continue;
    const auto& c = load_catalog(name);
    auto fixtures = single_fixtures(c);
    fixtures.push_back({c.sample("k"), c.sample("Rx")});
    auto diagram = diagram_check(c.ring, c.default_case, fixtures);
    rec.expect(diagram.pass, std::string(name) + ": diagram paths disagree");
    auto rt = verify_roundtrips(c.ring, c.default_case, fixtures);
    for (const auto& w : rt.json["transports"])
      rec.expect(w["pass"].get<bool>(), std::string(name) + ": transport changed the locus of " + w["fixture"].get<std::string>());
    rec.note(std::string(name) + ": " + std::to_string(fixtures.size()) + " fixtures, 16 paths each");
  }
}

void criterion9(Recorder& rec, const VerifyOptions& o) {
  for (const auto& name : {"NODE", "DUALNUM", "CUSP"}) {
    if (!in_scope(o, name)) continue;
    const auto& c = load_catalog(name);
    for (const auto& chk : cross_check_lattice(c)) {
      const std::string setting = chk.setting == LatticeSetting::stable ? "stCM" : "CM";
      const std::string counts = std::to_string(chk.lattice_count) + " = " + std::to_string(chk.subset_count);
      rec.expect(chk.pass, std::string(name) + " " + setting + ": lattice check failed (" + counts + ")");
      rec.expect(chk.lattice_count == 2, std::string(name) + " " + setting + ": expected 2 closed sets");
      rec.note(std::string(name) + " " + setting + ": " + counts);
    }
  }
}

void criterion10(Recorder& rec, const VerifyOptions& o) {
  if (!in_scope(o, "QUAD2")) return;
  const auto& c = load_catalog("QUAD2");
  const auto& r = c.ring;
  auto k = c.sample("k");
  auto rr = ModulePres::free(r, 1);
  const std::vector<std::pair<Setting, Object>> probes = {
      {Setting::B, rr}, {Setting::C, rr}, {Setting::D, k}, {Setting::E, ComplexHandle::delta(k)}};
  for (const auto& [s, obj] : probes) {
    auto m = membership(make_descriptor(s, r, 1, {}), obj);
    rec.expect(m.verdict == Verdict::not_decidable,
               "QUAD2 case 1, setting " + setting_name(s) + ": verdict " + verdict_name(m.verdict));
  }
  auto rep = verify_roundtrips(r, 1, {});
  rec.expect(rep.pass, "QUAD2 case 1: inverse round trips failed");
  rec.expect(!rep.json["hypotheses"]["hold"].get<bool>(), "QUAD2 case 1: hypotheses reported as holding");
  rec.note("QUAD2 case 1: " + std::to_string(rep.json["subset_count"].get<std::size_t>()) +
           " subsets round-trip with hypotheses off");
}

const char* criterion_name(int id) {
  switch (id) {
    case 1: return "Groebner soundness";
    case 2: return "Resolution exactness";
    case 3: return "pd detection";
    case 4: return "Locus laws";
    case 5: return "Loci of R/p";
    case 6: return "Stabilization consistency";
    case 7: return "Round trips";
    case 8: return "Diagram commutativity";
    case 9: return "Lattice cross-check";
    case 10: return "Honest degradation";
  }
  return "?";
}

}  // namespace

CriterionResult run_criterion(int id, const VerifyOptions& opts) {
  CriterionResult r;
  r.id = id;
  r.name = criterion_name(id);
  Recorder rec{r};
  try {
    switch (id) {
      case 1: criterion1(rec, opts); break;
      case 2: criterion2(rec, opts); break;
      case 3: criterion3(rec, opts); break;
      case 4: criterion4(rec, opts); break;
      case 5: criterion5(rec, opts); break;
      case 6: criterion6(rec, opts); break;
      case 7: criterion7(rec, opts); break;
      case 8: criterion8(rec, opts); break;
      case 9: criterion9(rec, opts); break;
      case 10: criterion10(rec, opts); break;
      default: throw DomainError("no criterion " + std::to_string(id));
    }
  } catch (const ResourceError&) {
    throw;
  } catch (const Error& e) {
    rec.expect(false, std::string("error: ") + e.what());
  }
  if (r.checks == 0) r.notes.push_back("no catalog ring in scope");
  return r;
}

std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts) {
  std::vector<CriterionResult> out;
  for (int i = 1; i <= kCriteria; ++i) out.push_back(run_criterion(i, opts));
  return out;
}

Json to_json(const CriterionResult& r) {
  return Json{{"id", r.id},
              {"name", r.name},
              {"pass", r.pass},
              {"checks", r.checks},
              {"failures", r.failures},
              {"notes", r.notes}};
}

}  // namespace thick
