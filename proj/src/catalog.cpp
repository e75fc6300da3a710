#include "thick/catalog.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <filesystem>
#include <mutex>
#include <set>

#include "thick/error.hpp"
#include "thick/io.hpp"

#ifndef THICK_CATALOG_DIR
#define THICK_CATALOG_DIR "catalog"
#endif

namespace thick {

const ModulePres& CatalogRing::sample(const std::string& name) const {
  for (const auto& [n, m] : samples)
    if (n == name) return m;
  throw DomainError("catalog ring " + ring->name() + " has no sample '" + name + "'");
}

bool CatalogRing::has_sample(const std::string& name) const {
  return std::any_of(samples.begin(), samples.end(), [&](const auto& s) { return s.first == name; });
}

std::string catalog_dir() {
  if (const char* env = std::getenv("THICK_CATALOG_DIR"); env && *env) return env;
  return THICK_CATALOG_DIR;
}

std::vector<std::string> catalog_names() {
  return {"REGULAR1", "DUALNUM", "NODE", "CUSP", "RIBBON", "WHITNEY3", "QUAD2"};
}

namespace {

// Isomorphism invariants used to compare modules: generator count, Fitting
// chain and a Betti prefix.
std::string invariant_mismatch(const ModulePres& a, const ModulePres& b) {
  if (num_generators(a) != num_generators(b)) return "generator counts differ";
  const auto& fa = fitting_chain(a);
  const auto& fb = fitting_chain(b);
  for (std::size_t j = 0; j < fa.size(); ++j)
    if (!(fa[j] == fb[j])) return "Fitting ideal " + std::to_string(j) + " differs";
  if (resolution(a, 3).betti != resolution(b, 3).betti) return "Betti numbers differ";
  return "";
}

IndecomposableTable load_table(const Json& j, const CatalogRing& c) {
  IndecomposableTable t;
  t.labels = j.at("labels").get<std::vector<std::string>>();
  t.free_labels = j.value("free", std::vector<std::string>{});
  for (auto it = j.at("modules").begin(); it != j.at("modules").end(); ++it)
    t.module_of[it.key()] = it.value().get<std::string>();
  for (auto it = j.at("omega").begin(); it != j.at("omega").end(); ++it)
    t.omega[it.key()] = it.value().is_null() ? std::nullopt : std::optional(it.value().get<std::string>());
  const Json decompositions = j.value("decompositions", Json::object());
  for (auto it = decompositions.begin(); it != decompositions.end(); ++it)
    t.decompositions[it.key()] = it.value().get<std::vector<std::string>>();

  const auto& name = c.ring->name();
  auto fail = [&](const std::string& why) { throw Error("catalog " + name + " indecomposable table: " + why); };
  auto label_module = [&](const std::string& l) -> const ModulePres& {
    if (!t.module_of.count(l)) fail("label " + l + " has no module");
    return c.sample(t.module_of.at(l));
  };
  std::set<std::string> known(t.labels.begin(), t.labels.end());
  if (known.size() != t.labels.size()) fail("duplicate labels");
  for (const auto& l : t.labels) {
    const auto& m = label_module(l);
    bool is_free_label = std::count(t.free_labels.begin(), t.free_labels.end(), l) > 0;
    if (is_free_label != is_free(m)) fail("freeness of " + l + " does not match");
    if (!is_mcm(m)) fail(l + " is not maximal Cohen-Macaulay");
    if (!t.omega.count(l)) fail("no syzygy entry for " + l);
    auto syz = strip_free_summands(syzygy(m, 1));
    const auto& target = t.omega.at(l);
    if (!target) {
      if (!is_zero_module(syz)) fail("syzygy of " + l + " is not free");
    } else {
      if (!known.count(*target)) fail("unknown label " + *target);
      auto why = invariant_mismatch(syz, label_module(*target));
      if (!why.empty()) fail("syzygy of " + l + " does not match " + *target + ": " + why);
    }
  }
  for (const auto& [sample, parts] : t.decompositions) {
    ModulePres sum = ModulePres::zero(c.ring);
    for (const auto& l : parts) {
      if (!known.count(l)) fail("unknown label " + l);
      sum = direct_sum(sum, label_module(l));
    }
    auto why = invariant_mismatch(c.sample(sample), sum);
    if (!why.empty()) fail("decomposition of " + sample + ": " + why);
  }
  return t;
}

CatalogRing load_uncached(const std::string& name) {
  auto names = catalog_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) throw DomainError("unknown catalog ring '" + name + "'");
  auto path = (std::filesystem::path(catalog_dir()) / (name + ".json")).string();
  Json j = read_json_file(path);
  CatalogRing c;
  try {
    c.ring = ring_from_json(j, name);
    c.default_case = j.value("case", 1);
    c.notes = j.value("notes", std::vector<std::string>{});
    const Json samples = j.value("samples", Json::object());
    for (auto it = samples.begin(); it != samples.end(); ++it)
      c.samples.emplace_back(it.key(), ModulePres(c.ring, matrix_from_json(it.value().at("matrix"), c.ring->base())));
    for (const auto& s : j.value("sequences", Json::array())) {
      auto sub = s.at("sub").get<std::string>(), mid = s.at("mid").get<std::string>(),
           quot = s.at("quot").get<std::string>();
      const auto& a = c.sample(sub);
      const auto& b = c.sample(mid);
      const auto& q = c.sample(quot);
      CatalogSequence seq{sub, mid, quot, {a, b, matrix_from_json(s.at("inj"), c.ring->base())},
                          {b, q, matrix_from_json(s.at("surj"), c.ring->base())}};
      if (seq.inj.matrix.rows() != b.rows() || seq.inj.matrix.cols() != a.rows() ||
          seq.surj.matrix.rows() != q.rows() || seq.surj.matrix.cols() != b.rows())
        throw Error("catalog " + name + ": sequence maps have the wrong shape");
      auto why = check_short_exact(seq.inj, seq.surj);
      if (!why.empty()) throw Error("catalog " + name + ": sequence " + seq.sub + " -> " + seq.mid + " -> " + seq.quot + ": " + why);
      c.sequences.push_back(std::move(seq));
    }
    if (j.contains("indecomposables")) c.indecomposables = load_table(j.at("indecomposables"), c);
  } catch (const Json::exception& e) {
    throw ParseError("catalog " + name + ": " + e.what(), 0);
  }
  return c;
}

}  // namespace

const CatalogRing& load_catalog(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<CatalogRing>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, std::make_unique<CatalogRing>(load_uncached(name))).first;
  return *it->second;
}

std::vector<std::vector<std::string>> brute_force_thick_lattice(const CatalogRing& c, LatticeSetting setting) {
  if (!c.indecomposables) throw DomainError("catalog " + c.ring->name() + " has no indecomposable table");
  const auto& t = *c.indecomposables;
  auto is_free_label = [&](const std::string& l) {
    return std::count(t.free_labels.begin(), t.free_labels.end(), l) > 0;
  };
  std::vector<std::string> universe;
  for (const auto& l : t.labels)
    if (!is_free_label(l)) universe.push_back(l);
  if (universe.size() > 20) throw ResourceError("too many labels for the brute-force lattice");

  // Label-level view of the sequences whose terms all decompose.
  std::vector<std::array<const std::vector<std::string>*, 3>> seqs;
  for (const auto& s : c.sequences) {
    auto a = t.decompositions.find(s.sub), b = t.decompositions.find(s.mid), q = t.decompositions.find(s.quot);
    if (a != t.decompositions.end() && b != t.decompositions.end() && q != t.decompositions.end())
      seqs.push_back({&a->second, &b->second, &q->second});
  }

  std::vector<std::vector<std::string>> out;
  for (std::uint64_t pick = 0; pick < (1ull << universe.size()); ++pick) {
    std::set<std::string> in;
    for (std::size_t k = 0; k < universe.size(); ++k)
      if ((pick >> k) & 1u) in.insert(universe[k]);
    // Free labels are zero in the stable category and always present in CM.
    auto has = [&](const std::string& l) { return is_free_label(l) || in.count(l) > 0; };
    auto all_in = [&](const std::vector<std::string>* ls) { return std::all_of(ls->begin(), ls->end(), has); };
    bool closed = true;
    for (const auto& [l, w] : t.omega) {
      if (!w) continue;
      if (has(l) != has(*w)) closed = false;  // Omega and its inverse
    }
    for (const auto& s : seqs) {
      int count = all_in(s[0]) + all_in(s[1]) + all_in(s[2]);
      if (count == 2) closed = false;
    }
    if (!closed) continue;
    std::vector<std::string> labels;
    for (const auto& l : t.labels)
      if ((setting == LatticeSetting::cm && is_free_label(l)) || in.count(l)) labels.push_back(l);
    out.push_back(std::move(labels));
  }
  return out;
}

std::vector<LatticeCheck> cross_check_lattice(const CatalogRing& c) {
  if (!c.indecomposables) throw DomainError("catalog " + c.ring->name() + " has no indecomposable table");
  const auto& t = *c.indecomposables;
  auto subsets = enumerate_spec_closed_in(c.ring, c.ring->singular_locus());
  if (c.default_case == 2) subsets.erase(subsets.begin());  // drop the empty set
  std::vector<LatticeCheck> out;
  for (auto setting : {LatticeSetting::stable, LatticeSetting::cm}) {
    LatticeCheck chk;
    chk.setting = setting;
    auto lattice = brute_force_thick_lattice(c, setting);
    chk.lattice_count = lattice.size();
    chk.subset_count = subsets.size();
    std::vector<SpecSubset> loci;
    for (const auto& labels : lattice) {
      SpecSubset l = SpecSubset::empty(c.ring);
      for (const auto& lab : labels) l = l.unite(nonfree_locus(c.sample(t.module_of.at(lab))));
      std::string names;
      for (const auto& lab : labels) names += (names.empty() ? "" : ",") + lab;
      chk.detail.push_back("{" + names + "} -> " + l.to_string());
      loci.push_back(l);
    }
    chk.loci_distinct = true;
    for (std::size_t i = 0; i < loci.size(); ++i)
      for (std::size_t j = i + 1; j < loci.size(); ++j)
        if (loci[i] == loci[j]) chk.loci_distinct = false;
    chk.loci_match = loci.size() == subsets.size() && std::all_of(subsets.begin(), subsets.end(), [&](const SpecSubset& s) {
                       return std::find(loci.begin(), loci.end(), s) != loci.end();
                     });
    chk.pass = chk.lattice_count == chk.subset_count && chk.loci_distinct && chk.loci_match;
    out.push_back(std::move(chk));
  }
  return out;
}

}  // namespace thick
