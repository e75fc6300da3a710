#include "thick/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>

#include "thick/error.hpp"

namespace thick {

namespace {

std::atomic<std::size_t> g_budget{100000};

// a + c * m * g, merged in POT order.
ModVec add_multiple(const MonomialOrder& ord, const ModVec& a, std::size_t a_start, const FieldElem& c,
                    const Monomial& m, const ModVec& g, std::size_t g_start = 0) {
  ModVec r;
  r.reserve(a.size() - a_start + g.size() - g_start);
  std::size_t i = a_start, j = g_start;
  while (i < a.size() && j < g.size()) {
    ModTerm gt{g[j].comp, g[j].mono * m, g[j].coeff * c};
    int cmp = compare_pot(ord, a[i], gt);
    if (cmp > 0) {
      r.push_back(a[i++]);
    } else if (cmp < 0) {
      r.push_back(std::move(gt));
      ++j;
    } else {
      auto s = a[i].coeff + gt.coeff;
      if (!s.is_zero()) r.push_back({a[i].comp, a[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) r.push_back(a[i]);
  for (; j < g.size(); ++j) r.push_back({g[j].comp, g[j].mono * m, g[j].coeff * c});
  return r;
}

void make_monic(ModVec& v) {
  if (v.empty() || v.front().coeff.is_one()) return;
  auto inv = v.front().coeff.inverse();
  for (auto& t : v) t.coeff = t.coeff * inv;
}

bool is_zero_column(const std::vector<Poly>& v) {
  return std::all_of(v.begin(), v.end(), [](const Poly& p) { return p.is_zero(); });
}

}  // namespace

std::size_t default_spair_budget() { return g_budget.load(); }
void set_default_spair_budget(std::size_t budget) { g_budget.store(budget); }

int compare_pot(const MonomialOrder& ord, const ModTerm& a, const ModTerm& b) {
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return ord.compare(a.mono, b.mono);
}

ModVec to_modvec(const std::vector<Poly>& column, std::uint32_t offset) {
  ModVec v;
  for (std::size_t i = 0; i < column.size(); ++i)
    for (const auto& t : column[i].terms()) v.push_back({static_cast<std::uint32_t>(i) + offset, t.mono, t.coeff});
  return v;
}

std::vector<Poly> from_modvec(const ModVec& v, const RingPtr& ring, std::size_t rank, std::uint32_t offset) {
  std::vector<std::vector<Poly::Term>> terms(rank);
  for (const auto& t : v) {
    if (t.comp < offset) throw DomainError("module element has support below the projection offset");
    std::size_t c = t.comp - offset;
    if (c >= rank) throw DomainError("module element component out of range");
    terms[c].push_back({t.mono, t.coeff});
  }
  std::vector<Poly> out;
  out.reserve(rank);
  for (auto& ts : terms) out.push_back(Poly::from_terms(ring, std::move(ts)));
  return out;
}

ModVec s_vector(const MonomialOrder& ord, const ModVec& f, const ModVec& g) {
  auto l = Monomial::lcm(f.front().mono, g.front().mono);
  FieldElem one = FieldElem(f.front().coeff.field(), 1);
  ModVec a = add_multiple(ord, ModVec{}, 0, one / f.front().coeff, l / f.front().mono, f);
  return add_multiple(ord, a, 0, -(one / g.front().coeff), l / g.front().mono, g);
}

// ---------------------------------------------------------- GroebnerEngine

GroebnerEngine::GroebnerEngine(RingPtr ring, std::size_t rank, std::size_t budget)
    : ring_(std::move(ring)), rank_(rank), budget_(budget), by_comp_(rank) {}

const ModVec* GroebnerEngine::find_reducer(std::uint32_t comp, const Monomial& m) const {
  for (auto idx : by_comp_[comp])
    if (active_[idx] && polys_[idx].front().mono.divides(m)) return &polys_[idx];
  return nullptr;
}

ModVec GroebnerEngine::reduce(ModVec v) const {
  const auto& ord = ring_->order();
  ModVec done;
  std::size_t start = 0;
  while (start < v.size()) {
    const auto& lt = v[start];
    if (lt.comp >= rank_) throw DomainError("module element exceeds engine rank");
    if (const ModVec* g = find_reducer(lt.comp, lt.mono)) {
      // g is monic
      v = add_multiple(ord, v, start + 1, -lt.coeff, lt.mono / g->front().mono, *g, 1);
      start = 0;
    } else {
      done.push_back(lt);
      ++start;
    }
  }
  return done;
}

void GroebnerEngine::insert(const ModVec& v) {
  ModVec r = reduce(v);
  if (r.empty()) return;
  make_monic(r);
  polys_.push_back(std::move(r));
  active_.push_back(1);
  update(polys_.size() - 1);
}

// Gebauer-Moeller installation of a new basis element h.
void GroebnerEngine::update(std::size_t h) {
  const ModVec& hv = polys_[h];
  const auto comp = hv.front().comp;
  const Monomial& hm = hv.front().mono;
  const bool use_product = rank_ == 1;

  std::vector<Pair> cand;
  for (auto g : by_comp_[comp])
    if (active_[g]) cand.push_back({g, h, comp, Monomial::lcm(polys_[g].front().mono, hm)});

  std::vector<Pair> kept;
  for (std::size_t a = 0; a < cand.size(); ++a) {
    const auto& p = cand[a];
    bool coprime = use_product && polys_[p.i].front().mono.coprime(hm);
    bool dominated = false;
    if (!coprime) {
      for (std::size_t b = a + 1; b < cand.size() && !dominated; ++b) dominated = cand[b].lcm.divides(p.lcm);
      for (std::size_t b = 0; b < kept.size() && !dominated; ++b) dominated = kept[b].lcm.divides(p.lcm);
    }
    if (!dominated) kept.push_back(p);
  }
  std::vector<Pair> fresh;
  for (auto& p : kept)
    if (!(use_product && polys_[p.i].front().mono.coprime(hm))) fresh.push_back(p);

  std::vector<Pair> old;
  old.reserve(pairs_.size());
  for (auto& p : pairs_) {
    bool drop = p.comp == comp && hm.divides(p.lcm) &&
                !(Monomial::lcm(polys_[p.i].front().mono, hm) == p.lcm) &&
                !(Monomial::lcm(polys_[p.j].front().mono, hm) == p.lcm);
    if (!drop) old.push_back(p);
  }
  pairs_ = std::move(old);
  for (auto& p : fresh) pairs_.push_back(p);

  for (auto g : by_comp_[comp])
    if (active_[g] && hm.divides(polys_[g].front().mono)) active_[g] = 0;
  by_comp_[comp].push_back(h);
}

ModVec GroebnerEngine::spoly(const Pair& p) const {
  return s_vector(ring_->order(), polys_[p.i], polys_[p.j]);
}

void GroebnerEngine::complete() {
  const auto& ord = ring_->order();
  while (!pairs_.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const auto& a = pairs_[k];
      const auto& b = pairs_[best];
      if (a.lcm.degree() != b.lcm.degree()) {
        if (a.lcm.degree() < b.lcm.degree()) best = k;
        continue;
      }
      int c = ord.compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && (a.comp > b.comp || (a.comp == b.comp && std::tie(a.j, a.i) < std::tie(b.j, b.i)))))
        best = k;
    }
    Pair p = pairs_[best];
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
    if (++processed_ > budget_)
      throw ResourceError("Groebner basis S-pair budget of " + std::to_string(budget_) + " exhausted");
    ModVec r = reduce(spoly(p));
    if (r.empty()) continue;
    make_monic(r);
    polys_.push_back(std::move(r));
    active_.push_back(1);
    update(polys_.size() - 1);
  }
}

std::vector<ModVec> GroebnerEngine::reduced_basis() const {
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < polys_.size(); ++k)
    if (active_[k]) idx.push_back(k);
  // Active elements already have pairwise non-dividing leading terms; tail
  // reduce each one against the others.
  std::vector<ModVec> out;
  for (auto k : idx) {
    const ModVec& g = polys_[k];
    ModVec tail(g.begin() + 1, g.end());
    ModVec rt = reduce(tail);
    ModVec full;
    full.reserve(rt.size() + 1);
    full.push_back(g.front());
    for (auto& t : rt) full.push_back(std::move(t));
    out.push_back(std::move(full));
  }
  const auto& ord = ring_->order();
  std::sort(out.begin(), out.end(),
            [&](const ModVec& a, const ModVec& b) { return compare_pot(ord, a.front(), b.front()) < 0; });
  return out;
}

// ------------------------------------------------------------- SubmoduleGB

struct SubmoduleGB::Cache {
  std::once_flag once;
  std::unique_ptr<GroebnerEngine> engine;
  std::vector<ModVec> basis;
};

SubmoduleGB::SubmoduleGB(RingPtr ring, std::size_t rank, std::vector<std::vector<Poly>> gens)
    : ring_(std::move(ring)), rank_(rank), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : gens_) {
    if (g.size() != rank_) throw DomainError("generator length does not match module rank");
    for (const auto& p : g) require_same_ring(ring_, p.ring());
  }
}

const std::vector<ModVec>& SubmoduleGB::basis() const {
  std::call_once(cache_->once, [this] {
    auto engine = std::make_unique<GroebnerEngine>(ring_, rank_);
    for (const auto& g : gens_) engine->insert(to_modvec(g));
    engine->complete();
    cache_->basis = engine->reduced_basis();
    // Keep a complete engine around that reduces against the reduced basis.
    auto fresh = std::make_unique<GroebnerEngine>(ring_, rank_);
    for (const auto& b : cache_->basis) fresh->insert(b);
    cache_->engine = std::move(fresh);
  });
  return cache_->basis;
}

std::vector<Poly> SubmoduleGB::normal_form(const std::vector<Poly>& v) const {
  if (v.size() != rank_) throw DomainError("element length does not match module rank");
  basis();
  return from_modvec(cache_->engine->reduce(to_modvec(v)), ring_, rank_);
}

bool SubmoduleGB::contains(const std::vector<Poly>& v) const { return is_zero_column(normal_form(v)); }

// ------------------------------------------------------------------- Ideal

struct Ideal::Cache {
  std::once_flag once;
  std::vector<Poly> basis;
  std::unique_ptr<GroebnerEngine> engine;
};

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    require_same_ring(ring_, g.ring());
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

const std::vector<Poly>& Ideal::groebner_basis() const {
  std::call_once(cache_->once, [this] {
    GroebnerEngine engine(ring_, 1);
    for (const auto& g : gens_) engine.insert(to_modvec({g}));
    engine.complete();
    auto red = engine.reduced_basis();
    auto fresh = std::make_unique<GroebnerEngine>(ring_, 1);
    for (const auto& b : red) {
      cache_->basis.push_back(from_modvec(b, ring_, 1)[0]);
      fresh->insert(b);
    }
    cache_->engine = std::move(fresh);
  });
  return cache_->basis;
}

Poly Ideal::normal_form(const Poly& f) const {
  require_same_ring(ring_, f.ring());
  groebner_basis();
  return from_modvec(cache_->engine->reduce(to_modvec({f})), ring_, 1)[0];
}

bool Ideal::contains(const Ideal& other) const {
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb[0].is_constant();
}

bool Ideal::is_zero() const { return gens_.empty(); }

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Poly& p) { return p.is_homogeneous(); });
}

std::string Ideal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].to_string();
  return s + ")";
}

bool operator==(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring_, b.ring_);
  const auto& ga = a.groebner_basis();
  const auto& gb = b.groebner_basis();
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i)
    if (!(ga[i] == gb[i])) return false;
  return true;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  auto g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(g));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Poly> g;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) g.push_back(x * y);
  return Ideal(a.ring(), std::move(g));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  const auto& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal(ring);
  // Kernel of (u, v) -> sum u_i a_i - sum v_j b_j; the images sum u_i a_i generate the meet.
  std::vector<std::vector<Poly>> gens;
  for (const auto& g : a.generators()) gens.push_back({g});
  for (const auto& g : b.generators()) gens.push_back({-g});
  auto syz = module_syzygies(gens, 1, Ideal(ring));
  std::vector<Poly> out;
  for (const auto& s : syz.generators()) {
    Poly acc(ring);
    for (std::size_t i = 0; i < a.generators().size(); ++i) acc += s[i] * a.generators()[i];
    out.push_back(acc);
  }
  return Ideal(ring, std::move(out));
}

Ideal ideal_colon(const Ideal& a, const Poly& f) {
  require_same_ring(a.ring(), f.ring());
  const auto& ring = a.ring();
  if (f.is_zero() || a.contains(f)) return Ideal(ring, {Poly::constant(ring, 1)});
  // First coordinates of the syzygies of (f, a_1, ..., a_r).
  std::vector<std::vector<Poly>> gens{{f}};
  for (const auto& g : a.generators()) gens.push_back({g});
  auto syz = module_syzygies(gens, 1, Ideal(ring));
  std::vector<Poly> out;
  for (const auto& s : syz.generators()) out.push_back(s[0]);
  return Ideal(ring, std::move(out));
}

Ideal ideal_colon(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  Ideal acc(a.ring(), {Poly::constant(a.ring(), 1)});
  for (const auto& g : b.generators()) acc = ideal_intersection(acc, ideal_colon(a, g));
  return acc;
}

int dimension(const Ideal& ideal) {
  if (ideal.is_unit()) return -1;
  const std::size_t n = ideal.ring()->nvars();
  std::vector<Monomial> lead;
  for (const auto& g : ideal.groebner_basis()) lead.push_back(g.leading().mono);
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = std::none_of(lead.begin(), lead.end(), [&](const Monomial& m) {
      for (std::size_t v = 0; v < n; ++v)
        if (m[v] && !(mask & (1u << v))) return false;
      return true;
    });
    if (independent) best = size;
  }
  return best;
}

SubmoduleGB module_syzygies(const std::vector<std::vector<Poly>>& gens, std::size_t rank, const Ideal& relations) {
  const auto& ring = relations.ring();
  const std::size_t m = gens.size();
  const auto r = static_cast<std::uint32_t>(rank);
  for (const auto& g : gens)
    if (g.size() != rank) throw DomainError("syzygy input has mismatched rank");
  if (rank == 0) {
    // Everything maps to the zero module.
    std::vector<std::vector<Poly>> unit;
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<Poly> e(m, Poly(ring));
      e[j] = Poly::constant(ring, 1);
      unit.push_back(std::move(e));
    }
    return SubmoduleGB(ring, m, std::move(unit));
  }
  GroebnerEngine engine(ring, rank + m);
  FieldElem one(ring->field(), 1);
  for (std::size_t j = 0; j < m; ++j) {
    ModVec v = to_modvec(gens[j]);
    v.push_back({r + static_cast<std::uint32_t>(j), Monomial(), one});
    engine.insert(v);
  }
  for (const auto& f : relations.groebner_basis())
    for (std::uint32_t i = 0; i < r; ++i) {
      ModVec v;
      for (const auto& t : f.terms()) v.push_back({i, t.mono, t.coeff});
      engine.insert(v);
    }
  engine.complete();
  std::vector<std::vector<Poly>> out;
  for (const auto& b : engine.reduced_basis()) {
    if (b.front().comp < r) continue;
    auto col = from_modvec(b, ring, m, r);
    for (auto& p : col) p = relations.normal_form(p);
    if (!is_zero_column(col)) out.push_back(std::move(col));
  }
  return SubmoduleGB(ring, m, std::move(out));
}

std::optional<std::vector<Poly>> lift(const std::vector<Poly>& target, const std::vector<std::vector<Poly>>& columns,
                                      const Ideal& relations) {
  const auto& ring = relations.ring();
  const std::size_t rank = target.size();
  const std::size_t s = columns.size();
  if (is_zero_column(target)) return std::vector<Poly>(s, Poly(ring));
  if (rank == 0) return std::vector<Poly>(s, Poly(ring));
  const auto r = static_cast<std::uint32_t>(rank);
  GroebnerEngine engine(ring, rank + 1 + s);
  FieldElem one(ring->field(), 1);
  ModVec tv = to_modvec(target);
  tv.push_back({r, Monomial(), one});
  engine.insert(tv);
  for (std::size_t j = 0; j < s; ++j) {
    if (columns[j].size() != rank) throw DomainError("lift: column length mismatch");
    ModVec v = to_modvec(columns[j]);
    v.push_back({r + 1 + static_cast<std::uint32_t>(j), Monomial(), one});
    engine.insert(v);
  }
  for (const auto& f : relations.groebner_basis())
    for (std::uint32_t i = 0; i < r; ++i) {
      ModVec v;
      for (const auto& t : f.terms()) v.push_back({i, t.mono, t.coeff});
      engine.insert(v);
    }
  engine.complete();
  for (const auto& b : engine.reduced_basis()) {
    if (b.front().comp != r || !b.front().mono.is_one()) continue;
    // b = c*(target, e) + sum a_j (col_j, e_j) with vanishing first block; c is b's lead.
    auto inv = -(one / b.front().coeff);
    auto coeffs = from_modvec(ModVec(b.begin() + 1, b.end()), ring, s, r + 1);
    for (auto& c : coeffs) c = relations.normal_form(c.scaled(inv));
    return coeffs;
  }
  return std::nullopt;
}

}  // namespace thick
