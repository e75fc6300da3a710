#include "thick/ring.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "thick/error.hpp"

namespace thick {

std::vector<Poly> minimal_generators(const Ideal& ideal) {
  std::vector<Poly> gens = ideal.generators();
  auto wdeg = [](const Poly& p) { return p.weighted_degree(p.leading().mono); };
  std::stable_sort(gens.begin(), gens.end(), [&](const Poly& a, const Poly& b) { return wdeg(a) < wdeg(b); });
  std::vector<Poly> kept;
  for (const auto& g : gens) {
    if (Ideal(ideal.ring(), kept).contains(g)) continue;
    kept.push_back(g);
  }
  return kept;
}

Matrix jacobian_matrix(const RingPtr& base, const std::vector<Poly>& gens) {
  Matrix j(base, gens.size(), base->nvars());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t v = 0; v < base->nvars(); ++v) j.set(i, v, gens[i].derivative(v));
  return j;
}

namespace {

// Linear generators always cut out a prime; a non-linear monomial basis never does.
enum class Primality { certified, refuted, asserted };

Primality check_primality(const Ideal& p) {
  const auto& gb = p.groebner_basis();
  bool linear = std::all_of(gb.begin(), gb.end(), [](const Poly& g) {
    return std::all_of(g.terms().begin(), g.terms().end(), [](const Poly::Term& t) { return t.mono.degree() == 1; });
  });
  if (linear) return Primality::certified;
  bool monomial = std::all_of(gb.begin(), gb.end(), [](const Poly& g) { return g.size() == 1; });
  return monomial ? Primality::refuted : Primality::asserted;
}

}  // namespace

RingRef RingPres::make(std::string name, RingPtr base, std::vector<Poly> relations, std::vector<PrimeInput> registry,
                       FlagAssertions asserted) {
  std::shared_ptr<RingPres> r(new RingPres());
  r->name_ = std::move(name);
  r->base_ = base;
  for (const auto& f : relations)
    if (!f.is_homogeneous()) throw DomainError("relation " + f.to_string() + " is not homogeneous");
  r->defining_ = Ideal(base, std::move(relations));
  if (r->defining_.is_unit()) throw DomainError("defining ideal is the unit ideal");
  r->minimal_relations_ = minimal_generators(r->defining_);
  r->dim_ = dimension(r->defining_);

  std::vector<Poly> vars;
  for (std::size_t i = 0; i < base->nvars(); ++i) vars.push_back(Poly::variable(base, i));
  Ideal m(base, vars);

  bool have_m = false;
  for (auto& in : registry) {
    for (const auto& g : in.gens)
      if (!g.is_homogeneous()) throw DomainError("prime " + in.name + " has a non-homogeneous generator");
    Ideal p(base, in.gens);
    if (p.is_unit()) throw DomainError("prime " + in.name + " is the unit ideal");
    if (!p.contains(r->defining_)) throw DomainError("prime " + in.name + " does not contain the defining ideal");
    for (const auto& q : r->primes_) {
      if (q.name == in.name) throw DomainError("duplicate prime name " + in.name);
      if (q.gens == p) throw DomainError("primes " + q.name + " and " + in.name + " coincide");
    }
    auto status = check_primality(p);
    if (status == Primality::refuted) throw DomainError("registered ideal " + in.name + " is not prime");
    if (status == Primality::asserted) r->notes_.push_back("primality of " + in.name + " asserted by the description");
    if (p == m) {
      have_m = true;
      r->maximal_ = r->primes_.size();
    }
    r->primes_.push_back({in.name, std::move(p), status == Primality::certified});
  }
  if (!have_m) {
    if (r->prime_index("m")) throw DomainError("a prime is named m but is not the maximal ideal");
    r->maximal_ = r->primes_.size();
    r->primes_.push_back({"m", m, true});
  }
  if (r->primes_.size() > 64) throw DomainError("prime registry is limited to 64 entries");

  const std::size_t n = r->primes_.size();
  r->up_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (r->primes_[j].gens.contains(r->primes_[i].gens)) r->up_[i] |= 1ull << j;

  // Jacobian criterion with c = codim I.
  const std::size_t c = base->nvars() - static_cast<std::size_t>(r->dim_);
  auto jm = jacobian_matrix(base, r->defining_.generators());
  r->jacobian_ = Ideal(base, minors(jm, c));
  auto sing_members = r->primes_containing(ideal_sum(r->defining_, r->jacobian_));

  auto& f = r->flags_;
  f.is_regular = sing_members == 0;
  f.is_hypersurface = r->minimal_relations_.size() <= 1;
  if (f.is_hypersurface) {
    if (asserted.gorenstein == false) throw DomainError("hypersurface ring asserted non-Gorenstein");
    if (asserted.lci_punctured == false)
      throw DomainError("hypersurface ring asserted not locally a hypersurface on the punctured spectrum");
    f.is_gorenstein = f.lci_punctured = true;
  } else {
    f.is_gorenstein = asserted.gorenstein.value_or(false);
    f.lci_punctured = asserted.lci_punctured.value_or(false);
    if (asserted.gorenstein) r->notes_.push_back("gorenstein flag asserted by the description");
    if (asserted.lci_punctured) r->notes_.push_back("lci_punctured flag asserted by the description");
  }
  RingRef done = r;
  r->sing_ = std::make_shared<SpecSubset>(done, sing_members);
  return done;
}

std::optional<std::size_t> RingPres::prime_index(const std::string& name) const {
  for (std::size_t i = 0; i < primes_.size(); ++i)
    if (primes_[i].name == name) return i;
  return std::nullopt;
}

std::uint64_t RingPres::primes_containing(const Ideal& j) const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < primes_.size(); ++i)
    if (primes_[i].gens.contains(j)) mask |= 1ull << i;
  return mask;
}

const SpecSubset& RingPres::singular_locus() const { return *sing_; }

// ---------------------------------------------------------------- SpecSubset

SpecSubset::SpecSubset(RingRef ring, std::uint64_t members) : ring_(std::move(ring)), members_(members) {
  for (std::size_t i = 0; i < ring_->primes().size(); ++i)
    if (contains_prime(i) && (ring_->upset(i) & ~members_))
      throw DomainError("subset is not specialization-closed");
}

SpecSubset SpecSubset::closure_of(RingRef ring, const std::vector<std::size_t>& primes) {
  std::uint64_t mask = 0;
  for (auto i : primes) mask |= 1ull << i;
  return closure_of_mask(std::move(ring), mask);
}

SpecSubset SpecSubset::closure_of_mask(RingRef ring, std::uint64_t primes) {
  std::uint64_t members = 0;
  for (std::size_t i = 0; i < ring->primes().size(); ++i)
    if ((primes >> i) & 1u) members |= ring->upset(i);
  return SpecSubset(std::move(ring), members);
}

std::vector<std::size_t> SpecSubset::member_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ring_->primes().size(); ++i)
    if (contains_prime(i)) out.push_back(i);
  return out;
}

std::vector<std::size_t> SpecSubset::basis() const {
  std::vector<std::size_t> out;
  for (auto i : member_indices()) {
    bool minimal = true;
    for (auto j : member_indices())
      if (j != i && ring_->prime_contained(j, i)) minimal = false;
    if (minimal) out.push_back(i);
  }
  std::sort(out.begin(), out.end(),
            [&](std::size_t a, std::size_t b) { return ring_->primes()[a].name < ring_->primes()[b].name; });
  return out;
}

namespace {
void require_same(const SpecSubset& a, const SpecSubset& b) {
  if (a.ring() != b.ring()) throw DomainError("spectrum subsets over different rings");
}
}  // namespace

bool SpecSubset::contains_subset(const SpecSubset& other) const {
  require_same(*this, other);
  return (other.members_ & ~members_) == 0;
}

SpecSubset SpecSubset::unite(const SpecSubset& other) const {
  require_same(*this, other);
  return SpecSubset(ring_, members_ | other.members_);
}

SpecSubset SpecSubset::intersect(const SpecSubset& other) const {
  require_same(*this, other);
  return SpecSubset(ring_, members_ & other.members_);
}

std::string SpecSubset::to_string() const {
  std::string s = "{";
  bool first = true;
  for (auto i : basis()) {
    s += (first ? "" : ", ") + ring_->primes()[i].name;
    first = false;
  }
  return s + "}";
}

bool operator==(const SpecSubset& a, const SpecSubset& b) { return a.ring_ == b.ring_ && a.members_ == b.members_; }

std::vector<SpecSubset> enumerate_spec_closed_in(const RingRef& ring, const SpecSubset& bound) {
  auto eligible = bound.member_indices();
  if (eligible.size() > 20) throw ResourceError("too many primes to enumerate subsets");
  std::vector<std::uint64_t> seen;
  for (std::uint64_t pick = 0; pick < (1ull << eligible.size()); ++pick) {
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < eligible.size(); ++k)
      if ((pick >> k) & 1u) mask |= ring->upset(eligible[k]);
    seen.push_back(mask);
  }
  std::sort(seen.begin(), seen.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  std::vector<SpecSubset> out;
  for (auto m : seen) out.emplace_back(ring, m);
  return out;
}

}  // namespace thick
