#include <doctest.h>

#include <algorithm>
#include <iterator>
#include <random>

#include "support.hpp"
#include "thick/catalog.hpp"
#include "thick/complex.hpp"
#include "thick/matrix.hpp"

using namespace thick;
using namespace thick::test;

namespace {

Poly random_poly(std::mt19937& gen, const RingPtr& r, unsigned max_deg, int terms) {
  std::vector<Poly::Term> ts;
  for (int t = 0; t < terms; ++t) {
    std::vector<unsigned> e(r->nvars(), 0);
    unsigned d = gen() % (max_deg + 1);
    for (unsigned k = 0; k < d; ++k) ++e[gen() % e.size()];
    ts.push_back({Monomial(e), FieldElem(r->field(), static_cast<long>(gen() % 5))});
  }
  return Poly::from_terms(r, ts);
}

// The same module with an identity block and a redundant column appended.
ModulePres trivially_padded(const ModulePres& m, std::mt19937& gen) {
  const auto& base = m.ring()->base();
  auto k = 1 + gen() % 2;
  Matrix a = block_diagonal(m.matrix(), Matrix::identity(base, k));
  std::vector<Column> extra;
  if (m.matrix().cols() > 0) {
    auto col = a.column(gen() % m.matrix().cols());
    auto v = Poly::variable(base, gen() % base->nvars());
    for (auto& e : col) e = e * v;
    extra.push_back(col);
  }
  return ModulePres(m.ring(), hconcat(a, Matrix::from_columns(base, a.rows(), extra)));
}

std::vector<std::size_t> stripped_betti(const ModulePres& m, std::size_t steps) {
  return resolution(strip_free_summands(m), steps).betti;
}

}  // namespace

TEST_CASE("property: normal forms respect sums and products") {
  std::mt19937 gen(1234);
  for (int n = 0; n < 50; ++n) {
    auto r = ring_of(5, n % 2 ? std::vector<std::string>{"x", "y", "z"} : std::vector<std::string>{"x", "y"});
    std::vector<Poly> gens;
    for (int k = 0, c = 1 + static_cast<int>(gen() % 3); k < c; ++k) gens.push_back(random_poly(gen, r, 3, 3));
    Ideal i(r, gens);
    auto f = random_poly(gen, r, 3, 3), g = random_poly(gen, r, 3, 3), h = random_poly(gen, r, 4, 4);
    CHECK(i.normal_form(f * g + h) == i.normal_form(i.normal_form(f * g) + h));
    for (const auto& x : gens) CHECK(i.normal_form(x * f).is_zero());
  }
}

TEST_CASE("property: syzygies annihilate the input map") {
  for (const auto& name : catalog_names()) {
    const auto& c = load_catalog(name);
    const auto& rel = c.ring->defining();
    for (const auto& [s, m] : c.samples) {
      const auto& a = m.matrix();
      auto k = kernel_matrix(a, rel);
      CHECK_MESSAGE((a * k).reduced(rel).is_zero(), (name + "/" + s));
      auto syz = module_syzygies(a.columns(), a.rows(), rel);
      for (const auto& g : syz.generators()) {
        Column combo(a.rows(), Poly(c.ring->base()));
        for (std::size_t j = 0; j < a.cols(); ++j)
          for (std::size_t i = 0; i < a.rows(); ++i) combo[i] += g[j] * a.at(i, j);
        for (auto& e : combo) CHECK_MESSAGE(rel.normal_form(e).is_zero(), (name + "/" + s));
      }
    }
  }
}

TEST_CASE("property: Fitting ideals under padding") {
  std::mt19937 gen(99);
  for (const auto& name : catalog_names()) {
    const auto& c = load_catalog(name);
    for (const auto& [s, m] : c.samples) {
      const auto& f = fitting_chain(m);
      for (int t = 0; t < 5; ++t) {
        auto padded = minimalize(trivially_padded(m, gen));
        const auto& g = fitting_chain(padded);
        REQUIRE(f.size() == g.size());
        for (std::size_t j = 0; j < f.size(); ++j) CHECK_MESSAGE(f[j] == g[j], (name + "/" + s));
      }
      // A genuine free summand shifts the chain by one: Fitt_{j+1}(M + R) = Fitt_j(M).
      auto with_free = direct_sum(m, ModulePres::free(c.ring, 1));
      const auto& h = fitting_chain(with_free);
      REQUIRE(h.size() == f.size() + 1);
      CHECK(h[0] == c.ring->defining());
      for (std::size_t j = 0; j < f.size(); ++j) CHECK_MESSAGE(h[j + 1] == f[j], (name + "/" + s));
    }
  }
}

TEST_CASE("property: nonfree loci are closed and inside the support") {
  for (const auto& name : catalog_names()) {
    const auto& c = load_catalog(name);
    const auto& r = c.ring;
    for (const auto& [s, m] : c.samples) {
      auto v = nonfree_locus(m);
      for (auto i : v.member_indices())
        for (std::size_t j = 0; j < r->primes().size(); ++j)
          if (r->prime_contained(i, j)) CHECK(v.contains_prime(j));
      auto supp = SpecSubset::closure_of_mask(r, r->primes_containing(fitting_chain(m).front()));
      CHECK_MESSAGE(supp.contains_subset(v), (name + "/" + s));
      CHECK(r->singular_locus().contains_subset(q_locus(m)));
    }
  }
}

TEST_CASE("property: cosyzygy inverts syzygy on MCM modules") {
  for (const auto& name : catalog_names()) {
    const auto& c = load_catalog(name);
    for (const auto& [s, m] : c.samples) {
      if (!is_mcm(m)) continue;
      auto back = syzygy(cosyzygy(m), 1);
      CHECK_MESSAGE(stripped_betti(back, 3) == stripped_betti(m, 3), (name + "/" + s));
      CHECK_MESSAGE(nonfree_locus(back) == nonfree_locus(m), (name + "/" + s));
    }
  }
}

TEST_CASE("property: shift, cone and stabilization on catalog complexes") {
  for (const auto& name : catalog_names()) {
    const auto& c = load_catalog(name);
    const auto& base = c.ring->base();
    auto dr = ComplexHandle::delta(ModulePres::free(c.ring, 1));
    for (const auto& [s, m] : c.samples) {
      auto dm = ComplexHandle::delta(m);
      CHECK(w_locus(dm) == q_locus(m));
      for (int k : {-1, 1, 2}) CHECK(w_locus(ComplexHandle::shift(dm, k)) == w_locus(dm));
      if (is_mcm(m)) {
        auto st = stabilize(dm);
        CHECK_MESSAGE(stripped_betti(st, 3) == stripped_betti(m, 3), (name + "/" + s));
        CHECK(nonfree_locus(st) == nonfree_locus(m));
        for (std::size_t p = 0; p < c.ring->primes().size(); ++p)
          CHECK(free_at(st, p) == !q_locus(m).contains_prime(p));
      }
      // The quotient map from R onto a cyclic sample gives a triangle R -> M -> cone.
      if (m.rows() == 1 && !is_zero_module(m)) {
        auto cone = ComplexHandle::cone(ComplexMap{dr, dm, {{0, Matrix::identity(base, 1)}}});
        auto wa = w_locus(dr), wb = w_locus(dm), wc = w_locus(cone);
        CHECK(wb.unite(wc).contains_subset(wa));
        CHECK(wa.unite(wc).contains_subset(wb));
        CHECK(wa.unite(wb).contains_subset(wc));
        auto st = stabilize(cone);
        CHECK(nonfree_locus(st) == wc);
        CHECK((is_zero_module(st) || is_mcm(st)));
      }
    }
  }
}

TEST_CASE("property: label closure is monotone and empty closes to empty") {
  for (const auto& name : {"NODE", "DUALNUM", "CUSP"}) {
    const auto& c = load_catalog(name);
    auto sets = brute_force_thick_lattice(c, LatticeSetting::stable);
    REQUIRE(!sets.empty());
    CHECK(sets.front().empty());
    // Intersections of closed sets are closed.
    for (auto& s : sets) std::sort(s.begin(), s.end());
    for (const auto& a : sets)
      for (const auto& b : sets) {
        std::vector<std::string> both;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
        CHECK(std::find(sets.begin(), sets.end(), both) != sets.end());
      }
  }
}
