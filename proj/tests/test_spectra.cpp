#include <doctest.h>

#include <random>

#include "support.hpp"
#include "thick/error.hpp"

using namespace thick;
using namespace thick::test;

TEST_CASE("make_ring: examples") {
  auto node = node_ring();
  CHECK(node->dim() == 1);
  CHECK(node->flags().is_hypersurface);
  CHECK(node->flags().is_gorenstein);
  CHECK_FALSE(node->flags().is_regular);

  auto reg = regular1_ring();
  CHECK(reg->dim() == 1);
  CHECK(reg->flags().is_regular);

  auto quad = quad2_ring();
  CHECK(quad->dim() == 0);
  CHECK_FALSE(quad->flags().is_hypersurface);
  CHECK(quad->flags().is_gorenstein);
  CHECK(quad->minimal_relations().size() == 2);
}

TEST_CASE("make_ring: validation") {
  CHECK_THROWS_AS(make_test_ring("bad", 5, {"x", "y"}, {"x + y^2"}, {}), DomainError);
  CHECK_THROWS_AS(make_test_ring("bad", 5, {"x", "y"}, {"x*y"}, {{"p", {"x + y"}}}), DomainError);
  CHECK_THROWS_AS(make_test_ring("bad", 5, {"x"}, {"1"}, {}), DomainError);
  CHECK_THROWS_AS(make_test_ring("bad", 5, {"x", "y"}, {"x^2"}, {{"p", {"x^2"}}}), DomainError);
  CHECK_THROWS_AS(make_test_ring("bad", 5, {"x", "y"}, {"x*y"}, {{"m", {"x", "y"}}}, {false, {}}), DomainError);
  // m is added when missing.
  auto r = make_test_ring("r", 5, {"x", "y"}, {"x*y"}, {{"px", {"x"}}});
  CHECK(r->primes().size() == 2);
  CHECK(r->primes()[r->maximal_index()].name == "m");
  // A case-2 ring keeps asserted flags and records them.
  CHECK_FALSE(quad2_ring()->notes().empty());
}

TEST_CASE("singular_locus: examples") {
  CHECK(node_ring()->singular_locus().to_string() == "{m}");
  CHECK(regular1_ring()->singular_locus().is_empty());
  auto rib = ribbon_ring();
  CHECK(rib->singular_locus().member_indices().size() == 2);
  CHECK(rib->singular_locus().to_string() == "{px}");
  CHECK(dualnum_ring()->singular_locus().to_string() == "{m}");
  CHECK(quad2_ring()->singular_locus().to_string() == "{m}");
  CHECK(cusp_ring()->singular_locus().to_string() == "{m}");
  CHECK(whitney3_ring()->singular_locus().member_indices().size() == 5);
}

TEST_CASE("spec_ops: examples") {
  auto rib = ribbon_ring();
  auto px = *rib->prime_index("px"), m = rib->maximal_index();
  auto u = SpecSubset::closure_of(rib, {px}).unite(SpecSubset::closure_of(rib, {m}));
  CHECK(u.basis() == std::vector<std::size_t>{px});
  CHECK(SpecSubset::closure_of(rib, {px}).contains_prime(m));

  auto node = node_ring();
  auto mm = SpecSubset::closure_of(node, {node->maximal_index()});
  CHECK_FALSE(mm.contains_prime(*node->prime_index("px")));
  CHECK_THROWS_AS(mm.unite(SpecSubset::empty(rib)), DomainError);
  CHECK_THROWS_AS(SpecSubset(node, 1ull << *node->prime_index("px")), DomainError);
}

TEST_CASE("enumerate_spec_closed_in: examples") {
  auto node = node_ring();
  CHECK(enumerate_spec_closed_in(node, node->singular_locus()).size() == 2);
  auto rib = ribbon_ring();
  auto subs = enumerate_spec_closed_in(rib, rib->singular_locus());
  REQUIRE(subs.size() == 3);
  CHECK(subs[0].is_empty());
  CHECK(subs[1].to_string() == "{m}");
  CHECK(subs[2].to_string() == "{px}");
  auto reg = regular1_ring();
  CHECK(enumerate_spec_closed_in(reg, reg->singular_locus()).size() == 1);
  auto w = whitney3_ring();
  CHECK(enumerate_spec_closed_in(w, w->singular_locus()).size() == 10);
}

namespace {

// Independent count: a registry subset is specialization-closed iff it is
// upward closed under ideal containment tested directly on the ideals.
std::size_t closed_subsets_oracle(const RingRef& r, std::uint64_t bound) {
  const auto& ps = r->primes();
  std::size_t count = 0;
  for (std::uint64_t s = 0; s < (1ull << ps.size()); ++s) {
    if (s & ~bound) continue;
    bool closed = true;
    for (std::size_t i = 0; i < ps.size() && closed; ++i)
      for (std::size_t j = 0; j < ps.size() && closed; ++j)
        if (((s >> i) & 1u) && !((s >> j) & 1u) && ps[j].gens.contains(ps[i].gens)) closed = false;
    count += closed;
  }
  return count;
}

}  // namespace

TEST_CASE("property: closed-subset enumeration matches brute force") {
  for (auto r : {node_ring(), ribbon_ring(), whitney3_ring(), regular1_ring(), cusp_ring(), quad2_ring()}) {
    CHECK(enumerate_spec_closed_in(r, r->singular_locus()).size() ==
          closed_subsets_oracle(r, r->singular_locus().members()));
    SpecSubset all(r, (1ull << r->primes().size()) - 1);
    auto subs = enumerate_spec_closed_in(r, all);
    CHECK(subs.size() == closed_subsets_oracle(r, all.members()));
    for (std::size_t i = 0; i < subs.size(); ++i)
      for (std::size_t j = i + 1; j < subs.size(); ++j) CHECK_FALSE(subs[i] == subs[j]);
  }
}

TEST_CASE("property: singular locus is specialization-closed") {
  for (auto r : {node_ring(), ribbon_ring(), whitney3_ring(), cusp_ring(), dualnum_ring()}) {
    const auto& s = r->singular_locus();
    for (auto i : s.member_indices())
      for (std::size_t j = 0; j < r->primes().size(); ++j)
        if (r->prime_contained(i, j)) CHECK(s.contains_prime(j));
  }
}

TEST_CASE("property: union laws") {
  auto w = whitney3_ring();
  SpecSubset all(w, (1ull << w->primes().size()) - 1);
  auto subs = enumerate_spec_closed_in(w, all);
  std::mt19937 gen(99);
  for (int n = 0; n < 50; ++n) {
    const auto& a = subs[gen() % subs.size()];
    const auto& b = subs[gen() % subs.size()];
    const auto& c = subs[gen() % subs.size()];
    CHECK(a.unite(b) == b.unite(a));
    CHECK(a.unite(b).unite(c) == a.unite(b.unite(c)));
    CHECK(a.unite(a) == a);
  }
}
