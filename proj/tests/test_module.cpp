#include <doctest.h>

#include "support.hpp"
#include "thick/error.hpp"

using namespace thick;
using namespace thick::test;

namespace {
std::vector<std::size_t> betti(const ModulePres& m, std::size_t steps) { return resolution(m, steps).betti; }
}  // namespace

TEST_CASE("minimalize: examples") {
  auto node = node_ring();
  auto one = minimalize(module_of(node, {{"1"}}));
  CHECK(one.rows() == 0);
  CHECK(one.cols() == 0);
  auto dn = dualnum_ring();
  auto u = minimalize(module_of(dn, {{"x"}, {"1 + x"}}));
  CHECK(u.cols() == 0);
  CHECK(u.rows() == 1);
  auto m = minimalize(module_of(node, {{"x", "0"}, {"0", "0"}}));
  CHECK(m.matrix().to_string() == "[x; 0]");
  CHECK(m.is_minimal());
  CHECK(minimalize(m).matrix() == m.matrix());
}

TEST_CASE("syzygy: examples") {
  auto node = node_ring();
  auto k = ModulePres::residue_field(node);
  auto o1 = syzygy(k, 1);
  CHECK(o1.rows() == 2);
  CHECK(o1.cols() == 2);
  CHECK(o1.is_minimal());
  auto rx = module_of(node, {{"x"}});
  auto o = syzygy(rx, 1);
  CHECK(o.matrix().to_string() == "[y]");
  CHECK(syzygy(ModulePres::free(node, 1), 2).rows() == 0);
}

TEST_CASE("resolution: examples") {
  CHECK(betti(ModulePres::residue_field(node_ring()), 5) == std::vector<std::size_t>{1, 2, 2, 2, 2, 2});
  CHECK(betti(ModulePres::residue_field(regular1_ring()), 2) == std::vector<std::size_t>{1, 1, 0});
  auto rib = ribbon_ring();
  CHECK(betti(module_of(rib, {{"x"}}), 4) == std::vector<std::size_t>{1, 1, 1, 1, 1});
}

TEST_CASE("resolution: d^2 = 0 and minimality") {
  for (auto r : {node_ring(), ribbon_ring(), cusp_ring(), quad2_ring(), whitney3_ring()}) {
    auto k = ModulePres::residue_field(r);
    auto res = resolution(k, 5);
    for (const auto& f : res.differentials) CHECK(entries_in_maximal_ideal(f));
    for (std::size_t i = 0; i + 1 < res.differentials.size(); ++i)
      CHECK((res.differentials[i] * res.differentials[i + 1]).reduced(r->defining()).is_zero());
  }
}

TEST_CASE("is_free: examples") {
  auto node = node_ring();
  auto f2 = ModulePres::free(node, 2);
  CHECK(is_free(f2));
  CHECK(num_generators(f2) == 2);
  CHECK_FALSE(is_free(ModulePres::residue_field(node)));
  auto unit = module_of(node, {{"1"}});
  CHECK(is_free(unit));
  CHECK(num_generators(unit) == 0);
}

TEST_CASE("pd_finite: examples") {
  CHECK(pd_finite(ModulePres::residue_field(regular1_ring())).to_string() == "finite(1)");
  CHECK(pd_finite(ModulePres::residue_field(dualnum_ring())).to_string() == "infinite");
  auto node = node_ring();
  CHECK(pd_finite(module_of(node, {{"x"}, {"0"}})).to_string() == "infinite");
  CHECK(pd_finite(ModulePres::zero(node)).to_string() == "finite(0)");
  CHECK(pd_finite(ModulePres::free(node, 3)).to_string() == "finite(0)");
  auto bad = make_test_ring("bad", 5, {"x", "y"}, {"x^2", "x*y"}, {});
  CHECK_THROWS_AS(pd_finite(ModulePres::residue_field(bad)), DomainError);
}

TEST_CASE("fitting_chain: examples") {
  auto node = node_ring();
  auto ix = [&](std::initializer_list<const char*> g) {
    std::vector<Poly> gens{P(node->base(), "x*y")};
    for (auto s : g) gens.push_back(P(node->base(), s));
    return Ideal(node->base(), gens);
  };
  auto c1 = fitting_chain(module_of(node, {{"x"}}));
  REQUIRE(c1.size() == 2);
  CHECK(c1[0] == ix({"x"}));
  CHECK(c1[1].is_unit());
  auto c2 = fitting_chain(ModulePres::residue_field(node));
  REQUIRE(c2.size() == 2);
  CHECK(c2[0] == ix({"x", "y"}));
  auto c3 = fitting_chain(module_of(node, {{"x"}, {"0"}}));
  REQUIRE(c3.size() == 3);
  CHECK(c3[0] == ix({}));
  CHECK(c3[1] == ix({"x"}));
  CHECK(c3[2].is_unit());
}

TEST_CASE("nonfree_locus: examples") {
  auto node = node_ring();
  CHECK(nonfree_locus(module_of(node, {{"x"}})).to_string() == "{m}");
  CHECK(nonfree_locus(ModulePres::free(node, 2)).is_empty());
  CHECK(nonfree_locus(ModulePres::residue_field(node)).to_string() == "{m}");
  CHECK(nonfree_locus(ModulePres::zero(node)).is_empty());
}

TEST_CASE("dual and cosyzygy: examples") {
  auto rib = ribbon_ring();
  auto rx = module_of(rib, {{"x"}});
  auto d = dual(rx);
  CHECK(d.matrix().to_string() == "[x]");
  CHECK(cosyzygy(rx).matrix().to_string() == "[x]");
  auto node = node_ring();
  CHECK(dual(ModulePres::free(node, 1)).matrix() == ModulePres::free(node, 1).matrix());
  // Over the node the cosyzygy of R/(x) is R/(y).
  CHECK(cosyzygy(module_of(node, {{"x"}})).matrix().to_string() == "[y]");
  CHECK_THROWS_AS(cosyzygy(ModulePres::residue_field(node)), DomainError);
}

TEST_CASE("strip_free_summands") {
  auto node = node_ring();
  CHECK(strip_free_summands(module_of(node, {{"x"}, {"0"}})).matrix().to_string() == "[x]");
  // R/(x) ⊕ R in disguise: no zero row, but a split surjection onto R.
  auto hidden = module_of(node, {{"x"}, {"x"}});
  auto s = strip_free_summands(hidden);
  CHECK(s.rows() == 1);
  CHECK(nonfree_locus(s) == nonfree_locus(module_of(node, {{"x"}})));
  CHECK(strip_free_summands(ModulePres::free(node, 3)).rows() == 0);
}

TEST_CASE("is_mcm: examples") {
  auto node = node_ring();
  auto i1 = depth_info(module_of(node, {{"x"}}));
  CHECK(i1.depth == 1);
  CHECK(i1.dim == 1);
  CHECK(i1.mcm);
  auto i2 = depth_info(ModulePres::residue_field(node));
  CHECK(i2.depth == 0);
  CHECK_FALSE(i2.mcm);
  CHECK(is_mcm(ModulePres::free(node, 1)));
  auto z = depth_info(ModulePres::zero(node));
  CHECK(z.zero);
  CHECK_FALSE(z.mcm);
}

TEST_CASE("q_locus: examples") {
  auto node = node_ring();
  CHECK(q_locus(ModulePres::residue_field(node)).to_string() == "{m}");
  auto reg = regular1_ring();
  CHECK(q_locus(ModulePres::residue_field(reg)).is_empty());
  CHECK(q_locus(module_of(reg, {{"x^3"}})).is_empty());
  auto rib = ribbon_ring();
  auto q = q_locus(module_of(rib, {{"x"}}));
  CHECK(q.member_indices().size() == 2);
}

TEST_CASE("short exact sequences") {
  auto node = node_ring();
  auto rx = module_of(node, {{"x"}}), ry = module_of(node, {{"y"}}), r = ModulePres::free(node, 1);
  auto b = node->base();
  // 0 -> R/(y) --x--> R --> R/(x) -> 0
  ModuleMap inj{ry, r, Matrix::from_rows(b, {{P(b, "x")}})};
  ModuleMap surj{r, rx, Matrix::from_rows(b, {{P(b, "1")}})};
  CHECK(check_short_exact(inj, surj).empty());
  ModuleMap bad_inj{ry, r, Matrix::from_rows(b, {{P(b, "x^2")}})};
  CHECK_FALSE(check_short_exact(bad_inj, surj).empty());
  ModuleMap not_onto{r, rx, Matrix::from_rows(b, {{P(b, "y")}})};
  CHECK_FALSE(check_short_exact(inj, not_onto).empty());
}
