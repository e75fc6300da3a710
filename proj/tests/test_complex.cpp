#include <doctest.h>

#include "support.hpp"
#include "thick/complex.hpp"
#include "thick/error.hpp"

using namespace thick;
using namespace thick::test;

namespace {

ComplexMap identity_map(const ComplexHandle& x, std::size_t rank0) {
  const auto& base = x.ring()->base();
  return ComplexMap{x, x, {{0, Matrix::identity(base, rank0)}}};
}

}  // namespace

TEST_CASE("free_model: examples") {
  auto node = node_ring();
  auto dk = ComplexHandle::delta(ModulePres::residue_field(node));
  auto f = dk.free_model(3);
  CHECK(f.lo == 0);
  CHECK(f.rank(0) == 1);
  CHECK(f.rank(1) == 2);
  CHECK(f.rank(2) == 2);
  CHECK(f.rank(3) == 2);
  CHECK(f.rank(-1) == 0);

  FreeComplex given;
  given.lo = 0;
  given.ranks = {1, 1};
  given.diffs.emplace(1, Matrix::from_rows(node->base(), {{P(node->base(), "x")}}));
  auto fr = ComplexHandle::free(node, given).free_model(1);
  CHECK(fr.ranks == given.ranks);
  CHECK(fr.diffs.at(1) == given.diffs.at(1));

  auto dr = ComplexHandle::delta(ModulePres::free(node, 1));
  auto c = ComplexHandle::cone(identity_map(dr, 1));
  for (int i = -1; i <= 3; ++i) CHECK(is_zero_module(homology(c, i)));
}

TEST_CASE("free complexes are validated") {
  auto node = node_ring();
  const auto& b = node->base();
  FreeComplex bad;
  bad.lo = 0;
  bad.ranks = {1, 1, 1};
  bad.diffs.emplace(1, Matrix::from_rows(b, {{P(b, "x")}}));
  bad.diffs.emplace(2, Matrix::from_rows(b, {{P(b, "x")}}));
  CHECK_THROWS_AS(ComplexHandle::free(node, bad), DomainError);
  bad.diffs.at(2) = Matrix::from_rows(b, {{P(b, "y")}});
  CHECK_NOTHROW(ComplexHandle::free(node, bad));
}

TEST_CASE("homology and sup: examples") {
  auto node = node_ring();
  auto k = ModulePres::residue_field(node);
  auto dk = ComplexHandle::delta(k);
  CHECK(sup(dk) == 0);
  auto h0 = homology(dk, 0);
  CHECK(fitting_chain(h0).front() == fitting_chain(k).front());
  CHECK(is_zero_module(homology(dk, 1)));
  auto dr = ComplexHandle::delta(ModulePres::free(node, 1));
  CHECK_FALSE(sup(ComplexHandle::cone(identity_map(dr, 1))).has_value());
  CHECK(sup(ComplexHandle::shift(dk, 3)) == 3);
  CHECK(sup(ComplexHandle::delta(ModulePres::zero(node))) == std::nullopt);
}

TEST_CASE("is_perfect: examples") {
  CHECK(is_perfect(ComplexHandle::delta(ModulePres::free(node_ring(), 1))));
  CHECK_FALSE(is_perfect(ComplexHandle::delta(ModulePres::residue_field(dualnum_ring()))));
  CHECK(is_perfect(ComplexHandle::delta(ModulePres::residue_field(regular1_ring()))));
}

TEST_CASE("w_locus: examples") {
  auto node = node_ring();
  auto k = ModulePres::residue_field(node);
  CHECK(w_locus(ComplexHandle::delta(k)).to_string() == "{m}");
  CHECK(w_locus(ComplexHandle::delta(k)) == q_locus(k));
  auto dr = ComplexHandle::delta(ModulePres::free(node, 2));
  CHECK(w_locus(dr).is_empty());
  auto rib = ribbon_ring();
  auto w = w_locus(ComplexHandle::delta(module_of(rib, {{"x"}})));
  CHECK(w.member_indices().size() == 2);
  CHECK(w_locus(ComplexHandle::delta(ModulePres::zero(node))).is_empty());
}

TEST_CASE("stabilize: examples") {
  auto dn = dualnum_ring();
  auto k = ModulePres::residue_field(dn);
  auto s = stabilize(ComplexHandle::delta(k));
  CHECK(s.matrix().to_string() == "[x]");
  auto node = node_ring();
  CHECK(is_zero_module(stabilize(ComplexHandle::delta(ModulePres::free(node, 1)))));
  auto rx = module_of(node, {{"x"}});
  auto sx = stabilize(ComplexHandle::delta(rx));
  CHECK(sx.matrix().to_string() == "[x]");
  CHECK(resolution(sx, 3).betti == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(nonfree_locus(sx).to_string() == "{m}");
}

TEST_CASE("shift and cone laws on the node") {
  auto node = node_ring();
  const auto& b = node->base();
  auto rx = module_of(node, {{"x"}}), k = ModulePres::residue_field(node);
  auto dx = ComplexHandle::delta(rx);
  for (int s : {-2, -1, 1, 2}) CHECK(w_locus(ComplexHandle::shift(dx, s)) == w_locus(dx));
  // R -> R/(x) -> 0: the cone of the projection is quasi-isomorphic to Sigma (x) = Sigma R/(y).
  auto dr = ComplexHandle::delta(ModulePres::free(node, 1));
  auto cone = ComplexHandle::cone(ComplexMap{dr, dx, {{0, Matrix::identity(b, 1)}}});
  CHECK(sup(cone) == 1);
  auto h1 = homology(cone, 1);
  CHECK(fitting_chain(h1).front() == fitting_chain(module_of(node, {{"y"}})).front());
  auto wc = w_locus(cone);
  CHECK(wc.to_string() == "{m}");
  // R/(x) -> k: cone has the same W as the union of its ends at most.
  auto c2 = ComplexHandle::cone(ComplexMap{dx, ComplexHandle::delta(k), {{0, Matrix::identity(b, 1)}}});
  CHECK(w_locus(dx).unite(w_locus(ComplexHandle::delta(k))).contains_subset(w_locus(c2)));
  auto st = stabilize(cone);
  CHECK(nonfree_locus(st) == wc);
  CHECK(is_mcm(st));
}

TEST_CASE("maps that do not lift are rejected") {
  auto node = node_ring();
  const auto& b = node->base();
  auto rx = module_of(node, {{"x"}});
  // R/(x) -> R sending 1 to 1 is not well defined.
  CHECK_THROWS_AS(ComplexHandle::cone(ComplexMap{ComplexHandle::delta(rx), ComplexHandle::delta(ModulePres::free(node, 1)),
                                                 {{0, Matrix::identity(b, 1)}}}),
                  DomainError);
}
