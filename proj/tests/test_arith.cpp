#include <doctest.h>

#include <random>

#include "support.hpp"
#include "thick/error.hpp"

using namespace thick;
using namespace thick::test;

TEST_CASE("parse: examples") {
  auto r = ring_of(5, {"x", "y"});
  auto f = P(r, "x^2*y + 3");
  REQUIRE(f.size() == 2);
  CHECK(f.terms()[0].mono[0] == 2);
  CHECK(f.terms()[0].mono[1] == 1);
  CHECK(f.terms()[1].mono.is_one());
  CHECK(f.terms()[1].coeff.residue() == 3);

  auto q = ring_of(0, {"x"});
  CHECK(P(q, "x - x").is_zero());

  auto r1 = ring_of(5, {"x"});
  auto g = P(r1, "7*x");
  REQUIRE(g.size() == 1);
  CHECK(g.terms()[0].coeff.residue() == 2);
}

TEST_CASE("parse: errors carry positions") {
  auto r = ring_of(5, {"x", "y"});
  CHECK_THROWS_AS(P(r, "x + z"), ParseError);
  CHECK_THROWS_AS(P(r, "x +"), ParseError);
  CHECK_THROWS_AS(P(r, "1/2*x"), ParseError);
  try {
    P(r, "x + z");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  auto q = ring_of(0, {"x"});
  CHECK(P(q, "1/2*x").to_string() == "1/2*x");
  CHECK_THROWS_AS(P(q, "1/0*x"), Error);
}

TEST_CASE("poly ops: examples") {
  auto q = ring_of(0, {"x", "y"});
  CHECK((P(q, "x+y") * P(q, "x-y")) == P(q, "x^2 - y^2"));
  auto f2 = ring_of(2, {"x", "y"});
  auto s = P(f2, "x+y");
  CHECK(s * s == P(f2, "x^2 + y^2"));
  auto r = ring_of(5, {"x", "y"});
  CHECK(P(r, "x*y").substitute(1, Poly::constant(r, 1)) == P(r, "x"));
  auto other = ring_of(5, {"x", "z"});
  CHECK_THROWS_AS(P(r, "x") + P(other, "x"), DomainError);
}

TEST_CASE("leading_term: examples") {
  auto r = ring_of(5, {"x", "y"});
  auto lt = leading_term(P(r, "x^2*y + x*y^2 + y^3"), r->order());
  CHECK(lt.mono[0] == 2);
  CHECK(lt.mono[1] == 1);
  auto lt2 = leading_term(P(r, "x^2 + y^3"), r->order());
  CHECK(lt2.mono[0] == 0);
  CHECK(lt2.mono[1] == 3);
  CHECK(leading_term(P(r, "3"), r->order()).mono.is_one());
  CHECK_THROWS_AS(leading_term(Poly(r), r->order()), DomainError);
}

TEST_CASE("field arithmetic") {
  auto f = Field::prime(5);
  CHECK((FieldElem(f, 3) * FieldElem(f, 2)).residue() == 1);
  CHECK(FieldElem(f, -1).residue() == 4);
  CHECK(FieldElem(f, 2).inverse().residue() == 3);
  CHECK_THROWS_AS(Field::prime(4), DomainError);
  auto q = Field::rationals();
  CHECK(FieldElem(q, 2, -4).to_string() == "-1/2");
  CHECK_THROWS_AS(FieldElem(q, 0).inverse(), DomainError);
}

TEST_CASE("monomial exponent overflow is reported") {
  auto r = ring_of(5, {"x"});
  auto big = P(r, "x^40000");
  CHECK_THROWS_AS(big * big, DomainError);
  CHECK_THROWS_AS(P(r, "x^70000"), ParseError);
}

namespace {

Poly random_poly(std::mt19937& gen, const RingPtr& r, unsigned max_deg, unsigned terms) {
  std::uniform_int_distribution<unsigned> c(0, 4), e(0, max_deg);
  std::vector<Poly::Term> ts;
  for (unsigned t = 0; t < terms; ++t) {
    std::vector<unsigned> ex(r->nvars());
    unsigned budget = e(gen);
    for (auto& x : ex) {
      x = std::uniform_int_distribution<unsigned>(0, budget)(gen);
      budget -= x;
    }
    ts.push_back({Monomial(ex), FieldElem(r->field(), static_cast<long>(c(gen)))});
  }
  return Poly::from_terms(r, ts);
}

}  // namespace

TEST_CASE("property: ring laws and leading terms over F_5") {
  std::mt19937 gen(20240611);
  auto r = ring_of(5, {"x", "y", "z"});
  for (int n = 0; n < 200; ++n) {
    auto f = random_poly(gen, r, 4, 5), g = random_poly(gen, r, 4, 5);
    CHECK((f + g) - g == f);
    CHECK(f * g == g * f);
    if (!f.is_zero() && !g.is_zero()) {
      auto lf = leading_term(f, r->order()), lg = leading_term(g, r->order());
      auto lfg = leading_term(f * g, r->order());
      CHECK(lfg.mono == lf.mono * lg.mono);
      CHECK(lfg.coeff == lf.coeff * lg.coeff);
    }
  }
}

TEST_CASE("property: parse/print round trip") {
  std::mt19937 gen(7);
  auto r = ring_of(5, {"x", "y", "z"});
  auto q = ring_of(0, {"a", "b"});
  for (int n = 0; n < 100; ++n) {
    auto f = random_poly(gen, r, 5, 6);
    CHECK(P(r, f.to_string()) == f);
    std::vector<Poly::Term> ts;
    for (int t = 0; t < 3; ++t) {
      unsigned ea = gen() % 4, eb = gen() % 4;
      long num = static_cast<long>(gen() % 21) - 10, den = static_cast<long>(gen() % 6) + 1;
      ts.push_back({Monomial(std::vector<unsigned>{ea, eb}), FieldElem(q->field(), num, den)});
    }
    auto g = Poly::from_terms(q, ts);
    CHECK(P(q, g.to_string()) == g);
  }
}
