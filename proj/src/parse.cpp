#include "thick/parse.hpp"

#include <cctype>
#include <string>

#include "thick/error.hpp"

namespace thick {

namespace {

class PolyParser {
public:
  PolyParser(std::string_view src, const RingPtr& ring) : src_(src), ring_(ring) {}

  Poly parse() {
    std::vector<Poly::Term> terms;
    skip_ws();
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    }
    terms.push_back(term(negate));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      terms.push_back(term(c == '-'));
    }
    return Poly::from_terms(ring_, std::move(terms));
  }

private:
  Poly::Term term(bool negate) {
    skip_ws();
    FieldElem coeff(ring_->field(), 1);
    Monomial mono;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = coefficient();
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        mono = monomial();
      }
    } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
      mono = monomial();
    } else {
      fail("expected a coefficient or a variable");
    }
    if (negate) coeff = -coeff;
    return {mono, coeff};
  }

  FieldElem coefficient() {
    mpz_class num(digits());
    skip_ws();
    if (peek() == '/') {
      std::size_t at = pos_;
      ++pos_;
      skip_ws();
      if (!ring_->field().is_rational()) fail("fractional coefficients require Q", at);
      mpz_class den(digits());
      if (den == 0) fail("zero denominator", at);
      return FieldElem(ring_->field(), num, den);
    }
    return FieldElem(ring_->field(), num);
  }

  Monomial monomial() {
    std::array<unsigned, kMaxVars> exps{};
    for (;;) {
      skip_ws();
      std::size_t at = pos_;
      std::string name = identifier();
      auto idx = ring_->index_of(name);
      if (!idx) fail("unknown variable '" + name + "'", at);
      unsigned e = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        std::size_t eat = pos_;
        std::string d = digits();
        if (d.size() > 5 || std::stoul(d) > 0xFFFF) fail("exponent overflow", eat);
        e = static_cast<unsigned>(std::stoul(d));
      }
      if (exps[*idx] + e > 0xFFFF) fail("exponent overflow", at);
      exps[*idx] += e;
      skip_ws();
      // A '*' continues the monomial only when a variable follows.
      if (peek() == '*') {
        std::size_t save = pos_;
        ++pos_;
        skip_ws();
        if (std::isalpha(static_cast<unsigned char>(peek()))) continue;
        if (std::isdigit(static_cast<unsigned char>(peek()))) fail("coefficient must precede the monomial");
        pos_ = save;
      }
      break;
    }
    return Monomial(std::span<const unsigned>(exps.data(), ring_->nvars()));
  }

  std::string identifier() {
    if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected a variable");
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  std::string digits() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

  std::string_view src_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view src, const RingPtr& ring) { return PolyParser(src, ring).parse(); }

}  // namespace thick
