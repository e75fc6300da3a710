#include "thick/poly.hpp"

#include <algorithm>
#include <numeric>
#include <regex>

#include "thick/error.hpp"

namespace thick {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::span<const unsigned> exponents) {
  if (exponents.size() > kMaxVars) throw DomainError("too many variables in monomial");
  std::uint64_t deg = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > 0xFFFF) throw DomainError("exponent overflow");
    e_[i] = static_cast<std::uint16_t>(exponents[i]);
    deg += exponents[i];
  }
  if (deg > 0xFFFFFFFFull) throw DomainError("degree overflow");
  deg_ = static_cast<std::uint32_t>(deg);
}

Monomial Monomial::variable(std::size_t index) {
  Monomial m;
  m.e_.at(index) = 1;
  m.deg_ = 1;
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned(e_[i]) + other.e_[i];
    if (s > 0xFFFF) throw DomainError("exponent overflow");
    r.e_[i] = static_cast<std::uint16_t>(s);
  }
  r.deg_ = deg_ + other.deg_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = static_cast<std::uint16_t>(e_[i] - other.e_[i]);
  r.deg_ = deg_ - other.deg_;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  if (deg_ > other.deg_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (e_[i] && other.e_[i]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::uint32_t deg = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.e_[i] = std::max(a.e_[i], b.e_[i]);
    deg += r.e_[i];
  }
  r.deg_ = deg;
  return r;
}

// ----------------------------------------------------------- MonomialOrder

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence)
    : kind_(kind), precedence_(std::move(precedence)) {
  auto sorted = precedence_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) throw DomainError("variable precedence is not a permutation");
}

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  std::iota(p.begin(), p.end(), 0);
  return MonomialOrder(OrderKind::grevlex, std::move(p));
}

MonomialOrder MonomialOrder::with_weights(std::vector<unsigned> weights) const {
  MonomialOrder o(*this);
  if (std::all_of(weights.begin(), weights.end(), [](unsigned w) { return w == 1; }))
    o.weights_.clear();
  else
    o.weights_ = std::move(weights);
  return o;
}

unsigned MonomialOrder::degree_of(const Monomial& m) const {
  if (weights_.empty()) return m.degree();
  unsigned d = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) d += weights_[i] * m[i];
  return d;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = precedence_.size();
  if (kind_ != OrderKind::lex) {
    unsigned da = degree_of(a), db = degree_of(b);
    if (da != db) return da < db ? -1 : 1;
  }
  if (kind_ == OrderKind::grevlex) {
    for (std::size_t k = n; k-- > 0;) {
      auto v = precedence_[k];
      if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
    }
    return 0;
  }
  for (std::size_t k = 0; k < n; ++k) {
    auto v = precedence_[k];
    if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
  }
  return 0;
}

// ---------------------------------------------------------------- PolyRing

PolyRing::PolyRing(Field field, std::vector<std::string> vars, std::optional<MonomialOrder> order,
                   std::vector<unsigned> weights)
    : field_(field),
      vars_(std::move(vars)),
      order_(order ? *order : MonomialOrder::grevlex(vars_.size())),
      weights_(std::move(weights)) {
  static const std::regex ident("[a-zA-Z][a-zA-Z0-9_]*");
  if (vars_.size() > kMaxVars)
    throw DomainError("at most " + std::to_string(kMaxVars) + " variables are supported");
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (!std::regex_match(vars_[i], ident)) throw DomainError("invalid variable name '" + vars_[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (vars_[i] == vars_[j]) throw DomainError("duplicate variable '" + vars_[i] + "'");
  }
  if (order_.precedence().size() != vars_.size()) throw DomainError("order size does not match variables");
  if (weights_.empty()) weights_.assign(vars_.size(), 1);
  if (weights_.size() != vars_.size()) throw DomainError("weights size does not match variables");
  for (auto w : weights_)
    if (w == 0) throw DomainError("variable weights must be positive");
  order_ = order_.with_weights(weights_);
}

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

bool PolyRing::same_as(const PolyRing& other) const {
  return this == &other || (field_ == other.field_ && vars_ == other.vars_ && order_ == other.order_ &&
                            weights_ == other.weights_);
}

RingPtr make_poly_ring(Field field, std::vector<std::string> vars, std::optional<MonomialOrder> order,
                       std::vector<unsigned> weights) {
  return std::make_shared<const PolyRing>(field, std::move(vars), std::move(order), std::move(weights));
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a.get() == b.get()) return;
  if (!a || !b || !a->same_as(*b)) throw DomainError("polynomial ring mismatch");
}

// -------------------------------------------------------------------- Poly

namespace {

struct TermGreater {
  const MonomialOrder* order;
  bool operator()(const Poly::Term& a, const Poly::Term& b) const { return order->compare(a.mono, b.mono) > 0; }
};

}  // namespace

Poly Poly::constant(RingPtr ring, const FieldElem& c) { return monomial(std::move(ring), Monomial(), c); }

Poly Poly::constant(RingPtr ring, long c) {
  FieldElem e(ring->field(), c);
  return constant(std::move(ring), e);
}

Poly Poly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw DomainError("variable index out of range");
  FieldElem one(ring->field(), 1);
  return monomial(std::move(ring), Monomial::variable(index), one);
}

Poly Poly::monomial(RingPtr ring, const Monomial& m, const FieldElem& c) {
  Poly p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  Poly p(std::move(ring));
  TermGreater gt{&p.ring_->order()};
  std::sort(terms.begin(), terms.end(), gt);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = p.terms_.back().coeff + t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

FieldElem Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return FieldElem(ring_->field(), 0);
}

const Poly::Term& Poly::leading() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return terms_.front();
}

unsigned Poly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

unsigned Poly::weighted_degree(const Monomial& m) const {
  unsigned d = 0;
  for (std::size_t i = 0; i < ring_->nvars(); ++i) d += ring_->weights()[i] * m[i];
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = weighted_degree(terms_.front().mono);
  for (const auto& t : terms_)
    if (weighted_degree(t.mono) != d) return false;
  return true;
}

Poly Poly::operator-() const {
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_ring(a.ring_, b.ring_);
  const auto& ord = a.ring_->order();
  Poly r(a.ring_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    int c = ord.compare(a.terms_[i].mono, b.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(b.terms_[j++]);
    } else {
      auto s = a.terms_[i].coeff + b.terms_[j].coeff;
      if (!s.is_zero()) r.terms_.push_back({a.terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
  if (a.terms_.size() < b.terms_.size()) return b * a;
  Poly acc(a.ring_);
  for (const auto& t : b.terms_) acc = acc + a.times_term(t.mono, t.coeff);
  return acc;
}

Poly Poly::scaled(const FieldElem& c) const {
  Poly r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
  return r;
}

Poly Poly::times_term(const Monomial& m, const FieldElem& c) const {
  Poly r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves the order, so no re-sort is needed.
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

Poly Poly::derivative(std::size_t index) const {
  if (index >= ring_->nvars()) throw DomainError("variable index out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned e = t.mono[index];
    if (e == 0) continue;
    FieldElem c = t.coeff * FieldElem(ring_->field(), static_cast<long>(e));
    if (c.is_zero()) continue;
    out.push_back({t.mono / Monomial::variable(index), c});
  }
  return from_terms(ring_, std::move(out));
}

Poly Poly::substitute(std::size_t index, const Poly& value) const {
  require_same_ring(ring_, value.ring_);
  if (index >= ring_->nvars()) throw DomainError("variable index out of range");
  Poly result(ring_);
  std::vector<Poly> powers{Poly::constant(ring_, 1)};
  for (const auto& t : terms_) {
    unsigned e = t.mono[index];
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    std::array<unsigned, kMaxVars> exps{};
    for (std::size_t v = 0; v < ring_->nvars(); ++v) exps[v] = v == index ? 0 : t.mono[v];
    Monomial rest(std::span<const unsigned>(exps.data(), ring_->nvars()));
    result += powers[e].times_term(rest, t.coeff);
  }
  return result;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    FieldElem c = t.coeff;
    bool neg = c.is_negative();
    if (neg) c = -c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    std::string mono;
    for (std::size_t v = 0; v < ring_->nvars(); ++v) {
      unsigned e = t.mono[v];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->vars()[v];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty())
      out += c.to_string();
    else if (c.is_one())
      out += mono;
    else
      out += c.to_string() + "*" + mono;
  }
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  return true;
}

Poly::Term leading_term(const Poly& f, const MonomialOrder& order) {
  if (f.is_zero()) throw DomainError("leading term of the zero polynomial");
  const Poly::Term* best = &f.terms().front();
  for (const auto& t : f.terms())
    if (order.compare(t.mono, best->mono) > 0) best = &t;
  return *best;
}

}  // namespace thick
