#ifndef THICK_POLY_HPP
#define THICK_POLY_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "thick/field.hpp"

namespace thick {

/// Largest number of ring variables supported by the packed monomial layout.
inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector with cached total degree. Exponents are 16-bit and every
/// product is overflow-checked.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::span<const unsigned> exponents);

  static Monomial variable(std::size_t index);

  unsigned operator[](std::size_t i) const { return e_[i]; }
  unsigned degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; the caller guarantees other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  std::array<std::uint16_t, kMaxVars> e_{};
  std::uint32_t deg_ = 0;
};

enum class OrderKind { grevlex, lex, glex };

class MonomialOrder {
public:
  /// `precedence[0]` is the index of the largest variable.
  MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence);
  static MonomialOrder grevlex(std::size_t nvars);

  OrderKind kind() const { return kind_; }
  const std::vector<std::size_t>& precedence() const { return precedence_; }

  /// Same order, but grevlex and glex compare weighted degree first.
  MonomialOrder with_weights(std::vector<unsigned> weights) const;

  /// Negative, zero or positive as a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
  unsigned degree_of(const Monomial& m) const;

  OrderKind kind_;
  std::vector<std::size_t> precedence_;
  std::vector<unsigned> weights_;  // empty means standard grading
};

/// Polynomial ring k[vars] with a fixed monomial order and positive variable
/// weights (all 1 for the standard grading).
class PolyRing {
public:
  PolyRing(Field field, std::vector<std::string> vars, std::optional<MonomialOrder> order = {},
           std::vector<unsigned> weights = {});

  const Field& field() const { return field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const MonomialOrder& order() const { return order_; }
  const std::vector<unsigned>& weights() const { return weights_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  bool same_as(const PolyRing& other) const;

private:
  Field field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
  std::vector<unsigned> weights_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_poly_ring(Field field, std::vector<std::string> vars,
                       std::optional<MonomialOrder> order = {}, std::vector<unsigned> weights = {});

/// Throws DomainError unless a and b denote the same polynomial ring.
void require_same_ring(const RingPtr& a, const RingPtr& b);

class Poly {
public:
  struct Term {
    Monomial mono;
    FieldElem coeff;
  };

  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly constant(RingPtr ring, const FieldElem& c);
  static Poly constant(RingPtr ring, long c);
  static Poly variable(RingPtr ring, std::size_t index);
  static Poly monomial(RingPtr ring, const Monomial& m, const FieldElem& c);
  /// Combines like terms, drops zeros and sorts by the ring order.
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Coefficient of the monomial 1.
  FieldElem constant_term() const;
  /// Leading term under the ring's own order; requires a nonzero polynomial.
  const Term& leading() const;
  unsigned total_degree() const;
  /// Weighted degree of the leading term; homogeneous polys have one degree.
  unsigned weighted_degree(const Monomial& m) const;
  bool is_homogeneous() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const FieldElem& c) const;
  Poly times_term(const Monomial& m, const FieldElem& c) const;
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }

  /// Formal partial derivative with respect to variable `index`.
  Poly derivative(std::size_t index) const;
  /// Replaces variable `index` by `value`.
  Poly substitute(std::size_t index, const Poly& value) const;

  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b);

private:
  RingPtr ring_;
  std::vector<Term> terms_;  // strictly decreasing in the ring order
};

/// Order-maximal monomial of f under `order`, with its coefficient.
Poly::Term leading_term(const Poly& f, const MonomialOrder& order);

}  // namespace thick

#endif
