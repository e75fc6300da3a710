#ifndef THICK_FIELD_HPP
#define THICK_FIELD_HPP

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace thick {

/// Coefficient field: F_p for a prime p < 2^31, or Q when characteristic() == 0.
class Field {
public:
  static Field prime(std::uint32_t p);
  static Field rationals() { return Field(0); }

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

private:
  friend class FieldElem;
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/// An exact scalar. F_p values live in [0, p); Q values are canonical mpq.
class FieldElem {
public:
  FieldElem() : FieldElem(Field::rationals(), 0) {}
  FieldElem(const Field& field, long value);
  FieldElem(const Field& field, const mpz_class& value);
  /// num/den; throws DomainError when den is zero in the field.
  FieldElem(const Field& field, const mpz_class& num, const mpz_class& den);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  FieldElem operator-() const;
  FieldElem inverse() const;

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  friend bool operator==(const FieldElem& a, const FieldElem& b);

  /// Canonical text: F_p values as integers in [0, p); Q as "n" or "n/d".
  std::string to_string() const;
  /// True for Q values that are negative; F_p values never are.
  bool is_negative() const;

  /// Raw residue for F_p elements.
  std::uint32_t residue() const { return std::get<Mod>(v_).value; }

private:
  struct Mod {
    std::uint32_t value;
    std::uint32_t p;
    bool operator==(const Mod&) const = default;
  };
  explicit FieldElem(Mod m) : v_(m) {}
  explicit FieldElem(mpq_class q) : v_(std::move(q)) {}

  std::variant<Mod, mpq_class> v_;
};

}  // namespace thick

#endif
