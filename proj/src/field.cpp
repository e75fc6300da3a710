#include "thick/field.hpp"

#include "thick/error.hpp"

namespace thick {

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t reduce(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

void same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw DomainError("field mismatch: " + a.to_string() + " vs " + b.to_string());
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime_u32(p))
    throw DomainError("characteristic must be a prime below 2^31, got " + std::to_string(p));
  return Field(p);
}

std::string Field::to_string() const { return p_ == 0 ? "QQ" : "F_" + std::to_string(p_); }

FieldElem::FieldElem(const Field& field, long value) {
  if (field.is_rational()) {
    v_ = mpq_class(value);
  } else {
    auto p = static_cast<long>(field.characteristic());
    long r = value % p;
    if (r < 0) r += p;
    v_ = Mod{static_cast<std::uint32_t>(r), field.characteristic()};
  }
}

FieldElem::FieldElem(const Field& field, const mpz_class& value) {
  if (field.is_rational())
    v_ = mpq_class(value);
  else
    v_ = Mod{reduce(value, field.characteristic()), field.characteristic()};
}

FieldElem::FieldElem(const Field& field, const mpz_class& num, const mpz_class& den) {
  if (field.is_rational()) {
    if (den == 0) throw DomainError("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    v_ = std::move(q);
  } else {
    std::uint32_t p = field.characteristic();
    std::uint32_t d = reduce(den, p);
    if (d == 0) throw DomainError("denominator not invertible in " + field.to_string());
    std::uint64_t n = reduce(num, p);
    v_ = Mod{static_cast<std::uint32_t>(n * pow_mod(d, p - 2, p) % p), p};
  }
}

Field FieldElem::field() const {
  if (auto m = std::get_if<Mod>(&v_)) return Field(m->p);
  return Field::rationals();
}

bool FieldElem::is_zero() const {
  if (auto m = std::get_if<Mod>(&v_)) return m->value == 0;
  return std::get<mpq_class>(v_) == 0;
}

bool FieldElem::is_one() const {
  if (auto m = std::get_if<Mod>(&v_)) return m->value == 1;
  return std::get<mpq_class>(v_) == 1;
}

bool FieldElem::is_negative() const {
  if (auto q = std::get_if<mpq_class>(&v_)) return *q < 0;
  return false;
}

FieldElem FieldElem::operator-() const {
  if (auto m = std::get_if<Mod>(&v_)) return FieldElem(Mod{m->value == 0 ? 0 : m->p - m->value, m->p});
  return FieldElem(mpq_class(-std::get<mpq_class>(v_)));
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (auto m = std::get_if<Mod>(&v_)) return FieldElem(Mod{pow_mod(m->value, m->p - 2, m->p), m->p});
  return FieldElem(mpq_class(1 / std::get<mpq_class>(v_)));
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  if (auto x = std::get_if<FieldElem::Mod>(&a.v_)) {
    auto y = std::get_if<FieldElem::Mod>(&b.v_);
    if (!y || x->p != y->p) same_field(a.field(), b.field());
    std::uint32_t s = x->value + y->value;
    if (s >= x->p) s -= x->p;
    return FieldElem(FieldElem::Mod{s, x->p});
  }
  same_field(a.field(), b.field());
  return FieldElem(mpq_class(std::get<mpq_class>(a.v_) + std::get<mpq_class>(b.v_)));
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  if (auto x = std::get_if<FieldElem::Mod>(&a.v_)) {
    auto y = std::get_if<FieldElem::Mod>(&b.v_);
    if (!y || x->p != y->p) same_field(a.field(), b.field());
    auto prod = static_cast<std::uint64_t>(x->value) * y->value % x->p;
    return FieldElem(FieldElem::Mod{static_cast<std::uint32_t>(prod), x->p});
  }
  same_field(a.field(), b.field());
  return FieldElem(mpq_class(std::get<mpq_class>(a.v_) * std::get<mpq_class>(b.v_)));
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }

bool operator==(const FieldElem& a, const FieldElem& b) { return a.v_ == b.v_; }

std::string FieldElem::to_string() const {
  if (auto m = std::get_if<Mod>(&v_)) return std::to_string(m->value);
  return std::get<mpq_class>(v_).get_str();
}

}  // namespace thick
