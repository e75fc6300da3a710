#include <algorithm>
#include <map>

#include "thick/error.hpp"
#include "thick/verify.hpp"

namespace thick::oracle {

namespace {

using Exp = std::vector<unsigned>;

std::uint64_t power_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (b %= p; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) { return power_mod(a, p - 2, p); }

std::uint32_t characteristic_of(const RingPtr& r) {
  auto p = r->field().characteristic();
  if (p == 0) throw DomainError("oracles work over prime fields only");
  return p;
}

Exp exponents(const Monomial& m, std::size_t n) {
  Exp e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = m[i];
  return e;
}

// Sparse vector over F_p keyed by (component, exponents), ordered
// position-over-term with the ring's monomial order, largest first.
struct Key {
  std::uint32_t comp;
  Exp exp;
};

class Vec {
public:
  struct Greater {
    const MonomialOrder* order;
    bool operator()(const Key& a, const Key& b) const {
      if (a.comp != b.comp) return a.comp < b.comp;
      return order->compare(Monomial(a.exp), Monomial(b.exp)) > 0;
    }
  };
  using Terms = std::map<Key, std::uint64_t, Greater>;

  Vec(const RingPtr& r) : p_(characteristic_of(r)), terms_(Greater{&r->order()}) {}

  void add(const Key& k, std::uint64_t c) {
    c %= p_;
    if (!c) return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
      it->second = (it->second + c) % p_;
      if (!it->second) terms_.erase(it);
    }
  }
  // this -= c * x^shift * g
  void sub_multiple(const Vec& g, std::uint64_t c, const Exp& shift) {
    for (const auto& [k, v] : g.terms_) {
      Key s{k.comp, k.exp};
      for (std::size_t i = 0; i < shift.size(); ++i) s.exp[i] += shift[i];
      add(s, p_ - c * v % p_);
    }
  }
  bool empty() const { return terms_.empty(); }
  const Key& lead() const { return terms_.begin()->first; }
  std::uint64_t lead_coeff() const { return terms_.begin()->second; }
  void pop_lead() { terms_.erase(terms_.begin()); }
  const Terms& terms() const { return terms_; }
  std::uint64_t p() const { return p_; }

private:
  std::uint64_t p_;
  Terms terms_;
};

bool divides(const Exp& a, const Exp& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exp quotient(const Exp& b, const Exp& a) {
  Exp q(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) q[i] = b[i] - a[i];
  return q;
}

Vec from_poly(const Poly& f, std::uint32_t comp = 0) {
  Vec v(f.ring());
  for (const auto& t : f.terms()) v.add({comp, exponents(t.mono, f.ring()->nvars())}, t.coeff.residue());
  return v;
}

Vec from_modvec(const ModVec& m, const RingPtr& r) {
  Vec v(r);
  for (const auto& t : m) v.add({t.comp, exponents(t.mono, r->nvars())}, t.coeff.residue());
  return v;
}

// Full remainder of v by the basis.
Vec remainder(Vec v, const std::vector<Vec>& basis, const RingPtr& r) {
  Vec rest(r);
  while (!v.empty()) {
    const Key lt = v.lead();
    const auto c = v.lead_coeff();
    const Vec* by = nullptr;
    for (const auto& g : basis)
      if (!g.empty() && g.lead().comp == lt.comp && divides(g.lead().exp, lt.exp)) {
        by = &g;
        break;
      }
    if (!by) {
      rest.add(lt, c);
      v.pop_lead();
      continue;
    }
    v.sub_multiple(*by, c * inverse_mod(by->lead_coeff(), v.p()) % v.p(), quotient(lt.exp, by->lead().exp));
  }
  return rest;
}

std::string check_basis(const std::vector<Vec>& basis, const std::vector<Vec>& gens, const RingPtr& r) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].empty()) return "basis element " + std::to_string(i) + " is zero";
    if (basis[i].lead_coeff() != 1) return "basis element " + std::to_string(i) + " is not monic";
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      for (const auto& [k, c] : basis[i].terms())
        if (k.comp == basis[j].lead().comp && divides(basis[j].lead().exp, k.exp))
          return "basis element " + std::to_string(i) + " is not reduced by element " + std::to_string(j);
    }
  }
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const auto& a = basis[i].lead();
      const auto& b = basis[j].lead();
      if (a.comp != b.comp) continue;
      Exp l(a.exp.size());
      for (std::size_t v = 0; v < l.size(); ++v) l[v] = std::max(a.exp[v], b.exp[v]);
      Vec s(r);
      s.sub_multiple(basis[i], s.p() - 1, quotient(l, a.exp));
      s.sub_multiple(basis[j], 1, quotient(l, b.exp));
      if (!remainder(std::move(s), basis, r).empty())
        return "S-polynomial of elements " + std::to_string(i) + " and " + std::to_string(j) + " does not reduce to 0";
    }
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!remainder(gens[i], basis, r).empty()) return "generator " + std::to_string(i) + " does not reduce to 0";
  return "";
}

// Exponent vectors of every monomial of total degree d in n variables.
std::vector<Exp> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Exp> out;
  Exp e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (n == 0) {
    if (d == 0) out.push_back(e);
    return out;
  }
  rec(rec, 0, d);
  return out;
}

// Rank of a dense matrix over F_p by elimination (rows are modified).
std::size_t rank_mod(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    auto inv = inverse_mod(a[rank][c], p);
    for (auto& x : a[rank]) x = x * inv % p;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      auto f = a[r][c];
      for (std::size_t k = 0; k < cols; ++k) a[r][k] = (a[r][k] + p - f * a[rank][k] % p) % p;
    }
    ++rank;
  }
  return rank;
}

Poly random_form(std::mt19937_64& rng, const RingPtr& r, unsigned degree, int terms) {
  std::vector<Poly::Term> out;
  const auto p = r->field().characteristic();
  for (int t = 0; t < terms; ++t) {
    std::vector<unsigned> e(r->nvars(), 0);
    for (unsigned k = 0; k < degree; ++k) ++e[rng() % e.size()];
    out.push_back({Monomial(e), FieldElem(r->field(), static_cast<long>(1 + rng() % (p - 1)))});
  }
  return Poly::from_terms(r, std::move(out));
}

}  // namespace

bool bounded_membership(const Poly& f, const std::vector<Poly>& gens) {
  const auto& r = f.ring();
  const auto p = characteristic_of(r);
  if (f.is_zero()) return true;
  if (!f.is_homogeneous()) throw DomainError("bounded_membership needs a homogeneous target");
  const unsigned d = f.total_degree();
  const auto targets = monomials_of_degree(r->nvars(), d);
  std::map<Exp, std::size_t> row_of;
  for (std::size_t i = 0; i < targets.size(); ++i) row_of[targets[i]] = i;

  // One column per (generator, cofactor monomial); the target is appended last.
  std::vector<std::vector<std::uint64_t>> cols;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw DomainError("bounded_membership needs homogeneous generators");
    const unsigned dg = g.total_degree();
    if (dg > d) continue;
    for (const auto& m : monomials_of_degree(r->nvars(), d - dg)) {
      std::vector<std::uint64_t> col(targets.size(), 0);
      for (const auto& t : g.terms()) {
        auto e = exponents(t.mono, r->nvars());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += m[i];
        auto& x = col[row_of.at(e)];
        x = (x + t.coeff.residue()) % p;
      }
      cols.push_back(std::move(col));
    }
  }
  std::vector<std::uint64_t> rhs(targets.size(), 0);
  for (const auto& t : f.terms()) rhs[row_of.at(exponents(t.mono, r->nvars()))] = t.coeff.residue();

  // Work with the transpose: rows are the columns of the linear system.
  auto with = cols;
  with.push_back(rhs);
  return rank_mod(cols, p) == rank_mod(with, p);
}

std::string check_groebner_basis(const Ideal& ideal) {
  const auto& r = ideal.ring();
  std::vector<Vec> basis, gens;
  for (const auto& g : ideal.groebner_basis()) basis.push_back(from_poly(g));
  for (const auto& g : ideal.generators()) gens.push_back(from_poly(g));
  return check_basis(basis, gens, r);
}

std::string check_groebner_basis(const SubmoduleGB& gb) {
  const auto& r = gb.ring();
  std::vector<Vec> basis, gens;
  for (const auto& g : gb.basis()) basis.push_back(from_modvec(g, r));
  for (const auto& col : gb.generators()) {
    Vec v(r);
    for (std::size_t i = 0; i < col.size(); ++i)
      for (const auto& t : col[i].terms()) v.add({static_cast<std::uint32_t>(i), exponents(t.mono, r->nvars())}, t.coeff.residue());
    gens.push_back(std::move(v));
  }
  return check_basis(basis, gens, r);
}

bool localized_free(const ModulePres& m, std::size_t prime) {
  const auto& ring = m.ring();
  const Ideal& rel = ring->defining();
  const Ideal& p = ring->primes().at(prime).gens;
  auto a = m.matrix();
  for (;;) {
    std::optional<std::pair<std::size_t, std::size_t>> piv;
    for (std::size_t i = 0; i < a.rows() && !piv; ++i)
      for (std::size_t j = 0; j < a.cols() && !piv; ++j)
        if (!p.contains(a.at(i, j))) piv = {i, j};
    if (!piv) break;
    auto [pi, pj] = *piv;
    const Poly e = a.at(pi, pj);
    Matrix b(ring->base(), a.rows() - 1, a.cols() - 1);
    for (std::size_t i = 0, bi = 0; i < a.rows(); ++i) {
      if (i == pi) continue;
      for (std::size_t j = 0, bj = 0; j < a.cols(); ++j) {
        if (j == pj) continue;
        b.set(bi, bj, rel.normal_form(e * a.at(i, j) - a.at(i, pj) * a.at(pi, j)));
        ++bj;
      }
      ++bi;
    }
    a = std::move(b);
  }
  // Every entry now lies in p, so the presentation is minimal over R_p and
  // the module is free exactly when all entries vanish there.
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& e = a.at(i, j);
      if (e.is_zero()) continue;
      if (p.contains(ideal_colon(rel, e))) return false;
    }
  return true;
}

MembershipInstance random_membership_instance(std::mt19937_64& rng, std::uint32_t p) {
  const bool member = rng() % 2 == 0;
  // Random targets are almost always members of an m-primary ideal, so the
  // non-member branch uses two generators in three variables.
  const std::size_t n = member ? 2 + rng() % 2 : 3;
  std::vector<std::string> names{"x", "y", "z"};
  names.resize(n);
  auto r = make_poly_ring(Field::prime(p), names);
  MembershipInstance inst{{}, Poly(r), member};
  const std::size_t k = member ? 2 + rng() % 2 : 2;
  unsigned top = 0;
  for (std::size_t i = 0; i < k; ++i) {
    unsigned d = 1 + rng() % 3;
    Poly g = random_form(rng, r, d, 1 + static_cast<int>(rng() % 3));
    if (g.is_zero()) g = random_form(rng, r, d, 1);
    top = std::max(top, d);
    inst.gens.push_back(std::move(g));
  }
  const unsigned target = top + static_cast<unsigned>(rng() % 4);
  if (inst.constructed_member) {
    for (const auto& g : inst.gens) {
      if (g.is_zero()) continue;
      unsigned cd = target - g.total_degree();  // at most 6
      inst.f += random_form(rng, r, cd, 1 + static_cast<int>(rng() % 3)) * g;
    }
  } else {
    inst.f = random_form(rng, r, target, 1 + static_cast<int>(rng() % 4));
  }
  return inst;
}

}  // namespace thick::oracle
