#include "thick/module.hpp"

#include <mutex>

#include "thick/error.hpp"

namespace thick {

struct ModulePres::Cache {
  std::recursive_mutex mu;
  // a[k] presents Omega^k M; a[0] is the minimal presentation of M.
  std::vector<Matrix> a;
  // f[k] is the differential f_{k+1}.
  std::vector<Matrix> f;
  std::optional<std::vector<Ideal>> fitting;
  std::vector<std::vector<Poly>> fitting_minors;
  std::vector<signed char> free_at;  // -1 unknown
  std::optional<DepthInfo> depth;
};

ModulePres::ModulePres(RingRef ring, Matrix matrix)
    : ring_(std::move(ring)), matrix_(std::move(matrix)), cache_(std::make_shared<Cache>()) {
  require_same_ring(ring_->base(), matrix_.ring());
  matrix_ = matrix_.reduced(ring_->defining());
}

ModulePres ModulePres::free(const RingRef& ring, std::size_t rank) {
  return ModulePres(ring, Matrix(ring->base(), rank, 0));
}

ModulePres ModulePres::cyclic(const RingRef& ring, const std::vector<Poly>& gens) {
  return ModulePres(ring, Matrix::from_rows(ring->base(), {gens}, gens.size()));
}

ModulePres ModulePres::quotient_by_prime(const RingRef& ring, std::size_t prime) {
  return cyclic(ring, ring->primes().at(prime).gens.generators());
}

void require_gorenstein(const RingRef& ring, const char* what) {
  if (!ring->flags().is_gorenstein) throw DomainError(std::string(what) + " requires a Gorenstein ring");
}

namespace {

using Lock = std::lock_guard<std::recursive_mutex>;

// Extends a minimal resolution by syzygies: a[k] -> (f_{k+1}, a[k+1]).
void extend_resolution(std::vector<Matrix>& a, std::vector<Matrix>& f, const Ideal& rel, std::size_t steps) {
  while (f.size() < steps) {
    const Matrix& cur = a.back();
    Matrix c = kernel_matrix(cur, rel);
    auto mz = minimalize_matrix(c, rel);
    f.push_back(cur.select_columns(mz.kept_rows));
    a.push_back(std::move(mz.matrix));
  }
}

void ensure_minimal(const ModulePres& m) {
  auto& c = m.cache();
  Lock lock(c.mu);
  if (c.a.empty()) c.a.push_back(minimalize_matrix(m.matrix(), m.ring()->defining()).matrix);
}

const Matrix& minimal_matrix(const ModulePres& m) {
  ensure_minimal(m);
  return m.cache().a.front();
}

void ensure_steps(const ModulePres& m, std::size_t steps) {
  ensure_minimal(m);
  auto& c = m.cache();
  Lock lock(c.mu);
  extend_resolution(c.a, c.f, m.ring()->defining(), steps);
}

// Membership in the column span of a fixed matrix modulo relations, with the
// Groebner basis built once.
class Span {
public:
  Span(const Matrix& a, const Ideal& rel) : rows_(a.rows()), engine_(a.ring(), a.rows()) {
    for (const auto& f : rel.groebner_basis())
      for (std::uint32_t i = 0; i < rows_; ++i) {
        ModVec v;
        for (const auto& t : f.terms()) v.push_back({i, t.mono, t.coeff});
        engine_.insert(v);
      }
    for (const auto& col : a.columns()) engine_.insert(to_modvec(col));
    engine_.complete();
  }
  bool contains(const Column& v) const { return engine_.reduce(to_modvec(v)).empty(); }

private:
  std::size_t rows_;
  GroebnerEngine engine_;
};

}  // namespace

ModulePres minimalize(const ModulePres& m) {
  ModulePres out(m.ring(), minimal_matrix(m));
  return out;
}

ModulePres direct_sum(const ModulePres& a, const ModulePres& b) {
  if (a.ring() != b.ring()) throw DomainError("direct sum of modules over different rings");
  return ModulePres(a.ring(), block_diagonal(a.matrix(), b.matrix()));
}

Resolution resolution(const ModulePres& m, std::size_t steps) {
  ensure_steps(m, steps);
  auto& c = m.cache();
  Lock lock(c.mu);
  Resolution r;
  r.betti.push_back(c.a.front().rows());
  for (std::size_t k = 0; k < steps; ++k) {
    r.differentials.push_back(c.f[k]);
    r.betti.push_back(c.f[k].cols());
  }
  return r;
}

ModulePres syzygy(const ModulePres& m, std::size_t n) {
  ensure_steps(m, n);
  auto& c = m.cache();
  Lock lock(c.mu);
  return ModulePres(m.ring(), c.a[n]);
}

bool is_free(const ModulePres& m) { return minimal_matrix(m).cols() == 0; }
std::size_t num_generators(const ModulePres& m) { return minimal_matrix(m).rows(); }
bool is_zero_module(const ModulePres& m) { return num_generators(m) == 0; }

ProjDim pd_finite(const ModulePres& m) {
  require_gorenstein(m.ring(), "pd_finite");
  const auto d = static_cast<std::size_t>(m.ring()->dim());
  auto res = resolution(m, d);
  if (!is_free(syzygy(m, d))) return {false, 0};
  std::size_t pd = 0;
  for (std::size_t i = 0; i < res.betti.size(); ++i)
    if (res.betti[i] != 0) pd = i;
  return {true, pd};
}

const std::vector<Ideal>& fitting_chain(const ModulePres& m) {
  auto& c = m.cache();
  Lock lock(c.mu);
  if (!c.fitting) {
    const Matrix& a = minimal_matrix(m);
    const Ideal& rel = m.ring()->defining();
    std::vector<Ideal> chain;
    for (std::size_t j = 0; j <= a.rows(); ++j) {
      auto ms = minors(a, a.rows() - j);
      c.fitting_minors.push_back(ms);
      std::vector<Poly> gens = rel.generators();
      gens.insert(gens.end(), ms.begin(), ms.end());
      chain.emplace_back(m.ring()->base(), gens);
    }
    c.fitting = std::move(chain);
  }
  return *c.fitting;
}

bool free_at(const ModulePres& m, std::size_t prime) {
  auto& c = m.cache();
  Lock lock(c.mu);
  const auto& ring = m.ring();
  if (c.free_at.empty()) c.free_at.assign(ring->primes().size(), -1);
  if (c.free_at[prime] >= 0) return c.free_at[prime] == 1;
  const auto& chain = fitting_chain(m);
  const Ideal& p = ring->primes()[prime].gens;
  std::size_t r0 = 0;
  while (p.contains(chain[r0])) ++r0;  // chain.back() is the unit ideal
  bool free = true;
  if (r0 > 0) {
    for (const auto& g : c.fitting_minors[r0 - 1]) {
      // g vanishes in R_p iff its annihilator escapes p.
      if (p.contains(ideal_colon(ring->defining(), g))) {
        free = false;
        break;
      }
    }
  }
  c.free_at[prime] = free ? 1 : 0;
  return free;
}

SpecSubset nonfree_locus(const ModulePres& m) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < m.ring()->primes().size(); ++i)
    if (!free_at(m, i)) mask |= 1ull << i;
  return SpecSubset(m.ring(), mask);
}

ModulePres dual(const ModulePres& m) {
  const Ideal& rel = m.ring()->defining();
  const Matrix& a = minimal_matrix(m);
  Matrix k = kernel_matrix(a.transpose(), rel);
  if (k.cols() == 0) return ModulePres::zero(m.ring());
  return minimalize(ModulePres(m.ring(), kernel_matrix(k, rel)));
}

ModulePres strip_free_summands(const ModulePres& m) {
  const Ideal& rel = m.ring()->defining();
  Matrix a = minimal_matrix(m);
  for (;;) {
    std::optional<std::size_t> row;
    for (std::size_t i = 0; i < a.rows() && !row; ++i)
      if (a.row_is_zero(i)) row = i;
    if (!row) {
      // A homomorphism to R taking a unit value on generator i splits it off.
      Matrix k = kernel_matrix(a.transpose(), rel);
      for (std::size_t i = 0; i < k.rows() && !row; ++i)
        for (std::size_t j = 0; j < k.cols(); ++j)
          if (!k.at(i, j).constant_term().is_zero()) {
            row = i;
            break;
          }
    }
    if (!row) break;
    a = minimalize_matrix(a.without_row(*row), rel).matrix;
  }
  return ModulePres(m.ring(), a);
}

ModulePres cosyzygy(const ModulePres& m, bool check) {
  require_gorenstein(m.ring(), "cosyzygy");
  if (is_zero_module(m)) return m;
  if (check && !is_mcm(m)) throw DomainError("cosyzygy requires a maximal Cohen-Macaulay module");
  return strip_free_summands(dual(syzygy(dual(m), 1)));
}

DepthInfo depth_info(const ModulePres& m) {
  auto& c = m.cache();
  Lock lock(c.mu);
  if (c.depth) return *c.depth;
  const auto& ring = m.ring();
  const Matrix& a = minimal_matrix(m);
  if (a.rows() == 0) {
    c.depth = DepthInfo{true, -1, -1, false};
    return *c.depth;
  }
  // Present M over S by adjoining I * S^rows, then resolve over S.
  std::vector<Column> cols = a.columns();
  for (const auto& g : ring->minimal_relations())
    for (std::size_t i = 0; i < a.rows(); ++i) {
      Column col(a.rows(), Poly(ring->base()));
      col[i] = g;
      cols.push_back(std::move(col));
    }
  Ideal none = ring->zero_ideal();
  std::vector<Matrix> sa{minimalize_matrix(Matrix::from_columns(ring->base(), a.rows(), cols), none).matrix};
  std::vector<Matrix> sf;
  const std::size_t n = ring->base()->nvars();
  while (sa.back().cols() != 0) {
    if (sf.size() > n) throw Error("resolution over the polynomial ring did not terminate");
    extend_resolution(sa, sf, none, sf.size() + 1);
  }
  std::size_t pd = 0;
  for (std::size_t k = 0; k < sf.size(); ++k)
    if (sf[k].cols() != 0) pd = k + 1;
  DepthInfo info;
  info.zero = false;
  info.depth = static_cast<int>(n) - static_cast<int>(pd);
  info.dim = dimension(fitting_chain(m).front());
  info.mcm = info.depth == ring->dim();
  c.depth = info;
  return info;
}

SpecSubset q_locus(const ModulePres& m) {
  require_gorenstein(m.ring(), "q_locus");
  return nonfree_locus(syzygy(m, static_cast<std::size_t>(m.ring()->dim())));
}

bool is_well_defined(const ModuleMap& f) {
  const auto& rel = f.source.ring()->defining();
  if (f.matrix.rows() != f.target.rows() || f.matrix.cols() != f.source.rows())
    throw DomainError("module map has the wrong shape");
  Span target(f.target.matrix(), rel);
  Matrix img = f.matrix * f.source.matrix();
  for (const auto& col : img.columns())
    if (!target.contains(col)) return false;
  return true;
}

std::string check_short_exact(const ModuleMap& inj, const ModuleMap& surj) {
  const auto& ring = inj.source.ring();
  const auto& rel = ring->defining();
  if (!is_well_defined(inj)) return "injection is not well defined";
  if (!is_well_defined(surj)) return "surjection is not well defined";
  if (inj.target.matrix() != surj.source.matrix()) return "middle modules differ";

  Span c_span(surj.target.matrix(), rel);
  for (const auto& col : (surj.matrix * inj.matrix).columns())
    if (!c_span.contains(col)) return "composition is not zero";

  Matrix psi_c = hconcat(surj.matrix, surj.target.matrix());
  Span onto(psi_c, rel);
  for (std::size_t j = 0; j < surj.target.rows(); ++j) {
    Column e(surj.target.rows(), Poly(ring->base()));
    e[j] = Poly::constant(ring->base(), 1);
    if (!onto.contains(e)) return "surjection is not onto";
  }

  const std::size_t ra = inj.source.rows(), rb = inj.target.rows();
  Matrix phi_b = hconcat(inj.matrix, inj.target.matrix());
  Span a_span(inj.source.matrix(), rel);
  for (const auto& k : kernel_matrix(phi_b, rel).columns())
    if (!a_span.contains(Column(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(ra))))
      return "injection has a kernel";

  Span im_phi(phi_b, rel);
  for (const auto& k : kernel_matrix(psi_c, rel).columns())
    if (!im_phi.contains(Column(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(rb))))
      return "not exact in the middle";
  return "";
}

ModulePres image_module(const RingRef& ring, const Matrix& a) {
  if (a.cols() == 0) return ModulePres::zero(ring);
  return minimalize(ModulePres(ring, kernel_matrix(a, ring->defining())));
}

}  // namespace thick
