#include "thick/complex.hpp"

#include <algorithm>
#include <mutex>

#include "thick/error.hpp"

namespace thick {

std::size_t FreeComplex::rank(int i) const {
  if (i < lo || i > hi()) return 0;
  return ranks[static_cast<std::size_t>(i - lo)];
}

Matrix FreeComplex::diff(const RingPtr& base, int i) const {
  auto it = diffs.find(i);
  if (it != diffs.end()) return it->second;
  return Matrix(base, rank(i - 1), rank(i));
}

struct ComplexHandle::Node {
  enum class Kind { delta, free, shift, cone };
  Kind kind;
  RingRef ring;
  std::optional<ModulePres> module;
  FreeComplex complex;
  std::shared_ptr<const Node> inner;
  int by = 0;
  std::shared_ptr<const ComplexMap> map;
  int top = 0, bottom = 0;

  mutable std::mutex mu;
  mutable std::optional<FreeComplex> model;
};

namespace {

using Node = ComplexHandle::Node;

FreeComplex compute_model(const Node& n, int upto);

void check_composition(const RingRef& ring, const FreeComplex& f) {
  for (int i = f.lo + 2; i <= f.hi(); ++i) {
    Matrix dd = f.diff(ring->base(), i - 1) * f.diff(ring->base(), i);
    if (!dd.reduced(ring->defining()).is_zero())
      throw DomainError("free complex: d_" + std::to_string(i - 1) + " d_" + std::to_string(i) + " is not zero");
  }
}

// Pads the window with zero modules through degree `upto`.
void extend_window(FreeComplex& f, int upto) {
  while (f.hi() < upto) f.ranks.push_back(0);
}

}  // namespace

ComplexHandle ComplexHandle::delta(const ModulePres& m) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::delta;
  n->ring = m.ring();
  n->module = m;
  return ComplexHandle(n);
}

ComplexHandle ComplexHandle::free(const RingRef& ring, FreeComplex complex) {
  if (complex.ranks.empty()) throw DomainError("free complex needs a nonempty degree range");
  for (const auto& [i, d] : complex.diffs) {
    if (i <= complex.lo || i > complex.hi()) throw DomainError("differential outside the degree range");
    if (d.rows() != complex.rank(i - 1) || d.cols() != complex.rank(i))
      throw DomainError("differential d_" + std::to_string(i) + " has the wrong shape");
    require_same_ring(ring->base(), d.ring());
  }
  for (auto& [i, d] : complex.diffs) d = d.reduced(ring->defining());
  check_composition(ring, complex);
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::free;
  n->ring = ring;
  n->top = complex.hi();
  n->bottom = complex.lo;
  n->complex = std::move(complex);
  return ComplexHandle(n);
}

ComplexHandle ComplexHandle::shift(const ComplexHandle& x, int k) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::shift;
  n->ring = x.ring();
  n->inner = x.node_;
  n->by = k;
  n->top = x.top() + k;
  n->bottom = x.bottom() + k;
  return ComplexHandle(n);
}

ComplexHandle ComplexHandle::cone(const ComplexMap& f) {
  if (f.source.ring() != f.target.ring()) throw DomainError("cone of a map between different rings");
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::cone;
  n->ring = f.source.ring();
  n->map = std::make_shared<ComplexMap>(f);
  n->top = std::max(f.source.top() + 1, f.target.top());
  n->bottom = std::min(f.source.bottom() + 1, f.target.bottom());
  // Lifting failures surface here rather than at first use.
  f.lifted(std::max(f.source.top(), f.target.top()) + 1);
  return ComplexHandle(n);
}

const RingRef& ComplexHandle::ring() const { return node_->ring; }
int ComplexHandle::top() const { return node_->top; }
int ComplexHandle::bottom() const { return node_->bottom; }

namespace {

FreeComplex model_of(const Node& n, int upto) {
  std::lock_guard lock(n.mu);
  if (!n.model || n.model->hi() < upto) n.model = compute_model(n, upto);
  return *n.model;
}

FreeComplex compute_model(const Node& n, int upto) {
  const auto& base = n.ring->base();
  FreeComplex out;
  switch (n.kind) {
    case Node::Kind::delta: {
      auto res = resolution(*n.module, static_cast<std::size_t>(std::max(upto, 0)));
      out.lo = 0;
      out.ranks = res.betti;
      for (std::size_t i = 0; i < res.differentials.size(); ++i)
        out.diffs.emplace(static_cast<int>(i) + 1, res.differentials[i]);
      break;
    }
    case Node::Kind::free:
      out = n.complex;
      break;
    case Node::Kind::shift: {
      FreeComplex in = model_of(*n.inner, upto - n.by);
      out.lo = in.lo + n.by;
      out.ranks = in.ranks;
      const bool odd = n.by % 2 != 0;
      for (const auto& [i, d] : in.diffs) out.diffs.emplace(i + n.by, odd ? -d : d);
      break;
    }
    case Node::Kind::cone: {
      const ComplexMap& f = *n.map;
      FreeComplex fx = f.source.free_model(upto - 1), fy = f.target.free_model(upto);
      auto phi = f.lifted(upto - 1);
      auto phi_at = [&](int i) {
        auto it = phi.find(i);
        return it != phi.end() ? it->second : Matrix(base, fy.rank(i), fx.rank(i));
      };
      out.lo = std::min(fx.lo + 1, fy.lo);
      for (int i = out.lo; i <= upto; ++i) out.ranks.push_back(fx.rank(i - 1) + fy.rank(i));
      for (int i = out.lo + 1; i <= upto; ++i) {
        // C_i = X_{i-1} (+) Y_i, d = [[-d^X_{i-1}, 0], [phi_{i-1}, d^Y_i]].
        const std::size_t ax = fx.rank(i - 2), ay = fy.rank(i - 1), bx = fx.rank(i - 1), by = fy.rank(i);
        Matrix d(base, ax + ay, bx + by);
        Matrix dx = fx.diff(base, i - 1), dy = fy.diff(base, i), ph = phi_at(i - 1);
        for (std::size_t r = 0; r < ax; ++r)
          for (std::size_t c = 0; c < bx; ++c) d.set(r, c, -dx.at(r, c));
        for (std::size_t r = 0; r < ay; ++r) {
          for (std::size_t c = 0; c < bx; ++c) d.set(ax + r, c, ph.at(r, c));
          for (std::size_t c = 0; c < by; ++c) d.set(ax + r, bx + c, dy.at(r, c));
        }
        out.diffs.emplace(i, std::move(d));
      }
      break;
    }
  }
  extend_window(out, upto);
  return out;
}

}  // namespace

FreeComplex ComplexHandle::free_model(int upto) const { return model_of(*node_, upto); }

std::map<int, Matrix> ComplexMap::lifted(int upto) const {
  const auto& ring = source.ring();
  const auto& base = ring->base();
  const auto& rel = ring->defining();
  FreeComplex fx = source.free_model(upto), fy = target.free_model(upto);
  std::map<int, Matrix> out;
  const int first = components.empty() ? upto + 1 : components.begin()->first;
  for (int i = std::min(fx.lo, fy.lo); i <= upto; ++i) {
    auto given = components.find(i);
    if (given != components.end()) {
      if (given->second.rows() != fy.rank(i) || given->second.cols() != fx.rank(i))
        throw DomainError("map component " + std::to_string(i) + " has the wrong shape");
      out.emplace(i, given->second.reduced(rel));
    } else if (i < first) {
      out.emplace(i, Matrix(base, fy.rank(i), fx.rank(i)));
    } else {
      // Solve d^Y_i phi_i = phi_{i-1} d^X_i column by column.
      auto prev = out.find(i - 1);
      Matrix rhs = prev != out.end() ? prev->second * fx.diff(base, i) : Matrix(base, fy.rank(i - 1), fx.rank(i));
      Matrix dy = fy.diff(base, i);
      Matrix phi(base, fy.rank(i), fx.rank(i));
      for (std::size_t c = 0; c < rhs.cols(); ++c) {
        auto sol = lift(rhs.column(c), dy.columns(), rel);
        if (!sol) throw DomainError("map does not lift to degree " + std::to_string(i));
        for (std::size_t r = 0; r < sol->size(); ++r) phi.set(r, c, rel.normal_form((*sol)[r]));
      }
      out.emplace(i, std::move(phi));
    }
  }
  for (int i = std::min(fx.lo, fy.lo) + 1; i <= upto; ++i) {
    if (!out.count(i - 1)) continue;
    Matrix lhs = fy.diff(base, i) * out.at(i);
    Matrix rhs = out.at(i - 1) * fx.diff(base, i);
    if (!(lhs + (-rhs)).reduced(rel).is_zero())
      throw DomainError("map does not commute with differentials in degree " + std::to_string(i));
  }
  return out;
}

ModulePres homology(const ComplexHandle& x, int i) {
  const auto& ring = x.ring();
  const auto& base = ring->base();
  const auto& rel = ring->defining();
  FreeComplex f = x.free_model(i + 1);
  if (f.rank(i) == 0) return ModulePres::zero(ring);
  Matrix k = kernel_matrix(f.diff(base, i), rel);
  if (k.cols() == 0) return ModulePres::zero(ring);
  Matrix in = f.diff(base, i + 1);
  Matrix coords(base, k.cols(), in.cols());
  for (std::size_t c = 0; c < in.cols(); ++c) {
    auto sol = lift(in.column(c), k.columns(), rel);
    if (!sol) throw Error("image is not inside the kernel; the complex is not a complex");
    for (std::size_t r = 0; r < sol->size(); ++r) coords.set(r, c, (*sol)[r]);
  }
  return minimalize(ModulePres(ring, hconcat(coords, kernel_matrix(k, rel))));
}

std::optional<int> sup(const ComplexHandle& x) {
  for (int i = x.top(); i >= x.bottom(); --i)
    if (!is_zero_module(homology(x, i))) return i;
  return std::nullopt;
}

namespace {

struct Stabilization {
  int n;
  ModulePres image;
};

// N = im(f_n) for n = max(sup + d, sup + 1).
std::optional<Stabilization> stabilization_syzygy(const ComplexHandle& x) {
  require_gorenstein(x.ring(), "stabilization");
  auto s = sup(x);
  if (!s) return std::nullopt;
  const int n = std::max(*s + x.ring()->dim(), *s + 1);
  FreeComplex f = x.free_model(n);
  return Stabilization{n, image_module(x.ring(), f.diff(x.ring()->base(), n))};
}

}  // namespace

SpecSubset w_locus(const ComplexHandle& x) {
  auto st = stabilization_syzygy(x);
  if (!st) return SpecSubset::empty(x.ring());
  return nonfree_locus(st->image);
}

bool is_perfect(const ComplexHandle& x) { return w_locus(x).is_empty(); }

ModulePres stabilize(const ComplexHandle& x) {
  auto st = stabilization_syzygy(x);
  if (!st) return ModulePres::zero(x.ring());
  ModulePres q = st->image;
  if (!is_zero_module(q) && !is_mcm(q)) throw Error("stabilization syzygy is not maximal Cohen-Macaulay");
  if (st->n >= 0) {
    for (int k = 0; k < st->n; ++k) q = cosyzygy(q, false);
  } else {
    q = syzygy(q, static_cast<std::size_t>(-st->n));
  }
  return strip_free_summands(q);
}

}  // namespace thick
