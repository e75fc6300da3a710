#include "thick/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "thick/error.hpp"

namespace thick {

Matrix::Matrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, Poly(ring_)) {}

Matrix Matrix::from_rows(RingPtr ring, const std::vector<std::vector<Poly>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Matrix m(std::move(ring), rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DomainError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) {
      require_same_ring(m.ring_, rows[i][j].ring());
      m.set(i, j, rows[i][j]);
    }
  }
  return m;
}

Matrix Matrix::from_columns(RingPtr ring, std::size_t rows, const std::vector<Column>& cols) {
  Matrix m(std::move(ring), rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw DomainError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.set(i, j, cols[j][i]);
  }
  return m;
}

Matrix Matrix::identity(RingPtr ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Poly::constant(ring, 1));
  return m;
}

Column Matrix::column(std::size_t j) const {
  Column c;
  c.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
  return c;
}

std::vector<Column> Matrix::columns() const {
  std::vector<Column> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& keep) const {
  Matrix m(ring_, rows_, keep.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < keep.size(); ++k) m.set(i, k, at(i, keep[k]));
  return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& keep) const {
  Matrix m(ring_, keep.size(), cols_);
  for (std::size_t k = 0; k < keep.size(); ++k)
    for (std::size_t j = 0; j < cols_; ++j) m.set(k, j, at(keep[k], j));
  return m;
}

Matrix Matrix::without_row(std::size_t i) const {
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < rows_; ++k)
    if (k != i) keep.push_back(k);
  return select_rows(keep);
}

Matrix Matrix::reduced(const Ideal& ideal) const {
  Matrix m(*this);
  if (ideal.is_zero()) return m;
  for (auto& p : m.data_) p = ideal.normal_form(p);
  return m;
}

Matrix Matrix::scaled(const FieldElem& c) const {
  Matrix m(*this);
  for (auto& p : m.data_) p = p.scaled(c);
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Poly& p) { return p.is_zero(); });
}

bool Matrix::row_is_zero(std::size_t i) const {
  for (std::size_t j = 0; j < cols_; ++j)
    if (!at(i, j).is_zero()) return false;
  return true;
}

bool Matrix::column_is_zero(std::size_t j) const {
  for (std::size_t i = 0; i < rows_; ++i)
    if (!at(i, j).is_zero()) return false;
  return true;
}

Matrix Matrix::operator-() const {
  Matrix m(*this);
  for (auto& p : m.data_) p = -p;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.cols_ != b.rows_) throw DomainError("matrix product dimension mismatch");
  Matrix c(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      Poly acc(a.ring_);
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (!a.at(i, k).is_zero() && !b.at(k, j).is_zero()) acc += a.at(i, k) * b.at(k, j);
      c.set(i, j, std::move(acc));
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix sum dimension mismatch");
  Matrix c(a);
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t k = 0; k < a.data_.size(); ++k)
    if (!(a.data_[k] == b.data_[k])) return false;
  return true;
}

std::string Matrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    s += i ? "; " : "";
    for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + at(i, j).to_string();
  }
  return s + "]";
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.rows() != b.rows()) throw DomainError("hconcat row mismatch");
  Matrix m(a.ring(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m.set(i, j, a.at(i, j));
    for (std::size_t j = 0; j < b.cols(); ++j) m.set(i, a.cols() + j, b.at(i, j));
  }
  return m;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  require_same_ring(a.ring(), b.ring());
  Matrix m(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m.set(i, j, a.at(i, j));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m.set(a.rows() + i, a.cols() + j, b.at(i, j));
  return m;
}

namespace {

// Laplace expansion along the selected rows, memoized on column subsets.
// Returns the k x k minors on rows `rows` for every k-subset of columns.
std::unordered_map<std::uint64_t, Poly> minors_on_rows(const Matrix& m, const std::vector<std::size_t>& rows) {
  const auto& ring = m.ring();
  std::unordered_map<std::uint64_t, Poly> level{{0, Poly::constant(ring, 1)}};
  for (std::size_t t = 0; t < rows.size(); ++t) {
    std::unordered_map<std::uint64_t, Poly> next;
    for (const auto& [mask, sub] : level) {
      if (sub.is_zero()) continue;
      for (std::size_t c = 0; c < m.cols(); ++c) {
        std::uint64_t bit = 1ull << c;
        if (mask & bit) continue;
        const Poly& a = m.at(rows[t], c);
        if (a.is_zero()) continue;
        // Column c sits at position (#cols in mask greater than c) from the right;
        // the sign is (-1)^(t + position of c in the sorted column set).
        std::size_t pos = static_cast<std::size_t>(__builtin_popcountll(mask & (bit - 1)));
        Poly term = a * sub;
        if ((pos + t) % 2 == 1) term = -term;
        // Expanding along the last row: det(S) = sum_c (-1)^(pos_c + t) a_{t,c} det(S \ c).
        auto [it, inserted] = next.try_emplace(mask | bit, Poly(ring));
        it->second += term;
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace

Poly determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  if (m.rows() == 0) return Poly::constant(m.ring(), 1);
  auto ms = minors(m, m.rows());
  return ms.empty() ? Poly(m.ring()) : ms.front();
}

std::vector<Poly> minors(const Matrix& m, std::size_t k) {
  if (k == 0) return {Poly::constant(m.ring(), 1)};
  if (k > m.rows() || k > m.cols()) return {};
  if (m.cols() > 63) throw DomainError("minors: too many columns");
  std::vector<Poly> out;
  std::vector<std::size_t> rows(k);
  std::iota(rows.begin(), rows.end(), 0);
  for (;;) {
    auto level = minors_on_rows(m, rows);
    std::vector<std::pair<std::uint64_t, Poly>> sorted(level.begin(), level.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [mask, p] : sorted)
      if (!p.is_zero()) out.push_back(std::move(p));
    // next k-subset of rows
    std::size_t i = k;
    while (i > 0 && rows[i - 1] == m.rows() - k + i - 1) --i;
    if (i == 0) break;
    ++rows[i - 1];
    for (std::size_t j = i; j < k; ++j) rows[j] = rows[j - 1] + 1;
  }
  return out;
}

namespace {

unsigned column_degree(const Column& c) {
  unsigned d = 0;
  for (const auto& p : c)
    for (const auto& t : p.terms()) d = std::max(d, p.weighted_degree(t.mono));
  return d;
}

void insert_relations(GroebnerEngine& engine, std::size_t rank, const Ideal& relations) {
  for (const auto& f : relations.groebner_basis())
    for (std::uint32_t i = 0; i < rank; ++i) {
      ModVec v;
      for (const auto& t : f.terms()) v.push_back({i, t.mono, t.coeff});
      engine.insert(v);
    }
}

}  // namespace

Matrix prune_columns(const Matrix& a, const Ideal& relations) {
  std::vector<std::size_t> order(a.cols());
  std::iota(order.begin(), order.end(), 0);
  auto cols = a.columns();
  std::vector<unsigned> deg(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) deg[j] = column_degree(cols[j]);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return deg[x] < deg[y]; });
  GroebnerEngine engine(a.ring(), a.rows());
  insert_relations(engine, a.rows(), relations);
  engine.complete();
  std::vector<std::size_t> keep;
  for (auto j : order) {
    if (engine.reduce(to_modvec(cols[j])).empty()) continue;
    keep.push_back(j);
    engine.insert(to_modvec(cols[j]));
    engine.complete();
  }
  std::sort(keep.begin(), keep.end());
  return a.select_columns(keep);
}

Matrix kernel_matrix(const Matrix& a, const Ideal& relations) {
  if (a.cols() == 0) return Matrix(a.ring(), 0, 0);
  auto syz = module_syzygies(a.columns(), a.rows(), relations);
  Matrix k = Matrix::from_columns(a.ring(), a.cols(), syz.generators());
  return prune_columns(k, relations);
}

bool in_column_span(const Column& v, const Matrix& a, const Ideal& relations) {
  if (v.size() != a.rows()) throw DomainError("in_column_span: length mismatch");
  GroebnerEngine engine(a.ring(), a.rows());
  insert_relations(engine, a.rows(), relations);
  for (const auto& c : a.columns()) engine.insert(to_modvec(c));
  engine.complete();
  return engine.reduce(to_modvec(v)).empty();
}

bool entries_in_maximal_ideal(const Matrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a.at(i, j).constant_term().is_zero()) return false;
  return true;
}

Minimalized minimalize_matrix(const Matrix& input, const Ideal& relations) {
  Matrix a = input.reduced(relations);
  std::vector<std::size_t> row_ids(a.rows());
  std::iota(row_ids.begin(), row_ids.end(), 0);
  for (;;) {
    // Prefer a nonzero constant pivot; fall back to any local unit.
    std::size_t pi = a.rows(), pj = a.cols();
    bool constant = false;
    for (std::size_t i = 0; i < a.rows() && !constant; ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) {
        const Poly& e = a.at(i, j);
        if (e.constant_term().is_zero()) continue;
        if (e.is_constant()) {
          pi = i, pj = j, constant = true;
          break;
        }
        if (pi == a.rows()) pi = i, pj = j;
      }
    if (pi == a.rows()) break;

    const Poly pivot = a.at(pi, pj);
    Matrix b(a.ring(), a.rows() - 1, a.cols() - 1);
    FieldElem inv = constant ? pivot.constant_term().inverse() : FieldElem(a.ring()->field(), 1);
    for (std::size_t j = 0, nj = 0; j < a.cols(); ++j) {
      if (j == pj) continue;
      const Poly& f = a.at(pi, j);
      for (std::size_t i = 0, ni = 0; i < a.rows(); ++i) {
        if (i == pi) continue;
        Poly e = a.at(i, j);
        if (!f.is_zero()) {
          if (constant)
            e -= (f * a.at(i, pj)).scaled(inv);
          else
            e = pivot * e - f * a.at(i, pj);
        }
        b.set(ni++, nj, relations.normal_form(e));
      }
      ++nj;
    }
    row_ids.erase(row_ids.begin() + static_cast<std::ptrdiff_t>(pi));
    a = std::move(b);
  }
  std::vector<std::size_t> nonzero;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!a.column_is_zero(j)) nonzero.push_back(j);
  return {a.select_columns(nonzero), row_ids};
}

}  // namespace thick
