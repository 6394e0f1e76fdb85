#include "nlie/subspace.hpp"

namespace nlie {

namespace {

std::vector<std::size_t> pivot_columns(const Matrix& rrefed) {
  std::vector<std::size_t> ps;
  for (std::size_t i = 0; i < rrefed.rows(); i++) {
    for (std::size_t j = 0; j < rrefed.cols(); j++) {
      if (!rrefed.at(i, j).is_zero()) {
        ps.push_back(j);
        break;
      }
    }
  }
  return ps;
}

}  // namespace

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(0, ambient);
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  return from_rows(Matrix::identity(ambient));
}

Subspace Subspace::from_rows(const Matrix& rows) {
  Subspace s;
  s.ambient_ = rows.cols();
  s.basis_ = rref(rows).first;
  s.pivots_ = pivot_columns(s.basis_);
  return s;
}

Subspace Subspace::from_vectors(const std::vector<Vec>& vs,
                                std::size_t ambient) {
  Matrix m(vs.size(), ambient);
  for (std::size_t i = 0; i < vs.size(); i++) m.set_row(i, vs[i]);
  return from_rows(m);
}

std::vector<Vec> Subspace::basis_vectors() const {
  std::vector<Vec> vs;
  vs.reserve(dim());
  for (std::size_t i = 0; i < dim(); i++) vs.push_back(basis_.row(i));
  return vs;
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionError("reduce length");
  Vec r = v;
  for (std::size_t i = 0; i < dim(); i++) {
    const Rat& c = r[pivots_[i]];
    if (c.is_zero()) continue;
    Rat f = c;  // pivot entry is 1, so the coefficient is just r[pivot]
    for (std::size_t j = pivots_[i]; j < ambient_; j++)
      r[j].submul(f, basis_.at(i, j));
  }
  return r;
}

bool Subspace::contains(const Subspace& w) const {
  if (ambient_ != w.ambient_) throw DimensionError("ambient mismatch");
  for (std::size_t i = 0; i < w.dim(); i++)
    if (!contains_vector(w.basis_.row(i))) return false;
  return true;
}

Vec Subspace::coords(const Vec& v) const {
  Vec c(dim());
  for (std::size_t i = 0; i < dim(); i++) c[i] = v[pivots_[i]];
  return c;
}

Vec Subspace::lift(const Vec& coords) const {
  if (coords.size() != dim()) throw DimensionError("coords length");
  Vec v(ambient_);
  for (std::size_t i = 0; i < dim(); i++)
    vec_addmul(v, coords[i], basis_.row(i));
  return v;
}

bool Subspace::operator<(const Subspace& o) const {
  if (dim() != o.dim()) return dim() < o.dim();
  for (std::size_t i = 0; i < dim(); i++)
    for (std::size_t j = 0; j < ambient_; j++) {
      if (basis_.at(i, j) != o.basis_.at(i, j))
        return basis_.at(i, j) < o.basis_.at(i, j);
    }
  return false;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw DimensionError("ambient mismatch");
  Matrix stacked(a.dim() + b.dim(), a.ambient());
  for (std::size_t i = 0; i < a.dim(); i++) stacked.set_row(i, a.basis().row(i));
  for (std::size_t i = 0; i < b.dim(); i++)
    stacked.set_row(a.dim() + i, b.basis().row(i));
  return Subspace::from_rows(stacked);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw DimensionError("ambient mismatch");
  // x lies in a span exactly when it is orthogonal (standard dot, which is
  // anisotropic over Q) to the span's nullspace; stack both constraint sets.
  Subspace na = solve_nullspace(a.basis());
  Subspace nb = solve_nullspace(b.basis());
  Matrix stacked(na.dim() + nb.dim(), a.ambient());
  for (std::size_t i = 0; i < na.dim(); i++)
    stacked.set_row(i, na.basis().row(i));
  for (std::size_t i = 0; i < nb.dim(); i++)
    stacked.set_row(na.dim() + i, nb.basis().row(i));
  return solve_nullspace(stacked);
}

Subspace solve_nullspace(const Matrix& m) {
  auto [red, rank] = rref(m);
  const std::size_t n = m.cols();
  std::vector<std::size_t> pivots = pivot_columns(red);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;

  Matrix basis(n - rank, n);
  std::size_t r = 0;
  for (std::size_t j = 0; j < n; j++) {
    if (is_pivot[j]) continue;
    basis.at(r, j) = Rat(1);
    for (std::size_t i = 0; i < rank; i++) basis.at(r, pivots[i]) = -red.at(i, j);
    r++;
  }
  return Subspace::from_rows(basis);
}

NullspaceAccumulator::NullspaceAccumulator(std::size_t dim) : ambient_(dim) {
  basis_.reserve(dim);
  for (std::size_t i = 0; i < dim; i++) {
    Vec e(dim);
    e[i] = Rat(1);
    basis_.push_back(std::move(e));
  }
}

void NullspaceAccumulator::fold(const Vec& row) {
  std::vector<std::pair<std::size_t, Rat>> sparse;
  for (std::size_t j = 0; j < row.size(); j++)
    if (!row[j].is_zero()) sparse.emplace_back(j, row[j]);
  fold_sparse(sparse);
}

void NullspaceAccumulator::fold_sparse(
    const std::vector<std::pair<std::size_t, Rat>>& row) {
  if (basis_.empty() || row.empty()) return;
  Vec s(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); i++)
    for (const auto& [j, v] : row)
      if (!basis_[i][j].is_zero()) s[i].addmul(basis_[i][j], v);

  std::size_t p = basis_.size();
  for (std::size_t i = 0; i < s.size(); i++)
    if (!s[i].is_zero()) {
      p = i;
      break;
    }
  if (p == basis_.size()) return;  // row already annihilated, no shrink

  Rat inv = s[p].inverse();
  for (std::size_t i = 0; i < basis_.size(); i++) {
    if (i == p || s[i].is_zero()) continue;
    Rat f = s[i] * inv;
    for (std::size_t j = 0; j < ambient_; j++)
      basis_[i][j].submul(f, basis_[p][j]);
  }
  basis_.erase(basis_.begin() + p);
}

Subspace NullspaceAccumulator::result() const {
  Matrix m(basis_.size(), ambient_);
  for (std::size_t i = 0; i < basis_.size(); i++) m.set_row(i, basis_[i]);
  return Subspace::from_rows(m);
}

void EchelonSpan::reduce_in_place(Vec& v) const {
  for (std::size_t i = 0; i < rows_.size(); i++) {
    const Rat& c = v[pivots_[i]];
    if (c.is_zero()) continue;
    Rat f = c;
    for (std::size_t j = pivots_[i]; j < ambient_; j++)
      v[j].submul(f, rows_[i][j]);
  }
}

bool EchelonSpan::insert(Vec v) {
  if (v.size() != ambient_) throw DimensionError("span insert length");
  reduce_in_place(v);
  std::size_t p = ambient_;
  for (std::size_t j = 0; j < ambient_; j++)
    if (!v[j].is_zero()) {
      p = j;
      break;
    }
  if (p == ambient_) return false;

  Rat inv = v[p].inverse();
  for (std::size_t j = p; j < ambient_; j++) v[j] *= inv;
  // clear the new pivot column in the existing rows, keeping full RREF
  for (std::size_t i = 0; i < rows_.size(); i++) {
    const Rat& c = rows_[i][p];
    if (c.is_zero()) continue;
    Rat f = c;
    for (std::size_t j = p; j < ambient_; j++) rows_[i][j].submul(f, v[j]);
  }
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) pos++;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, p);
  return true;
}

bool EchelonSpan::contains(Vec v) const {
  reduce_in_place(v);
  return vec_is_zero(v);
}

Subspace EchelonSpan::to_subspace() const {
  Matrix m(rows_.size(), ambient_);
  for (std::size_t i = 0; i < rows_.size(); i++) m.set_row(i, rows_[i]);
  return Subspace::from_rows(m);
}

}  // namespace nlie
