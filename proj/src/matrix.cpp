#include "nlie/matrix.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <sstream>

namespace nlie {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rat>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  e_.reserve(rows_ * cols_);
  for (const auto& r : init) {
    if (r.size() != cols_) throw DimensionError("ragged matrix initializer");
    for (const auto& x : r) e_.push_back(x);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; i++) m.at(i, i) = Rat(1);
  return m;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
}

Vec Matrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; i++) v[i] = at(i, j);
  return v;
}

void Matrix::set_row(std::size_t i, const Vec& v) {
  if (v.size() != cols_) throw DimensionError("row length mismatch");
  for (std::size_t j = 0; j < cols_; j++) at(i, j) = v[j];
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; i++)
    for (std::size_t j = i + 1; j < cols_; j++)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; i++)
    for (std::size_t j = 0; j < cols_; j++) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("add shape");
  Matrix r(rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); k++) r.e_[k] = e_[k] + o.e_[k];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("sub shape");
  Matrix r(rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); k++) r.e_[k] = e_[k] - o.e_[k];
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r(rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); k++) r.e_[k] = -e_[k];
  return r;
}

Matrix Matrix::operator*(const Rat& s) const {
  Matrix r(rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); k++) r.e_[k] = e_[k] * s;
  return r;
}

Matrix mul_serial(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("mul shape");
  Matrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); i++)
    for (std::size_t k = 0; k < a.cols(); k++) {
      const Rat& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); j++) {
        const Rat& bkj = b.at(k, j);
        if (!bkj.is_zero()) r.at(i, j).addmul(aik, bkj);
      }
    }
  return r;
}

Matrix mul_parallel(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("mul shape");
  Matrix r(a.rows(), b.cols());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::size_t i = 0; i < a.rows(); i++)
    for (std::size_t k = 0; k < a.cols(); k++) {
      const Rat& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); j++) {
        const Rat& bkj = b.at(k, j);
        if (!bkj.is_zero()) r.at(i, j).addmul(aik, bkj);
      }
    }
  return r;
}

namespace {

#ifdef _OPENMP
bool want_parallel(std::size_t work) {
  return omp_get_max_threads() > 1 && work >= 64 * 64;
}
#else
bool want_parallel(std::size_t) { return false; }
#endif

// Gauss-Jordan; `parallel` toggles the OpenMP elimination loop. Each row
// update is independent of the others, so the result is thread-count
// agnostic.
std::pair<Matrix, std::size_t> rref_impl(const Matrix& m, bool parallel) {
  Matrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; c++) {
    std::size_t p = r;
    while (p < rows && a.at(p, c).is_zero()) p++;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; j++) std::swap(a.at(r, j), a.at(p, j));
    Rat inv = a.at(r, c).inverse();
    for (std::size_t j = c; j < cols; j++) a.at(r, j) *= inv;

    auto eliminate = [&](std::size_t i) {
      if (i == r) return;
      Rat f = a.at(i, c);
      if (f.is_zero()) return;
      for (std::size_t j = c; j < cols; j++) a.at(i, j).submul(f, a.at(r, j));
    };
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
      for (std::size_t i = 0; i < rows; i++) eliminate(i);
    } else {
      for (std::size_t i = 0; i < rows; i++) eliminate(i);
    }
    r++;
  }
  Matrix out(r, cols);
  for (std::size_t i = 0; i < r; i++)
    for (std::size_t j = 0; j < cols; j++) out.at(i, j) = a.at(i, j);
  return {out, r};
}

}  // namespace

std::pair<Matrix, std::size_t> rref_serial(const Matrix& m) {
  return rref_impl(m, false);
}

std::pair<Matrix, std::size_t> rref_parallel(const Matrix& m) {
  return rref_impl(m, true);
}

std::pair<Matrix, std::size_t> rref(const Matrix& m) {
  return rref_impl(m, want_parallel(m.rows() * m.cols()));
}

Matrix Matrix::operator*(const Matrix& o) const {
  return want_parallel(rows_ * o.cols_ * cols_) ? mul_parallel(*this, o)
                                                : mul_serial(*this, o);
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw DimensionError("apply length");
  Vec y(rows_);
  for (std::size_t i = 0; i < rows_; i++)
    for (std::size_t j = 0; j < cols_; j++) {
      if (!at(i, j).is_zero()) y[i].addmul(at(i, j), x[j]);
    }
  return y;
}

Rat Matrix::trace() const {
  if (!is_square()) throw DimensionError("trace of non-square");
  Rat t;
  for (std::size_t i = 0; i < rows_; i++) t += at(i, i);
  return t;
}

Rat Matrix::det() const {
  if (!is_square()) throw DimensionError("det of non-square");
  Matrix a = *this;
  const std::size_t n = rows_;
  Rat d(1);
  for (std::size_t c = 0; c < n; c++) {
    std::size_t p = c;
    while (p < n && a.at(p, c).is_zero()) p++;
    if (p == n) return Rat(0);
    if (p != c) {
      for (std::size_t j = c; j < n; j++) std::swap(a.at(c, j), a.at(p, j));
      d = -d;
    }
    d *= a.at(c, c);
    Rat inv = a.at(c, c).inverse();
    for (std::size_t i = c + 1; i < n; i++) {
      Rat f = a.at(i, c) * inv;
      if (f.is_zero()) continue;
      for (std::size_t j = c; j < n; j++) a.at(i, j).submul(f, a.at(c, j));
    }
  }
  return d;
}

Matrix Matrix::inverse() const {
  if (!is_square()) throw DimensionError("inverse of non-square");
  const std::size_t n = rows_;
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; i++) {
    for (std::size_t j = 0; j < n; j++) aug.at(i, j) = at(i, j);
    aug.at(i, n + i) = Rat(1);
  }
  auto [red, rank] = rref_serial(aug);
  // the identity block keeps every row nonzero, so the augmented rank alone
  // proves nothing: the left block must have reduced to the identity
  for (std::size_t i = 0; i < n; i++)
    for (std::size_t j = 0; j < n; j++)
      if (red.at(i, j) != (i == j ? Rat(1) : Rat(0)))
        throw std::domain_error("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; i++)
    for (std::size_t j = 0; j < n; j++) inv.at(i, j) = red.at(i, n + j);
  return inv;
}

Matrix Matrix::unflatten(const Vec& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw DimensionError("unflatten length");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; i++)
    for (std::size_t j = 0; j < cols; j++) m.at(i, j) = v[i * cols + j];
  return m;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; i++) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; j++) os << (j ? " " : "") << at(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("dot length");
  Rat s;
  for (std::size_t i = 0; i < a.size(); i++)
    if (!a[i].is_zero() && !b[i].is_zero()) s.addmul(a[i], b[i]);
  return s;
}

void vec_addmul(Vec& target, const Rat& coeff, const Vec& src) {
  if (target.size() != src.size()) throw DimensionError("addmul length");
  if (coeff.is_zero()) return;
  for (std::size_t i = 0; i < src.size(); i++)
    if (!src[i].is_zero()) target[i].addmul(coeff, src[i]);
}

Vec vec_scale(const Vec& v, const Rat& s) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); i++) r[i] = v[i] * s;
  return r;
}

}  // namespace nlie
