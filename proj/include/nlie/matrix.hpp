#pragma once

#include "nlie/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace nlie {

using Vec = std::vector<Rat>;

// Dense matrix of exact rationals, row-major. Immutable in spirit: the
// structure operations all return fresh values.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rat>> init);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  Matrix transpose() const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Rat& s) const;
  Matrix operator-() const;
  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Vec apply(const Vec& x) const;  // this * x, x a column vector

  Rat trace() const;
  Rat det() const;
  Matrix inverse() const;  // throws std::domain_error when singular

  // Row-major flattening, used to treat operator spaces as plain vectors.
  Vec flatten() const { return e_; }
  static Matrix unflatten(const Vec& v, std::size_t rows, std::size_t cols);

  std::string str() const;  // bracketed rows, for reports and test failures

private:
  std::size_t rows_, cols_;
  std::vector<Rat> e_;
};

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Reduced row echelon form with zero rows dropped; second component is the
// rank. rref() picks the parallel kernel when OpenMP has threads to offer,
// the _serial/_parallel variants pin the implementation (kept separate so
// tests and the benchmark can compare them).
std::pair<Matrix, std::size_t> rref(const Matrix& m);
std::pair<Matrix, std::size_t> rref_serial(const Matrix& m);
std::pair<Matrix, std::size_t> rref_parallel(const Matrix& m);

Matrix mul_serial(const Matrix& a, const Matrix& b);
Matrix mul_parallel(const Matrix& a, const Matrix& b);

// Vector helpers shared across modules.
bool vec_is_zero(const Vec& v);
Rat dot(const Vec& a, const Vec& b);
void vec_addmul(Vec& target, const Rat& coeff, const Vec& src);  // target += coeff*src
Vec vec_scale(const Vec& v, const Rat& s);

}  // namespace nlie
