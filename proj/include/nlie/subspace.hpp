#pragma once

#include "nlie/matrix.hpp"

#include <vector>

namespace nlie {

// Subspace of Q^ambient, stored as the unique RREF basis (zero rows dropped).
// Two Subspace values are equal exactly when they describe the same
// mathematical subspace, which lets set-level theorem checks compare with ==.
class Subspace {
public:
  Subspace() : ambient_(0) {}

  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  static Subspace from_rows(const Matrix& rows);
  static Subspace from_vectors(const std::vector<Vec>& vs, std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  const Matrix& basis() const { return basis_; }
  std::vector<Vec> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // v minus its projection onto the basis rows (by pivot elimination);
  // zero residual means membership.
  Vec reduce(const Vec& v) const;
  bool contains_vector(const Vec& v) const { return vec_is_zero(reduce(v)); }
  bool contains(const Subspace& w) const;

  // Coordinates in the RREF basis; only meaningful for members (pivot
  // columns of an RREF basis carry the coefficients directly).
  Vec coords(const Vec& v) const;
  Vec lift(const Vec& coords) const;  // coords -> ambient vector

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }
  // Lexicographic on (dim, basis entries); a deterministic total order used
  // to sort component lists.
  bool operator<(const Subspace& o) const;

  std::string str() const { return basis_.str(); }

private:
  std::size_t ambient_;
  Matrix basis_;  // dim x ambient, RREF
  std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

// Mutable row-echelon accumulator for span-building loops (bracket grids,
// operator closures). Rows are kept fully reduced, so the state is the RREF
// of everything inserted so far.
class EchelonSpan {
public:
  explicit EchelonSpan(std::size_t ambient) : ambient_(ambient) {}

  // Returns true when v enlarged the span.
  bool insert(Vec v);
  bool contains(Vec v) const;

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  const std::vector<Vec>& rows() const { return rows_; }
  Subspace to_subspace() const;

private:
  void reduce_in_place(Vec& v) const;

  std::size_t ambient_;
  std::vector<Vec> rows_;            // sorted by pivot column
  std::vector<std::size_t> pivots_;  // pivot column per row
};

// {x : m x = 0} as a canonical subspace of Q^cols.
Subspace solve_nullspace(const Matrix& m);

// Builds the joint nullspace of many constraint rows incrementally: keeps a
// basis of the current solution space and shrinks it per folded row. Much
// cheaper than materializing the full constraint matrix when most rows are
// redundant, which is exactly the shape of the centroid / invariant-form
// systems.
class NullspaceAccumulator {
public:
  explicit NullspaceAccumulator(std::size_t dim);

  void fold(const Vec& row);
  void fold_sparse(const std::vector<std::pair<std::size_t, Rat>>& row);

  std::size_t dim() const { return basis_.size(); }
  Subspace result() const;

private:
  std::size_t ambient_;
  std::vector<Vec> basis_;
};

}  // namespace nlie
