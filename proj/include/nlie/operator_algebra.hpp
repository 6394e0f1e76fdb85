#pragma once

#include "nlie/eigensplit.hpp"
#include "nlie/matrix.hpp"
#include "nlie/rng.hpp"
#include "nlie/subspace.hpp"

#include <vector>

namespace nlie {

// Product-closed linear span of square matrices plus its trace-form radical.
// In characteristic zero { a : trace(a b) = 0 for all b in the span } is the
// Jacobson radical, and every element of it is nilpotent (checked).
struct OperatorAlgebra {
  std::size_t ambient = 0;
  std::vector<Matrix> generators;
  std::vector<Matrix> span_basis;     // canonical: unflattened RREF rows
  std::vector<Matrix> radical_basis;  // canonical likewise
  Subspace span;          // flattened span, ambient^2 coordinates
  Subspace radical_span;  // flattened radical

  std::size_t dim() const { return span_basis.size(); }
  std::size_t radical_dim() const { return radical_basis.size(); }
};

OperatorAlgebra close_operator_algebra(const std::vector<Matrix>& gens,
                                       std::size_t ambient);

// {v : m v = 0 for every m in mats}
Subspace joint_kernel(const std::vector<Matrix>& mats, std::size_t ambient);

// Span of the images m*w over all m in mats and w in the subspace.
Subspace image_of_subspace(const std::vector<Matrix>& mats, const Subspace& w);

// Smallest subspace containing v and invariant under every generator.
Subspace cyclic_closure(const std::vector<Matrix>& gens, const Vec& v);

// w must be invariant under op; returns the action in w's RREF coordinates.
Matrix restrict_operator(const Matrix& op, const Subspace& w);
bool is_invariant_subspace(const Matrix& op, const Subspace& w);

// Basis of { x : x r = r x for every restricted operator r }, computed in
// w's coordinates against the given generating set.
std::vector<Matrix> commutant_on(const std::vector<Matrix>& gens,
                                 const Subspace& w);

// Decomposition of a semisimple module into irreducibles over Q.
// `components` carry a certificate (the commutant of the restricted action
// is one-dimensional); `unsplit` parts resisted every rational splitting
// attempt and are reported as-is rather than mislabeled.
struct ModuleSplit {
  std::vector<Subspace> components;
  std::vector<Subspace> unsplit;
  bool fully_split() const { return unsplit.empty(); }
};

ModuleSplit split_module(const std::vector<Matrix>& gens, const Subspace& w,
                         std::uint64_t seed);

}  // namespace nlie
