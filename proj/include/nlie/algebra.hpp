#pragma once

#include "nlie/operator_algebra.hpp"
#include "nlie/subspace.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace nlie {

using IndexTuple = std::vector<std::size_t>;

struct AxiomViolation {
  IndexTuple outer;  // x_1..x_n
  IndexTuple inner;  // y_2..y_n
  Vec lhs, rhs;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Finite-dimensional algebra with an alternating n-ary bracket. Structure
// constants are stored only on strictly increasing basis tuples; every other
// tuple is resolved by permutation sign, which bakes the alternating law
// into the representation. The generalized Jacobi identity is NOT assumed:
// check_axioms verifies it tuple by tuple.
class NLieAlgebra {
public:
  NLieAlgebra(std::size_t arity, std::size_t dim,
              std::vector<std::string> basis_names,
              std::map<IndexTuple, Vec> constants);

  std::size_t arity() const { return n_; }
  std::size_t dim() const { return d_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  // nonzero constants on strictly increasing tuples
  const std::map<IndexTuple, Vec>& constants() const { return c_; }

  // Bracket of basis vectors for an arbitrary index tuple (sign-resolved,
  // zero on repeats).
  Vec bracket_basis(const IndexTuple& idx) const;
  // Full multilinear evaluation on arbitrary vectors.
  Vec bracket(const std::vector<Vec>& args) const;

  AxiomReport check_axioms() const;
  AxiomReport check_axioms_serial() const;
  AxiomReport check_axioms_parallel() const;

  // Span of all brackets with arguments running over the given subspaces
  // (one per slot).
  Subspace subspace_product(const std::vector<Subspace>& spaces) const;
  Subspace product_with_full(const Subspace& v) const;  // [V, G, ..., G]
  Subspace derived() const;                             // [G, ..., G]
  bool is_perfect() const { return derived().is_full(); }

  bool is_ideal(const Subspace& v) const;
  bool is_abelian_ideal(const Subspace& v) const;
  bool is_subalgebra(const Subspace& s) const;

  std::vector<Subspace> derived_series(const Subspace& ideal) const;
  bool is_solvable(const Subspace& ideal) const;

  Subspace centralizer(const Subspace& v) const;
  Subspace center() const;

  // Quotient by an ideal plus the canonical projection matrix (quot.dim x
  // dim). The quotient basis sits on the non-pivot coordinates of the
  // ideal's RREF basis.
  std::pair<NLieAlgebra, Matrix> quotient(const Subspace& ideal) const;

  // Restriction to a subalgebra, on the subalgebra's RREF basis.
  NLieAlgebra restrict_to(const Subspace& s) const;

  static NLieAlgebra direct_sum(const NLieAlgebra& a, const NLieAlgebra& b);

  // ad(e_I) for every strictly increasing (n-1)-tuple I, zero maps skipped.
  std::vector<Matrix> inner_derivation_generators() const;
  // Product closure of the generators; cached, since every structural
  // computation starts from it and the closure dominates the cost.
  const OperatorAlgebra& inner_derivations() const;

  std::string tuple_str(const IndexTuple& t) const;  // readable "[e1,e2,e3]"

private:
  std::size_t n_, d_;
  std::vector<std::string> names_;
  std::map<IndexTuple, Vec> c_;
  mutable std::shared_ptr<const OperatorAlgebra> inner_cache_;
};

// Iterates all strictly increasing k-tuples over {0..d-1}.
void for_each_increasing_tuple(std::size_t d, std::size_t k,
                               const std::function<void(const IndexTuple&)>& fn);

}  // namespace nlie
