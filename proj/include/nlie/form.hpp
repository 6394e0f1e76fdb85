#pragma once

#include "nlie/algebra.hpp"

#include <optional>

namespace nlie {

// Symmetric bilinear form on an algebra's underlying space, as its Gram
// matrix in the defining basis. "Metric" means invariant + nondegenerate.
struct BilinearForm {
  Matrix gram;
};

// One failing instance of the invariance identity
// B([head, y1], y2) = -B([head, y2], y1), for error reports.
struct InvarianceViolation {
  IndexTuple head;  // n-1 basis indices
  std::size_t y1, y2;
  Rat lhs, rhs;
};

std::optional<InvarianceViolation> find_invariance_violation(
    const NLieAlgebra& a, const BilinearForm& b);
bool check_invariance(const NLieAlgebra& a, const BilinearForm& b);
bool is_nondegenerate(const BilinearForm& b);
bool is_metric(const NLieAlgebra& a, const BilinearForm& b);

// B restricted to the subspace, on its RREF basis: W G W^T.
Matrix restrict_form(const BilinearForm& b, const Subspace& w);

// Needs a nondegenerate form.
Subspace orthogonal_complement(const BilinearForm& b, const Subspace& w);

struct SubspaceClass {
  bool isotropic = false;      // W inside W-perp
  bool coisotropic = false;    // W-perp inside W
  bool nondegenerate = false;  // W meets W-perp trivially
  bool mixed = false;          // none of the above
  std::string str() const;
};
SubspaceClass classify_subspace(const BilinearForm& b, const Subspace& w);

struct CentroidElement {
  Matrix matrix;
  bool self_adjoint = false;
};

// Basis of the space of maps commuting into the bracket's first slot.
std::vector<CentroidElement> centroid(const NLieAlgebra& a);
// Its B-self-adjoint part; requires a metric.
std::vector<CentroidElement> gamma_B(const NLieAlgebra& a, const BilinearForm& b);
// Basis of all invariant symmetric bilinear forms.
std::vector<BilinearForm> invariant_form_space(const NLieAlgebra& a);

// The same spaces as flattened row-major subspaces of dim^2 coordinates,
// for callers that intersect them with further linear conditions.
Subspace centroid_span(const NLieAlgebra& a);
Subspace gamma_b_span(const NLieAlgebra& a, const BilinearForm& b);

bool in_centroid(const NLieAlgebra& a, const Matrix& m);
bool is_self_adjoint(const BilinearForm& b, const Matrix& m);

// dim Gamma_B, cross-checked against dim F, plus an explicit invertible
// combination of the Gamma_B basis (deterministic integer-grid search by
// increasing L1 norm, box capped at 6). A missing witness is flagged loudly,
// never silently.
struct MetricDimension {
  std::size_t gamma_b_dim = 0;
  std::size_t form_space_dim = 0;
  bool dims_agree = false;
  std::optional<Vec> witness_coords;
  std::optional<Matrix> witness;
  std::string warning;
};
MetricDimension metric_dimension(const NLieAlgebra& a, const BilinearForm& b);

// The unique D with K(x,y) = B(Dx,y); checks K is symmetric invariant and
// that D lands in the self-adjoint centroid.
CentroidElement d_operator(const NLieAlgebra& a, const BilinearForm& base,
                           const BilinearForm& k);

}  // namespace nlie
