#include "nlie/operator_algebra.hpp"

#include <doctest.h>

using namespace nlie;

namespace {
const Matrix kE12{{0, 1}, {0, 0}};
const Matrix kE21{{0, 0}, {1, 0}};

bool nilpotent(const Matrix& m) {
  Matrix p = m;
  for (std::size_t k = 1; k < m.rows(); k++) p = p * m;
  return p.is_zero();
}
}  // namespace

TEST_CASE("closure of the identity alone") {
  OperatorAlgebra oa = close_operator_algebra({Matrix::identity(3)}, 3);
  CHECK(oa.dim() == 1);
  CHECK(oa.radical_dim() == 0);
  CHECK(oa.span_basis[0] == Matrix::identity(3));
}

TEST_CASE("a single square-zero nilpotent is its own radical") {
  OperatorAlgebra oa = close_operator_algebra({kE12}, 2);
  CHECK(oa.dim() == 1);
  CHECK(oa.radical_dim() == 1);
  CHECK(oa.radical_basis[0] == kE12);  // trace(N*N) = 0
}

TEST_CASE("elementary matrices generate the full matrix algebra") {
  OperatorAlgebra oa = close_operator_algebra({kE12, kE21}, 2);
  CHECK(oa.dim() == 4);
  CHECK(oa.radical_dim() == 0);  // trace form of M_2 is nondegenerate
  for (const auto& x : oa.span_basis)
    for (const auto& y : oa.span_basis)
      CHECK(oa.span.contains_vector((x * y).flatten()));
}

TEST_CASE("radical elements are nilpotent") {
  // a Jordan block generates span {I, N} and only N is trace-orthogonal
  Matrix t{{1, 1}, {0, 1}};
  OperatorAlgebra oa = close_operator_algebra({t}, 2);
  CHECK(oa.dim() == 2);
  CHECK(oa.radical_dim() == 1);
  for (const auto& r : oa.radical_basis) CHECK(nilpotent(r));
  CHECK(oa.span.contains(oa.radical_span));

  // distinct eigenvalues instead: t satisfies (t-1)(t-2)=0, the algebra
  // picks up the identity and splits with no radical at all
  OperatorAlgebra split = close_operator_algebra({Matrix{{1, 1}, {0, 2}}}, 2);
  CHECK(split.dim() == 2);
  CHECK(split.radical_dim() == 0);
  CHECK(split.span.contains_vector(Matrix::identity(2).flatten()));
}

TEST_CASE("kernels, images, cyclic closures") {
  CHECK(joint_kernel({kE12}, 2) == Subspace::from_rows(Matrix{{1, 0}}));
  CHECK(joint_kernel({kE12, kE21}, 2).is_zero());
  CHECK(image_of_subspace({kE12}, Subspace::full(2)) ==
        Subspace::from_rows(Matrix{{1, 0}}));
  // e2 generates everything under E12 (e2 -> e1), e1 only itself
  CHECK(cyclic_closure({kE12}, {Rat(0), Rat(1)}) == Subspace::full(2));
  CHECK(cyclic_closure({kE12}, {Rat(1), Rat(0)}) ==
        Subspace::from_rows(Matrix{{1, 0}}));
}

TEST_CASE("restriction to invariant subspaces") {
  Matrix block{{2, 0, 0}, {0, 3, 1}, {0, 0, 3}};
  Subspace w = Subspace::from_rows(Matrix{{0, 1, 0}, {0, 0, 1}});
  REQUIRE(is_invariant_subspace(block, w));
  CHECK(restrict_operator(block, w) == Matrix{{3, 1}, {0, 3}});
  CHECK(!is_invariant_subspace(Matrix{{0, 1}, {1, 0}},
                               Subspace::from_rows(Matrix{{1, 0}})));
}

TEST_CASE("commutant certifies irreducibility") {
  // M_2 acts irreducibly: commutant = scalars
  CHECK(commutant_on({kE12, kE21}, Subspace::full(2)).size() == 1);
  // a rotation acting on the plane: commutant is a quadratic field, dim 2
  CHECK(commutant_on({Matrix{{0, -1}, {1, 0}}}, Subspace::full(2)).size() == 2);
}

TEST_CASE("module splitting with certificates") {
  // distinct diagonal blocks split into certified eigenlines
  ModuleSplit ms = split_module({Matrix{{1, 0}, {0, 2}}}, Subspace::full(2), 0);
  CHECK(ms.fully_split());
  CHECK(ms.components.size() == 2);

  // irreducible over Q: single certified component
  ModuleSplit irr = split_module({kE12, kE21}, Subspace::full(2), 0);
  CHECK(irr.fully_split());
  CHECK(irr.components.size() == 1);
  CHECK(irr.components[0] == Subspace::full(2));

  // rotation plane: irreducible but certificate impossible over Q
  // (commutant is a field of dim 2), reported unsplit rather than guessed
  ModuleSplit rot = split_module({Matrix{{0, -1}, {1, 0}}}, Subspace::full(2), 0);
  CHECK(!rot.fully_split());
  REQUIRE(rot.unsplit.size() == 1);
  CHECK(rot.unsplit[0] == Subspace::full(2));
}
