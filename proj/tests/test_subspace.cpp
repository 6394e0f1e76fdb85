#include "nlie/rng.hpp"
#include "nlie/subspace.hpp"

#include <doctest.h>

using namespace nlie;

namespace {
Subspace random_subspace(Rng& rng, std::size_t ambient, std::size_t rows) {
  Matrix m(rows, ambient);
  for (std::size_t i = 0; i < rows; i++)
    for (std::size_t j = 0; j < ambient; j++) m.at(i, j) = Rat(rng.pick(-4, 4));
  return Subspace::from_rows(m);
}
}  // namespace

TEST_CASE("nullspace on the documented cases") {
  CHECK(solve_nullspace(Matrix{{1, 1}}) ==
        Subspace::from_rows(Matrix{{1, -1}}));
  CHECK(solve_nullspace(Matrix::identity(3)).is_zero());
  CHECK(solve_nullspace(Matrix(2, 2)) == Subspace::full(2));
  // dim = cols - rank on a random instance
  Matrix m{{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 0, 1}};
  CHECK(solve_nullspace(m).dim() == 4 - rref(m).second);
}

TEST_CASE("sum and intersection lattice") {
  Subspace e1 = Subspace::from_rows(Matrix{{1, 0}});
  Subspace e2 = Subspace::from_rows(Matrix{{0, 1}});
  Subspace diag = Subspace::from_rows(Matrix{{1, 1}});
  CHECK(subspace_sum(e1, e2) == Subspace::full(2));
  CHECK(subspace_intersect(e1, diag).is_zero());
  CHECK(Subspace::full(2).contains(diag));
  CHECK(!e1.contains(diag));
  CHECK_THROWS_AS(subspace_sum(e1, Subspace::full(3)), DimensionError);
}

TEST_CASE("Grassmann identity on random pairs") {
  Rng rng(21);
  for (int t = 0; t < 12; t++) {
    Subspace a = random_subspace(rng, 6, 1 + t % 4);
    Subspace b = random_subspace(rng, 6, 1 + (t + 2) % 4);
    Subspace s = subspace_sum(a, b);
    Subspace i = subspace_intersect(a, b);
    CHECK(a.dim() + b.dim() == s.dim() + i.dim());
    CHECK(s.contains(a));
    CHECK(a.contains(i));
  }
}

TEST_CASE("membership, coordinates, canonical equality") {
  Subspace w = Subspace::from_rows(Matrix{{1, 1, 0}, {2, 2, 2}});
  CHECK(w.dim() == 2);
  CHECK(w.contains_vector({Rat(3), Rat(3), Rat(1)}));
  CHECK(!w.contains_vector({Rat(1), Rat(0), Rat(0)}));
  // same space from a different spanning set gives identical RREF
  CHECK(w == Subspace::from_vectors(
                 {{Rat(1), Rat(1), Rat(1)}, {Rat(1), Rat(1), Rat(3)}}, 3));
  Vec v{Rat(5), Rat(5), Rat(2)};
  CHECK(w.lift(w.coords(v)) == v);
  CHECK(vec_is_zero(w.reduce(v)));
}

TEST_CASE("echelon span accumulates like rref") {
  EchelonSpan es(3);
  CHECK(es.insert({Rat(1), Rat(2), Rat(0)}));
  CHECK(!es.insert({Rat(2), Rat(4), Rat(0)}));  // dependent
  CHECK(es.insert({Rat(0), Rat(0), Rat(1)}));
  CHECK(es.dim() == 2);
  CHECK(es.contains({Rat(3), Rat(6), Rat(5)}));
  CHECK(es.to_subspace() ==
        Subspace::from_rows(Matrix{{1, 2, 0}, {0, 0, 1}}));
}

TEST_CASE("nullspace accumulator matches the stacked system") {
  Rng rng(22);
  for (int t = 0; t < 6; t++) {
    Matrix m(4, 5);
    for (std::size_t i = 0; i < 4; i++)
      for (std::size_t j = 0; j < 5; j++) m.at(i, j) = Rat(rng.pick(-3, 3));
    NullspaceAccumulator acc(5);
    for (std::size_t i = 0; i < 4; i++) acc.fold(m.row(i));
    CHECK(acc.result() == solve_nullspace(m));

    NullspaceAccumulator sparse(5);
    for (std::size_t i = 0; i < 4; i++) {
      std::vector<std::pair<std::size_t, Rat>> row;
      for (std::size_t j = 0; j < 5; j++)
        if (!m.at(i, j).is_zero()) row.push_back({j, m.at(i, j)});
      sparse.fold_sparse(row);
    }
    CHECK(sparse.result() == solve_nullspace(m));
  }
}

TEST_CASE("deterministic subspace ordering") {
  Subspace e1 = Subspace::from_rows(Matrix{{1, 0}});
  Subspace e2 = Subspace::from_rows(Matrix{{0, 1}});
  CHECK(Subspace::zero(2) < e1);
  CHECK((e1 < e2) != (e2 < e1));
  CHECK(e1 < Subspace::full(2));
}
