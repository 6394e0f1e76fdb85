#include "nlie/catalog.hpp"

#include "nlie/structure.hpp"

#include <doctest.h>

using namespace nlie;

TEST_CASE("catalog roster") {
  const auto& names = catalog_names();
  REQUIRE(names.size() == 10);
  CHECK(names.front() == "abelian_1");
  CHECK(names.back() == "a4_plus_abelian1");
  for (const auto& n : names) {
    CatalogEntry e = builtin(n);
    CHECK(e.name == n);
    REQUIRE(!e.forms.empty());
    CHECK(e.algebra.check_axioms().ok());
    for (const auto& f : e.forms) CHECK(is_metric(e.algebra, f));
  }
  CHECK_THROWS_AS(builtin("no_such_entry"), std::out_of_range);
}

TEST_CASE("frozen answers carry every reported invariant") {
  auto m = builtin("a4_dual").expected();
  for (const char* key :
       {"center_dim", "derived_dim", "radical_dim", "socle_dim",
        "max_strong_semisimple_dim", "metric_dim", "m_count", "component_dims",
        "simple", "strong_semisimple", "b_irreducible"})
    CHECK(m.count(key) == 1);
  CHECK(m["metric_dim"] == "2");
  CHECK(m["component_dims"] == "{8}");
  CHECK(m["b_irreducible"] == "true");
  CHECK(builtin("a4").expected()["simple"] == "true");
  CHECK(builtin("a4_plus_a4").expected()["component_dims"] == "{4,4}");
}

TEST_CASE("base change by the identity is a no-op") {
  CatalogEntry e = builtin("a4_dual");
  CatalogEntry same = scramble_with_matrix(e, Matrix::identity(8));
  CHECK(same.algebra.constants() == e.algebra.constants());
  CHECK(same.forms[0].gram == e.forms[0].gram);
  CHECK(same.center == e.center);
  CHECK(same.radical == e.radical);
  CHECK(same.socle == e.socle);

  CHECK_THROWS_AS(scramble_with_matrix(e, Matrix(8, 8)), std::invalid_argument);
  CHECK_THROWS_AS(scramble_with_matrix(e, Matrix::identity(3)),
                  std::invalid_argument);
}

TEST_CASE("scrambling is deterministic and structure-preserving") {
  CatalogEntry e = builtin("a4_plus_abelian1");
  CatalogEntry s1 = scramble(e, 3);
  CatalogEntry s2 = scramble(e, 3);
  CHECK(s1.algebra.constants() == s2.algebra.constants());
  CHECK(s1.forms[0].gram == s2.forms[0].gram);

  CatalogEntry other = scramble(e, 4);
  CHECK(other.algebra.constants() != s1.algebra.constants());

  CHECK(s1.algebra.check_axioms().ok());
  CHECK(is_metric(s1.algebra, s1.forms[0]));

  // transported subspaces agree with recomputing from scratch
  CHECK(s1.algebra.center() == s1.center);
  CHECK(s1.algebra.derived() == s1.derived);
  CHECK(radical(s1.algebra) == s1.radical);
  CHECK(socle(s1.algebra).space == s1.socle);
}

TEST_CASE("invariants survive a base change") {
  // the full frozen-answer recheck, on transported coordinates
  scramble(builtin("a4_dual"), 1).self_test();

  CatalogEntry s = scramble(builtin("a4_plus_a4"), 9);
  MetricDimension md = metric_dimension(s.algebra, s.forms[0]);
  CHECK(md.gamma_b_dim == 2);
  auto comps = b_irreducible_decomposition(s.algebra, s.forms[0]);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].space.dim() == 4);
  CHECK(comps[1].space.dim() == 4);
  MinimalIdealSearch mins = find_minimal_ideals(s.algebra, socle(s.algebra).space);
  REQUIRE(mins.fully_split());
  CHECK(mins.ideals.size() == 2);
}
