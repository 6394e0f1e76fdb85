#include "nlie/structure.hpp"

#include "nlie/catalog.hpp"

#include <algorithm>
#include <doctest.h>

using namespace nlie;

namespace {
Vec unit(std::size_t d, std::size_t i) {
  Vec v(d);
  v[i] = Rat(1);
  return v;
}

Subspace coord_span(std::size_t d, std::initializer_list<std::size_t> idx) {
  std::vector<Vec> vs;
  for (auto i : idx) vs.push_back(unit(d, i));
  return Subspace::from_vectors(vs, d);
}

// euclidean motions of the plane: a solvable 2-Lie algebra whose abelian
// ideal is an irreducible rotation module, so rational splitting attempts
// must fail honestly instead of inventing eigenlines
NLieAlgebra euclidean_motions() {
  return NLieAlgebra(2, 3, {"e1", "e2", "e3"},
                     {{{0, 2}, {Rat(0), Rat(-1), Rat(0)}},
                      {{1, 2}, {Rat(1), Rat(0), Rat(0)}}});
}

const AuditEntry& row(const StructureReport& rep, const std::string& id) {
  for (const auto& e : rep.audit)
    if (e.id == id) return e;
  throw std::out_of_range("no audit row " + id);
}
}  // namespace

TEST_CASE("socle") {
  SocleResult ab = socle(builtin("abelian_3").algebra);
  CHECK(ab.space.is_full());
  CHECK(ab.certified);

  SocleResult sa = socle(builtin("a4").algebra);  // simple: socle zero
  CHECK(sa.space.is_zero());
  CHECK(sa.certified);

  CHECK(socle(builtin("abelian_1").algebra).space.is_zero());  // a lone line

  SocleResult sd = socle(builtin("a4_dual").algebra);
  CHECK(sd.space == coord_span(8, {4, 5, 6, 7}));
  CHECK(sd.certified);

  SocleResult twin = socle(builtin("a4_plus_a4").algebra);
  CHECK(twin.space.is_full());
  CHECK(twin.certified);
}

TEST_CASE("minimal ideals") {
  NLieAlgebra ab2 = builtin("abelian_2").algebra;
  MinimalIdealSearch s = find_minimal_ideals(ab2, socle(ab2).space);
  REQUIRE(s.fully_split());
  REQUIRE(s.ideals.size() == 2);
  for (const auto& r : s.ideals) {
    CHECK(r.kind == MinimalIdealRecord::Kind::abelian);
    CHECK(r.space.dim() == 1);
    CHECK(r.in_center);
    CHECK(!r.in_derived);
  }

  // the dual block is a single minimal ideal: abelian yet moved around by
  // the inner derivations, so it never meets the (zero) center
  NLieAlgebra dual = builtin("a4_dual").algebra;
  MinimalIdealSearch sd = find_minimal_ideals(dual, socle(dual).space);
  REQUIRE(sd.fully_split());
  REQUIRE(sd.ideals.size() == 1);
  CHECK(sd.ideals[0].kind == MinimalIdealRecord::Kind::abelian);
  CHECK(sd.ideals[0].space == coord_span(8, {4, 5, 6, 7}));
  CHECK(!sd.ideals[0].in_center);
  CHECK(sd.ideals[0].in_derived);

  NLieAlgebra twin = builtin("a4_plus_a4").algebra;
  MinimalIdealSearch st = find_minimal_ideals(twin, socle(twin).space);
  REQUIRE(st.fully_split());
  REQUIRE(st.ideals.size() == 2);
  for (const auto& r : st.ideals) {
    CHECK(r.kind == MinimalIdealRecord::Kind::simple);
    CHECK(r.space.dim() == 4);
    CHECK(!r.in_center);
    CHECK(r.in_derived);
    CHECK(twin.is_ideal(r.space));
  }
  CHECK(st.ideals[0].space != st.ideals[1].space);
}

TEST_CASE("radical") {
  CHECK(radical(builtin("abelian_4").algebra).is_full());
  CHECK(radical(builtin("a4").algebra).is_zero());
  CHECK(radical(builtin("a_simple_4").algebra).is_zero());
  CHECK(radical(builtin("a4_dual").algebra) == coord_span(8, {4, 5, 6, 7}));
  CHECK(radical(builtin("a4_plus_a4").algebra).is_zero());
  CHECK(radical(builtin("a4_plus_abelian1").algebra) == coord_span(5, {4}));

  // the quotient by the radical has no abelian minimal ideals left
  NLieAlgebra dual = builtin("a4_dual").algebra;
  auto [q, proj] = dual.quotient(radical(dual));
  CHECK(socle(q).space.is_zero());
  CHECK(radical(q).is_zero());
}

TEST_CASE("largest strong semisimple ideal") {
  CatalogEntry mix = builtin("a4_plus_abelian1");
  CHECK(max_strong_semisimple_ideal(mix.algebra, mix.forms[0]) ==
        coord_span(5, {0, 1, 2, 3}));

  CatalogEntry dual = builtin("a4_dual");
  CHECK(max_strong_semisimple_ideal(dual.algebra, dual.forms[0]).is_zero());

  CatalogEntry twin = builtin("a4_plus_a4");
  CHECK(max_strong_semisimple_ideal(twin.algebra, twin.forms[0]).is_full());

  CatalogEntry a4 = builtin("a4");
  CHECK(max_strong_semisimple_ideal(a4.algebra, a4.forms[0]).is_full());
}

TEST_CASE("decomposition into B-irreducible ideals") {
  CatalogEntry ab2 = builtin("abelian_2");
  auto parts = b_irreducible_decomposition(ab2.algebra, ab2.forms[0]);
  REQUIRE(parts.size() == 2);
  for (const auto& p : parts) CHECK(p.space.dim() == 1);
  CHECK(subspace_sum(parts[0].space, parts[1].space).is_full());

  CatalogEntry twin = builtin("a4_plus_a4");
  auto tp = b_irreducible_decomposition(twin.algebra, twin.forms[0]);
  REQUIRE(tp.size() == 2);
  for (const auto& p : tp) {
    CHECK(p.space.dim() == 4);
    CHECK(p.algebra.is_perfect());
    CHECK(is_metric(p.algebra, p.form));
    CHECK(twin.algebra.is_ideal(p.space));
  }
  // components are mutually perpendicular
  CHECK(orthogonal_complement(twin.forms[0], tp[0].space) == tp[1].space);

  CatalogEntry dual = builtin("a4_dual");
  auto dp = b_irreducible_decomposition(dual.algebra, dual.forms[0]);
  REQUIRE(dp.size() == 1);
  CHECK(dp[0].space.is_full());

  CHECK(is_B_irreducible(builtin("a4").algebra, builtin("a4").forms[0]));
  CHECK(is_B_irreducible(dual.algebra, dual.forms[0]));
  CHECK(!is_B_irreducible(ab2.algebra, ab2.forms[0]));
  CHECK(!is_B_irreducible(twin.algebra, twin.forms[0]));
}

TEST_CASE("simplicity and strong semisimplicity") {
  CHECK(is_simple(builtin("a4").algebra));
  CHECK(is_simple(builtin("a_simple_2").algebra));
  CHECK(!is_simple(builtin("abelian_1").algebra));  // bracket vanishes
  CHECK(!is_simple(builtin("a4_plus_a4").algebra));
  CHECK(!is_simple(builtin("a4_dual").algebra));

  CHECK(is_strong_semisimple(builtin("a4").algebra));
  CHECK(is_strong_semisimple(builtin("a4_plus_a4").algebra));
  CHECK(!is_strong_semisimple(builtin("a4_dual").algebra));
  CHECK(!is_strong_semisimple(builtin("abelian_2").algebra));
  CHECK(!is_strong_semisimple(builtin("a4_plus_abelian1").algebra));
}

TEST_CASE("checking a complement to the radical") {
  NLieAlgebra dual = builtin("a4_dual").algebra;
  Subspace e_part = coord_span(8, {0, 1, 2, 3});
  Subspace f_part = coord_span(8, {4, 5, 6, 7});
  CHECK(verify_levi(dual, e_part, f_part));

  std::string why;
  CHECK(!verify_levi(dual, f_part, e_part, &why));  // swapped roles
  CHECK(!why.empty());

  NLieAlgebra a4 = builtin("a4").algebra;
  CHECK(verify_levi(a4, Subspace::full(4), Subspace::zero(4)));
  CHECK(!verify_levi(a4, Subspace::zero(4), Subspace::full(4)));

  NLieAlgebra ab2 = builtin("abelian_2").algebra;
  CHECK(verify_levi(ab2, Subspace::zero(2), Subspace::full(2)));
}

TEST_CASE("intertwiners from a Levi factor into the dual of the radical") {
  CatalogEntry dual = builtin("a4_dual");
  Subspace e_part = coord_span(8, {0, 1, 2, 3});
  auto taus = find_intertwiners(dual.algebra, dual.forms[0], e_part);
  REQUIRE(taus.size() == 1);  // one simple factor, one line of solutions
  const Matrix& t = taus[0].matrix;
  CHECK(!t.is_zero());
  CHECK(taus[0].self_adjoint);
  // tau kills the radical and maps the factor into it
  Subspace f_part = coord_span(8, {4, 5, 6, 7});
  CHECK(image_of_subspace({t}, f_part).is_zero());
  CHECK(f_part.contains(image_of_subspace({t}, e_part)));
  CHECK(in_centroid(dual.algebra, t));

  CatalogEntry a4 = builtin("a4");
  auto ta = find_intertwiners(a4.algebra, a4.forms[0], Subspace::full(4));
  REQUIRE(ta.size() == 1);
  CHECK(ta[0].matrix == Matrix::identity(4));

  CatalogEntry ab3 = builtin("abelian_3");
  CHECK(find_intertwiners(ab3.algebra, ab3.forms[0], Subspace::zero(3)).empty());
}

TEST_CASE("honest refusal on rationally unsplittable modules") {
  NLieAlgebra e2 = euclidean_motions();
  REQUIRE(e2.check_axioms().ok());

  SocleResult s = socle(e2);
  CHECK(s.space == coord_span(3, {0, 1}));
  CHECK(s.certified);

  // the rotation plane has no rational eigenlines: no minimal ideal split,
  // no radical certificate
  MinimalIdealSearch mi = find_minimal_ideals(e2, s.space);
  CHECK(!mi.fully_split());
  CHECK(mi.ideals.empty());
  REQUIRE(mi.unsplit.size() == 1);
  CHECK(mi.unsplit[0] == s.space);
  CHECK_THROWS_AS(radical(e2), NotSplitError);
}

TEST_CASE("full structure audit") {
  CatalogEntry a4 = builtin("a4");
  StructureReport rep = audit(a4.algebra, a4.forms[0]);
  CHECK(!rep.any(AuditStatus::fail));
  CHECK(!rep.any(AuditStatus::not_split));
  CHECK(rep.dim == 4);
  CHECK(rep.arity == 3);
  CHECK(rep.center.is_zero());
  CHECK(rep.derived.is_full());
  REQUIRE(rep.radical.has_value());
  CHECK(rep.radical->is_zero());
  CHECK(rep.socle_certified);
  CHECK(rep.metric_dim == 1);
  CHECK(rep.m_count.has_value());
  CHECK(rep.component_dims == std::vector<std::size_t>{4});
  CHECK(row(rep, "birreducible-implies-indecomposable").status ==
        AuditStatus::pass);
  CHECK(row(rep, "derived-perp-is-center").status == AuditStatus::pass);

  CatalogEntry ab2 = builtin("abelian_2");
  StructureReport rab = audit(ab2.algebra, ab2.forms[0]);
  CHECK(!rab.any(AuditStatus::fail));
  CHECK(!rab.any(AuditStatus::not_split));
  CHECK(rab.metric_dim == 3);
  CHECK(rab.m_count == 2);
  // the bound dim Gamma_B >= m + 1 only covers B-irreducible algebras
  CHECK(row(rab, "metric-dim-exceeds-minimal-ideal-count").status ==
        AuditStatus::not_applicable);
  CHECK(row(rab, "socle-equals-radical-centralizer").status ==
        AuditStatus::pass);

  CatalogEntry dual = builtin("a4_dual");
  AuditOptions opts;
  opts.levi = dual.levi;
  StructureReport rd = audit(dual.algebra, dual.forms[0], opts);
  CHECK(!rd.any(AuditStatus::fail));
  CHECK(!rd.any(AuditStatus::not_split));
  CHECK(rd.metric_dim == 2);
  CHECK(rd.m_count == 1);
  CHECK(rd.component_dims == std::vector<std::size_t>{8});
  REQUIRE(rd.levi.has_value());
  CHECK(*rd.levi == coord_span(8, {0, 1, 2, 3}));
  CHECK(row(rd, "metric-dim-exceeds-minimal-ideal-count").status ==
        AuditStatus::pass);
  CHECK(row(rd, "coisotropic-radical-iff-no-strong-semisimple-ideal").status ==
        AuditStatus::pass);
  CHECK(row(rd, "levi-dual-intertwiners").status == AuditStatus::pass);

  // a non-metric gram matrix is rejected outright
  CHECK_THROWS_AS(audit(a4.algebra,
                        BilinearForm{Matrix{{2, 0, 0, 0},
                                            {0, 1, 0, 0},
                                            {0, 0, 1, 0},
                                            {0, 0, 0, 1}}}),
                  std::domain_error);
}
