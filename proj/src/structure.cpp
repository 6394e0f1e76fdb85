#include "nlie/structure.hpp"

#include "nlie/eigensplit.hpp"
#include "nlie/operator_algebra.hpp"
#include "nlie/rng.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <utility>

namespace nlie {

namespace {

// sub is expressed in w's RREF coordinates; rows become ambient vectors
Subspace lift_rows(const Subspace& w, const Subspace& sub) {
  if (sub.ambient() != w.dim()) throw DimensionError("lift: coordinate mismatch");
  if (sub.is_zero()) return Subspace::zero(w.ambient());
  return Subspace::from_rows(sub.basis() * w.basis());
}

// projection with image s and kernel t, defined when s + t is direct and full
Matrix projection_onto(const Subspace& s, const Subspace& t) {
  const std::size_t d = s.ambient();
  if (s.dim() + t.dim() != d)
    throw DimensionError("projection needs complementary subspaces");
  Matrix m(d, d);  // columns: basis of s, then basis of t
  for (std::size_t j = 0; j < s.dim(); j++)
    for (std::size_t i = 0; i < d; i++) m.at(i, j) = s.basis().at(j, i);
  for (std::size_t j = 0; j < t.dim(); j++)
    for (std::size_t i = 0; i < d; i++) m.at(i, s.dim() + j) = t.basis().at(j, i);
  Matrix sel(d, d);
  for (std::size_t j = 0; j < s.dim(); j++) sel.at(j, j) = Rat(1);
  return m * sel * m.inverse();
}

Rat form_val(const BilinearForm& b, const Vec& x, const Vec& y) {
  return dot(x, b.gram.apply(y));
}

// central vector v with B(v,v) != 0; exists exactly when the form does not
// vanish identically on the center (char 0: polarize B(x,y) from B(v,v))
std::optional<Vec> nondegenerate_central_vector(const Subspace& c,
                                                const BilinearForm& b) {
  std::vector<Vec> vs = c.basis_vectors();
  for (const auto& v : vs)
    if (!form_val(b, v, v).is_zero()) return v;
  for (std::size_t i = 0; i < vs.size(); i++)
    for (std::size_t j = i + 1; j < vs.size(); j++)
      if (!form_val(b, vs[i], vs[j]).is_zero()) {
        Vec w = vs[i];
        vec_addmul(w, Rat(1), vs[j]);  // B(w,w) = 2 B(vi,vj) here
        return w;
      }
  return std::nullopt;
}

std::string join_dims(const std::vector<std::size_t>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); i++) os << (i ? "," : "") << xs[i];
  return os.str();
}

// lazy structural idempotent sources: B-orthogonal projection onto a
// nondegenerate central line, projection onto the maximal strong semisimple
// ideal along its orthogonal complement
std::vector<Matrix> structural_projections(const NLieAlgebra& a,
                                           const BilinearForm& b,
                                           std::uint64_t seed) {
  std::vector<Matrix> out;
  const std::size_t d = a.dim();
  if (auto v = nondegenerate_central_vector(a.center(), b)) {
    Vec gv = b.gram.apply(*v);
    Rat vv = dot(*v, gv);
    Matrix p(d, d);
    for (std::size_t i = 0; i < d; i++)
      for (std::size_t j = 0; j < d; j++) p.at(i, j) = (*v)[i] * gv[j] / vv;
    out.push_back(std::move(p));
  }
  try {
    Subspace s = max_strong_semisimple_ideal(a, b, seed);
    if (!s.is_zero() && !s.is_full())
      out.push_back(projection_onto(s, orthogonal_complement(b, s)));
  } catch (const NotSplitError&) {
    // candidate generation stays best-effort
  }
  return out;
}

// Hunts a nontrivial idempotent of the centroid among eigenprojections of
// the given basis, then of lazily supplied structural candidates, then of
// seeded small combinations. When b is non-null the idempotent must also be
// self-adjoint. Every returned matrix is re-verified.
std::optional<Matrix> find_centroid_idempotent(
    const NLieAlgebra& a, const BilinearForm* b,
    const std::vector<Matrix>& basis,
    const std::function<std::vector<Matrix>()>& structural,
    std::uint64_t seed) {
  const std::size_t d = a.dim();
  const Matrix id = Matrix::identity(d);
  auto examine = [&](const Matrix& cand) -> std::optional<Matrix> {
    EigenSplit es = rational_eigenprojection(cand);
    for (const auto& part : es.parts) {
      const Matrix& p = part.projection;
      if (p.is_zero() || p == id) continue;
      // eigenprojections are polynomials in the candidate, so they stay in
      // the centroid (and stay self-adjoint); checked rather than assumed
      if (!in_centroid(a, p)) continue;
      if (b && !is_self_adjoint(*b, p)) continue;
      return p;
    }
    return std::nullopt;
  };
  for (const auto& m : basis)
    if (auto p = examine(m)) return p;
  if (structural)
    for (const auto& m : structural())
      if (auto p = examine(m)) return p;
  if (basis.size() > 1) {
    Rng rng(seed * 2 + 1);
    for (int t = 0; t < 40; t++) {
      Matrix combo(d, d);
      for (const auto& m : basis) combo = combo + m * Rat(rng.pick(-3, 3));
      if (auto p = examine(combo)) return p;
    }
  }
  return std::nullopt;
}

// simple ideals spanning s (the restriction of a to s must be strong
// semisimple); ambient coordinates of a
std::vector<Subspace> simple_factors(const NLieAlgebra& a, const Subspace& s,
                                     std::uint64_t seed) {
  std::vector<Subspace> out;
  if (s.is_zero()) return out;
  NLieAlgebra sa = a.restrict_to(s);
  if (is_simple(sa, seed)) {
    out.push_back(s);
    return out;
  }
  SocleResult soc = socle(sa);
  MinimalIdealSearch mins = find_minimal_ideals(sa, soc.space, seed);
  if (!mins.fully_split())
    throw NotSplitError("Levi factor resists splitting into simple ideals over Q");
  Subspace sum = Subspace::zero(s.dim());
  for (const auto& rec : mins.ideals) {
    if (rec.kind != MinimalIdealRecord::Kind::simple)
      throw std::logic_error("Levi subalgebra has an abelian minimal ideal");
    sum = subspace_sum(sum, rec.space);
    out.push_back(lift_rows(s, rec.space));
  }
  if (!sum.is_full())
    throw std::logic_error("simple factors do not span the Levi subalgebra");
  return out;
}

struct FactorIntertwiners {
  Subspace factor;  // simple ideal of the Levi subalgebra, ambient coords
  std::vector<CentroidElement> taus;
};

// Solves, factor by factor, for self-adjoint centroid elements vanishing on
// the radical and the other factors and mapping the chosen factor into the
// orthogonal complement of the radical. r must be the radical of a and s a
// verified Levi complement.
std::vector<FactorIntertwiners> intertwiners_by_factor(const NLieAlgebra& a,
                                                       const BilinearForm& form,
                                                       const Subspace& s,
                                                       const Subspace& r,
                                                       std::uint64_t seed) {
  const std::size_t d = a.dim();
  Subspace rperp = orthogonal_complement(form, r);
  if (rperp.dim() != s.dim())
    throw std::logic_error("radical-perp dimension differs from the Levi dimension");
  if (!subspace_intersect(rperp, orthogonal_complement(form, s)).is_zero())
    throw std::logic_error("radical-perp pairs degenerately with the Levi subalgebra");
  std::vector<FactorIntertwiners> out;
  if (s.is_zero()) return out;
  std::vector<Subspace> factors = simple_factors(a, s, seed);
  Subspace gb = gamma_b_span(a, form);
  Matrix perp_rows = r.basis() * form.gram;  // y in R-perp <=> perp_rows y = 0
  for (std::size_t i = 0; i < factors.size(); i++) {
    NullspaceAccumulator acc(d * d);
    auto vanish_on = [&](const Subspace& v) {
      for (const auto& x : v.basis_vectors())
        for (std::size_t m = 0; m < d; m++) {
          std::vector<std::pair<std::size_t, Rat>> row;
          for (std::size_t l = 0; l < d; l++)
            if (!x[l].is_zero()) row.push_back({m * d + l, x[l]});
          acc.fold_sparse(row);
        }
    };
    vanish_on(r);
    for (std::size_t j = 0; j < factors.size(); j++)
      if (j != i) vanish_on(factors[j]);
    for (const auto& x : factors[i].basis_vectors())
      for (std::size_t t = 0; t < perp_rows.rows(); t++) {
        std::vector<std::pair<std::size_t, Rat>> row;
        for (std::size_t m = 0; m < d; m++) {
          if (perp_rows.at(t, m).is_zero()) continue;
          for (std::size_t l = 0; l < d; l++)
            if (!x[l].is_zero()) row.push_back({m * d + l, perp_rows.at(t, m) * x[l]});
        }
        acc.fold_sparse(row);
      }
    FactorIntertwiners fi;
    fi.factor = factors[i];
    for (const auto& v : subspace_intersect(gb, acc.result()).basis_vectors()) {
      Matrix m = Matrix::unflatten(v, d, d);
      if (!in_centroid(a, m) || !is_self_adjoint(form, m))
        throw std::logic_error("intertwiner escaped the self-adjoint centroid");
      fi.taus.push_back({std::move(m), true});
    }
    out.push_back(std::move(fi));
  }
  return out;
}

// checks against a radical that is already known to be correct
bool levi_checks(const NLieAlgebra& a, const Subspace& s, const Subspace& r,
                 std::string* why) {
  auto fail = [&](const char* m) {
    if (why) *why = m;
    return false;
  };
  if (s.ambient() != a.dim() || r.ambient() != a.dim())
    return fail("ambient dimension mismatch");
  if (!subspace_intersect(s, r).is_zero() ||
      subspace_sum(s, r).dim() != a.dim())
    return fail("subspace does not complement the radical");
  if (!a.is_subalgebra(s)) return fail("complement is not a subalgebra");
  if (!s.is_zero() && !is_strong_semisimple(a.restrict_to(s)))
    return fail("complement is not strong semisimple");
  return true;
}

}  // namespace

SocleResult socle(const NLieAlgebra& a, const std::optional<BilinearForm>&) {
  const std::size_t d = a.dim();
  if (d == 1) return {Subspace::zero(1), true};
  const OperatorAlgebra& e = a.inner_derivations();
  Subspace ann = e.radical_basis.empty() ? Subspace::full(d)
                                         : joint_kernel(e.radical_basis, d);
  // Ann(Rad E) is the sum of the minimal ideals for every non-simple
  // algebra; the convention maps the simple case to zero instead.
  if (!a.is_perfect()) return {ann, true};
  if (e.radical_dim() > 0) return {ann, true};
  // perfect with semisimple adjoint module: simple iff the module is
  // irreducible
  if (commutant_on(e.generators, Subspace::full(d)).size() == 1)
    return {Subspace::zero(d), true};
  ModuleSplit split = split_module(e.generators, Subspace::full(d), 0);
  for (const auto& c : split.components)
    if (!c.is_full()) return {ann, true};  // proper ideal found: not simple
  for (const auto& c : split.unsplit)
    if (!c.is_full()) return {ann, true};
  return {ann, false};  // simplicity stayed open, report the annihilator
}

MinimalIdealSearch find_minimal_ideals(const NLieAlgebra& a,
                                       const Subspace& soc,
                                       std::uint64_t seed) {
  MinimalIdealSearch out;
  const std::size_t d = a.dim();
  if (soc.ambient() != d) throw DimensionError("socle: ambient mismatch");
  if (soc.is_zero()) return out;
  const Subspace ctr = a.center();
  const Subspace der = a.derived();
  // fixed part: every line of Soc meeting the center is a minimal ideal
  const Subspace triv = subspace_intersect(soc, ctr);
  for (const auto& v : triv.basis_vectors()) {
    MinimalIdealRecord rec;
    rec.space = Subspace::from_vectors({v}, d);
    rec.kind = MinimalIdealRecord::Kind::abelian;
    rec.in_center = true;
    rec.in_derived = der.contains(rec.space);
    out.ideals.push_back(std::move(rec));
  }
  // moving part: the image of the socle under the inner-derivation algebra
  const OperatorAlgebra& e = a.inner_derivations();
  Subspace moving = image_of_subspace(e.span_basis, soc);
  if (subspace_sum(triv, moving) != soc ||
      !subspace_intersect(triv, moving).is_zero())
    throw std::logic_error("socle failed to split into fixed and moving parts");
  if (!moving.is_zero()) {
    ModuleSplit split = split_module(e.generators, moving, seed);
    for (const auto& comp : split.components) {
      if (!a.is_ideal(comp))
        throw std::logic_error("socle component is not an ideal");
      for (const auto& v : comp.basis_vectors())
        if (cyclic_closure(e.generators, v) != comp)
          throw std::logic_error("socle component is not a minimal ideal");
      MinimalIdealRecord rec;
      rec.space = comp;
      rec.kind = a.is_abelian_ideal(comp) ? MinimalIdealRecord::Kind::abelian
                                          : MinimalIdealRecord::Kind::simple;
      rec.in_center = ctr.contains(comp);
      rec.in_derived = der.contains(comp);
      out.ideals.push_back(std::move(rec));
    }
    out.unsplit = split.unsplit;
  }
  return out;
}

Subspace radical(const NLieAlgebra& a, std::uint64_t seed) {
  const std::size_t d = a.dim();
  if (d == 1) return Subspace::full(1);  // the bracket vanishes on a line
  SocleResult soc = socle(a);
  MinimalIdealSearch mins = find_minimal_ideals(a, soc.space, seed);
  const MinimalIdealRecord* ab = nullptr;
  for (const auto& r : mins.ideals)
    if (r.kind == MinimalIdealRecord::Kind::abelian) {
      ab = &r;
      break;
    }
  Subspace result = Subspace::zero(d);
  if (!ab) {
    if (!soc.certified || !mins.fully_split())
      throw NotSplitError("radical undecided over Q");
    // every minimal ideal is simple, so no solvable ideal survives
  } else {
    if (ab->space.is_full())
      throw std::logic_error("minimal ideal covers a non-simple algebra");
    auto qp = a.quotient(ab->space);
    Subspace rq = radical(qp.first, seed);
    if (rq.is_full()) {
      result = Subspace::full(d);
    } else {
      // preimage: x belongs iff every functional vanishing on rq kills the
      // projection of x
      Subspace funs = solve_nullspace(rq.basis());
      result = solve_nullspace(funs.basis() * qp.second);
    }
  }
  if (!a.is_ideal(result) || !a.is_solvable(result))
    throw std::logic_error("radical candidate failed its certificate");
  return result;
}

Subspace max_strong_semisimple_ideal(const NLieAlgebra& a,
                                     const BilinearForm& form,
                                     std::uint64_t seed) {
  if (!is_metric(a, form))
    throw std::domain_error("form is not a metric form for the algebra");
  const std::size_t d = a.dim();
  if (is_simple(a, seed)) return Subspace::full(d);
  SocleResult soc = socle(a);
  MinimalIdealSearch mins = find_minimal_ideals(a, soc.space, seed);
  // a simple ideal could hide inside a residue unless the residue is abelian
  for (const auto& u : mins.unsplit)
    if (!a.is_abelian_ideal(u))
      throw NotSplitError("maximal strong semisimple ideal undecided over Q");
  Subspace s = Subspace::zero(d);
  for (const auto& r : mins.ideals)
    if (r.kind == MinimalIdealRecord::Kind::simple)
      s = subspace_sum(s, r.space);
  if (!s.is_zero()) {
    if (restrict_form(form, s).det().is_zero())
      throw std::logic_error("sum of simple ideals is degenerate");
    Subspace perp = orthogonal_complement(form, s);
    if (!subspace_intersect(s, perp).is_zero() ||
        subspace_sum(s, perp).dim() != d)
      throw std::logic_error("sum of simple ideals does not split the algebra");
  }
  return s;
}

std::vector<BIrredComponent> b_irreducible_decomposition(
    const NLieAlgebra& a, const BilinearForm& form, std::uint64_t seed) {
  if (!is_metric(a, form))
    throw std::domain_error("form is not a metric form for the algebra");
  const std::size_t d = a.dim();
  std::vector<BIrredComponent> out;
  std::vector<Subspace> work{Subspace::full(d)};
  while (!work.empty()) {
    Subspace w = work.back();
    work.pop_back();
    NLieAlgebra alg = a.restrict_to(w);
    BilinearForm bw{restrict_form(form, w)};
    std::vector<CentroidElement> gb = gamma_B(alg, bw);
    // cheap test first: when the unital closure of the self-adjoint centroid
    // is local it has no nontrivial idempotents at all, so the piece is
    // certified irreducible without hunting for one
    std::vector<Matrix> gens;
    gens.push_back(Matrix::identity(w.dim()));
    for (const auto& g : gb) gens.push_back(g.matrix);
    OperatorAlgebra cl = close_operator_algebra(gens, w.dim());
    if (cl.dim() - cl.radical_dim() == 1) {
      out.push_back({std::move(w), std::move(alg), std::move(bw)});
      continue;
    }
    std::vector<Matrix> basis;
    for (const auto& g : gb) basis.push_back(g.matrix);
    auto split = find_centroid_idempotent(
        alg, &bw, basis, [&] { return structural_projections(alg, bw, seed); },
        seed);
    if (!split)
      throw NotSplitError("cannot certify B-irreducibility over Q");
    // image and kernel of a self-adjoint centroid idempotent are
    // orthogonal complementary ideals
    Subspace im = lift_rows(w, Subspace::from_rows(split->transpose()));
    Subspace ker = lift_rows(w, solve_nullspace(*split));
    if (im.dim() + ker.dim() != w.dim() || im.is_zero() || ker.is_zero())
      throw std::logic_error("centroid idempotent split lost dimensions");
    if (!a.is_ideal(im) || !a.is_ideal(ker))
      throw std::logic_error("centroid idempotent piece is not an ideal");
    work.push_back(im);
    work.push_back(ker);
  }
  std::sort(out.begin(), out.end(),
            [](const BIrredComponent& x, const BIrredComponent& y) {
              return x.space < y.space;
            });
  Subspace sum = Subspace::zero(d);
  for (const auto& c : out) sum = subspace_sum(sum, c.space);
  if (!sum.is_full())
    throw std::logic_error("components do not span the algebra");
  for (std::size_t i = 0; i < out.size(); i++)
    for (std::size_t j = i + 1; j < out.size(); j++)
      if (!(out[i].space.basis() * form.gram *
            out[j].space.basis().transpose())
               .is_zero())
        throw std::logic_error("components are not orthogonal");
  return out;
}

bool is_B_irreducible(const NLieAlgebra& a, const BilinearForm& form,
                      std::uint64_t seed) {
  return b_irreducible_decomposition(a, form, seed).size() == 1;
}

bool is_simple(const NLieAlgebra& a, std::uint64_t seed) {
  Subspace der = a.derived();
  if (der.is_zero()) return false;  // needs a nonzero bracket
  if (!der.is_full()) return false;  // proper nonzero ideal
  const OperatorAlgebra& e = a.inner_derivations();
  if (e.radical_dim() > 0) return false;  // Ann(Rad E) is a proper ideal
  const std::size_t d = a.dim();
  if (commutant_on(e.generators, Subspace::full(d)).size() == 1)
    return true;  // adjoint module irreducible: no proper nonzero ideals
  ModuleSplit split = split_module(e.generators, Subspace::full(d), seed);
  for (const auto& c : split.components)
    if (!c.is_full()) return false;
  for (const auto& c : split.unsplit)
    if (!c.is_full()) return false;
  throw NotSplitError("simplicity undecided over Q");
}

bool is_strong_semisimple(const NLieAlgebra& a, std::uint64_t seed) {
  if (is_simple(a, seed)) return true;
  SocleResult soc = socle(a);
  MinimalIdealSearch mins = find_minimal_ideals(a, soc.space, seed);
  Subspace s = Subspace::zero(a.dim());
  for (const auto& r : mins.ideals)
    if (r.kind == MinimalIdealRecord::Kind::simple)
      s = subspace_sum(s, r.space);
  if (s.is_full()) return true;
  if (!soc.certified || !mins.fully_split())
    throw NotSplitError("strong semisimplicity undecided over Q");
  return false;
}

bool verify_levi(const NLieAlgebra& a, const Subspace& s, const Subspace& r,
                 std::string* why) {
  Subspace rad = radical(a);
  if (r != rad) {
    if (why) *why = "supplied radical is not the radical";
    return false;
  }
  return levi_checks(a, s, r, why);
}

std::vector<CentroidElement> find_intertwiners(const NLieAlgebra& a,
                                               const BilinearForm& form,
                                               const Subspace& s) {
  if (!is_metric(a, form))
    throw std::domain_error("form is not a metric form for the algebra");
  Subspace r = radical(a);
  std::string why;
  if (!verify_levi(a, s, r, &why))
    throw std::invalid_argument("not a Levi decomposition: " + why);
  std::vector<CentroidElement> out;
  for (auto& fi : intertwiners_by_factor(a, form, s, r, 0))
    for (auto& t : fi.taus) out.push_back(std::move(t));
  return out;
}

std::string audit_status_str(AuditStatus s) {
  switch (s) {
    case AuditStatus::pass: return "pass";
    case AuditStatus::fail: return "fail";
    case AuditStatus::not_applicable: return "not-applicable";
    case AuditStatus::not_split: return "not-split";
  }
  return "?";
}

bool StructureReport::any(AuditStatus s) const {
  for (const auto& e : audit)
    if (e.status == s) return true;
  return false;
}

namespace {

using CheckResult = std::pair<AuditStatus, std::string>;

CheckResult ok(std::string d) { return {AuditStatus::pass, std::move(d)}; }
CheckResult bad(std::string d) { return {AuditStatus::fail, std::move(d)}; }
CheckResult na(std::string d) { return {AuditStatus::not_applicable, std::move(d)}; }
CheckResult ns(std::string d) { return {AuditStatus::not_split, std::move(d)}; }

// everything the checks share, computed once per audit
struct Ctx {
  const NLieAlgebra& a;
  const BilinearForm& b;
  std::uint64_t seed = 0;
  std::size_t d = 0, n = 0;
  Subspace center, derived;
  bool perfect = false;
  MetricDimension md;
  std::vector<CentroidElement> gb;

  SocleResult soc;
  std::optional<MinimalIdealSearch> mins;
  std::optional<Subspace> rad, rperp, cgr;
  std::string rad_err;
  std::optional<Subspace> sg;
  std::string sg_err;
  std::optional<std::vector<BIrredComponent>> comps;
  std::string comps_err;
  std::optional<bool> simple;
  std::string simple_err;
  std::optional<Subspace> soc_incl;  // socle counting simple algebras whole
  std::optional<Subspace> levi;
  std::string levi_err;
  std::optional<std::size_t> m_count;
  std::string m_err;

  std::vector<Subspace> ideal_pool;
  std::vector<Subspace> subspace_pool;
};

Subspace random_subspace(Rng& rng, std::size_t d, std::size_t k) {
  std::vector<Vec> vs;
  for (std::size_t i = 0; i < k; i++) {
    Vec v(d);
    for (std::size_t j = 0; j < d; j++) v[j] = Rat(rng.pick(-2, 2));
    vs.push_back(std::move(v));
  }
  return Subspace::from_vectors(vs, d);
}

void for_each_choice(const std::vector<std::vector<Vec>>& lists,
                     const std::function<void(const std::vector<Vec>&)>& fn) {
  std::vector<Vec> cur(lists.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == lists.size()) {
      fn(cur);
      return;
    }
    for (const auto& v : lists[i]) {
      cur[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
}

void fill_context(Ctx& ctx, const AuditOptions& opts) {
  const NLieAlgebra& a = ctx.a;
  ctx.seed = opts.seed;
  ctx.d = a.dim();
  ctx.n = a.arity();
  ctx.center = a.center();
  ctx.derived = a.derived();
  ctx.perfect = ctx.derived.is_full();
  ctx.md = metric_dimension(a, ctx.b);
  ctx.gb = gamma_B(a, ctx.b);
  ctx.soc = socle(a);
  ctx.mins = find_minimal_ideals(a, ctx.soc.space, ctx.seed);
  if (ctx.soc.certified && ctx.mins->fully_split())
    ctx.m_count = ctx.mins->ideals.size();
  else
    ctx.m_err = ctx.soc.certified ? "socle resists full splitting over Q"
                                  : "socle not certified over Q";
  try {
    ctx.rad = radical(a, ctx.seed);
    ctx.rperp = orthogonal_complement(ctx.b, *ctx.rad);
    ctx.cgr = a.centralizer(*ctx.rad);
  } catch (const NotSplitError& e) {
    ctx.rad_err = e.what();
  }
  try {
    ctx.sg = max_strong_semisimple_ideal(a, ctx.b, ctx.seed);
  } catch (const NotSplitError& e) {
    ctx.sg_err = e.what();
  }
  try {
    ctx.comps = b_irreducible_decomposition(a, ctx.b, ctx.seed);
  } catch (const NotSplitError& e) {
    ctx.comps_err = e.what();
  }
  try {
    ctx.simple = is_simple(a, ctx.seed);
  } catch (const NotSplitError& e) {
    ctx.simple_err = e.what();
  }
  if (ctx.simple)
    ctx.soc_incl = (ctx.d == 1 || *ctx.simple) ? Subspace::full(ctx.d)
                                               : ctx.soc.space;
  // Levi complement: accept a supplied one, or infer in the cheap cases
  if (!ctx.rad) {
    ctx.levi_err = ctx.rad_err;
  } else if (ctx.rad->is_full()) {
    ctx.levi = Subspace::zero(ctx.d);
  } else if (ctx.rad->is_zero()) {
    ctx.levi = Subspace::full(ctx.d);
  } else {
    auto try_levi = [&](const Subspace& cand) {
      if (ctx.levi) return;
      std::string why;
      try {
        if (levi_checks(a, cand, *ctx.rad, &why)) ctx.levi = cand;
      } catch (const NotSplitError&) {
      }
    };
    if (opts.levi) try_levi(*opts.levi);
    if (ctx.sg && ctx.sg->dim() + ctx.rad->dim() == ctx.d) try_levi(*ctx.sg);
    {
      // complement spanned by the coordinates missed by the radical's pivots
      std::vector<bool> piv(ctx.d, false);
      for (auto p : ctx.rad->pivots()) piv[p] = true;
      std::vector<Vec> vs;
      for (std::size_t i = 0; i < ctx.d; i++)
        if (!piv[i]) {
          Vec v(ctx.d);
          v[i] = Rat(1);
          vs.push_back(std::move(v));
        }
      try_levi(Subspace::from_vectors(vs, ctx.d));
    }
    if (!ctx.levi)
      ctx.levi_err = "no strong semisimple complement of the radical is known";
  }
  // pools for the property checks
  std::vector<Subspace> pool{Subspace::zero(ctx.d), ctx.center, ctx.derived,
                             ctx.soc.space, Subspace::full(ctx.d)};
  if (ctx.rad) {
    pool.push_back(*ctx.rad);
    pool.push_back(*ctx.rperp);
  }
  if (ctx.sg) pool.push_back(*ctx.sg);
  if (ctx.comps)
    for (const auto& c : *ctx.comps) pool.push_back(c.space);
  for (const auto& r : ctx.mins->ideals) pool.push_back(r.space);
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  for (const auto& s : pool)
    if (ctx.a.is_ideal(s)) ctx.ideal_pool.push_back(s);
  ctx.subspace_pool = ctx.ideal_pool;
  Rng rng(ctx.seed + 7);
  for (std::size_t k = 0; k < 4; k++)
    ctx.subspace_pool.push_back(random_subspace(rng, ctx.d, 1 + k % 2));
}

void run_checks(Ctx& ctx, StructureReport& rep) {
  const NLieAlgebra& a = ctx.a;
  const BilinearForm& form = ctx.b;
  const std::size_t d = ctx.d;

  auto run = [&](const char* id, const std::function<CheckResult()>& fn) {
    AuditEntry e;
    e.id = id;
    try {
      auto r = fn();
      e.status = r.first;
      e.detail = std::move(r.second);
    } catch (const NotSplitError& ex) {
      e.status = AuditStatus::not_split;
      e.detail = ex.what();
    }
    rep.audit.push_back(std::move(e));
  };

  run("birreducible-implies-indecomposable", [&]() -> CheckResult {
    if (!ctx.comps) return ns(ctx.comps_err);
    if (ctx.comps->size() > 1)
      return na("not B-irreducible (component dims " +
                join_dims(rep.component_dims) + ")");
    std::vector<CentroidElement> cent = centroid(a);
    std::vector<Matrix> gens;
    gens.push_back(Matrix::identity(d));
    for (const auto& c : cent) gens.push_back(c.matrix);
    OperatorAlgebra cl = close_operator_algebra(gens, d);
    if (cl.dim() - cl.radical_dim() == 1)
      return ok("no centroid idempotent; unital centroid closure is local");
    std::vector<Matrix> basis;
    for (const auto& c : cent) basis.push_back(c.matrix);
    auto p = find_centroid_idempotent(
        a, nullptr, basis,
        [&] { return structural_projections(a, form, ctx.seed); }, ctx.seed);
    if (p)
      return bad("B-irreducible algebra decomposed by a centroid idempotent");
    return ns("indecomposability not certified: unital centroid closure is not local");
  });

  run("ideal-product-perp-is-centralizer", [&]() -> CheckResult {
    std::size_t cnt = 0;
    for (const auto& i : ctx.ideal_pool) {
      if (orthogonal_complement(form, a.product_with_full(i)) !=
          a.centralizer(i))
        return bad("fails for the ideal with basis " + i.str());
      cnt++;
    }
    return ok(std::to_string(cnt) + " ideals checked");
  });

  run("perfect-summand-nondegenerate", [&]() -> CheckResult {
    std::vector<Subspace> insts;
    auto add_pair = [&](const Subspace& i, const Subspace& y) {
      if (i.is_zero() || y.is_zero()) return;
      if (!subspace_intersect(i, y).is_zero() ||
          subspace_sum(i, y).dim() != d)
        return;
      std::vector<Subspace> slots(ctx.n, i);
      if (a.subspace_product(slots) != i) return;  // summand not perfect
      insts.push_back(i);
    };
    if (ctx.comps && ctx.comps->size() > 1)
      for (std::size_t k = 0; k < ctx.comps->size(); k++) {
        Subspace rest = Subspace::zero(d);
        for (std::size_t l = 0; l < ctx.comps->size(); l++)
          if (l != k) rest = subspace_sum(rest, (*ctx.comps)[l].space);
        add_pair((*ctx.comps)[k].space, rest);
      }
    if (ctx.sg && !ctx.sg->is_zero() && !ctx.sg->is_full())
      add_pair(*ctx.sg, orthogonal_complement(form, *ctx.sg));
    if (insts.empty()) return na("no perfect proper direct summand");
    for (const auto& i : insts)
      if (restrict_form(form, i).det().is_zero())
        return bad("degenerate perfect summand with basis " + i.str());
    return ok(std::to_string(insts.size()) + " perfect summands nondegenerate");
  });

  run("nondegenerate-ideal-splits", [&]() -> CheckResult {
    std::size_t cnt = 0;
    for (const auto& i : ctx.ideal_pool) {
      if (i.is_zero()) continue;
      if (restrict_form(form, i).det().is_zero()) continue;
      Subspace perp = orthogonal_complement(form, i);
      if (!a.is_ideal(perp))
        return bad("orthogonal complement fails to be an ideal for basis " + i.str());
      if (!subspace_intersect(i, perp).is_zero() ||
          subspace_sum(i, perp).dim() != d)
        return bad("nondegenerate ideal does not split the algebra: basis " + i.str());
      cnt++;
    }
    return ok(std::to_string(cnt) + " nondegenerate ideals split");
  });

  run("derived-perp-is-center", [&]() -> CheckResult {
    if (orthogonal_complement(form, ctx.derived) != ctx.center)
      return bad("derived-subalgebra complement differs from the center");
    return ok("dim derived " + std::to_string(ctx.derived.dim()) +
              ", dim center " + std::to_string(ctx.center.dim()));
  });

  run("perfect-iff-centerless", [&]() -> CheckResult {
    if (ctx.perfect != ctx.center.is_zero())
      return bad(ctx.perfect ? "perfect but has a center"
                             : "centerless but not perfect");
    return ok(ctx.perfect ? "perfect and centerless"
                          : "non-perfect with nonzero center");
  });

  run("bracket-orthogonality-transfer", [&]() -> CheckResult {
    Rng rng(ctx.seed + 101);
    std::size_t tuples = 0;
    for (int t = 0; t < 4; t++) {
      std::vector<Subspace> ws;
      for (std::size_t i = 0; i < ctx.n; i++)
        ws.push_back(ctx.subspace_pool[static_cast<std::size_t>(rng.pick(
            0, static_cast<long>(ctx.subspace_pool.size()) - 1))]);
      Subspace lhs = orthogonal_complement(form, a.subspace_product(ws));
      NullspaceAccumulator acc(d);
      for (std::size_t slot = 0; slot < ctx.n; slot++) {
        Matrix wi_rows = ws[slot].basis() * form.gram;
        if (wi_rows.rows() == 0) continue;
        std::vector<std::vector<Vec>> lists;
        for (std::size_t j = 0; j < ctx.n; j++)
          if (j != slot) lists.push_back(ws[j].basis_vectors());
        for_each_choice(lists, [&](const std::vector<Vec>& combo) {
          Matrix m(d, d);  // column c: bracket with e_c in the probed slot
          for (std::size_t c = 0; c < d; c++) {
            std::vector<Vec> args;
            std::size_t k = 0;
            for (std::size_t j = 0; j < ctx.n; j++) {
              if (j == slot) {
                Vec unit(d);
                unit[c] = Rat(1);
                args.push_back(std::move(unit));
              } else {
                args.push_back(combo[k++]);
              }
            }
            Vec img = a.bracket(args);
            for (std::size_t r = 0; r < d; r++) m.at(r, c) = img[r];
          }
          for (std::size_t r = 0; r < wi_rows.rows(); r++) {
            Vec row(d);
            for (std::size_t c = 0; c < d; c++)
              row[c] = dot(wi_rows.row(r), m.col(c));
            acc.fold(row);
          }
        });
      }
      if (acc.result() != lhs)
        return bad("slotwise orthogonality conditions mismatch the product complement");
      tuples++;
    }
    return ok(std::to_string(tuples) + " subspace tuples checked");
  });

  run("orthogonal-birreducible-decomposition", [&]() -> CheckResult {
    if (!ctx.comps) return ns(ctx.comps_err);
    // orthogonality, nondegeneracy and spanning are re-verified on the way
    // out of the decomposition; record the profile here
    return ok("component dims " + join_dims(rep.component_dims) +
              " (decomposition unique only up to this profile)");
  });

  run("ideal-iff-perp-centralizes", [&]() -> CheckResult {
    std::size_t cnt = 0, ideals = 0;
    for (const auto& w : ctx.subspace_pool) {
      bool lhs = a.is_ideal(w);
      bool rhs = a.centralizer(w).contains(orthogonal_complement(form, w));
      if (lhs != rhs)
        return bad(std::string(lhs ? "ideal whose complement does not centralize"
                                   : "non-ideal whose complement centralizes") +
                   ": basis " + w.str());
      cnt++;
      if (lhs) ideals++;
    }
    return ok(std::to_string(cnt) + " subspaces checked, " +
              std::to_string(ideals) + " ideals among them");
  });

  run("nondegenerate-line-is-central", [&]() -> CheckResult {
    std::vector<Subspace> lines;
    if (auto v = nondegenerate_central_vector(ctx.center, form))
      lines.push_back(Subspace::from_vectors({*v}, d));
    for (const auto& s : ctx.subspace_pool)
      if (s.dim() == 1) lines.push_back(s);
    for (const auto& r : ctx.mins->ideals)
      if (r.space.dim() == 1) lines.push_back(r.space);
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    std::size_t cnt = 0;
    for (const auto& l : lines) {
      if (!a.is_ideal(l)) continue;
      Vec v = l.basis_vectors()[0];
      if (form_val(form, v, v).is_zero()) continue;
      if (!ctx.center.contains(l))
        return bad("nondegenerate line ideal outside the center: basis " + l.str());
      cnt++;
    }
    if (cnt == 0)
      return na("no one-dimensional nondegenerate ideal among " +
                std::to_string(lines.size()) + " candidate lines");
    return ok(std::to_string(cnt) + " nondegenerate line ideals, all central");
  });

  run("center-isotropic-iff-no-nondegenerate-central-line", [&]() -> CheckResult {
    bool iso = ctx.center.is_zero() || restrict_form(form, ctx.center).is_zero();
    bool found = nondegenerate_central_vector(ctx.center, form).has_value();
    if (iso == found)
      return bad(iso ? "isotropic center carrying a nondegenerate line"
                     : "non-isotropic center without a nondegenerate line");
    // lines outside the center corroborate: they must be isotropic
    for (const auto& r : ctx.mins->ideals)
      if (r.space.dim() == 1 && !r.in_center) {
        Vec v = r.space.basis_vectors()[0];
        if (!form_val(form, v, v).is_zero())
          return bad("nondegenerate minimal line ideal outside the center");
      }
    return ok(iso ? "center isotropic, no nondegenerate central line"
                  : "center carries a nondegenerate line");
  });

  run("invariant-forms-match-selfadjoint-centroid", [&]() -> CheckResult {
    std::string dims = "dim forms " + std::to_string(ctx.md.form_space_dim) +
                       ", dim self-adjoint centroid " +
                       std::to_string(ctx.md.gamma_b_dim);
    if (!ctx.md.dims_agree) return bad(dims);
    return ok(dims);
  });

  run("invertible-elements-span-selfadjoint-centroid", [&]() -> CheckResult {
    std::vector<std::size_t> shifts;
    for (const auto& g : ctx.gb) {
      bool found = false;
      for (std::size_t c = 0; c <= d; c++) {
        if (!(g.matrix + Matrix::identity(d) * Rat(static_cast<long>(c)))
                 .det()
                 .is_zero()) {
          shifts.push_back(c);
          found = true;
          break;
        }
      }
      if (!found)
        return bad("no invertible identity shift for a basis element");
    }
    return ok("identity shifts [" + join_dims(shifts) +
              "] give an invertible spanning set; the matching nondegenerate "
              "forms span the invariant-form space");
  });

  run("coisotropic-radical-iff-no-strong-semisimple-ideal", [&]() -> CheckResult {
    if (!ctx.rad) return ns(ctx.rad_err);
    if (!ctx.sg) return ns(ctx.sg_err);
    bool none = ctx.sg->is_zero();
    bool coiso = ctx.rad->contains(*ctx.rperp);
    if (none != coiso)
      return bad(none ? "no simple ideals but the radical is not coisotropic"
                      : "simple ideals present yet the radical is coisotropic");
    return ok(none ? "no simple ideals and the radical is coisotropic"
                   : "simple ideals present, radical not coisotropic");
  });

  run("radical-centralizer-is-center-plus-radical-perp", [&]() -> CheckResult {
    if (!ctx.rad) return ns(ctx.rad_err);
    if (!subspace_intersect(ctx.center, *ctx.rperp).is_zero())
      return bad("center meets the radical complement");
    if (*ctx.cgr != subspace_sum(ctx.center, *ctx.rperp))
      return bad("centralizer of the radical differs from center + radical-perp");
    return ok("dim " + std::to_string(ctx.cgr->dim()) + " = " +
              std::to_string(ctx.center.dim()) + " + " +
              std::to_string(ctx.rperp->dim()));
  });

  run("levi-action-on-radical-perp-surjective", [&]() -> CheckResult {
    if (!ctx.rad) return ns(ctx.rad_err);
    if (!ctx.levi) return ns(ctx.levi_err);
    std::vector<Subspace> slots(ctx.n - 1, *ctx.levi);
    slots.push_back(*ctx.rperp);
    if (a.subspace_product(slots) != *ctx.rperp)
      return bad("bracketing the Levi complement does not reproduce radical-perp");
    return ok("dim radical-perp " + std::to_string(ctx.rperp->dim()));
  });

  run("levi-dual-intertwiners", [&]() -> CheckResult {
    if (!ctx.rad) return ns(ctx.rad_err);
    if (!ctx.levi) return ns(ctx.levi_err);
    if (ctx.rperp->dim() != ctx.levi->dim())
      return bad("dim radical-perp differs from dim of the Levi complement");
    if (!subspace_intersect(*ctx.rperp,
                            orthogonal_complement(form, *ctx.levi))
             .is_zero())
      return bad("radical-perp pairs degenerately with the Levi complement");
    auto fis = intertwiners_by_factor(a, form, *ctx.levi, *ctx.rad, ctx.seed);
    std::vector<std::size_t> sdims, tdims;
    for (const auto& fi : fis) {
      if (fi.taus.empty())
        return bad("no intertwiner for the factor with basis " + fi.factor.str());
      auto injective = [&](const Matrix& m) {
        std::vector<Vec> imgs;
        for (const auto& x : fi.factor.basis_vectors())
          imgs.push_back(m.apply(x));
        return Subspace::from_vectors(imgs, d).dim() == fi.factor.dim();
      };
      bool inj = false;
      for (const auto& t : fi.taus)
        if (injective(t.matrix)) inj = true;
      for (std::size_t i = 0; !inj && i < fi.taus.size(); i++)
        for (std::size_t j = i + 1; !inj && j < fi.taus.size(); j++)
          if (injective(fi.taus[i].matrix + fi.taus[j].matrix)) inj = true;
      if (!inj)
        return bad("no injective intertwiner on the factor with basis " +
                   fi.factor.str());
      sdims.push_back(fi.factor.dim());
      tdims.push_back(fi.taus.size());
    }
    return ok("factor dims [" + join_dims(sdims) + "], solution dims [" +
              join_dims(tdims) + "]");
  });

  run("minimal-ideals-live-in-radical-centralizer", [&]() -> CheckResult {
    if (!ctx.sg) return ns(ctx.sg_err);
    if (!ctx.sg->is_zero()) return na("strong semisimple ideals present");
    if (!ctx.rad) return ns(ctx.rad_err);
    if (!ctx.mins->fully_split())
      return ns("socle residue left undecided over Q");
    for (const auto& r : ctx.mins->ideals)
      if (!ctx.cgr->contains(r.space))
        return bad("minimal ideal escapes the radical centralizer: basis " +
                   r.space.str());
    return ok(std::to_string(ctx.mins->ideals.size()) +
              " minimal ideals inside the radical centralizer");
  });

  run("metric-dim-exceeds-minimal-ideal-count", [&]() -> CheckResult {
    if (!ctx.comps) return ns(ctx.comps_err);
    if (ctx.comps->size() > 1)
      return na("not B-irreducible (component dims " +
                join_dims(rep.component_dims) + ")");
    if (!ctx.m_count) return ns(ctx.m_err);
    std::string dims = "metric dim " + std::to_string(ctx.md.gamma_b_dim) +
                       " vs 1 + " + std::to_string(*ctx.m_count);
    if (ctx.md.gamma_b_dim < *ctx.m_count + 1) return bad(dims);
    return ok(dims);
  });

  run("metric-dim-exceeds-center-dim", [&]() -> CheckResult {
    if (d == 1) return na("one-dimensional algebra");
    std::string dims = "metric dim " + std::to_string(ctx.md.gamma_b_dim) +
                       " vs 1 + " + std::to_string(ctx.center.dim());
    if (ctx.md.gamma_b_dim < ctx.center.dim() + 1) return bad(dims);
    return ok(dims);
  });

  run("metric-dim-superadditive-over-components", [&]() -> CheckResult {
    if (!ctx.comps) return ns(ctx.comps_err);
    std::size_t mdsum = 0, msum = 0;
    for (const auto& c : *ctx.comps) {
      mdsum += metric_dimension(c.algebra, c.form).gamma_b_dim;
      SocleResult cs = socle(c.algebra);
      MinimalIdealSearch cm = find_minimal_ideals(c.algebra, cs.space, ctx.seed);
      if (!cs.certified || !cm.fully_split())
        return ns("component socle undecided over Q");
      msum += cm.ideals.size();
    }
    std::size_t p = ctx.comps->size();
    std::string dims = "metric dim " + std::to_string(ctx.md.gamma_b_dim) +
                       " vs component sum " + std::to_string(mdsum) +
                       " and " + std::to_string(p) + " + " +
                       std::to_string(msum);
    if (ctx.md.gamma_b_dim < mdsum || ctx.md.gamma_b_dim < p + msum)
      return bad(dims);
    return ok(dims);
  });

  run("two-dim-form-space-local-cases", [&]() -> CheckResult {
    if (ctx.md.form_space_dim != 2)
      return na("invariant-form space has dim " +
                std::to_string(ctx.md.form_space_dim));
    if (!ctx.m_count) return ns(ctx.m_err);
    if (!ctx.rad) return ns(ctx.rad_err);
    if (!ctx.levi) return ns(ctx.levi_err);
    bool lhs = *ctx.m_count == 1;
    bool solvable_case = ctx.rad->is_full() && ctx.center.dim() == 1;
    bool perfect_case =
        ctx.perfect && simple_factors(a, *ctx.levi, ctx.seed).size() == 1;
    if (lhs != (solvable_case || perfect_case))
      return bad(lhs ? "one minimal ideal without a matching structure case"
                     : "structure case present but minimal ideal count differs from 1");
    return ok(lhs ? "one minimal ideal, structure case matches"
                  : "minimal ideal count differs from 1, no structure case");
  });

  run("ideal-splits-along-direct-sum", [&]() -> CheckResult {
    if (!ctx.comps) return ns(ctx.comps_err);
    if (ctx.comps->size() < 2)
      return na("no nontrivial orthogonal decomposition");
    std::size_t cnt = 0;
    for (const auto& j : ctx.ideal_pool) {
      bool inst = a.product_with_full(j) == j;
      if (!inst && !j.is_full()) inst = a.quotient(j).first.center().is_zero();
      if (!inst) continue;
      Subspace sum = Subspace::zero(d);
      for (const auto& c : *ctx.comps)
        sum = subspace_sum(sum, subspace_intersect(c.space, j));
      if (sum != j)
        return bad("ideal fails to split along the components: basis " + j.str());
      cnt++;
    }
    return ok(std::to_string(cnt) + " ideals split along the components");
  });

  run("unique-max-strong-semisimple-splitting", [&]() -> CheckResult {
    if (!ctx.sg) return ns(ctx.sg_err);
    if (ctx.sg->is_zero()) return na("no simple ideals");
    if (restrict_form(form, *ctx.sg).det().is_zero())
      return bad("maximal strong semisimple ideal is degenerate");
    Subspace perp = orthogonal_complement(form, *ctx.sg);
    if (!subspace_intersect(*ctx.sg, perp).is_zero() ||
        subspace_sum(*ctx.sg, perp).dim() != d)
      return bad("maximal strong semisimple ideal does not split the algebra");
    for (const auto& r : ctx.mins->ideals)
      if (r.kind == MinimalIdealRecord::Kind::simple &&
          !ctx.sg->contains(r.space))
        return bad("a simple minimal ideal escapes the maximal one");
    return ok("dim " + std::to_string(ctx.sg->dim()) +
              ", splits off orthogonally");
  });

  run("minimal-ideal-abelian-or-simple", [&]() -> CheckResult {
    if (!ctx.simple) return ns(ctx.simple_err);
    if (*ctx.simple) return na("the algebra is simple");
    if (d == 1) return na("one-dimensional algebra");
    if (ctx.mins->ideals.empty())
      return ctx.mins->fully_split() ? na("no minimal ideals")
                                     : ns("socle residue left undecided over Q");
    for (const auto& r : ctx.mins->ideals) {
      bool ab = a.is_abelian_ideal(r.space);
      if (ab != (r.kind == MinimalIdealRecord::Kind::abelian))
        return bad("kind label disagrees with the bracket on basis " +
                   r.space.str());
      if (!ab && !is_simple(a.restrict_to(r.space), ctx.seed))
        return bad("non-abelian minimal ideal is not simple: basis " +
                   r.space.str());
      if (!ctx.derived.contains(r.space) && !ctx.center.contains(r.space))
        return bad("minimal ideal outside both derived subalgebra and center");
    }
    for (std::size_t i = 0; i < ctx.mins->ideals.size(); i++)
      for (std::size_t j = i + 1; j < ctx.mins->ideals.size(); j++) {
        std::vector<Subspace> slots{ctx.mins->ideals[i].space,
                                    ctx.mins->ideals[j].space};
        while (slots.size() < ctx.n) slots.push_back(Subspace::full(d));
        if (!a.subspace_product(slots).is_zero())
          return bad("two minimal ideals fail to annihilate each other");
      }
    return ok(std::to_string(ctx.mins->ideals.size()) +
              " minimal ideals: dichotomy, location and mutual annihilation hold");
  });

  run("minimal-codim-one-perp-iff-central-line", [&]() -> CheckResult {
    if (!ctx.simple) return ns(ctx.simple_err);
    if (*ctx.simple) return na("the algebra is simple");
    if (d == 1) return na("one-dimensional algebra");
    if (!ctx.mins->fully_split())
      return ns("socle residue left undecided over Q");
    std::size_t lines = 0;
    for (const auto& r : ctx.mins->ideals) {
      if (r.space.dim() != 1) continue;  // both sides of the equivalence fail
      lines++;
      Vec v = r.space.basis_vectors()[0];
      if (r.in_center) {
        // quotient by the perp line splits off metrically: find w outside
        // the perp with B(w,w) != 0
        Vec w = v;
        if (form_val(form, v, v).is_zero()) {
          Vec gv = form.gram.apply(v);
          std::size_t k = 0;
          while (k < d && gv[k].is_zero()) k++;
          if (k == d) return bad("central line degenerate against everything");
          Vec y(d);
          y[k] = Rat(1);
          w = v;
          vec_addmul(w, Rat(1) / gv[k], y);  // keeps B(w,v) = B(v,y)/gv[k] = 1
          if (form_val(form, w, w).is_zero()) vec_addmul(w, Rat(1), v);
          if (form_val(form, w, w).is_zero())
            vec_addmul(w, Rat(-2), v);  // one of the shifts is anisotropic
        }
        if (form_val(form, w, w).is_zero() || form_val(form, w, v).is_zero())
          return bad("no metric complement line over the central ideal " +
                     r.space.str());
      } else {
        if (!form_val(form, v, v).is_zero())
          return bad("non-central minimal line carries a nondegenerate form");
      }
    }
    if (lines == 0) return na("no one-dimensional minimal ideals");
    return ok(std::to_string(lines) +
              " line ideals: central ones split off metrically, others are isotropic");
  });

  run("minimal-ideals-in-centralizer-and-derived", [&]() -> CheckResult {
    if (!ctx.comps) return ns(ctx.comps_err);
    if (ctx.comps->size() > 1)
      return na("not B-irreducible (component dims " +
                join_dims(rep.component_dims) + ")");
    if (!ctx.simple) return ns(ctx.simple_err);
    if (*ctx.simple) return na("the algebra is simple");
    if (d == 1) return na("one-dimensional algebra");
    if (!ctx.rad) return ns(ctx.rad_err);
    if (ctx.mins->ideals.empty())
      return ctx.mins->fully_split() ? na("no minimal ideals")
                                     : ns("socle residue left undecided over Q");
    for (const auto& r : ctx.mins->ideals) {
      if (!ctx.cgr->contains(r.space))
        return bad("minimal ideal escapes the radical centralizer");
      if (!ctx.derived.contains(r.space))
        return bad("minimal ideal escapes the derived subalgebra");
    }
    return ok(std::to_string(ctx.mins->ideals.size()) +
              " minimal ideals inside centralizer and derived subalgebra");
  });

  // the complement of the maximal strong semisimple ideal, compared piece by
  // piece against the whole algebra
  struct Complement {
    Subspace g1;
    std::optional<NLieAlgebra> alg;  // absent when g1 is zero
    std::optional<BilinearForm> bf;
  };
  std::optional<Complement> comp1;
  std::string comp1_err;
  if (ctx.sg) {
    comp1.emplace();
    comp1->g1 = orthogonal_complement(form, *ctx.sg);
    if (!comp1->g1.is_zero()) {
      comp1->alg = a.restrict_to(comp1->g1);
      comp1->bf = BilinearForm{restrict_form(form, comp1->g1)};
    }
  } else {
    comp1_err = ctx.sg_err;
  }
  auto lift1 = [&](const Subspace& s) { return lift_rows(comp1->g1, s); };

  run("strong-semisimple-complement-ideals-lift", [&]() -> CheckResult {
    if (!comp1) return ns(comp1_err);
    if (!ctx.rad) return ns(ctx.rad_err);
    if (!comp1->alg) {
      if (!ctx.rad->is_zero())
        return bad("zero complement but the radical is nonzero");
      return ok("complement is zero; radical matches");
    }
    std::vector<Subspace> tests{comp1->alg->center(), comp1->alg->derived(),
                                socle(*comp1->alg).space,
                                radical(*comp1->alg, ctx.seed)};
    for (const auto& t : tests)
      if (!a.is_ideal(lift1(t)))
        return bad("an ideal of the complement fails to be an ideal of the algebra");
    if (lift1(tests.back()) != *ctx.rad)
      return bad("radical of the complement differs from the radical");
    return ok(std::to_string(tests.size()) +
              " ideals lift; radicals agree (dim " +
              std::to_string(ctx.rad->dim()) + ")");
  });

  run("strong-semisimple-complement-is-reduced", [&]() -> CheckResult {
    if (!comp1) return ns(comp1_err);
    if (!comp1->alg) return ok("complement is zero");
    if (!max_strong_semisimple_ideal(*comp1->alg, *comp1->bf, ctx.seed)
             .is_zero())
      return bad("complement still contains a simple ideal");
    return ok("complement has no simple ideals");
  });

  run("strong-semisimple-complement-carries-abelian-socle", [&]() -> CheckResult {
    if (!comp1) return ns(comp1_err);
    if (!ctx.mins->fully_split())
      return ns("socle residue left undecided over Q");
    Subspace abelian_sum = Subspace::zero(d);
    if (d == 1)
      abelian_sum = Subspace::full(1);  // a line is its own abelian minimal ideal
    for (const auto& r : ctx.mins->ideals)
      if (r.kind == MinimalIdealRecord::Kind::abelian)
        abelian_sum = subspace_sum(abelian_sum, r.space);
    if (!comp1->alg) {
      if (!abelian_sum.is_zero())
        return bad("abelian minimal ideals exist but the complement is zero");
      return ok("complement is zero; no abelian minimal ideals");
    }
    Subspace soc1 = socle(*comp1->alg).space;
    if (comp1->alg->dim() == 1 || is_simple(*comp1->alg, ctx.seed))
      soc1 = Subspace::full(comp1->alg->dim());  // count the whole algebra
    if (lift1(soc1) != abelian_sum)
      return bad("socle of the complement differs from the abelian socle part");
    return ok("abelian socle part has dim " + std::to_string(abelian_sum.dim()));
  });

  run("strong-semisimple-complement-keeps-center", [&]() -> CheckResult {
    if (!comp1) return ns(comp1_err);
    Subspace c1 = comp1->alg ? lift1(comp1->alg->center()) : Subspace::zero(d);
    if (c1 != ctx.center)
      return bad("center of the complement differs from the center");
    return ok("centers agree (dim " + std::to_string(ctx.center.dim()) + ")");
  });

  run("strong-semisimple-complement-splits-radical-centralizer",
      [&]() -> CheckResult {
        if (!comp1) return ns(comp1_err);
        if (!ctx.rad) return ns(ctx.rad_err);
        Subspace part = Subspace::zero(d);
        if (comp1->alg) {
          Subspace rad1 = radical(*comp1->alg, ctx.seed);
          part = lift1(comp1->alg->centralizer(rad1));
        }
        if (!subspace_intersect(*ctx.sg, part).is_zero() ||
            subspace_sum(*ctx.sg, part) != *ctx.cgr)
          return bad("radical centralizer does not split along the complement");
        return ok("dim " + std::to_string(ctx.cgr->dim()) + " = " +
                  std::to_string(ctx.sg->dim()) + " + " +
                  std::to_string(part.dim()));
      });

  run("strong-semisimple-complement-splits-radical-perp", [&]() -> CheckResult {
    if (!comp1) return ns(comp1_err);
    if (!ctx.rad) return ns(ctx.rad_err);
    Subspace w = Subspace::zero(d);
    if (comp1->alg) {
      Subspace rad1 = radical(*comp1->alg, ctx.seed);
      w = lift1(orthogonal_complement(*comp1->bf, rad1));
    }
    if (!subspace_intersect(*ctx.sg, w).is_zero() ||
        subspace_sum(*ctx.sg, w) != *ctx.rperp)
      return bad("radical-perp does not split along the complement");
    return ok("dim " + std::to_string(ctx.rperp->dim()) + " = " +
              std::to_string(ctx.sg->dim()) + " + " + std::to_string(w.dim()));
  });

  run("socle-equals-radical-centralizer", [&]() -> CheckResult {
    if (!ctx.soc_incl) return ns(ctx.simple_err);
    if (!ctx.rad) return ns(ctx.rad_err);
    if (*ctx.soc_incl != *ctx.cgr)
      return bad("socle dim " + std::to_string(ctx.soc_incl->dim()) +
                 " vs radical centralizer dim " +
                 std::to_string(ctx.cgr->dim()));
    return ok("both have dim " + std::to_string(ctx.cgr->dim()) +
              " (simple algebras counted whole)");
  });

  run("socle-equals-radical-perp-plus-center", [&]() -> CheckResult {
    if (!ctx.soc_incl) return ns(ctx.simple_err);
    if (!ctx.rad) return ns(ctx.rad_err);
    if (!subspace_intersect(*ctx.rperp, ctx.center).is_zero())
      return bad("radical-perp meets the center");
    if (*ctx.soc_incl != subspace_sum(*ctx.rperp, ctx.center))
      return bad("socle differs from radical-perp + center");
    return ok("dim " + std::to_string(ctx.soc_incl->dim()) + " = " +
              std::to_string(ctx.rperp->dim()) + " + " +
              std::to_string(ctx.center.dim()));
  });
}

}  // namespace

StructureReport audit(const NLieAlgebra& a, const BilinearForm& form,
                      const AuditOptions& opts) {
  if (!is_metric(a, form))
    throw std::domain_error("form is not a metric form for the algebra");
  Ctx ctx{a, form};
  fill_context(ctx, opts);
  StructureReport rep;
  rep.dim = ctx.d;
  rep.arity = ctx.n;
  rep.center = ctx.center;
  rep.derived = ctx.derived;
  rep.radical = ctx.rad;
  rep.socle = ctx.soc.space;
  rep.socle_certified = ctx.soc.certified;
  rep.socle_components = ctx.mins->ideals;
  rep.socle_unsplit = ctx.mins->unsplit;
  rep.m_count = ctx.m_count;
  rep.max_strong_semisimple = ctx.sg;
  rep.levi = ctx.levi;
  rep.metric_dim = ctx.md.gamma_b_dim;
  if (ctx.comps)
    for (const auto& c : *ctx.comps) rep.component_dims.push_back(c.space.dim());
  run_checks(ctx, rep);
  return rep;
}

}  // namespace nlie
