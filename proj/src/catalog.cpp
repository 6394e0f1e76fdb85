#include "nlie/catalog.hpp"

#include "nlie/rng.hpp"
#include "nlie/structure.hpp"

#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nlie {

namespace {

int perm_sign(const std::vector<std::size_t>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); i++)
    for (std::size_t j = i + 1; j < p.size(); j++)
      if (p[i] > p[j]) s = -s;
  return s;
}

// [e_{t1},...,e_{tn}] = sign * e_l with l the one index missing from t
std::map<IndexTuple, Vec> levi_civita_constants(std::size_t n) {
  const std::size_t d = n + 1;
  std::map<IndexTuple, Vec> c;
  for_each_increasing_tuple(d, n, [&](const IndexTuple& t) {
    std::vector<bool> used(d, false);
    for (auto i : t) used[i] = true;
    std::size_t l = 0;
    while (used[l]) l++;
    std::vector<std::size_t> perm(t.begin(), t.end());
    perm.push_back(l);
    Vec v(d);
    v[l] = Rat(perm_sign(perm));
    c[t] = std::move(v);
  });
  return c;
}

std::vector<std::string> default_names(std::size_t d) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d; i++) names.push_back("e" + std::to_string(i + 1));
  return names;
}

Matrix diag(const std::vector<Rat>& entries) {
  Matrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); i++) m.at(i, i) = entries[i];
  return m;
}

Subspace coord_span(std::size_t d, const std::vector<std::size_t>& idx) {
  std::vector<Vec> vs;
  for (auto i : idx) {
    Vec v(d);
    v[i] = Rat(1);
    vs.push_back(std::move(v));
  }
  return Subspace::from_vectors(vs, d);
}

NLieAlgebra make_simple(std::size_t n) {
  return NLieAlgebra(n, n + 1, default_names(n + 1), levi_civita_constants(n));
}

NLieAlgebra make_abelian(std::size_t d) {
  return NLieAlgebra(3, d, default_names(d), {});
}

// e_i = x_i (x) 1 at 0..3, f_i = x_i (x) t at 4..7, with t^2 = 0. Brackets
// multiply the scalar parts, so exactly one argument may carry a t.
NLieAlgebra make_a4_dual() {
  NLieAlgebra a4 = make_simple(3);
  std::map<IndexTuple, Vec> c;
  for_each_increasing_tuple(8, 3, [&](const IndexTuple& t) {
    std::size_t high = 0;
    for (auto i : t) high += i >= 4 ? 1 : 0;
    if (high >= 2) return;
    IndexTuple base;
    for (auto i : t) base.push_back(i >= 4 ? i - 4 : i);
    Vec v4 = a4.bracket_basis(base);
    if (vec_is_zero(v4)) return;
    Vec v(8);
    const std::size_t shift = high == 1 ? 4 : 0;  // one t makes the result a t
    for (std::size_t i = 0; i < 4; i++) v[shift + i] = v4[i];
    c[t] = std::move(v);
  });
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= 4; i++) names.push_back("e" + std::to_string(i));
  for (std::size_t i = 1; i <= 4; i++) names.push_back("f" + std::to_string(i));
  return NLieAlgebra(3, 8, names, c);
}

Matrix hyperbolic8() {
  Matrix g(8, 8);
  for (std::size_t i = 0; i < 4; i++) {
    g.at(i, i + 4) = Rat(1);
    g.at(i + 4, i) = Rat(1);
  }
  return g;
}

CatalogEntry make_entry_abelian(std::size_t d) {
  CatalogEntry e{"abelian_" + std::to_string(d), make_abelian(d), {}};
  std::vector<Rat> ones(d, Rat(1)), steps;
  for (std::size_t i = 0; i < d; i++) steps.push_back(Rat(static_cast<long>(i) + 1));
  e.forms.push_back({diag(ones)});
  if (d == 2) {
    e.forms.push_back({Matrix{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}});
  } else {
    e.forms.push_back({diag(steps)});
  }
  e.center = Subspace::full(d);
  e.derived = Subspace::zero(d);
  e.radical = Subspace::full(d);
  e.socle = d == 1 ? Subspace::zero(1) : Subspace::full(d);
  e.max_strong_semisimple = Subspace::zero(d);
  e.levi = Subspace::zero(d);
  e.metric_dim = d * (d + 1) / 2;
  e.m_count = d == 1 ? 0 : d;
  e.component_dims.assign(d, 1);
  return e;
}

CatalogEntry make_entry_simple(std::size_t n) {
  const std::size_t d = n + 1;
  CatalogEntry e{"a_simple_" + std::to_string(n), make_simple(n), {}};
  std::vector<Rat> ones(d, Rat(1)), twos(d, Rat(2));
  e.forms.push_back({diag(ones)});
  e.forms.push_back({diag(n == 3 ? std::vector<Rat>(d, Rat(3)) : twos)});
  e.center = Subspace::zero(d);
  e.derived = Subspace::full(d);
  e.radical = Subspace::zero(d);
  e.socle = Subspace::zero(d);  // simple algebras count as socle-free
  e.max_strong_semisimple = Subspace::full(d);
  e.levi = Subspace::full(d);
  e.metric_dim = 1;
  e.m_count = 0;
  e.simple = true;
  e.strong_semisimple = true;
  e.component_dims = {d};
  return e;
}

CatalogEntry make_entry_a4_dual() {
  CatalogEntry e{"a4_dual", make_a4_dual(), {}};
  e.forms.push_back({hyperbolic8()});
  Matrix second = hyperbolic8();
  for (std::size_t i = 0; i < 4; i++) second.at(i, i) = Rat(1);
  e.forms.push_back({second});
  e.center = Subspace::zero(8);
  e.derived = Subspace::full(8);
  e.radical = coord_span(8, {4, 5, 6, 7});
  e.socle = coord_span(8, {4, 5, 6, 7});
  e.max_strong_semisimple = Subspace::zero(8);
  e.levi = coord_span(8, {0, 1, 2, 3});
  e.metric_dim = 2;
  e.m_count = 1;
  e.component_dims = {8};
  return e;
}

CatalogEntry make_entry_a4_plus_a4() {
  NLieAlgebra a4 = make_simple(3);
  CatalogEntry e{"a4_plus_a4", NLieAlgebra::direct_sum(a4, a4), {}};
  std::vector<Rat> ones(8, Rat(1)), blocks(8, Rat(1));
  for (std::size_t i = 4; i < 8; i++) blocks[i] = Rat(2);
  e.forms.push_back({diag(ones)});
  e.forms.push_back({diag(blocks)});
  e.center = Subspace::zero(8);
  e.derived = Subspace::full(8);
  e.radical = Subspace::zero(8);
  e.socle = Subspace::full(8);
  e.max_strong_semisimple = Subspace::full(8);
  e.levi = Subspace::full(8);
  e.metric_dim = 2;
  e.m_count = 2;
  e.strong_semisimple = true;
  e.component_dims = {4, 4};
  return e;
}

CatalogEntry make_entry_a4_plus_abelian1() {
  NLieAlgebra a4 = make_simple(3);
  CatalogEntry e{"a4_plus_abelian1",
                 NLieAlgebra::direct_sum(a4, make_abelian(1)),
                 {}};
  e.forms.push_back({diag({Rat(1), Rat(1), Rat(1), Rat(1), Rat(5)})});
  e.forms.push_back({diag({Rat(2), Rat(2), Rat(2), Rat(2), Rat(1)})});
  e.center = coord_span(5, {4});
  e.derived = coord_span(5, {0, 1, 2, 3});
  e.radical = coord_span(5, {4});
  e.socle = Subspace::full(5);
  e.max_strong_semisimple = coord_span(5, {0, 1, 2, 3});
  e.levi = coord_span(5, {0, 1, 2, 3});
  e.metric_dim = 2;
  e.m_count = 2;
  e.component_dims = {1, 4};
  return e;
}

CatalogEntry make_named(const std::string& name) {
  if (name == "abelian_1") return make_entry_abelian(1);
  if (name == "abelian_2") return make_entry_abelian(2);
  if (name == "abelian_3") return make_entry_abelian(3);
  if (name == "abelian_4") return make_entry_abelian(4);
  if (name == "a_simple_2") return make_entry_simple(2);
  if (name == "a_simple_3" || name == "a4") {
    CatalogEntry e = make_entry_simple(3);
    if (name == "a4") e.name = "a4";
    return e;
  }
  if (name == "a_simple_4") return make_entry_simple(4);
  if (name == "a4_dual") return make_entry_a4_dual();
  if (name == "a4_plus_a4") return make_entry_a4_plus_a4();
  if (name == "a4_plus_abelian1") return make_entry_a4_plus_abelian1();
  throw std::out_of_range("unknown catalog entry: " + name);
}

}  // namespace

std::map<std::string, std::string> CatalogEntry::expected() const {
  std::map<std::string, std::string> m;
  auto dims = [](const std::vector<std::size_t>& xs) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < xs.size(); i++) os << (i ? "," : "") << xs[i];
    os << "}";
    return os.str();
  };
  m["center_dim"] = std::to_string(center.dim());
  m["derived_dim"] = std::to_string(derived.dim());
  m["radical_dim"] = std::to_string(radical.dim());
  m["socle_dim"] = std::to_string(socle.dim());
  m["max_strong_semisimple_dim"] = std::to_string(max_strong_semisimple.dim());
  m["metric_dim"] = std::to_string(metric_dim);
  m["m_count"] = std::to_string(m_count);
  m["component_dims"] = dims(component_dims);
  m["simple"] = simple ? "true" : "false";
  m["strong_semisimple"] = strong_semisimple ? "true" : "false";
  m["b_irreducible"] = component_dims.size() == 1 ? "true" : "false";
  return m;
}

void CatalogEntry::self_test(std::uint64_t seed) const {
  auto fail = [&](const std::string& what) {
    throw std::logic_error("catalog entry " + name + ": " + what);
  };
  if (!algebra.check_axioms().ok()) fail("bracket fails the defining identity");
  for (const auto& f : forms)
    if (!is_metric(algebra, f)) fail("a stored form is not a metric form");
  if (algebra.center() != center) fail("center mismatch");
  if (algebra.derived() != derived) fail("derived subalgebra mismatch");
  SocleResult soc = nlie::socle(algebra);
  if (!soc.certified) fail("socle not certified");
  if (soc.space != socle) fail("socle mismatch");
  MinimalIdealSearch mins = find_minimal_ideals(algebra, soc.space, seed);
  if (!mins.fully_split()) fail("socle did not split fully");
  if (mins.ideals.size() != m_count) fail("minimal ideal count mismatch");
  if (nlie::radical(algebra, seed) != radical) fail("radical mismatch");
  if (max_strong_semisimple_ideal(algebra, forms[0], seed) !=
      max_strong_semisimple)
    fail("maximal strong semisimple ideal mismatch");
  MetricDimension md = metric_dimension(algebra, forms[0]);
  if (!md.dims_agree) fail("centroid and form-space dimensions disagree");
  if (md.gamma_b_dim != metric_dim) fail("metric dimension mismatch");
  auto comps = b_irreducible_decomposition(algebra, forms[0], seed);
  std::vector<std::size_t> dims;
  for (const auto& c : comps) dims.push_back(c.space.dim());
  if (dims != component_dims) fail("decomposition profile mismatch");
  if (is_simple(algebra, seed) != simple) fail("simplicity mismatch");
  if (is_strong_semisimple(algebra, seed) != strong_semisimple)
    fail("strong semisimplicity mismatch");
  if (levi) {
    std::string why;
    if (!verify_levi(algebra, *levi, radical, &why))
      fail("stored Levi complement rejected: " + why);
  }
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{
      "abelian_1",  "abelian_2",  "abelian_3",        "abelian_4",
      "a_simple_2", "a4",         "a_simple_4",       "a4_dual",
      "a4_plus_a4", "a4_plus_abelian1"};
  return names;
}

CatalogEntry builtin(const std::string& name) {
  CatalogEntry e = make_named(name);
  static std::set<std::string> verified;
  static std::mutex mu;
  bool need = false;
  {
    std::lock_guard<std::mutex> lock(mu);
    need = verified.insert(name).second;
  }
  if (need) e.self_test();
  return e;
}

CatalogEntry scramble_with_matrix(const CatalogEntry& e, const Matrix& p) {
  const std::size_t d = e.algebra.dim();
  if (p.rows() != d || p.cols() != d || p.det().is_zero())
    throw std::invalid_argument("scramble needs an invertible d x d matrix");
  Matrix pinv = p.inverse();
  const std::size_t n = e.algebra.arity();
  std::map<IndexTuple, Vec> consts;
  for_each_increasing_tuple(d, n, [&](const IndexTuple& t) {
    std::vector<Vec> args;
    for (auto i : t) args.push_back(p.col(i));
    Vec v = pinv.apply(e.algebra.bracket(args));
    if (!vec_is_zero(v)) consts[t] = std::move(v);
  });
  CatalogEntry out{e.name + "~scrambled",
                   NLieAlgebra(n, d, e.algebra.basis_names(), consts),
                   {}};
  for (const auto& f : e.forms)
    out.forms.push_back({p.transpose() * f.gram * p});
  Matrix pit = pinv.transpose();
  auto move_space = [&](const Subspace& s) {
    if (s.is_zero()) return Subspace::zero(d);
    return Subspace::from_rows(s.basis() * pit);
  };
  out.center = move_space(e.center);
  out.derived = move_space(e.derived);
  out.radical = move_space(e.radical);
  out.socle = move_space(e.socle);
  out.max_strong_semisimple = move_space(e.max_strong_semisimple);
  if (e.levi) out.levi = move_space(*e.levi);
  out.metric_dim = e.metric_dim;
  out.m_count = e.m_count;
  out.simple = e.simple;
  out.strong_semisimple = e.strong_semisimple;
  out.component_dims = e.component_dims;
  return out;
}

CatalogEntry scramble(const CatalogEntry& e, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t d = e.algebra.dim();
  for (;;) {
    Matrix p(d, d);
    for (std::size_t i = 0; i < d; i++)
      for (std::size_t j = 0; j < d; j++) p.at(i, j) = Rat(rng.pick(-2, 2));
    if (p.det().is_zero()) continue;
    return scramble_with_matrix(e, p);
  }
}

}  // namespace nlie
