#include "nlie/algebra.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <sstream>

namespace nlie {

namespace {

// Sorts the tuple in place, returns the permutation sign, or 0 on repeats.
int sort_with_sign(IndexTuple& t) {
  int sign = 1;
  for (std::size_t i = 1; i < t.size(); i++)
    for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; j--) {
      if (t[j - 1] == t[j]) return 0;
      std::swap(t[j - 1], t[j]);
      sign = -sign;
    }
  return sign;
}

// Exact determinant of a small minor: rows are the argument vectors, cols
// the selected coordinates.
Rat minor_det(const std::vector<Vec>& args, const IndexTuple& cols) {
  const std::size_t n = cols.size();
  switch (n) {
    case 1:
      return args[0][cols[0]];
    case 2:
      return args[0][cols[0]] * args[1][cols[1]] -
             args[0][cols[1]] * args[1][cols[0]];
    default: {
      Matrix m(n, n);
      for (std::size_t i = 0; i < n; i++)
        for (std::size_t j = 0; j < n; j++) m.at(i, j) = args[i][cols[j]];
      return m.det();
    }
  }
}

}  // namespace

void for_each_increasing_tuple(
    std::size_t d, std::size_t k,
    const std::function<void(const IndexTuple&)>& fn) {
  if (k > d) return;
  IndexTuple t(k);
  for (std::size_t i = 0; i < k; i++) t[i] = i;
  while (true) {
    fn(t);
    if (k == 0) return;
    // advance the rightmost index that still has room (t[i] maxes at d-k+i)
    std::size_t i = k;
    bool advanced = false;
    while (i-- > 0) {
      if (t[i] < d - k + i) {
        t[i]++;
        for (std::size_t j = i + 1; j < k; j++) t[j] = t[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) return;
  }
}

NLieAlgebra::NLieAlgebra(std::size_t arity, std::size_t dim,
                         std::vector<std::string> basis_names,
                         std::map<IndexTuple, Vec> constants)
    : n_(arity), d_(dim), names_(std::move(basis_names)) {
  if (n_ < 2) throw std::invalid_argument("arity must be at least 2");
  if (d_ < 1) throw std::invalid_argument("dimension must be at least 1");
  if (names_.size() != d_)
    throw std::invalid_argument("basis name count mismatch");
  for (auto& [tuple, value] : constants) {
    if (tuple.size() != n_)
      throw std::invalid_argument("constant tuple arity mismatch");
    for (std::size_t i = 0; i < tuple.size(); i++) {
      if (tuple[i] >= d_) throw std::invalid_argument("constant index range");
      if (i && tuple[i - 1] >= tuple[i])
        throw std::invalid_argument("constant tuple not strictly increasing");
    }
    if (value.size() != d_)
      throw std::invalid_argument("constant value length mismatch");
    if (!vec_is_zero(value)) c_.emplace(tuple, value);
  }
}

Vec NLieAlgebra::bracket_basis(const IndexTuple& idx) const {
  if (idx.size() != n_) throw DimensionError("bracket arity mismatch");
  IndexTuple key = idx;
  int sign = sort_with_sign(key);
  Vec out(d_);
  if (sign == 0) return out;
  auto it = c_.find(key);
  if (it == c_.end()) return out;
  for (std::size_t i = 0; i < d_; i++)
    out[i] = sign > 0 ? it->second[i] : -it->second[i];
  return out;
}

Vec NLieAlgebra::bracket(const std::vector<Vec>& args) const {
  if (args.size() != n_) throw DimensionError("bracket arity mismatch");
  for (const auto& a : args)
    if (a.size() != d_) throw DimensionError("bracket argument length");
  // Multilinear + alternating expansion: the coefficient of the stored
  // constant c_I is the n x n minor of the argument matrix at columns I.
  Vec out(d_);
  for (const auto& [tuple, value] : c_) {
    Rat coeff = minor_det(args, tuple);
    if (!coeff.is_zero()) vec_addmul(out, coeff, value);
  }
  return out;
}

namespace {

// [e_{k_1},..,v,..,e_{k_{n-1}}] with the vector v inserted at `slot` among
// the fixed basis indices; expands v over the basis.
Vec bracket_mixed(const NLieAlgebra& alg, const IndexTuple& fixed,
                  std::size_t slot, const Vec& v) {
  Vec out(alg.dim());
  IndexTuple idx(fixed.size() + 1);
  for (std::size_t l = 0; l < alg.dim(); l++) {
    if (v[l].is_zero()) continue;
    std::size_t p = 0;
    for (std::size_t i = 0; i < idx.size(); i++)
      idx[i] = (i == slot) ? l : fixed[p++];
    vec_addmul(out, v[l], alg.bracket_basis(idx));
  }
  return out;
}

}  // namespace

AxiomReport NLieAlgebra::check_axioms_serial() const {
  AxiomReport rep;
  std::vector<IndexTuple> outers, inners;
  for_each_increasing_tuple(d_, n_, [&](const IndexTuple& t) { outers.push_back(t); });
  for_each_increasing_tuple(d_, n_ - 1, [&](const IndexTuple& t) { inners.push_back(t); });
  for (const auto& x : outers)
    for (const auto& y : inners) {
      Vec lhs = bracket_mixed(*this, y, 0, bracket_basis(x));
      Vec rhs(d_);
      for (std::size_t i = 0; i < n_; i++) {
        IndexTuple fixed;
        for (std::size_t j = 0; j < n_; j++)
          if (j != i) fixed.push_back(x[j]);
        IndexTuple inner_idx = {x[i]};
        inner_idx.insert(inner_idx.end(), y.begin(), y.end());
        Vec w = bracket_basis(inner_idx);
        vec_addmul(rhs, Rat(1), bracket_mixed(*this, fixed, i, w));
      }
      if (lhs != rhs) rep.violations.push_back({x, y, lhs, rhs});
    }
  return rep;
}

AxiomReport NLieAlgebra::check_axioms_parallel() const {
  std::vector<IndexTuple> outers, inners;
  for_each_increasing_tuple(d_, n_, [&](const IndexTuple& t) { outers.push_back(t); });
  for_each_increasing_tuple(d_, n_ - 1, [&](const IndexTuple& t) { inners.push_back(t); });

  std::vector<AxiomReport> partial(outers.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::size_t oi = 0; oi < outers.size(); oi++) {
    const auto& x = outers[oi];
    for (const auto& y : inners) {
      Vec lhs = bracket_mixed(*this, y, 0, bracket_basis(x));
      Vec rhs(d_);
      for (std::size_t i = 0; i < n_; i++) {
        IndexTuple fixed;
        for (std::size_t j = 0; j < n_; j++)
          if (j != i) fixed.push_back(x[j]);
        IndexTuple inner_idx = {x[i]};
        inner_idx.insert(inner_idx.end(), y.begin(), y.end());
        Vec w = bracket_basis(inner_idx);
        vec_addmul(rhs, Rat(1), bracket_mixed(*this, fixed, i, w));
      }
      if (lhs != rhs) partial[oi].violations.push_back({x, y, lhs, rhs});
    }
  }
  AxiomReport rep;  // deterministic merge in outer-tuple order
  for (auto& p : partial)
    rep.violations.insert(rep.violations.end(), p.violations.begin(),
                          p.violations.end());
  return rep;
}

AxiomReport NLieAlgebra::check_axioms() const {
#ifdef _OPENMP
  if (omp_get_max_threads() > 1 && d_ >= 6) return check_axioms_parallel();
#endif
  return check_axioms_serial();
}

Subspace NLieAlgebra::subspace_product(
    const std::vector<Subspace>& spaces) const {
  if (spaces.size() != n_) throw DimensionError("product arity mismatch");
  for (const auto& s : spaces)
    if (s.ambient() != d_) throw DimensionError("product ambient mismatch");

  // Positions holding equal subspaces only need strictly increasing basis
  // indices (the bracket is alternating); group[i] points to the previous
  // position with the same subspace, if any.
  std::vector<std::ptrdiff_t> prev_same(n_, -1);
  for (std::size_t j = 1; j < n_; j++)
    for (std::size_t i = j; i-- > 0;)
      if (spaces[i] == spaces[j]) {
        prev_same[j] = static_cast<std::ptrdiff_t>(i);
        break;
      }

  std::vector<std::vector<Vec>> bases;
  for (const auto& s : spaces) bases.push_back(s.basis_vectors());

  EchelonSpan span(d_);
  std::vector<Vec> args(n_);
  IndexTuple idx(n_);
  std::function<bool(std::size_t)> rec = [&](std::size_t pos) -> bool {
    if (pos == n_) {
      span.insert(bracket(args));
      return span.dim() == d_;  // cannot grow further
    }
    std::size_t start = prev_same[pos] >= 0 ? idx[prev_same[pos]] + 1 : 0;
    for (std::size_t k = start; k < bases[pos].size(); k++) {
      idx[pos] = k;
      args[pos] = bases[pos][k];
      if (rec(pos + 1)) return true;
    }
    return false;
  };
  rec(0);
  return span.to_subspace();
}

Subspace NLieAlgebra::product_with_full(const Subspace& v) const {
  std::vector<Subspace> spaces(n_, Subspace::full(d_));
  spaces[0] = v;
  return subspace_product(spaces);
}

Subspace NLieAlgebra::derived() const {
  return subspace_product(std::vector<Subspace>(n_, Subspace::full(d_)));
}

bool NLieAlgebra::is_ideal(const Subspace& v) const {
  return v.contains(product_with_full(v));
}

bool NLieAlgebra::is_abelian_ideal(const Subspace& v) const {
  if (!is_ideal(v)) return false;
  std::vector<Subspace> spaces(n_, Subspace::full(d_));
  spaces[0] = v;
  spaces[1] = v;
  return subspace_product(spaces).is_zero();
}

bool NLieAlgebra::is_subalgebra(const Subspace& s) const {
  return s.contains(subspace_product(std::vector<Subspace>(n_, s)));
}

std::vector<Subspace> NLieAlgebra::derived_series(const Subspace& ideal) const {
  if (!is_ideal(ideal))
    throw std::invalid_argument("derived_series needs an ideal");
  std::vector<Subspace> terms = {ideal};
  while (true) {
    Subspace next =
        subspace_product(std::vector<Subspace>(n_, terms.back()));
    bool stable = next == terms.back();
    terms.push_back(std::move(next));
    if (stable || terms.back().is_zero()) break;
  }
  return terms;
}

bool NLieAlgebra::is_solvable(const Subspace& ideal) const {
  return derived_series(ideal).back().is_zero();
}

Subspace NLieAlgebra::centralizer(const Subspace& v) const {
  // solve [x, v_j, e_K] = 0 over x for every v_j in v's basis and every
  // increasing (n-2)-tuple K
  NullspaceAccumulator acc(d_);
  std::vector<Vec> vb = v.basis_vectors();
  for_each_increasing_tuple(d_, n_ - 2, [&](const IndexTuple& k_tuple) {
    for (const auto& vj : vb) {
      if (acc.dim() == 0) return;
      // rows of the map x -> [x, vj, e_K]
      Matrix sys(d_, d_);
      std::vector<Vec> args(n_);
      for (std::size_t l = 0; l < d_; l++) {
        args[0] = Vec(d_);
        args[0][l] = Rat(1);
        args[1] = vj;
        for (std::size_t t = 0; t < n_ - 2; t++) {
          args[2 + t] = Vec(d_);
          args[2 + t][k_tuple[t]] = Rat(1);
        }
        Vec img = bracket(args);
        for (std::size_t r = 0; r < d_; r++) sys.at(r, l) = img[r];
      }
      for (std::size_t r = 0; r < d_; r++) acc.fold(sys.row(r));
    }
  });
  return acc.result();
}

Subspace NLieAlgebra::center() const { return centralizer(Subspace::full(d_)); }

std::pair<NLieAlgebra, Matrix> NLieAlgebra::quotient(
    const Subspace& ideal) const {
  if (!is_ideal(ideal)) throw std::invalid_argument("quotient needs an ideal");
  std::vector<bool> is_pivot(d_, false);
  for (auto p : ideal.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> comp;  // surviving coordinates
  for (std::size_t j = 0; j < d_; j++)
    if (!is_pivot[j]) comp.push_back(j);
  const std::size_t q = comp.size();

  // projection: reduce by the ideal's RREF, then read the non-pivot coords
  Matrix proj(q, d_);
  for (std::size_t j = 0; j < d_; j++) {
    Vec e(d_);
    e[j] = Rat(1);
    Vec r = ideal.reduce(e);
    for (std::size_t i = 0; i < q; i++) proj.at(i, j) = r[comp[i]];
  }

  std::vector<std::string> names;
  for (auto j : comp) names.push_back(names_[j]);

  std::map<IndexTuple, Vec> consts;
  for_each_increasing_tuple(q, n_, [&](const IndexTuple& t) {
    IndexTuple orig(n_);
    for (std::size_t i = 0; i < n_; i++) orig[i] = comp[t[i]];
    Vec img = proj.apply(bracket_basis(orig));
    if (!vec_is_zero(img)) consts[t] = img;
  });

  NLieAlgebra quot(n_, q, names, consts);
  if (!quot.check_axioms().ok())
    throw std::logic_error("quotient violates the bracket identity");
  return {quot, proj};
}

NLieAlgebra NLieAlgebra::restrict_to(const Subspace& s) const {
  if (!is_subalgebra(s))
    throw std::invalid_argument("restriction needs a subalgebra");
  const std::size_t r = s.dim();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < r; i++) names.push_back("e" + std::to_string(i + 1));
  std::map<IndexTuple, Vec> consts;
  std::vector<Vec> sb = s.basis_vectors();
  for_each_increasing_tuple(r, n_, [&](const IndexTuple& t) {
    std::vector<Vec> args;
    for (auto i : t) args.push_back(sb[i]);
    Vec c = s.coords(bracket(args));
    if (!vec_is_zero(c)) consts[t] = c;
  });
  return NLieAlgebra(n_, r, names, consts);
}

NLieAlgebra NLieAlgebra::direct_sum(const NLieAlgebra& a, const NLieAlgebra& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("direct sum arity mismatch");
  const std::size_t d = a.d_ + b.d_;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d; i++) names.push_back("e" + std::to_string(i + 1));
  std::map<IndexTuple, Vec> consts;
  for (const auto& [t, v] : a.c_) {
    Vec lifted(d);
    for (std::size_t i = 0; i < a.d_; i++) lifted[i] = v[i];
    consts[t] = lifted;
  }
  for (const auto& [t, v] : b.c_) {
    IndexTuple shifted(t.size());
    for (std::size_t i = 0; i < t.size(); i++) shifted[i] = t[i] + a.d_;
    Vec lifted(d);
    for (std::size_t i = 0; i < b.d_; i++) lifted[a.d_ + i] = v[i];
    consts[shifted] = lifted;
  }
  return NLieAlgebra(a.n_, d, names, consts);
}

std::vector<Matrix> NLieAlgebra::inner_derivation_generators() const {
  std::vector<Matrix> gens;
  for_each_increasing_tuple(d_, n_ - 1, [&](const IndexTuple& t) {
    Matrix m(d_, d_);
    bool nonzero = false;
    IndexTuple idx = t;
    idx.push_back(0);
    for (std::size_t j = 0; j < d_; j++) {
      idx[n_ - 1] = j;
      Vec img = bracket_basis(idx);
      for (std::size_t i = 0; i < d_; i++) {
        if (!img[i].is_zero()) nonzero = true;
        m.at(i, j) = img[i];
      }
    }
    if (nonzero) gens.push_back(std::move(m));
  });
  return gens;
}

const OperatorAlgebra& NLieAlgebra::inner_derivations() const {
  if (!inner_cache_) {
    inner_cache_ = std::make_shared<const OperatorAlgebra>(
        close_operator_algebra(inner_derivation_generators(), d_));
  }
  return *inner_cache_;
}

std::string NLieAlgebra::tuple_str(const IndexTuple& t) const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < t.size(); i++)
    os << (i ? "," : "") << names_[t[i]];
  os << "]";
  return os.str();
}

}  // namespace nlie
