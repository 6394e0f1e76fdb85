#include "nlie/form.hpp"

#include <algorithm>

namespace nlie {

namespace {

void require_symmetric(const BilinearForm& b) {
  if (!b.gram.is_symmetric())
    throw std::invalid_argument("gram matrix must be symmetric");
}

Rat form_value(const Matrix& gram, const Vec& x, const Vec& y) {
  return dot(x, gram.apply(y));
}

}  // namespace

std::optional<InvarianceViolation> find_invariance_violation(
    const NLieAlgebra& a, const BilinearForm& b) {
  require_symmetric(b);
  const std::size_t d = a.dim();
  std::optional<InvarianceViolation> hit;
  for_each_increasing_tuple(d, a.arity() - 1, [&](const IndexTuple& head) {
    if (hit) return;
    // cache [head, e_j] for all j
    std::vector<Vec> w(d);
    IndexTuple idx = head;
    idx.push_back(0);
    for (std::size_t j = 0; j < d; j++) {
      idx[a.arity() - 1] = j;
      w[j] = a.bracket_basis(idx);
    }
    for (std::size_t j = 0; j < d && !hit; j++)
      for (std::size_t k = j; k < d; k++) {
        Vec ek(d), ej(d);
        ek[k] = Rat(1);
        ej[j] = Rat(1);
        Rat lhs = form_value(b.gram, w[j], ek);
        Rat rhs = -form_value(b.gram, w[k], ej);
        if (lhs != rhs) {
          hit = InvarianceViolation{head, j, k, lhs, rhs};
          break;
        }
      }
  });
  return hit;
}

bool check_invariance(const NLieAlgebra& a, const BilinearForm& b) {
  return !find_invariance_violation(a, b).has_value();
}

bool is_nondegenerate(const BilinearForm& b) {
  return !b.gram.det().is_zero();
}

bool is_metric(const NLieAlgebra& a, const BilinearForm& b) {
  return b.gram.is_symmetric() && check_invariance(a, b) && is_nondegenerate(b);
}

Matrix restrict_form(const BilinearForm& b, const Subspace& w) {
  return w.basis() * b.gram * w.basis().transpose();
}

Subspace orthogonal_complement(const BilinearForm& b, const Subspace& w) {
  if (!is_nondegenerate(b))
    throw std::domain_error("orthogonal complement needs a nondegenerate form");
  return solve_nullspace(w.basis() * b.gram);
}

std::string SubspaceClass::str() const {
  std::string s;
  auto add = [&](const char* t) {
    if (!s.empty()) s += "+";
    s += t;
  };
  if (isotropic) add("isotropic");
  if (coisotropic) add("coisotropic");
  if (nondegenerate) add("nondegenerate");
  if (mixed) add("mixed");
  return s;
}

SubspaceClass classify_subspace(const BilinearForm& b, const Subspace& w) {
  Subspace perp = orthogonal_complement(b, w);
  SubspaceClass c;
  c.isotropic = perp.contains(w);
  c.coisotropic = w.contains(perp);
  c.nondegenerate = subspace_intersect(w, perp).is_zero();
  c.mixed = !(c.isotropic || c.coisotropic || c.nondegenerate);
  return c;
}

namespace {

// Shared assembly for the centroid condition phi([e_j, e_K]) = [phi(e_j), e_K],
// folded as sparse rows over the d^2 entries of phi (row-major).
void fold_centroid_rows(const NLieAlgebra& a, NullspaceAccumulator& acc) {
  const std::size_t d = a.dim();
  std::vector<std::pair<std::size_t, Rat>> row;
  for_each_increasing_tuple(d, a.arity() - 1, [&](const IndexTuple& k_tuple) {
    // w[x] = [e_x, e_K]
    std::vector<Vec> w(d);
    IndexTuple idx(a.arity());
    for (std::size_t x = 0; x < d; x++) {
      idx[0] = x;
      for (std::size_t t = 0; t + 1 < a.arity(); t++) idx[t + 1] = k_tuple[t];
      w[x] = a.bracket_basis(idx);
    }
    for (std::size_t j = 0; j < d; j++) {
      if (acc.dim() == 0) return;
      const Vec& c = w[j];
      for (std::size_t m = 0; m < d; m++) {
        row.clear();
        for (std::size_t l = 0; l < d; l++)
          if (!c[l].is_zero()) row.emplace_back(m * d + l, c[l]);
        for (std::size_t x = 0; x < d; x++)
          if (!w[x][m].is_zero()) row.emplace_back(x * d + j, -w[x][m]);
        acc.fold_sparse(row);
      }
    }
  });
}

std::vector<Matrix> unflatten_basis(const Subspace& flat, std::size_t d) {
  std::vector<Matrix> out;
  for (const auto& v : flat.basis_vectors())
    out.push_back(Matrix::unflatten(v, d, d));
  return out;
}

}  // namespace

Subspace centroid_span(const NLieAlgebra& a) {
  const std::size_t d = a.dim();
  NullspaceAccumulator acc(d * d);
  fold_centroid_rows(a, acc);
  return acc.result();
}

Subspace gamma_b_span(const NLieAlgebra& a, const BilinearForm& b) {
  if (!is_metric(a, b)) throw std::domain_error("gamma_B needs a metric form");
  const std::size_t d = a.dim();
  NullspaceAccumulator acc(d * d);
  fold_centroid_rows(a, acc);
  // self-adjointness G phi = phi^T G; the difference is antisymmetric, so
  // constraints for r < c suffice
  std::vector<std::pair<std::size_t, Rat>> row;
  for (std::size_t r = 0; r < d; r++)
    for (std::size_t c = r + 1; c < d; c++) {
      row.clear();
      for (std::size_t k = 0; k < d; k++) {
        if (!b.gram.at(r, k).is_zero())
          row.emplace_back(k * d + c, b.gram.at(r, k));
        if (!b.gram.at(k, c).is_zero())
          row.emplace_back(k * d + r, -b.gram.at(k, c));
      }
      acc.fold_sparse(row);
    }
  return acc.result();
}

std::vector<CentroidElement> centroid(const NLieAlgebra& a) {
  std::vector<CentroidElement> out;
  for (auto& m : unflatten_basis(centroid_span(a), a.dim()))
    out.push_back({std::move(m), false});
  return out;
}

std::vector<CentroidElement> gamma_B(const NLieAlgebra& a,
                                     const BilinearForm& b) {
  std::vector<CentroidElement> out;
  for (auto& m : unflatten_basis(gamma_b_span(a, b), a.dim()))
    out.push_back({std::move(m), true});
  return out;
}

std::vector<BilinearForm> invariant_form_space(const NLieAlgebra& a) {
  const std::size_t d = a.dim();
  NullspaceAccumulator acc(d * d);
  std::vector<std::pair<std::size_t, Rat>> row;
  // symmetry first: cheap rows that halve the space
  for (std::size_t r = 0; r < d; r++)
    for (std::size_t c = r + 1; c < d; c++) {
      row.clear();
      row.emplace_back(r * d + c, Rat(1));
      row.emplace_back(c * d + r, Rat(-1));
      acc.fold_sparse(row);
    }
  // invariance: X([head, e_j], e_k) + X([head, e_k], e_j) = 0
  for_each_increasing_tuple(d, a.arity() - 1, [&](const IndexTuple& head) {
    std::vector<Vec> w(d);
    IndexTuple idx = head;
    idx.push_back(0);
    for (std::size_t x = 0; x < d; x++) {
      idx[a.arity() - 1] = x;
      w[x] = a.bracket_basis(idx);
    }
    for (std::size_t j = 0; j < d; j++) {
      if (acc.dim() == 0) return;
      for (std::size_t k = j; k < d; k++) {
        row.clear();
        for (std::size_t m = 0; m < d; m++) {
          if (!w[j][m].is_zero()) row.emplace_back(m * d + k, w[j][m]);
          if (!w[k][m].is_zero()) row.emplace_back(m * d + j, w[k][m]);
        }
        acc.fold_sparse(row);
      }
    }
  });
  std::vector<BilinearForm> out;
  for (auto& m : unflatten_basis(acc.result(), d)) out.push_back({std::move(m)});
  return out;
}

bool in_centroid(const NLieAlgebra& a, const Matrix& m) {
  const std::size_t d = a.dim();
  bool ok = true;
  for_each_increasing_tuple(d, a.arity() - 1, [&](const IndexTuple& k_tuple) {
    if (!ok) return;
    IndexTuple idx(a.arity());
    for (std::size_t t = 0; t + 1 < a.arity(); t++) idx[t + 1] = k_tuple[t];
    for (std::size_t j = 0; j < d && ok; j++) {
      idx[0] = j;
      Vec lhs = m.apply(a.bracket_basis(idx));
      std::vector<Vec> args(a.arity());
      args[0] = m.col(j);
      for (std::size_t t = 0; t + 1 < a.arity(); t++) {
        args[t + 1] = Vec(d);
        args[t + 1][k_tuple[t]] = Rat(1);
      }
      if (lhs != a.bracket(args)) ok = false;
    }
  });
  return ok;
}

bool is_self_adjoint(const BilinearForm& b, const Matrix& m) {
  return b.gram * m == m.transpose() * b.gram;
}

namespace {

// Enumerates integer coefficient vectors of total L1 weight `s` with entries
// bounded by `box`, first nonzero entry positive (signs of the whole vector
// only flip the determinant's sign). Returns true to stop early.
bool enumerate_weighted(std::size_t k, long s, long box,
                        const std::function<bool(const std::vector<long>&)>& fn) {
  std::vector<long> v(k, 0);
  std::function<bool(std::size_t, long, bool)> rec =
      [&](std::size_t pos, long rem, bool any) -> bool {
    if (pos == k) return rem == 0 && any && fn(v);
    long cap = std::min(box, rem);
    for (long mag = 0; mag <= cap; mag++) {
      v[pos] = mag;
      if (mag > 0 && !any) {
        // first nonzero entry: positive only
        if (rec(pos + 1, rem - mag, true)) return true;
      } else if (mag > 0) {
        if (rec(pos + 1, rem - mag, true)) return true;
        v[pos] = -mag;
        if (rec(pos + 1, rem - mag, true)) return true;
      } else {
        if (rec(pos + 1, rem, any)) return true;
      }
    }
    v[pos] = 0;
    return false;
  };
  return rec(0, s, false);
}

}  // namespace

MetricDimension metric_dimension(const NLieAlgebra& a, const BilinearForm& b) {
  MetricDimension md;
  std::vector<CentroidElement> gb = gamma_B(a, b);
  md.gamma_b_dim = gb.size();
  md.form_space_dim = invariant_form_space(a).size();
  md.dims_agree = md.gamma_b_dim == md.form_space_dim;

  const std::size_t k = gb.size();
  const std::size_t d = a.dim();
  long examined = 0;
  const long examine_cap = 200000;
  for (long box : {3L, 6L}) {
    long s_max = box * static_cast<long>(k);
    for (long s = 1; s <= s_max && !md.witness; s++) {
      enumerate_weighted(k, s, box, [&](const std::vector<long>& coeffs) {
        if (++examined > examine_cap) return true;
        Matrix combo(d, d);
        for (std::size_t i = 0; i < k; i++)
          if (coeffs[i] != 0)
            combo = combo + gb[i].matrix * Rat(coeffs[i]);
        if (!combo.det().is_zero()) {
          Vec w(k);
          for (std::size_t i = 0; i < k; i++) w[i] = Rat(coeffs[i]);
          md.witness_coords = std::move(w);
          md.witness = std::move(combo);
          return true;
        }
        return false;
      });
      if (examined > examine_cap) break;
    }
    if (md.witness || examined > examine_cap) break;
  }
  if (!md.witness) {
    std::string basis_dump;
    for (const auto& g : gb) basis_dump += "\n  " + g.matrix.str();
    md.warning =
        "no invertible integer combination found (searched L-inf box 6, " +
        std::to_string(examined) + " candidates); basis:" + basis_dump;
  }
  return md;
}

CentroidElement d_operator(const NLieAlgebra& a, const BilinearForm& base,
                           const BilinearForm& k) {
  if (!is_metric(a, base)) throw std::domain_error("base form must be a metric");
  require_symmetric(k);
  if (!check_invariance(a, k))
    throw std::invalid_argument("second form is not invariant");
  // K(x,y) = B(Dx,y) => gram_K = D^T gram_B => D = gram_B^{-1} gram_K
  // (transpose drops out because D is B-self-adjoint; verified below).
  Matrix d_mat = base.gram.inverse() * k.gram;
  if (!in_centroid(a, d_mat) || !is_self_adjoint(base, d_mat))
    throw std::logic_error("derived operator escaped the self-adjoint centroid");
  return {d_mat, true};
}

}  // namespace nlie
