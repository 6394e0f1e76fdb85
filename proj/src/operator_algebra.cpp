#include "nlie/operator_algebra.hpp"

#include <algorithm>
#include <deque>

namespace nlie {

namespace {

bool is_nilpotent(const Matrix& m) {
  Matrix p = m;
  for (std::size_t k = 1; k < 2 * m.rows(); k *= 2) {
    if (p.is_zero()) return true;
    p = p * p;
  }
  return p.is_zero();
}

}  // namespace

OperatorAlgebra close_operator_algebra(const std::vector<Matrix>& gens,
                                       std::size_t ambient) {
  for (const auto& g : gens)
    if (g.rows() != ambient || g.cols() != ambient)
      throw DimensionError("generator shape mismatch");

  OperatorAlgebra oa;
  oa.ambient = ambient;
  oa.generators = gens;

  EchelonSpan span(ambient * ambient);
  std::vector<Matrix> work;  // spanning set, grows as products appear
  std::deque<std::size_t> fresh;
  for (const auto& g : gens)
    if (span.insert(g.flatten())) {
      work.push_back(g);
      fresh.push_back(work.size() - 1);
    }

  // Worklist closure: every new element is multiplied against everything
  // present on both sides; rank <= ambient^2 bounds the growth.
  while (!fresh.empty()) {
    std::size_t i = fresh.front();
    fresh.pop_front();
    for (std::size_t j = 0; j < work.size(); j++) {
      for (int side = 0; side < 2; side++) {
        Matrix prod = side ? work[j] * work[i] : work[i] * work[j];
        if (span.insert(prod.flatten())) {
          work.push_back(prod);
          fresh.push_back(work.size() - 1);
        }
      }
    }
  }

  oa.span = span.to_subspace();
  for (const auto& row : oa.span.basis_vectors())
    oa.span_basis.push_back(Matrix::unflatten(row, ambient, ambient));

  // Trace-form radical: kernel of T_ij = tr(b_i b_j) over the span basis.
  const std::size_t k = oa.span_basis.size();
  Matrix gram(k, k);
  for (std::size_t i = 0; i < k; i++)
    for (std::size_t j = i; j < k; j++) {
      Rat t;
      const Matrix& a = oa.span_basis[i];
      const Matrix& b = oa.span_basis[j];
      for (std::size_t u = 0; u < ambient; u++)
        for (std::size_t v = 0; v < ambient; v++)
          if (!a.at(u, v).is_zero() && !b.at(v, u).is_zero())
            t.addmul(a.at(u, v), b.at(v, u));
      gram.at(i, j) = t;
      gram.at(j, i) = t;
    }
  Subspace rad_coords = solve_nullspace(gram);

  EchelonSpan rad_span(ambient * ambient);
  for (const auto& c : rad_coords.basis_vectors()) {
    Vec flat(ambient * ambient);
    for (std::size_t i = 0; i < k; i++)
      vec_addmul(flat, c[i], oa.span_basis[i].flatten());
    rad_span.insert(std::move(flat));
  }
  oa.radical_span = rad_span.to_subspace();
  for (const auto& row : oa.radical_span.basis_vectors()) {
    Matrix m = Matrix::unflatten(row, ambient, ambient);
    if (!is_nilpotent(m))
      throw std::logic_error("trace-form radical element is not nilpotent");
    oa.radical_basis.push_back(std::move(m));
  }
  return oa;
}

Subspace joint_kernel(const std::vector<Matrix>& mats, std::size_t ambient) {
  Matrix stacked(mats.size() * ambient, ambient);
  std::size_t r = 0;
  for (const auto& m : mats)
    for (std::size_t i = 0; i < ambient; i++) stacked.set_row(r++, m.row(i));
  return solve_nullspace(stacked);
}

Subspace image_of_subspace(const std::vector<Matrix>& mats, const Subspace& w) {
  EchelonSpan span(w.ambient());
  for (const auto& m : mats)
    for (const auto& v : w.basis_vectors()) span.insert(m.apply(v));
  return span.to_subspace();
}

Subspace cyclic_closure(const std::vector<Matrix>& gens, const Vec& v) {
  const std::size_t d = v.size();
  EchelonSpan span(d);
  std::deque<Vec> fresh;
  if (span.insert(v)) fresh.push_back(v);
  while (!fresh.empty()) {
    Vec x = std::move(fresh.front());
    fresh.pop_front();
    for (const auto& g : gens) {
      Vec y = g.apply(x);
      if (span.insert(y)) fresh.push_back(std::move(y));
    }
  }
  return span.to_subspace();
}

bool is_invariant_subspace(const Matrix& op, const Subspace& w) {
  for (const auto& v : w.basis_vectors())
    if (!w.contains_vector(op.apply(v))) return false;
  return true;
}

Matrix restrict_operator(const Matrix& op, const Subspace& w) {
  const std::size_t r = w.dim();
  Matrix res(r, r);
  for (std::size_t j = 0; j < r; j++) {
    Vec img = op.apply(w.basis().row(j));
    if (!w.contains_vector(img))
      throw std::invalid_argument("subspace is not invariant under operator");
    Vec c = w.coords(img);
    for (std::size_t i = 0; i < r; i++) res.at(i, j) = c[i];
  }
  return res;
}

std::vector<Matrix> commutant_on(const std::vector<Matrix>& gens,
                                 const Subspace& w) {
  const std::size_t r = w.dim();
  NullspaceAccumulator acc(r * r);
  std::vector<std::pair<std::size_t, Rat>> row;
  for (const auto& g : gens) {
    Matrix a = restrict_operator(g, w);
    // x a - a x = 0, entry (i,j): sum_k x_ik a_kj - a_ik x_kj
    for (std::size_t i = 0; i < r; i++)
      for (std::size_t j = 0; j < r; j++) {
        row.clear();
        for (std::size_t k = 0; k < r; k++) {
          if (!a.at(k, j).is_zero()) row.emplace_back(i * r + k, a.at(k, j));
          if (!a.at(i, k).is_zero()) row.emplace_back(k * r + j, -a.at(i, k));
        }
        acc.fold_sparse(row);
      }
  }
  std::vector<Matrix> basis;
  for (const auto& v : acc.result().basis_vectors())
    basis.push_back(Matrix::unflatten(v, r, r));
  return basis;
}

namespace {

// One splitting round: images of the eigenprojections of `cand` (acting in
// w-coordinates), lifted back to ambient coordinates. Empty result means the
// candidate produced no proper splitting.
std::vector<Subspace> split_by_candidate(const Matrix& cand,
                                         const Subspace& w) {
  EigenSplit es = rational_eigenprojection(cand);
  std::vector<Matrix> projs;
  for (const auto& part : es.parts) projs.push_back(part.projection);
  if (es.residual_dim > 0) projs.push_back(es.residual);
  if (projs.size() < 2) return {};

  std::vector<Subspace> pieces;
  for (const auto& p : projs) {
    // column space of the projection, expressed in ambient coordinates
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < p.cols(); j++) {
      Vec c = p.col(j);
      if (!vec_is_zero(c)) cols.push_back(w.lift(c));
    }
    Subspace piece = Subspace::from_vectors(cols, w.ambient());
    if (piece.dim() > 0) pieces.push_back(piece);
  }
  return pieces.size() >= 2 ? pieces : std::vector<Subspace>{};
}

void split_rec(const std::vector<Matrix>& gens, const Subspace& w, Rng& rng,
               ModuleSplit& out) {
  if (w.dim() == 0) return;
  std::vector<Matrix> comm = commutant_on(gens, w);
  if (comm.size() == 1) {
    // one-dimensional endomorphism ring: irreducible, certified
    out.components.push_back(w);
    return;
  }

  std::vector<Matrix> candidates = comm;
  for (int t = 0; t < 40; t++) {
    Matrix combo(w.dim(), w.dim());
    for (const auto& c : comm)
      combo = combo + c * Rat(rng.pick(-3, 3));
    candidates.push_back(combo);
  }
  for (const auto& cand : candidates) {
    auto pieces = split_by_candidate(cand, w);
    if (!pieces.empty()) {
      std::sort(pieces.begin(), pieces.end());
      for (const auto& piece : pieces) split_rec(gens, piece, rng, out);
      return;
    }
  }
  out.unsplit.push_back(w);
}

}  // namespace

ModuleSplit split_module(const std::vector<Matrix>& gens, const Subspace& w,
                         std::uint64_t seed) {
  ModuleSplit out;
  Rng rng(seed);
  split_rec(gens, w, rng, out);
  std::sort(out.components.begin(), out.components.end());
  std::sort(out.unsplit.begin(), out.unsplit.end());
  return out;
}

}  // namespace nlie
