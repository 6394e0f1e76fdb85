#pragma once

#include "nlie/algebra.hpp"
#include "nlie/form.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nlie {

// Raised when an answer would need an irreducible-module or idempotent split
// that the rational searches could not produce. Callers either surface the
// limitation or catch it and mark the affected result as undecided.
struct NotSplitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SocleResult {
  Subspace space;
  // false only in one corner: a perfect algebra whose adjoint module resisted
  // both the irreducibility certificate and every splitting attempt, so
  // "simple" (socle zero) vs "not simple" (socle as computed) stayed open.
  bool certified = false;
};

// Sum of all minimal ideals, with the convention that simple and
// one-dimensional algebras get socle zero. Computed as the annihilator of
// the trace-form radical of the inner-derivation algebra. The form is not
// needed; the optional parameter keeps call sites uniform.
SocleResult socle(const NLieAlgebra& a,
                  const std::optional<BilinearForm>& form = std::nullopt);

struct MinimalIdealRecord {
  enum class Kind { abelian, simple };
  Subspace space;
  Kind kind = Kind::abelian;
  bool in_center = false;
  bool in_derived = false;
};

struct MinimalIdealSearch {
  std::vector<MinimalIdealRecord> ideals;
  // invariant residues of the socle that resisted rational splitting
  std::vector<Subspace> unsplit;
  bool fully_split() const { return unsplit.empty(); }
};

// Splits the socle into minimal ideals: central lines plus the irreducible
// components of the moving part under the inner-derivation action. Every
// returned ideal is re-verified minimal via cyclic closures.
MinimalIdealSearch find_minimal_ideals(const NLieAlgebra& a,
                                       const Subspace& socle_space,
                                       std::uint64_t seed = 0);

// Largest solvable ideal. Recursive: quotient by an abelian minimal ideal
// and pull back; throws NotSplitError("radical undecided over Q") when the
// absence of abelian minimal ideals cannot be certified.
Subspace radical(const NLieAlgebra& a, std::uint64_t seed = 0);

// Sum of all simple ideals (the whole algebra when it is simple). Requires a
// metric form; the result is checked nondegenerate and splitting.
Subspace max_strong_semisimple_ideal(const NLieAlgebra& a,
                                     const BilinearForm& form,
                                     std::uint64_t seed = 0);

struct BIrredComponent {
  Subspace space;       // in the coordinates of the original algebra
  NLieAlgebra algebra;  // structure constants on the subspace basis
  BilinearForm form;    // restricted gram matrix
};

// Orthogonal decomposition into B-irreducible ideals, found by hunting
// nontrivial idempotents in the self-adjoint centroid. A component is
// certified B-irreducible when the unital closure of its self-adjoint
// centroid is a local algebra; otherwise NotSplitError.
std::vector<BIrredComponent> b_irreducible_decomposition(
    const NLieAlgebra& a, const BilinearForm& form, std::uint64_t seed = 0);

bool is_B_irreducible(const NLieAlgebra& a, const BilinearForm& form,
                      std::uint64_t seed = 0);

// Nonzero bracket and no proper nonzero ideals. May throw NotSplitError when
// irreducibility of the adjoint module stays open over Q.
bool is_simple(const NLieAlgebra& a, std::uint64_t seed = 0);

// Direct sum of simple ideals (simple algebras included).
bool is_strong_semisimple(const NLieAlgebra& a, std::uint64_t seed = 0);

// Checks that s is a strong semisimple subalgebra complementing r and that r
// is the radical. On failure returns false and, when why is non-null, a
// one-line reason.
bool verify_levi(const NLieAlgebra& a, const Subspace& s, const Subspace& r,
                 std::string* why = nullptr);

// Self-adjoint centroid elements vanishing on the radical and on all but one
// simple factor of the Levi subalgebra s, mapping that factor into the
// orthogonal complement of the radical. Basis of the solution space, factor
// by factor. Precondition: verify_levi(a, s, radical) holds.
std::vector<CentroidElement> find_intertwiners(const NLieAlgebra& a,
                                               const BilinearForm& form,
                                               const Subspace& s);

enum class AuditStatus { pass, fail, not_applicable, not_split };
std::string audit_status_str(AuditStatus s);

struct AuditEntry {
  std::string id;
  AuditStatus status = AuditStatus::not_applicable;
  std::string detail;
};

struct AuditOptions {
  std::uint64_t seed = 0;
  // Known strong semisimple complement of the radical. Constructing one from
  // scratch is out of scope; without it the checks that quantify over a Levi
  // subalgebra report not-split unless an inference rule finds one.
  std::optional<Subspace> levi;
};

struct StructureReport {
  std::size_t dim = 0;
  std::size_t arity = 0;
  Subspace center;
  Subspace derived;
  std::optional<Subspace> radical;
  std::optional<Subspace> socle;
  bool socle_certified = false;
  std::vector<MinimalIdealRecord> socle_components;
  std::vector<Subspace> socle_unsplit;
  std::optional<std::size_t> m_count;  // number of minimal ideals
  std::optional<Subspace> max_strong_semisimple;
  std::optional<Subspace> levi;  // the complement the audit ended up using
  std::size_t metric_dim = 0;
  std::vector<std::size_t> component_dims;  // B-irreducible decomposition
  std::vector<AuditEntry> audit;

  bool any(AuditStatus s) const;
};

// Computes the structural invariants and runs every consistency check the
// library knows against them. Throws std::domain_error when the form is not
// a metric form for a.
StructureReport audit(const NLieAlgebra& a, const BilinearForm& form,
                      const AuditOptions& opts = {});

}  // namespace nlie
