#pragma once

#include "nlie/algebra.hpp"
#include "nlie/form.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nlie {

// Built-in algebra with independently derived ground truth. The stored
// values are frozen answers, not recomputations: self_test() recomputes
// everything through the library and compares.
struct CatalogEntry {
  std::string name;
  NLieAlgebra algebra;
  std::vector<BilinearForm> forms;  // forms[0] is the primary metric

  Subspace center, derived, radical, socle, max_strong_semisimple;
  std::optional<Subspace> levi;  // known strong semisimple complement
  std::size_t metric_dim = 0;
  std::size_t m_count = 0;
  bool simple = false;
  bool strong_semisimple = false;
  std::vector<std::size_t> component_dims;  // sorted like the decomposition

  // invariant name -> printable value, for reports
  std::map<std::string, std::string> expected() const;
  // throws std::logic_error naming the first mismatching invariant
  void self_test(std::uint64_t seed = 0) const;
};

const std::vector<std::string>& catalog_names();

// Throws std::out_of_range for unknown names. Each named entry is
// self-tested once per process on first construction.
CatalogEntry builtin(const std::string& name);

// Base change by a deterministic random invertible matrix with entries in
// {-2..2}; brackets, forms and the stored subspaces are all transported.
CatalogEntry scramble(const CatalogEntry& e, std::uint64_t seed);
CatalogEntry scramble_with_matrix(const CatalogEntry& e, const Matrix& p);

}  // namespace nlie
