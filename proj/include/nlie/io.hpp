#pragma once

#include "nlie/form.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nlie {

// In-memory mirror of the on-disk algebra file: arity, dimension, basis
// names, sparse bracket table on strictly increasing tuples, optional Gram
// matrix. Parsing resolves names to indices and rejects malformed input;
// axiom and invariance checks are a separate, later step.
struct AlgebraFile {
  std::size_t n = 2;
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::map<IndexTuple, Vec> brackets;  // nonzero coefficient vectors only
  std::optional<Matrix> form;

  NLieAlgebra algebra() const;
  std::optional<BilinearForm> bilinear_form() const;
};

// Snapshot of a live algebra (plus an optional form) ready for emit().
AlgebraFile snapshot(const NLieAlgebra& a, const BilinearForm* form = nullptr);

// Canonical text: fields in fixed order, brackets sorted by tuple, value
// keys in basis order, rationals as "p" or "p/q" strings, two-space indent,
// trailing newline. Emitting a parsed file reproduces the value exactly.
std::string emit(const AlgebraFile& f);

// Throws ParseError with a message naming the offending field or tuple.
AlgebraFile parse_algebra_file(const std::string& text);

// Reads and parses a file; unreadable paths also raise ParseError.
AlgebraFile load_algebra_file(const std::string& path);

}  // namespace nlie
