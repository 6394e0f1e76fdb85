#pragma once

#include "nlie/matrix.hpp"

#include <vector>

namespace nlie {

struct EigenProjection {
  Rat eigenvalue;
  std::size_t multiplicity;  // algebraic; equals the rank of the projection
  Matrix projection;         // onto the generalized eigenspace, along the rest
};

// Spectral splitting over Q. The rational part of the spectrum is resolved
// into commuting projections (each a polynomial in the input matrix); the
// rational-root-free remainder of the characteristic polynomial is covered
// by `residual`, never guessed at. residual_dim == 0 means a full split.
struct EigenSplit {
  std::vector<EigenProjection> parts;
  Matrix residual;
  std::size_t residual_dim;
  bool fully_split() const { return residual_dim == 0; }
};

EigenSplit rational_eigenprojection(const Matrix& a);

// Characteristic polynomial det(xI - a), coefficients ascending, monic.
Vec char_poly(const Matrix& a);

}  // namespace nlie
