#pragma once

#include "whad/graph.hpp"
#include "whad/matcore.hpp"

#include <vector>

namespace whad {

struct Eigenspace {
  Integer value;
  Index multiplicity = 0;
  RationalMatrix basis;  // columns span ker(L - value I), canonical form
};

/// Exact Laplacian spectrum. When the characteristic polynomial has
/// non-integer roots, `integral` is false and only the integer part is listed.
struct SpectralData {
  Index n = 0;
  std::vector<Eigenspace> spaces;  // ascending eigenvalue
  bool integral = false;
  IntPolynomial char_poly;
  IntPolynomial remainder;

  const Eigenspace* find(const Integer& lambda) const;
  /// Eigenvalues repeated by multiplicity, ascending.
  std::vector<Integer> eigenvalues() const;
};

SpectralData spectrum(const WGraph& x);
SpectralData spectrum_of(const ExactMatrix& symmetric);

}  // namespace whad
