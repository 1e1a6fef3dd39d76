#include "whad/spectrum.hpp"

namespace whad {

const Eigenspace* SpectralData::find(const Integer& lambda) const {
  for (const auto& s : spaces)
    if (s.value == lambda) return &s;
  return nullptr;
}

std::vector<Integer> SpectralData::eigenvalues() const {
  std::vector<Integer> out;
  for (const auto& s : spaces)
    for (Index k = 0; k < s.multiplicity; ++k) out.push_back(s.value);
  return out;
}

SpectralData spectrum_of(const ExactMatrix& m) {
  require_square(m, "spectrum");
  SpectralData data;
  data.n = m.rows();
  data.char_poly = char_poly(m);
  const IntegerRoots roots = integer_roots(data.char_poly);
  data.integral = roots.fully_integral;
  data.remainder = roots.remainder;
  const RationalMatrix r = to_rational(m);
  for (const auto& [lambda, mult] : roots.roots) {
    RationalMatrix shifted = r;
    shifted.diagonal().array() -= Rational(lambda);
    Eigenspace e{lambda, mult, kernel_basis(shifted)};
    if (e.basis.cols() != mult)
      throw Error(ErrorCode::InternalConsistency, "geometric multiplicity differs for eigenvalue " + lambda.str());
    data.spaces.push_back(std::move(e));
  }
  return data;
}

SpectralData spectrum(const WGraph& x) { return spectrum_of(x.laplacian()); }

}  // namespace whad
