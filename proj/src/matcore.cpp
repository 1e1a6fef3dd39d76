#include "whad/matcore.hpp"

#include <algorithm>
#include <ostream>

namespace whad {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::EntryOutOfRange: return "EntryOutOfRange";
    case ErrorCode::GramNotTridiagonal: return "GramNotTridiagonal";
    case ErrorCode::NotOrthogonalColumns: return "NotOrthogonalColumns";
    case ErrorCode::ZeroColumn: return "ZeroColumn";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::LeftFactorNotOrthogonal: return "LeftFactorNotOrthogonal";
    case ErrorCode::NotOrthogonalFamily: return "NotOrthogonalFamily";
    case ErrorCode::CrossPairNotOrthogonal: return "CrossPairNotOrthogonal";
    case ErrorCode::PairDependent: return "PairDependent";
    case ErrorCode::SymmetryConditionFailed: return "SymmetryConditionFailed";
    case ErrorCode::SumNotTridiagonal: return "SumNotTridiagonal";
    case ErrorCode::NotOddPrime: return "NotOddPrime";
    case ErrorCode::FirstColumnMismatch: return "FirstColumnMismatch";
    case ErrorCode::FirstColumnNotOrthogonalToRest: return "FirstColumnNotOrthogonalToRest";
    case ErrorCode::CommutatorNonzero: return "CommutatorNonzero";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::WeightedComplementUndefined: return "WeightedComplementUndefined";
    case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorCode::CertificateInvalid: return "CertificateInvalid";
    case ErrorCode::NotIntegral: return "NotIntegral";
    case ErrorCode::MismatchAgainstPaper: return "MismatchAgainstPaper";
    case ErrorCode::InternalConsistency: return "InternalConsistency";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Rational elimination
// ---------------------------------------------------------------------------

std::vector<Index> rref_in_place(RationalMatrix& m) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.row(p).swap(m.row(row));
    const Rational inv = Rational(1) / m(row, col);
    for (Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational f = m(i, col);
      for (Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Index rank(const RationalMatrix& m) {
  RationalMatrix work = m;
  return static_cast<Index>(rref_in_place(work).size());
}

RationalMatrix kernel_basis(const RationalMatrix& m) {
  RationalMatrix r = m;
  const std::vector<Index> pivots = rref_in_place(r);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<Index> free_cols;
  for (Index j = 0; j < n; ++j)
    if (!is_pivot[static_cast<std::size_t>(j)]) free_cols.push_back(j);

  RationalMatrix k = RationalMatrix::Zero(n, static_cast<Index>(free_cols.size()));
  for (std::size_t c = 0; c < free_cols.size(); ++c) {
    const Index f = free_cols[c];
    k(f, static_cast<Index>(c)) = 1;
    for (std::size_t pr = 0; pr < pivots.size(); ++pr) {
      k(pivots[pr], static_cast<Index>(c)) = -r(static_cast<Index>(pr), f);
    }
  }
  if (k.cols() == 0) return k;

  // Canonical basis of the same column space: rref of the transpose.
  RationalMatrix kt = k.transpose();
  rref_in_place(kt);
  return kt.transpose();
}

RationalMatrix inverse(const RationalMatrix& m) {
  require_square(m, "inverse");
  const Index n = m.rows();
  RationalMatrix aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = RationalMatrix::Identity(n, n);
  const std::vector<Index> pivots = rref_in_place(aug);
  if (static_cast<Index>(pivots.size()) < n || (n > 0 && pivots[static_cast<std::size_t>(n - 1)] >= n)) {
    throw Error(ErrorCode::Singular, "matrix is not invertible");
  }
  return aug.rightCols(n);
}

// ---------------------------------------------------------------------------
// IntPolynomial
// ---------------------------------------------------------------------------

IntPolynomial::IntPolynomial(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1, Integer(0));
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::linear(const Integer& root) {
  return IntPolynomial({-root, Integer(1)});
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::divide_linear(const Integer& root, Integer& remainder) const {
  if (coeffs_.empty()) {
    remainder = 0;
    return {};
  }
  // Synthetic division, highest degree first.
  std::vector<Integer> q(coeffs_.size() - 1, Integer(0));
  Integer carry = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    carry = carry * root + coeffs_[k];
    if (k > 0) q[k - 1] = carry;
  }
  remainder = carry;
  return IntPolynomial(std::move(q));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(c));
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (std::size_t k = p.coeffs_.size(); k-- > 0;) {
    const Integer& c = p.coeffs_[k];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || k == 0) os << mag;
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os;
}

IntPolynomial char_poly(const ExactMatrix& a) {
  require_square(a, "char_poly");
  const Index n = a.rows();
  std::vector<Integer> c(static_cast<std::size_t>(n + 1), Integer(0));
  c[static_cast<std::size_t>(n)] = 1;
  ExactMatrix m = ExactMatrix::Zero(n, n);
  for (Index k = 1; k <= n; ++k) {
    m = a * m;
    m.diagonal().array() += c[static_cast<std::size_t>(n - k + 1)];
    const ExactMatrix am = a * m;
    Integer tr = am.trace();
    c[static_cast<std::size_t>(n - k)] = -tr / Integer(k);  // exact
  }
  return IntPolynomial(std::move(c));
}

// ---------------------------------------------------------------------------
// Integer roots
// ---------------------------------------------------------------------------

namespace {

// Smallest r >= 0 with r^k >= x (x >= 0).
Integer iroot_ceil(const Integer& x, unsigned k) {
  if (x <= 1) return x;
  Integer lo = 1, hi = 1;
  while (boost::multiprecision::pow(hi, k) < x) hi *= 2;
  while (lo < hi) {
    Integer mid = (lo + hi) / 2;
    if (boost::multiprecision::pow(mid, k) >= x)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

// Fujiwara's bound on the magnitude of every complex root.
Integer root_bound(const std::vector<Integer>& c) {
  const std::size_t n = c.size() - 1;
  const Integer lead = abs(c[n]);
  Integer best = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    Integer num = abs(c[n - k]);
    if (k == n) num = (num + 1) / 2;
    Integer ratio = (num + lead - 1) / lead;  // ceil
    Integer r = iroot_ceil(ratio, static_cast<unsigned>(k));
    if (r > best) best = r;
  }
  return 2 * best + 1;
}

}  // namespace

IntegerRoots integer_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "integer_roots of the zero polynomial");

  IntegerRoots out;
  std::vector<Integer> coeffs = p.coefficients();

  std::size_t zeros = 0;
  while (coeffs[zeros] == 0) ++zeros;
  IntPolynomial rest(std::vector<Integer>(coeffs.begin() + static_cast<long>(zeros), coeffs.end()));

  std::vector<Integer> candidates;
  if (rest.degree() > 0) {
    const Integer bound = root_bound(rest.coefficients());
    const Integer trailing = abs(rest.coefficient(0));
    const Integer limit = std::min(bound, boost::multiprecision::sqrt(trailing));
    for (Integer d = 1; d <= limit; ++d) {
      if (trailing % d != 0) continue;
      candidates.push_back(d);
      Integer co = trailing / d;
      if (co != d && co <= bound) candidates.push_back(co);
    }
  }
  std::vector<Integer> signed_candidates;
  for (const Integer& d : candidates) {
    signed_candidates.push_back(d);
    signed_candidates.push_back(-d);
  }
  if (zeros > 0) signed_candidates.push_back(0);
  std::sort(signed_candidates.begin(), signed_candidates.end());

  for (const Integer& r : signed_candidates) {
    if (r == 0) {
      out.roots.push_back({Integer(0), static_cast<int>(zeros)});
      continue;
    }
    int mult = 0;
    for (;;) {
      if (rest.degree() < 1) break;
      Integer rem;
      IntPolynomial q = rest.divide_linear(r, rem);
      if (rem != 0) break;
      rest = std::move(q);
      ++mult;
    }
    if (mult > 0) out.roots.push_back({r, mult});
  }
  out.fully_integral = rest.degree() == 0;
  out.remainder = rest;
  return out;
}

}  // namespace whad
