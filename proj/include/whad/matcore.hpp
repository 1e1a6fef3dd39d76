#pragma once

#include "whad/core.hpp"

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

namespace whad {

// ---------------------------------------------------------------------------
// Gram products and structural predicates
// ---------------------------------------------------------------------------

/// Returns MᵀM.
template <typename Derived>
Mat<typename Derived::Scalar> gram(const Eigen::MatrixBase<Derived>& m) {
  return (m.transpose() * m).eval();
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::NotSquare, std::string(what) + ": " + std::to_string(m.rows()) +
                                          "x" + std::to_string(m.cols()));
  }
}

/// True iff every entry with |i-j| >= 2 vanishes.
template <typename Derived>
bool is_tridiagonal(const Eigen::MatrixBase<Derived>& m) {
  require_square(m, "is_tridiagonal");
  using S = typename Derived::Scalar;
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if ((i > j + 1 || j > i + 1) && m(i, j) != S(0)) return false;
    }
  }
  return true;
}

template <typename Derived>
bool is_diagonal(const Eigen::MatrixBase<Derived>& m) {
  require_square(m, "is_diagonal");
  using S = typename Derived::Scalar;
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (i != j && m(i, j) != S(0)) return false;
    }
  }
  return true;
}

/// First far-off-diagonal nonzero entry (|i-j| >= 2) with i < j, if any.
template <typename Derived>
std::optional<std::pair<Index, Index>> first_far_entry(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = i + 2; j < m.cols(); ++j) {
      if (m(i, j) != S(0) || m(j, i) != S(0)) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

/// Exact determinant by fraction-free (Bareiss) elimination. Every division
/// performed is exact, so Integer scalars stay integral throughout.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  require_square(m, "determinant");
  const Index n = m.rows();
  if (n == 0) return S(1);
  Mat<S> a = m;
  S sign(1);
  S prev(1);
  for (Index k = 0; k < n - 1; ++k) {
    if (a(k, k) == S(0)) {
      Index r = k + 1;
      while (r < n && a(r, k) == S(0)) ++r;
      if (r == n) return S(0);
      a.row(k).swap(a.row(r));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = S(0);
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Rational elimination
// ---------------------------------------------------------------------------

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<Index> rref_in_place(RationalMatrix& m);

/// Rank over the rationals.
Index rank(const RationalMatrix& m);

/// Basis of the right null space, columns in reduced column echelon form with
/// unit pivots. Zero columns when the kernel is trivial.
RationalMatrix kernel_basis(const RationalMatrix& m);

/// Exact inverse. Throws NotSquare or Singular.
RationalMatrix inverse(const RationalMatrix& m);

template <typename Derived>
RationalMatrix to_rational(const Eigen::MatrixBase<Derived>& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) r(i, j) = Rational(Integer(m(i, j)));
  return r;
}

template <typename Derived>
ExactMatrix to_exact(const Eigen::MatrixBase<Derived>& m) {
  ExactMatrix r(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) r(i, j) = Integer(m(i, j));
  return r;
}

// ---------------------------------------------------------------------------
// Integer polynomials
// ---------------------------------------------------------------------------

/// Dense polynomial with Integer coefficients in ascending degree order.
/// The zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> ascending);

  static IntPolynomial monomial(const Integer& c, std::size_t degree);
  /// (x - root)
  static IntPolynomial linear(const Integer& root);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }
  const Integer& leading() const { return coeffs_.back(); }

  Integer evaluate(const Integer& x) const;

  /// Divides by (x - root). Returns the quotient and writes the remainder.
  IntPolynomial divide_linear(const Integer& root, Integer& remainder) const;

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// det(xI - M), computed by Faddeev-LeVerrier with exact integer division.
IntPolynomial char_poly(const ExactMatrix& m);

struct RootMultiplicity {
  Integer root;
  int multiplicity = 0;
  friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

struct IntegerRoots {
  std::vector<RootMultiplicity> roots;  // ascending
  bool fully_integral = false;          // deflation reached a constant
  IntPolynomial remainder;              // what is left after removing integer roots
};

/// All integer roots with multiplicity. Throws ZeroPolynomial.
IntegerRoots integer_roots(const IntPolynomial& p);

}  // namespace whad
