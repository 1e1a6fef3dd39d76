#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace whad {

/// Arbitrary-precision integer. Expression templates are disabled so that the
/// type behaves like a plain value inside Eigen expressions.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
/// Arbitrary-precision rational, always kept in lowest terms by GMP.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using Eigen::Index;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using ExactMatrix = Mat<Integer>;
using RationalMatrix = Mat<Rational>;
using ExactVector = Vec<Integer>;
using RationalVector = Vec<Rational>;

enum class ErrorCode {
  NotSquare,
  ZeroPolynomial,
  Singular,
  ParseError,
  EntryOutOfRange,
  GramNotTridiagonal,
  NotOrthogonalColumns,
  ZeroColumn,
  IndexOutOfRange,
  DimensionTooLarge,
  LeftFactorNotOrthogonal,
  NotOrthogonalFamily,
  CrossPairNotOrthogonal,
  PairDependent,
  SymmetryConditionFailed,
  SumNotTridiagonal,
  NotOddPrime,
  FirstColumnMismatch,
  FirstColumnNotOrthogonalToRest,
  CommutatorNonzero,
  SizeMismatch,
  WeightedComplementUndefined,
  HypothesisNotMet,
  CertificateInvalid,
  NotIntegral,
  MismatchAgainstPaper,
  InternalConsistency,
};

const char* to_string(ErrorCode code);

/// Every domain failure in the library is reported through this exception.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

template <typename Scalar>
Mat<Scalar> identity(Index n) {
  return Mat<Scalar>::Identity(n, n);
}

}  // namespace whad
