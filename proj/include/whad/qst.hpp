#pragma once

#include "whad/certify.hpp"
#include "whad/spectrum.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace whad {

// Continuous-time quantum walks U(t) = exp(itL) on Laplacian-integral
// graphs. Vertices are 0-based throughout.

struct Projector {
  Integer value;
  RationalMatrix e;  // orthogonal projection onto ker(L - value I)
};

struct SpectralDecomposition {
  Index n = 0;
  std::vector<Projector> parts;  // ascending eigenvalue
};

/// Throws NotIntegral when the spectrum is not fully integral.
SpectralDecomposition decompose(const SpectralData& spec);
SpectralDecomposition decompose(const WGraph& x);

struct SupportData {
  Index vertex = 0;
  std::vector<Integer> support;  // ascending
};

SupportData eigenvalue_support(const SpectralDecomposition& d, Index u);

/// Equal projector diagonals. With a certificate, also evaluates the
/// Σ 1/‖x‖² criterion over certificate columns and throws InternalConsistency
/// if the two disagree (HypothesisNotMet if the columns are not orthogonal).
bool cospectral(const SpectralDecomposition& d, Index u, Index v, const WhdCertificate* cert = nullptr);

/// Σ_{x ∈ W(λ), x(u) ≠ 0} 1/‖x‖² for each eigenvalue of the certificate.
std::vector<std::pair<Integer, Rational>> certificate_diagonal(const WhdCertificate& cert, Index u);

struct StrongCospectralResult {
  Index u = 0;
  Index v = 0;
  bool strongly_cospectral = false;
  bool cospectral_only = false;  // cospectral but not strongly
  std::vector<Integer> sigma_plus;
  std::vector<Integer> sigma_minus;
};

StrongCospectralResult strong_cospectral(const SpectralDecomposition& d, Index u, Index v);

/// Largest e with 2^e | z, for z ≠ 0.
int nu2(const Integer& z);

struct Valuation {
  Integer value;
  int nu2 = 0;
  bool minus = false;  // λ ∈ σ⁻
};

struct PstReport {
  Index u = 0;
  Index v = 0;
  bool strongly_cospectral = false;
  bool pst = false;
  Integer g;         // gcd of the nonzero eigenvalues in the support
  Integer g_global;  // gcd of all nonzero eigenvalues
  Rational min_time;  // coefficient of π, 1/g when pst
  std::vector<Integer> sigma_plus;
  std::vector<Integer> sigma_minus;
  std::vector<Valuation> valuations;
  std::string reason;
  std::optional<double> numeric_fidelity;
};

/// PST from the 2-adic valuation criterion. The exact phase condition at
/// π/g is re-derived and must agree (InternalConsistency otherwise).
PstReport pst_certify(const SpectralDecomposition& d, Index u, Index v);

/// |e_vᵀ U(π r) e_u|², the angle πrλ reduced exactly mod 2π before rounding.
double pst_fidelity(const SpectralDecomposition& d, Index u, Index v, const Rational& r);

/// Exact test of |e_vᵀ U(π r) e_u| = 1.
bool pst_at_time(const SpectralDecomposition& d, Index u, Index v, const Rational& r);

std::vector<std::pair<Index, Index>> pst_pairs(const SpectralDecomposition& d);
std::vector<std::pair<Index, Index>> strongly_cospectral_pairs(const SpectralDecomposition& d);

/// "pi/2", "pi", "3pi/4", "0".
std::string format_pi_multiple(const Rational& r);

struct ComplementRuleReport {
  Index u = 0;
  Index v = 0;
  Index n = 0;
  Integer g;
  Rational time;  // coefficient of π
  bool predicted = false;  // n/g even
  bool observed = false;   // exact phase check in the complement at the same time
  bool agrees = false;
  PstReport complement_report;
};

/// PST between u and v in X transfers to X^c at π/g iff n/g is even.
/// Needs X unweighted and Laplacian integral with PST between u and v.
ComplementRuleReport pst_complement_rule(const WGraph& x, Index u, Index v);

/// X ∨ X ∨ ... (k copies); copy j holds vertices j·n .. j·n + n - 1.
WGraph iterated_join(const WGraph& x, int k);

struct JoinRuleReport {
  Index u = 0;
  Index v = 0;
  int k = 0;
  Index n = 0;
  Integer g;
  std::vector<Integer> predicted_sigma_plus;
  std::vector<Integer> predicted_sigma_minus;
  bool predicted_pst = false;  // n/g even
  PstReport observed;          // on Z_k
  bool sigma_agrees = false;
  bool pst_agrees = false;
  std::size_t pst_pairs_in_join = 0;
};

/// Shifted σ± and PST prediction for Z_k, checked against the constructed
/// graph. Needs k ≥ 2 and PST between u and v in X.
JoinRuleReport pst_join_rule(const WGraph& x, int k, Index u, Index v);

}  // namespace whad
