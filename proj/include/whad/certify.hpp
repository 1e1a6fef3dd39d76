#pragma once

#include "whad/graph.hpp"
#include "whad/spectrum.hpp"
#include "whad/weak_hadamard.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace whad {

/// A weak Hadamard P with L·P = P·diag(eigenvalues).
struct WhdCertificate {
  WeakHadamard p;
  std::vector<Integer> eigenvalues;  // aligned with the columns of p
  bool orthogonal_columns = false;
};

/// Throws CertificateInvalid unless L·P = P·diag(eigenvalues) exactly.
void check_certificate(const WGraph& x, const WhdCertificate& cert);

/// Reads the eigenvalue of each column off L·P. Throws CertificateInvalid
/// if some column is not an eigenvector, plus any validate error.
WhdCertificate certificate_from_matrix(const WGraph& x, const ExactMatrix& p);

/// Column order making the gram tridiagonal, or nothing when the
/// non-orthogonality graph of the columns is not a disjoint union of paths.
/// Components appear by smallest member; each path starts at its smaller
/// endpoint, except that column 0 starts its path when it is an endpoint.
std::optional<std::vector<Index>> path_layout(const ExactMatrix& gram);

struct CertifyOptions {
  bool require_orthogonal = false;
  bool normalized = true;   // first column all-ones
  bool zero_free = false;   // only {-1,1} columns (Hadamard diagonalizers)
  Index max_vertices = 10;
  std::uint64_t node_limit = 20'000'000;
};

enum class CertifyStatus { Certified, NotWhd, NotIntegral, LimitReached };
const char* to_string(CertifyStatus s);

/// Why an eigenspace admits no admissible {-1,0,1} basis.
struct Obstruction {
  Integer eigenvalue;
  Index multiplicity = 0;
  Index candidates = 0;  // {-1,0,1} eigenvectors found
  RationalMatrix kernel_basis;
  std::string reason;
};

struct CertifyResult {
  CertifyStatus status = CertifyStatus::NotWhd;
  std::optional<WhdCertificate> certificate;
  std::vector<Obstruction> obstructions;
  SpectralData spectrum;
  std::uint64_t nodes = 0;
};

/// Exhaustive search for a weak Hadamard diagonalizer of L(X). Throws
/// DimensionTooLarge when n exceeds options.max_vertices.
CertifyResult certify_whd(const WGraph& x, const CertifyOptions& options = {});

// ---------------------------------------------------------------------------
// Eigenvector structure
// ---------------------------------------------------------------------------

struct ColumnStructure {
  Index column = 0;  // 0-based
  Integer eigenvalue;
  Index k = 0;  // number of +1 entries
  bool skipped = false;
  std::string note;
  // k = 1: x = e_u - e_v and λ = deg(u) + ω[u,v].
  bool twin_form = false;
  // k >= 2: λ = 2 Σ_{w∈W} ω[u,w] + Σ_{w∉U∪W} ω[u,w] for every u ∈ U.
  bool lambda_formula = false;
  // Σ_{w∉U∪W} ω[u,w] equal for all u ∈ U ∪ W.
  bool outside_balance = false;
  // λ even iff the outside weight of u is even.
  bool parity_consistent = false;
  bool zero_free = false;
  bool even_eigenvalue = false;
};

struct EigvecStructureReport {
  std::vector<ColumnStructure> columns;
  bool all_formulas_hold = true;
  bool all_balanced = true;
};

/// Per-column check of the {-1,0,1} eigenvector structure. Throws
/// CertificateInvalid when the certificate fails L·P = P·Λ.
EigvecStructureReport verify_eigvec_structure(const WGraph& x, const WhdCertificate& cert);

}  // namespace whad
