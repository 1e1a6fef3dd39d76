#pragma once

#include "whad/certify.hpp"

#include <vector>

namespace whad {

// Certificates for composite graphs assembled from certificates of the
// operands, without searching. Every result is checked with
// check_certificate before it is returned. Violated hypotheses raise
// HypothesisNotMet naming the clause.

/// [1, v_1, ..., v_{k-1} | S_1[1] ⊕ ... ⊕ S_k[1]] with v_j the indicator of
/// part j minus that of part j+1. Needs normalized operand certificates and
/// either k = 2 or equal part sizes.
WhdCertificate transport_union(const std::vector<WGraph>& parts, const std::vector<WhdCertificate>& certs);

/// Same matrix, eigenvalues 0 and n - λ_j. Needs an unweighted graph and
/// columns 2..n orthogonal to the all-ones first column.
WhdCertificate transport_complement(const WGraph& x, const WhdCertificate& cert);

/// [[S, S], [S, -S]] with Λ' = (0, λ_j + n, ..., 2n, λ_j + n, ...).
/// Needs X = Y and a shared normalized S.
WhdCertificate transport_join(const WGraph& x, const WhdCertificate& cx, const WGraph& y, const WhdCertificate& cy);

/// [[S, S], [S, -S]] with Λ' = (0, w1 λ_j + w2 θ_j, ..., 2 w2 k,
/// w1 λ_j + w2 (2k - θ_j), ...). Needs a shared normalized S and Y weighted
/// k-regular.
WhdCertificate transport_merge(const WGraph& x, const WhdCertificate& cx, const WGraph& y, const WhdCertificate& cy,
                               WGraph::Weight w1 = 1, WGraph::Weight w2 = 1);

/// P_X ⊗ P_Y. Needs P_X with pairwise orthogonal columns; each product
/// column must also be an eigenvector of the product Laplacian, which for
/// the non-Cartesian formulas requires regular factors.
WhdCertificate transport_product(const WGraph& x, const WhdCertificate& cx, const WGraph& y, const WhdCertificate& cy,
                                 ProductFormula formula);

}  // namespace whad
