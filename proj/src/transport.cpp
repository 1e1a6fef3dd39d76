#include "whad/transport.hpp"

#include "whad/constructions.hpp"

namespace whad {

namespace {

[[noreturn]] void unmet(const std::string& theorem, const std::string& clause) {
  throw Error(ErrorCode::HypothesisNotMet, theorem + ": " + clause);
}

void require_normalized(const WhdCertificate& c, const std::string& theorem) {
  if (!c.p.is_normalized()) unmet(theorem, "diagonalizer must have the all-ones first column");
  for (Index j = 1; j < c.p.order(); ++j)
    if (c.p.gram_matrix()(0, j) != 0) unmet(theorem, "columns 2..n must be orthogonal to the all-ones column");
}

WhdCertificate finish(const WGraph& g, ExactMatrix p, std::vector<Integer> ev) {
  WhdCertificate cert{WeakHadamard::validate(std::move(p)), std::move(ev), false};
  cert.orthogonal_columns = cert.p.has_pairwise_orthogonal_columns();
  check_certificate(g, cert);
  return cert;
}

}  // namespace

WhdCertificate transport_union(const std::vector<WGraph>& parts, const std::vector<WhdCertificate>& certs) {
  const std::string thm = "union";
  if (parts.empty() || parts.size() != certs.size()) unmet(thm, "one certificate per part");
  const std::size_t k = parts.size();
  bool equal_sizes = true;
  for (const auto& p : parts) equal_sizes = equal_sizes && p.order() == parts[0].order();
  if (k > 2 && !equal_sizes) unmet(thm, "either two parts or parts of equal size");
  for (std::size_t j = 0; j < k; ++j) {
    if (!certs[j].p.is_normalized()) unmet(thm, "part " + std::to_string(j + 1) + " certificate is not normalized");
    check_certificate(parts[j], certs[j]);
  }
  const WGraph g = disjoint_union(parts);
  const Index n = g.order();
  ExactMatrix p = ExactMatrix::Zero(n, n);
  std::vector<Integer> ev;
  p.col(0).setConstant(Integer(1));
  ev.push_back(0);
  std::vector<Index> offset{0};
  for (const auto& part : parts) offset.push_back(offset.back() + part.order());
  for (std::size_t j = 0; j + 1 < k; ++j) {
    const Index c = static_cast<Index>(j + 1);
    p.col(c).segment(offset[j], parts[j].order()).setConstant(Integer(1));
    p.col(c).segment(offset[j + 1], parts[j + 1].order()).setConstant(Integer(-1));
    ev.push_back(0);
  }
  Index col = static_cast<Index>(k);
  for (std::size_t j = 0; j < k; ++j) {
    const ExactMatrix& s = certs[j].p.matrix();
    for (Index c = 1; c < s.cols(); ++c, ++col) {
      p.col(col).segment(offset[j], s.rows()) = s.col(c);
      ev.push_back(certs[j].eigenvalues[static_cast<std::size_t>(c)]);
    }
  }
  return finish(g, std::move(p), std::move(ev));
}

WhdCertificate transport_complement(const WGraph& x, const WhdCertificate& cert) {
  const std::string thm = "complement";
  if (!x.is_unweighted()) unmet(thm, "graph must be unweighted");
  require_normalized(cert, thm);
  check_certificate(x, cert);
  const Integer n = x.order();
  std::vector<Integer> ev{0};
  for (std::size_t j = 1; j < cert.eigenvalues.size(); ++j) ev.push_back(n - cert.eigenvalues[j]);
  return finish(complement(x), cert.p.matrix(), std::move(ev));
}

WhdCertificate transport_join(const WGraph& x, const WhdCertificate& cx, const WGraph& y, const WhdCertificate& cy) {
  const std::string thm = "join";
  if (cx.p.matrix() != cy.p.matrix()) unmet(thm, "operands must share the diagonalizer");
  if (!(x == y)) unmet(thm, "the doubled matrix diagonalizes X v Y if and only if X = Y");
  require_normalized(cx, thm);
  check_certificate(x, cx);
  const Index n = x.order();
  std::vector<Integer> ev{0};
  for (Index j = 1; j < n; ++j) ev.push_back(cx.eigenvalues[static_cast<std::size_t>(j)] + n);
  ev.push_back(Integer(2 * n));
  for (Index j = 1; j < n; ++j) ev.push_back(cx.eigenvalues[static_cast<std::size_t>(j)] + n);
  return finish(join(x, y), doubled(cx.p.matrix()), std::move(ev));
}

WhdCertificate transport_merge(const WGraph& x, const WhdCertificate& cx, const WGraph& y, const WhdCertificate& cy,
                               WGraph::Weight w1, WGraph::Weight w2) {
  const std::string thm = "merge";
  if (cx.p.matrix() != cy.p.matrix()) unmet(thm, "operands must share the diagonalizer");
  const auto k = y.regular_degree();
  if (!k) unmet(thm, "Y must be weighted-regular");
  require_normalized(cx, thm);
  check_certificate(x, cx);
  check_certificate(y, cy);
  const Index n = x.order();
  std::vector<Integer> ev{0};
  for (Index j = 1; j < n; ++j)
    ev.push_back(w1 * cx.eigenvalues[static_cast<std::size_t>(j)] + w2 * cy.eigenvalues[static_cast<std::size_t>(j)]);
  ev.push_back(Integer(2 * w2 * *k));
  for (Index j = 1; j < n; ++j)
    ev.push_back(w1 * cx.eigenvalues[static_cast<std::size_t>(j)] +
                 w2 * (2 * *k - cy.eigenvalues[static_cast<std::size_t>(j)]));
  return finish(merge(x, y, w1, w2), doubled(cx.p.matrix()), std::move(ev));
}

WhdCertificate transport_product(const WGraph& x, const WhdCertificate& cx, const WGraph& y, const WhdCertificate& cy,
                                 ProductFormula formula) {
  const std::string thm = std::string("product (") + to_string(formula) + ")";
  if (!cx.p.has_pairwise_orthogonal_columns()) unmet(thm, "P_X must have pairwise orthogonal columns");
  check_certificate(x, cx);
  check_certificate(y, cy);
  const WGraph z = product(x, y, formula);
  const ExactMatrix p = kronecker(cx.p.matrix(), cy.p.matrix());
  const ExactMatrix lp = z.laplacian() * p;
  std::vector<Integer> ev;
  for (Index c = 0; c < p.cols(); ++c) {
    const Integer& lx = cx.eigenvalues[static_cast<std::size_t>(c / y.order())];
    const Integer& ly = cy.eigenvalues[static_cast<std::size_t>(c % y.order())];
    Integer lambda;
    if (formula == ProductFormula::Cartesian) {
      lambda = lx + ly;
    } else {
      Index i = 0;
      while (p(i, c) == 0) ++i;
      lambda = lp(i, c) / p(i, c);
    }
    if (lp.col(c) != (lambda * p.col(c)).eval())
      unmet(thm, "column " + std::to_string(c + 1) + " of P_X ⊗ P_Y is not an eigenvector (factors not regular)");
    ev.push_back(lambda);
  }
  return finish(z, p, std::move(ev));
}

}  // namespace whad
