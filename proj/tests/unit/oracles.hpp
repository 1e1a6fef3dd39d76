#pragma once

// Independent reference computations for the tests. Plain machine integers
// and doubles; nothing here calls into the library's algorithms.

#include "whad/graph.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using IMat = std::vector<std::vector<long long>>;

inline std::uint64_t seed() {
  if (const char* s = std::getenv("WHAD_SEED")) return std::strtoull(s, nullptr, 10);
  return 20240611;
}

inline IMat to_imat(const whad::ExactMatrix& m) {
  IMat r(static_cast<std::size_t>(m.rows()), std::vector<long long>(static_cast<std::size_t>(m.cols())));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r[i][j] = m(i, j).convert_to<long long>();
  return r;
}

inline whad::ExactMatrix from_imat(const IMat& a) {
  whad::ExactMatrix m(static_cast<Eigen::Index>(a.size()), static_cast<Eigen::Index>(a.empty() ? 0 : a[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) m(i, j) = a[i][j];
  return m;
}

inline long long col_dot(const IMat& a, std::size_t i, std::size_t j) {
  long long s = 0;
  for (const auto& row : a) s += row[i] * row[j];
  return s;
}

/// Sum over permutations of signed products.
inline long long leibniz_det(const IMat& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  long long det = 0;
  do {
    long long term = 1;
    for (std::size_t i = 0; i < n; ++i) term *= a[i][p[i]];
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    det += inversions % 2 ? -term : term;
  } while (std::next_permutation(p.begin(), p.end()));
  return det;
}

inline bool gram_tridiagonal(const IMat& a) {
  const std::size_t n = a.empty() ? 0 : a[0].size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 2; j < n; ++j)
      if (col_dot(a, i, j) != 0) return false;
  return true;
}

/// Distinct matrices obtained by permuting columns that keep the gram
/// tridiagonal.
inline long long permutation_class_size(const IMat& a) {
  const std::size_t n = a[0].size();
  const bool packed = a.size() * n * 2 <= 64;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::uint64_t> keys;
  std::set<IMat> seen;
  IMat b = a;
  do {
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) b[i][j] = a[i][p[j]];
    if (!gram_tridiagonal(b)) continue;
    if (packed) {
      std::uint64_t key = 0;
      for (const auto& row : b)
        for (long long e : row) key = key << 2 | static_cast<std::uint64_t>(e + 1);
      keys.push_back(key);
    } else {
      seen.insert(b);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  if (!packed) return static_cast<long long>(seen.size());
  std::sort(keys.begin(), keys.end());
  return static_cast<long long>(std::unique(keys.begin(), keys.end()) - keys.begin());
}

inline Eigen::MatrixXd laplacian_d(const whad::WGraph& g) {
  const auto n = g.order();
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index u = 0; u < n; ++u)
    for (Eigen::Index v = 0; v < n; ++v)
      if (u != v) {
        l(u, v) = -static_cast<double>(g.weight(u, v));
        l(u, u) += static_cast<double>(g.weight(u, v));
      }
  return l;
}

/// Ascending floating-point Laplacian eigenvalues.
inline std::vector<double> laplacian_eigenvalues(const whad::WGraph& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(laplacian_d(g));
  std::vector<double> r(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  return r;
}

/// |e_vᵀ exp(itL) e_u|² through a floating-point eigendecomposition.
inline double transfer(const whad::WGraph& g, Eigen::Index u, Eigen::Index v, double t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(laplacian_d(g));
  std::complex<double> amp = 0;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k)
    amp += std::polar(1.0, t * es.eigenvalues()(k)) * es.eigenvectors()(u, k) * es.eigenvectors()(v, k);
  return std::norm(amp);
}

/// Pairs with transfer ≥ 1 - tol at some t = πk/den, k = 1..2·den.
inline std::vector<std::pair<Eigen::Index, Eigen::Index>> transfer_pairs(const whad::WGraph& g, int den = 8,
                                                                         double tol = 1e-9) {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> out;
  const double pi = 3.14159265358979323846;
  for (Eigen::Index u = 0; u < g.order(); ++u)
    for (Eigen::Index v = u + 1; v < g.order(); ++v)
      for (int k = 1; k <= 2 * den; ++k)
        if (transfer(g, u, v, pi * k / den) >= 1 - tol) {
          out.emplace_back(u, v);
          break;
        }
  return out;
}

/// All {-1,0,1} column sequences of order n whose gram is tridiagonal, built
/// column by column.
template <typename F>
void for_each_weak_hadamard(int n, F&& f) {
  std::vector<std::vector<long long>> vecs;
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (long long code = 0; code < total; ++code) {
    std::vector<long long> v(static_cast<std::size_t>(n));
    long long c = code;
    for (int i = 0; i < n; ++i, c /= 3) v[static_cast<std::size_t>(i)] = c % 3 - 1;
    vecs.push_back(v);
  }
  auto dot = [](const std::vector<long long>& a, const std::vector<long long>& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  };
  std::vector<std::size_t> cols;
  auto rec = [&](auto&& self) -> void {
    if (cols.size() == static_cast<std::size_t>(n)) {
      IMat m(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n)));
      for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) m[i][j] = vecs[cols[j]][i];
      f(m);
      return;
    }
    for (std::size_t c = 0; c < vecs.size(); ++c) {
      bool ok = true;
      for (std::size_t j = 0; j + 1 < cols.size() && ok; ++j) ok = dot(vecs[cols[j]], vecs[c]) == 0;
      if (!ok) continue;
      cols.push_back(c);
      self(self);
      cols.pop_back();
    }
  };
  rec(rec);
}

}  // namespace oracle
