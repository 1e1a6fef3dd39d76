#include "whad/constructions.hpp"

namespace whad {

namespace {

const char* const kWilliamsonNames = "ABCD";

void require_entries(const ExactMatrix& m, const char* what) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (abs(m(i, j)) > 1)
        throw Error(ErrorCode::EntryOutOfRange, std::string(what) + " entry (" + std::to_string(i + 1) + "," +
                                                    std::to_string(j + 1) + ")");
}

void require_entries(const ExactVector& v, const char* what) {
  for (Index i = 0; i < v.size(); ++i)
    if (abs(v(i)) > 1)
      throw Error(ErrorCode::EntryOutOfRange, std::string(what) + " entry " + std::to_string(i + 1));
}

void require_same_square(const ExactMatrix& a, const ExactMatrix& b, const char* what) {
  require_square(a, what);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::SizeMismatch, std::string(what) + ": operand sizes differ");
}

}  // namespace

ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return k;
}

ExactMatrix doubled(const ExactMatrix& s) {
  const Index n = s.rows(), m = s.cols();
  ExactMatrix d(2 * n, 2 * m);
  d << s, s, s, -s;
  return d;
}

WeakHadamard sylvester_hadamard(int k) {
  if (k < 0) throw Error(ErrorCode::IndexOutOfRange, "sylvester exponent must be >= 0");
  ExactMatrix h = ExactMatrix::Constant(1, 1, Integer(1));
  for (int i = 0; i < k; ++i) h = doubled(h);
  return WeakHadamard::validate(std::move(h));
}

WeakHadamard sylvester_weak(int level) {
  if (level < 1) throw Error(ErrorCode::IndexOutOfRange, "level must be >= 1");
  ExactMatrix p(4, 4);
  p << 1, 1, 1, 0,
       1, -1, 1, 0,
       1, 0, -1, 1,
       1, 0, -1, -1;
  for (int l = 1; l < level; ++l) p = doubled(p);
  return WeakHadamard::validate(std::move(p));
}

WeakHadamard tensor(const WeakHadamard& a, const WeakHadamard& b) {
  if (!a.has_pairwise_orthogonal_columns())
    throw Error(ErrorCode::LeftFactorNotOrthogonal, "left factor has non-orthogonal columns");
  return WeakHadamard::validate(kronecker(a.matrix(), b.matrix()));
}

WeakHadamard paired_columns(const std::vector<ExactVector>& vectors) {
  const Index count = static_cast<Index>(vectors.size());
  if (count == 0) throw Error(ErrorCode::SizeMismatch, "empty family");
  const Index n = 2 * count;
  for (const auto& v : vectors) {
    if (v.size() != n)
      throw Error(ErrorCode::SizeMismatch, "vectors must have length " + std::to_string(n));
    require_entries(v, "vector");
  }
  for (Index i = 0; i < count; ++i)
    for (Index j = i + 1; j < count; ++j)
      if (vectors[static_cast<std::size_t>(i)].dot(vectors[static_cast<std::size_t>(j)]) != 0)
        throw Error(ErrorCode::NotOrthogonalFamily,
                    "vectors " + std::to_string(i + 1) + " and " + std::to_string(j + 1));
  ExactMatrix p(n, n);
  for (Index i = 0; i < count; ++i) {
    p.col(2 * i) = vectors[static_cast<std::size_t>(i)];
    p.col(2 * i + 1) = vectors[static_cast<std::size_t>(i)];
  }
  return WeakHadamard::validate(std::move(p));
}

WeakHadamard subspace_pairs(const std::vector<std::pair<ExactVector, ExactVector>>& pairs) {
  const Index count = static_cast<Index>(pairs.size());
  if (count == 0) throw Error(ErrorCode::SizeMismatch, "empty family");
  const Index n = 2 * count;
  ExactMatrix p(n, n);
  for (Index i = 0; i < count; ++i) {
    const auto& [a, b] = pairs[static_cast<std::size_t>(i)];
    if (a.size() != n || b.size() != n)
      throw Error(ErrorCode::SizeMismatch, "vectors must have length " + std::to_string(n));
    require_entries(a, "vector");
    require_entries(b, "vector");
    p.col(2 * i) = a;
    p.col(2 * i + 1) = b;
    RationalMatrix two(n, 2);
    two.col(0) = to_rational(a);
    two.col(1) = to_rational(b);
    if (rank(two) < 2) throw Error(ErrorCode::PairDependent, "pair " + std::to_string(i + 1));
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (i / 2 != j / 2 && p.col(i).dot(p.col(j)) != 0)
        throw Error(ErrorCode::CrossPairNotOrthogonal,
                    "pairs " + std::to_string(i / 2 + 1) + " and " + std::to_string(j / 2 + 1));
  return WeakHadamard::validate(std::move(p));
}

WeakHadamard williamson(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c,
                        const ExactMatrix& d) {
  const ExactMatrix* xs[4] = {&a, &b, &c, &d};
  for (int i = 0; i < 4; ++i) {
    require_same_square(a, *xs[i], "williamson");
    require_entries(*xs[i], "williamson");
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (ExactMatrix(xs[i]->transpose() * *xs[j]) != ExactMatrix(xs[j]->transpose() * *xs[i]))
        throw Error(ErrorCode::SymmetryConditionFailed,
                    std::string(1, kWilliamsonNames[i]) + "," + std::string(1, kWilliamsonNames[j]));
  const ExactMatrix sum = gram(a) + gram(b) + gram(c) + gram(d);
  if (!is_tridiagonal(sum)) throw Error(ErrorCode::SumNotTridiagonal, "AᵀA + BᵀB + CᵀC + DᵀD");
  const Index n = a.rows();
  ExactMatrix p(4 * n, 4 * n);
  p << a, b, c, d,
       -b, a, -d, c,
       -c, d, a, -b,
       -d, -c, b, a;
  return WeakHadamard::validate(std::move(p));
}

int quadratic_character(long a, int q) {
  const long r = ((a % q) + q) % q;
  if (r == 0) return 0;
  for (long b = 1; b < q; ++b)
    if ((b * b) % q == r) return 1;
  return -1;
}

WeakHadamard paley(int q) {
  bool prime = q >= 3 && q % 2 == 1;
  for (int d = 3; prime && d * d <= q; d += 2)
    if (q % d == 0) prime = false;
  if (!prime) throw Error(ErrorCode::NotOddPrime, std::to_string(q));
  ExactMatrix h(q + 1, q + 1);
  h(0, 0) = 0;
  for (int i = 0; i < q; ++i) {
    h(0, i + 1) = 1;
    h(i + 1, 0) = 1;
  }
  // Block (i, j) of Cᵀ is C(j, i) = χ(j - i).
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) h(i + 1, j + 1) = quadratic_character(j - i, q);
  return WeakHadamard::validate(std::move(h));
}

WeakHadamard nested_split_family(int n) {
  if (n < 1 || n > 12) throw Error(ErrorCode::IndexOutOfRange, "exponent must be in 1..12");
  const Index size = Index(1) << n;
  ExactMatrix p = ExactMatrix::Zero(size, size);
  p.col(0).setConstant(Integer(1));
  Index col = 1;
  for (int k = n; k >= 1; --k) {
    const Index width = Index(1) << k;
    for (Index j = 0; j < (Index(1) << (n - k)); ++j, ++col) {
      for (Index i = 0; i < width / 2; ++i) {
        p(width * j + i, col) = 1;
        p(width * j + width / 2 + i, col) = -1;
      }
    }
  }
  return WeakHadamard::validate(std::move(p));
}

WeakHadamard corner_block(const WeakHadamard& h, const WeakHadamard& g) {
  require_same_square(h.matrix(), g.matrix(), "corner_block");
  if (h.matrix().col(0) != g.matrix().col(0)) throw Error(ErrorCode::FirstColumnMismatch, "first columns differ");
  for (const WeakHadamard* w : {&h, &g}) {
    for (Index j = 1; j < w->order(); ++j)
      if (w->gram_matrix()(0, j) != 0)
        throw Error(ErrorCode::FirstColumnNotOrthogonalToRest, "column " + std::to_string(j + 1));
  }
  const Index n = h.order();
  ExactMatrix x = ExactMatrix::Zero(n, n);
  x.col(0) = h.matrix().col(0);
  ExactMatrix p(2 * n, 2 * n);
  p << h.matrix(), x, x, -g.matrix();
  return WeakHadamard::validate(std::move(p));
}

WeakHadamard anti_block(const ExactMatrix& h, const ExactMatrix& g) {
  require_same_square(h, g, "anti_block");
  require_entries(h, "H");
  require_entries(g, "G");
  if (!is_tridiagonal(ExactMatrix(gram(h) + gram(g))))
    throw Error(ErrorCode::SumNotTridiagonal, "HᵀH + GᵀG");
  if (ExactMatrix(h.transpose() * g) != ExactMatrix(g.transpose() * h))
    throw Error(ErrorCode::CommutatorNonzero, "HᵀG - GᵀH");
  ExactMatrix p(2 * h.rows(), 2 * h.rows());
  p << h, g, g, -h;
  return WeakHadamard::validate(std::move(p));
}

}  // namespace whad
