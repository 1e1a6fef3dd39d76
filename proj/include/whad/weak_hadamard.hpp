#pragma once

#include "whad/matcore.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace whad {

/// Maximal runs of consecutive columns joined by nonzero superdiagonal gram
/// entries. Ranges are 0-based and inclusive.
struct BlockStructure {
  struct Block {
    Index first = 0;
    Index last = 0;
    Index size() const { return last - first + 1; }
  };
  std::vector<Block> blocks;
  Index a = 0;             // number of blocks
  Index b = 0;             // blocks of size >= 2
  Index c = 0;             // size-2 blocks whose two columns are equal
  Index zero_columns = 0;  // zero columns, each a singleton block
};

struct ColumnProfile {
  Index ones = 0;
  Index minus_ones = 0;
  Index zeros = 0;
  friend bool operator==(const ColumnProfile&, const ColumnProfile&) = default;
};

/// A validated square {-1,0,1} matrix P with tridiagonal PᵀP.
///
/// The scalar is a template parameter so that exhaustive sweeps can run on
/// machine integers; library entry points use `WeakHadamard`.
template <typename Scalar>
class BasicWeakHadamard {
 public:
  using Matrix = Mat<Scalar>;

  /// Throws NotSquare, EntryOutOfRange or GramNotTridiagonal. Indices in
  /// messages are 1-based.
  static BasicWeakHadamard validate(Matrix m) {
    require_square(m, "validate");
    for (Index j = 0; j < m.cols(); ++j) {
      for (Index i = 0; i < m.rows(); ++i) {
        const Scalar& x = m(i, j);
        if (x != Scalar(0) && x != Scalar(1) && x != Scalar(-1)) {
          throw Error(ErrorCode::EntryOutOfRange,
                      "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
      }
    }
    Matrix g = gram(m);
    if (auto far = first_far_entry(g)) {
      throw Error(ErrorCode::GramNotTridiagonal, "gram entry (" + std::to_string(far->first + 1) +
                                                     "," + std::to_string(far->second + 1) +
                                                     ") is nonzero");
    }
    return BasicWeakHadamard(std::move(m), std::move(g));
  }

  const Matrix& matrix() const { return matrix_; }
  const Matrix& gram_matrix() const { return gram_; }
  const BlockStructure& blocks() const { return blocks_; }
  Index order() const { return matrix_.rows(); }

  bool is_normalized() const { return (matrix_.col(0).array() == Scalar(1)).all(); }
  bool has_pairwise_orthogonal_columns() const { return is_diagonal(gram_); }

  /// Column j is 0-based. Throws IndexOutOfRange.
  ColumnProfile column_profile(Index j) const {
    if (j < 0 || j >= order()) {
      throw Error(ErrorCode::IndexOutOfRange, "column " + std::to_string(j + 1) + " of " +
                                                  std::to_string(order()));
    }
    ColumnProfile p;
    for (Index i = 0; i < order(); ++i) {
      if (matrix_(i, j) == Scalar(1))
        ++p.ones;
      else if (matrix_(i, j) == Scalar(-1))
        ++p.minus_ones;
      else
        ++p.zeros;
    }
    return p;
  }

 private:
  BasicWeakHadamard(Matrix m, Matrix g) : matrix_(std::move(m)), gram_(std::move(g)) {
    blocks_ = analyze_blocks();
  }

  BlockStructure analyze_blocks() const {
    BlockStructure s;
    const Index n = order();
    Index start = 0;
    for (Index j = 0; j < n; ++j) {
      const bool ends = j + 1 == n || gram_(j, j + 1) == Scalar(0);
      if (!ends) continue;
      s.blocks.push_back({start, j});
      start = j + 1;
    }
    s.a = static_cast<Index>(s.blocks.size());
    for (const auto& blk : s.blocks) {
      if (blk.size() >= 2) ++s.b;
      if (blk.size() == 2 && matrix_.col(blk.first) == matrix_.col(blk.last)) ++s.c;
    }
    for (Index j = 0; j < n; ++j)
      if (gram_(j, j) == Scalar(0)) ++s.zero_columns;
    return s;
  }

  Matrix matrix_;
  Matrix gram_;
  BlockStructure blocks_;
};

using WeakHadamard = BasicWeakHadamard<Integer>;

// ---------------------------------------------------------------------------
// Equivalence under column moves
// ---------------------------------------------------------------------------

/// Number of distinct weak Hadamard matrices reachable from P by column
/// permutation: 2^(b-c) * a! / z!, z the number of zero columns (identical
/// zero singletons cannot be told apart).
template <typename Scalar>
Integer equivalence_count(const BasicWeakHadamard<Scalar>& p) {
  const BlockStructure& s = p.blocks();
  Integer count = 1;
  for (Index k = 2; k <= s.a; ++k) count *= k;
  for (Index k = 2; k <= s.zero_columns; ++k) count /= k;
  count <<= static_cast<unsigned>(s.b - s.c);
  return count;
}

/// Brute force over all n! column permutations, counting distinct permuted
/// matrices whose gram stays tridiagonal. Throws DimensionTooLarge.
template <typename Scalar>
Integer equivalence_enumerate_oracle(const BasicWeakHadamard<Scalar>& p, Index bound = 8) {
  const Index n = p.order();
  if (n > bound) {
    throw Error(ErrorCode::DimensionTooLarge,
                "oracle needs n <= " + std::to_string(bound) + ", got " + std::to_string(n));
  }
  // Equal columns share a class id so that permutations swapping them collapse.
  std::vector<int> cls(static_cast<std::size_t>(n));
  for (Index j = 0; j < n; ++j) {
    cls[static_cast<std::size_t>(j)] = static_cast<int>(j);
    for (Index k = 0; k < j; ++k) {
      if (p.matrix().col(k) == p.matrix().col(j)) {
        cls[static_cast<std::size_t>(j)] = cls[static_cast<std::size_t>(k)];
        break;
      }
    }
  }
  const auto& g = p.gram_matrix();
  std::vector<Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Index(0));
  std::set<std::vector<int>> seen;
  do {
    bool ok = true;
    for (Index i = 0; i < n && ok; ++i)
      for (Index j = i + 2; j < n && ok; ++j)
        if (g(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) != Scalar(0)) ok = false;
    if (!ok) continue;
    std::vector<int> key(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < key.size(); ++i) key[i] = cls[static_cast<std::size_t>(perm[i])];
    seen.insert(std::move(key));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Integer(seen.size());
}

// ---------------------------------------------------------------------------
// Analysis on exact matrices
// ---------------------------------------------------------------------------

/// Q⁻¹Pᵀ for pairwise orthogonal P. Throws NotOrthogonalColumns, ZeroColumn.
RationalMatrix inverse_orthogonal(const WeakHadamard& p);

struct ColumnCombinatorics {
  Index column = 0;  // 0-based
  ColumnProfile profile;
  bool balanced = false;        // ones == minus_ones and zeros == n - 2*ones
  bool even_ones = false;       // then n ≡ zeros (mod 4)
  bool zero_free = false;
};

struct CombinatoricsReport {
  Index n = 0;
  std::vector<ColumnCombinatorics> columns;  // columns orthogonal to 1 only
  bool zero_free_orthogonal_pair = false;    // two such zero-free columns, mutually orthogonal
  bool order_divisible_by_four = false;
};

/// Checks the column counting facts for every column orthogonal to 1.
/// Throws InternalConsistency if any of them fails.
CombinatoricsReport check_combinatorics(const WeakHadamard& p);

/// Exhaustive search for a normalized weak Hadamard matrix of order n with
/// pairwise orthogonal columns. Candidate columns sum to zero and have first
/// nonzero entry +1; they are tried by support size, then lexicographically
/// with -1 < 0 < 1. Throws DimensionTooLarge when n > bound.
std::optional<WeakHadamard> search_normalized_orthogonal(Index n, Index bound = 8);

/// True iff the columns of A and B agree as multisets, optionally treating
/// x and -x as the same column.
bool same_column_multiset(const ExactMatrix& a, const ExactMatrix& b, bool up_to_sign);

}  // namespace whad
