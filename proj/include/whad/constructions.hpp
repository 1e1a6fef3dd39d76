#pragma once

#include "whad/weak_hadamard.hpp"

#include <utility>
#include <vector>

namespace whad {

/// Order-2^k Sylvester Hadamard matrix, H_1 = [1].
WeakHadamard sylvester_hadamard(int k);

/// The 4x4 normalized orthogonal matrix diagonalizing K4\e, doubled
/// (level - 1) times by P -> [[P, P], [P, -P]]. Order 2^(level+1).
WeakHadamard sylvester_weak(int level);

/// Kronecker product. Throws LeftFactorNotOrthogonal unless the columns of
/// A are pairwise orthogonal.
WeakHadamard tensor(const WeakHadamard& a, const WeakHadamard& b);

/// [a, a, b, b, ...] from mutually orthogonal vectors of length 2 * count.
/// Throws NotOrthogonalFamily, SizeMismatch, EntryOutOfRange.
WeakHadamard paired_columns(const std::vector<ExactVector>& vectors);

/// [a1, a2, b1, b2, ...] where vectors from different pairs are orthogonal
/// and each pair is independent. Throws CrossPairNotOrthogonal,
/// PairDependent, SizeMismatch, EntryOutOfRange.
WeakHadamard subspace_pairs(const std::vector<std::pair<ExactVector, ExactVector>>& pairs);

/// [[A,B,C,D],[-B,A,-D,C],[-C,D,A,-B],[-D,-C,B,A]].
/// Throws SymmetryConditionFailed, SumNotTridiagonal, SizeMismatch,
/// EntryOutOfRange.
WeakHadamard williamson(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c,
                        const ExactMatrix& d);

/// [[0, 1ᵀ], [1, Cᵀ]] with C_ij = χ(i - j) over Z_q. Throws NotOddPrime.
WeakHadamard paley(int q);

/// Quadratic character over Z_q for prime q.
int quadratic_character(long a, int q);

/// Order 2^n: the all-ones column, then the split vectors of width
/// 2^n, 2^(n-1), ..., 2, each group in ascending offset.
WeakHadamard nested_split_family(int n);

/// [[H, X], [X, -G]] with X = [x, 0, ..., 0], x the shared first column.
/// Throws FirstColumnMismatch, FirstColumnNotOrthogonalToRest, SizeMismatch.
WeakHadamard corner_block(const WeakHadamard& h, const WeakHadamard& g);

/// [[H, G], [G, -H]]. Throws SumNotTridiagonal, CommutatorNonzero,
/// SizeMismatch, EntryOutOfRange.
WeakHadamard anti_block(const ExactMatrix& h, const ExactMatrix& g);

/// Kronecker product of exact matrices.
ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b);

/// [[S, S], [S, -S]].
ExactMatrix doubled(const ExactMatrix& s);

}  // namespace whad
