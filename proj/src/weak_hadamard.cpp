#include "whad/weak_hadamard.hpp"

#include "bitset.hpp"

#include <bit>
#include <cstdint>

namespace whad {

RationalMatrix inverse_orthogonal(const WeakHadamard& p) {
  const auto& g = p.gram_matrix();
  if (!p.has_pairwise_orthogonal_columns()) {
    auto far = first_far_entry(g);
    std::string where;
    for (Index i = 0; i + 1 < g.rows() && where.empty(); ++i)
      if (g(i, i + 1) != 0) where = std::to_string(i + 1) + "," + std::to_string(i + 2);
    if (where.empty() && far) where = std::to_string(far->first + 1) + "," + std::to_string(far->second + 1);
    throw Error(ErrorCode::NotOrthogonalColumns, "columns " + where + " are not orthogonal");
  }
  const Index n = p.order();
  RationalMatrix inv(n, n);
  for (Index i = 0; i < n; ++i) {
    if (g(i, i) == 0) throw Error(ErrorCode::ZeroColumn, "column " + std::to_string(i + 1) + " is zero");
    const Rational scale = Rational(1) / Rational(g(i, i));
    for (Index j = 0; j < n; ++j) inv(i, j) = Rational(p.matrix()(j, i)) * scale;
  }
  return inv;
}

CombinatoricsReport check_combinatorics(const WeakHadamard& p) {
  CombinatoricsReport report;
  const Index n = p.order();
  report.n = n;
  auto fail = [](const std::string& what) { throw Error(ErrorCode::InternalConsistency, what); };

  std::vector<Index> zero_free;
  for (Index j = 0; j < n; ++j) {
    if (p.matrix().col(j).sum() != 0) continue;
    ColumnCombinatorics c;
    c.column = j;
    c.profile = p.column_profile(j);
    const Index k = c.profile.ones;
    const Index r = c.profile.zeros;
    c.balanced = c.profile.minus_ones == k && r == n - 2 * k;
    if (!c.balanced) fail("column " + std::to_string(j + 1) + " is not balanced");
    c.even_ones = k % 2 == 0;
    if (c.even_ones && (n - r) % 4 != 0) fail("column " + std::to_string(j + 1) + ": n - r not divisible by 4");
    if (c.even_ones && r % 4 == 0 && n % 4 != 0) fail("column " + std::to_string(j + 1) + ": n not divisible by 4");
    c.zero_free = r == 0;
    if (c.zero_free) {
      if (n != 2 * k) fail("zero-free column " + std::to_string(j + 1) + " has n != 2k");
      zero_free.push_back(j);
    }
    report.columns.push_back(c);
  }
  for (std::size_t a = 0; a < zero_free.size() && !report.zero_free_orthogonal_pair; ++a)
    for (std::size_t b = a + 1; b < zero_free.size(); ++b)
      if (p.gram_matrix()(zero_free[a], zero_free[b]) == 0) {
        report.zero_free_orthogonal_pair = true;
        break;
      }
  report.order_divisible_by_four = n % 4 == 0;
  if (report.zero_free_orthogonal_pair && !report.order_divisible_by_four)
    fail("orthogonal zero-free pair in order " + std::to_string(n));
  return report;
}

// ---------------------------------------------------------------------------
// Search
// ---------------------------------------------------------------------------

namespace {

using detail::Bitset;
using detail::extend_clique;

struct SignedMask {
  std::uint32_t support = 0;
  std::uint32_t negative = 0;
};

int dot(const SignedMask& x, const SignedMask& y) {
  const std::uint32_t common = x.support & y.support;
  const std::uint32_t differ = common & (x.negative ^ y.negative);
  return std::popcount(common) - 2 * std::popcount(differ);
}

int entry(const SignedMask& x, Index i) {
  const std::uint32_t bit = 1u << i;
  if (!(x.support & bit)) return 0;
  return (x.negative & bit) ? -1 : 1;
}

}  // namespace

std::optional<WeakHadamard> search_normalized_orthogonal(Index n, Index bound) {
  if (n > bound || n > 20) {
    throw Error(ErrorCode::DimensionTooLarge,
                "search bound is " + std::to_string(bound) + ", got " + std::to_string(n));
  }
  if (n < 1) return std::nullopt;

  std::vector<SignedMask> cand;
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    if (std::popcount(s) % 2) continue;
    const std::uint32_t low = s & (~s + 1);
    // Subsets of the support, excluding the lowest bit (first nonzero is +1).
    for (std::uint32_t neg = s; ; neg = (neg - 1) & s) {
      if (!(neg & low) && std::popcount(neg) * 2 == std::popcount(s)) cand.push_back({s, neg});
      if (neg == 0) break;
    }
  }
  std::sort(cand.begin(), cand.end(), [n](const SignedMask& x, const SignedMask& y) {
    const int sx = std::popcount(x.support), sy = std::popcount(y.support);
    if (sx != sy) return sx < sy;
    for (Index i = 0; i < n; ++i) {
      const int ex = entry(x, i), ey = entry(y, i);
      if (ex != ey) return ex < ey;
    }
    return false;
  });

  const std::size_t m = cand.size();
  std::vector<Bitset> adj(m, Bitset(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && dot(cand[i], cand[j]) == 0) adj[i].set(j);

  Bitset all(m);
  for (std::size_t i = 0; i < m; ++i) all.set(i);
  std::vector<std::size_t> chosen;
  if (!extend_clique(adj, all, 0, static_cast<std::size_t>(n - 1), chosen)) return std::nullopt;

  ExactMatrix p(n, n);
  for (Index i = 0; i < n; ++i) p(i, 0) = 1;
  for (std::size_t c = 0; c < chosen.size(); ++c)
    for (Index i = 0; i < n; ++i) p(i, static_cast<Index>(c + 1)) = entry(cand[chosen[c]], i);
  return WeakHadamard::validate(std::move(p));
}

bool same_column_multiset(const ExactMatrix& a, const ExactMatrix& b, bool up_to_sign) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  auto columns = [up_to_sign](const ExactMatrix& m) {
    std::vector<std::vector<Integer>> cols;
    for (Index j = 0; j < m.cols(); ++j) {
      std::vector<Integer> c(m.col(j).begin(), m.col(j).end());
      if (up_to_sign) {
        auto nz = std::find_if(c.begin(), c.end(), [](const Integer& x) { return x != 0; });
        if (nz != c.end() && *nz < 0)
          for (auto& x : c) x = -x;
      }
      cols.push_back(std::move(c));
    }
    std::sort(cols.begin(), cols.end());
    return cols;
  };
  return columns(a) == columns(b);
}

}  // namespace whad
