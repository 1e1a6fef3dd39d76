#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace whad::detail {

class Bitset {
 public:
  explicit Bitset(std::size_t n) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t(1) << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  Bitset operator&(const Bitset& o) const {
    Bitset r = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= o.words_[k];
    return r;
  }
  /// Index of the first set bit at or after i, or npos.
  std::size_t next(std::size_t i) const {
    for (std::size_t k = i / 64; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      if (k == i / 64) w &= ~std::uint64_t(0) << (i % 64);
      if (w) return k * 64 + static_cast<std::size_t>(std::countr_zero(w));
    }
    return npos;
  }
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<std::uint64_t> words_;
};

/// Node accounting for the searches; `exhausted` is set once the limit is hit.
struct SearchBudget {
  std::uint64_t nodes = 0;
  std::uint64_t limit = UINT64_MAX;
  bool exhausted = false;
  bool spend() {
    if (++nodes > limit) exhausted = true;
    return !exhausted;
  }
};

/// Extends `chosen` by `need` members of `allowed` (indices >= from) that are
/// pairwise adjacent. First success in index order wins.
inline bool extend_clique(const std::vector<Bitset>& adj, const Bitset& allowed, std::size_t from, std::size_t need,
                          std::vector<std::size_t>& chosen, SearchBudget* budget = nullptr) {
  if (need == 0) return true;
  if (allowed.count() < need) return false;
  for (std::size_t i = allowed.next(from); i != Bitset::npos; i = allowed.next(i + 1)) {
    if (budget && !budget->spend()) return false;
    chosen.push_back(i);
    if (extend_clique(adj, allowed & adj[i], i + 1, need - 1, chosen, budget)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace whad::detail
