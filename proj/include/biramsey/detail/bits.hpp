#ifndef BIRAMSEY_DETAIL_BITS_HPP
#define BIRAMSEY_DETAIL_BITS_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace biramsey::detail {

constexpr std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

/// Fixed-width bitset, just enough for the search kernels. W words cover the
/// row k-subsets of a host: C(16,2) = 120 needs 2 words, C(16,3) = 560 needs 9.
template <unsigned W>
struct SmallBitset {
  std::uint64_t w[W] = {};

  void set(int b) { w[b >> 6] |= std::uint64_t{1} << (b & 63); }
  bool test(int b) const { return (w[b >> 6] >> (b & 63)) & 1; }
  void clear(int b) { w[b >> 6] &= ~(std::uint64_t{1} << (b & 63)); }

  bool intersects(const SmallBitset& o) const {
    for (unsigned i = 0; i < W; ++i)
      if (w[i] & o.w[i]) return true;
    return false;
  }
  void or_with(const SmallBitset& o) {
    for (unsigned i = 0; i < W; ++i) w[i] |= o.w[i];
  }
  void and_not(const SmallBitset& o) {
    for (unsigned i = 0; i < W; ++i) w[i] &= ~o.w[i];
  }

  /// Calls f(index) for every set bit.
  template <typename F>
  void for_each(F&& f) const {
    for (unsigned i = 0; i < W; ++i) {
      std::uint64_t x = w[i];
      while (x) {
        int b = std::countr_zero(x);
        f(static_cast<int>(i * 64 + b));
        x &= x - 1;
      }
    }
  }
};

/// The k-subsets of the rows {0..m-1} in lexicographic order, stored as row
/// masks (bit i = row i), plus per-pattern containment bitsets.
template <unsigned W>
struct SubsetIndex {
  int m = 0;
  int k = 0;
  std::vector<std::uint32_t> masks;               // subset index -> row mask
  std::vector<SmallBitset<W>> contained_in;       // pattern -> subsets inside it

  SubsetIndex(int m_, int k_) : m(m_), k(k_) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k <= m) {
      while (true) {
        std::uint32_t mask = 0;
        for (int i : idx) mask |= 1u << i;
        masks.push_back(mask);
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == m - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
      }
    }
    contained_in.resize(std::size_t{1} << m);
    for (std::uint32_t p = 0; p < (1u << m); ++p) {
      for (std::size_t s = 0; s < masks.size(); ++s)
        if ((masks[s] & p) == masks[s]) contained_in[p].set(static_cast<int>(s));
    }
  }
};

/// maxpc_le[v] = maximum popcount among patterns numerically <= v.
inline std::vector<std::uint8_t> max_popcount_le(int bits) {
  std::vector<std::uint8_t> t(std::size_t{1} << bits);
  t[0] = 0;
  for (std::uint32_t v = 1; v < (1u << bits); ++v)
    t[v] = static_cast<std::uint8_t>(
        std::max<int>(std::popcount(v), t[v - 1]));
  return t;
}

}  // namespace biramsey::detail

#endif
