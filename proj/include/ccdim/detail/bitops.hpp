#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace ccdim::detail {

using Mask = std::uint64_t;

inline constexpr Mask bit(int i) { return Mask{1} << i; }

inline int popcount(Mask m) { return std::popcount(m); }

inline int lowest(Mask m) { return std::countr_zero(m); }

inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }

// Ascending-index iteration over the set bits of m.
template <typename F>
inline void for_each_bit(Mask m, F&& f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

inline std::vector<int> to_indices(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  for_each_bit(m, [&](int v) { out.push_back(v); });
  return out;
}

// Lexicographic order on the ascending index sequences the masks denote,
// e.g. {0,1,2} < {0,3} and a proper prefix sorts before its extensions.
inline bool lex_less(Mask a, Mask b) {
  if (a == b) return false;
  const int i = std::countr_zero(a ^ b);
  if (a & bit(i)) return (b >> i) != 0;
  return (a >> i) == 0;
}

// Pack the bits of m that lie inside sel by their rank within sel.
inline Mask compress(Mask sel, Mask m) {
  Mask out = 0;
  int k = 0;
  while (sel) {
    if ((m >> std::countr_zero(sel)) & 1) out |= bit(k);
    ++k;
    sel &= sel - 1;
  }
  return out;
}

// Inverse of compress: bit k of packed lands on the k-th member of sel.
inline Mask expand(Mask sel, Mask packed) {
  Mask out = 0;
  int k = 0;
  while (sel) {
    if ((packed >> k) & 1) out |= bit(std::countr_zero(sel));
    ++k;
    sel &= sel - 1;
  }
  return out;
}

}  // namespace ccdim::detail
