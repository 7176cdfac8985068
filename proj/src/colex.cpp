#include "tracelab/colex.hpp"

#include <bit>
#include <stdexcept>

namespace tracelab {

HereditaryFamily colex_initial(std::uint64_t m, int n) {
  if (m > kColexCapacity) throw std::length_error("colex_initial: m exceeds capacity");
  int min_n = 0;
  while ((std::uint64_t{1} << min_n) < m) ++min_n;
  if (n < 0) n = min_n;
  if (n < min_n || n > kMaxGroundSize) throw std::domain_error("colex_initial: ground size too small for m");
  std::vector<SetMask> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::uint64_t k = 0; k < m; ++k) edges.push_back(SetMask(k));
  return HereditaryFamily::checked(SetFamily(n, std::move(edges)));
}

std::vector<std::uint64_t> colex_initial_profile(std::uint64_t m) {
  std::vector<std::uint64_t> cnt(65, 0);
  // Walk the set bits of m from high to low; fixing a 1-bit to 0 frees the
  // lower bits, contributing binomial counts per popcount class.
  int ones_above = 0;
  for (int b = 63; b >= 0; --b) {
    if (!((m >> b) & 1)) continue;
    for (int t = 0; t <= b; ++t) cnt[static_cast<std::size_t>(ones_above + t)] += binomial(b, t);
    ++ones_above;
  }
  return cnt;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > UINT64_MAX) throw std::overflow_error("binomial overflow");
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace tracelab
