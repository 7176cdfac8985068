#include "tracelab/constructions.hpp"

#include <algorithm>
#include <random>

namespace tracelab {

namespace {

HereditaryFamily blocks_of_colex_initial(int d, std::uint64_t per_block, int n) {
  // per_block counts the sets of each block including the shared empty set.
  std::vector<SetMask> edges;
  edges.push_back(SetMask{});
  for (int b = 0; b < n / d; ++b)
    for (std::uint64_t k = 1; k < per_block; ++k)
      edges.push_back(SetMask(k << (b * d)));
  return HereditaryFamily::checked(SetFamily(n, std::move(edges)));
}

}  // namespace

HereditaryFamily construct_f0(int d, int c, int n) {
  if (d < 1 || n < 1 || n % d != 0) throw std::domain_error("construct_f0: d must divide n");
  if (d > kMaxGroundSize || n > kMaxGroundSize) throw std::length_error("construct_f0: ground size too large");
  if (c < 1 || static_cast<std::uint64_t>(c) > (std::uint64_t{1} << (d - 1)))
    throw std::domain_error("construct_f0: requires 1 <= c <= 2^{d-1}");
  return blocks_of_colex_initial(d, (std::uint64_t{1} << d) - static_cast<std::uint64_t>(c) + 1, n);
}

HereditaryFamily construct_f0(const BlockSpec& spec) { return construct_f0(spec.d, spec.c, spec.n); }

HereditaryFamily construct_5_1(int d, int k, std::optional<std::uint64_t> seed) {
  if (d < 5) throw std::domain_error("construct_5_1: requires d >= 5");
  if (k < 1) throw std::domain_error("construct_5_1: requires k >= 1");
  const int n = 2 * d * k;
  if (n > kMaxGroundSize) throw std::length_error("construct_5_1: ground size too large");

  // Distinguished vertex per block: the block's first vertex by default,
  // or a seeded pseudo-random pick.
  const int blocks = 2 * k;
  std::vector<int> x(static_cast<std::size_t>(blocks), 0);
  if (seed) {
    std::mt19937_64 rng(*seed);
    for (int b = 0; b < blocks; ++b) x[static_cast<std::size_t>(b)] = static_cast<int>(rng() % static_cast<std::uint64_t>(d));
  }

  std::vector<SetMask> edges;
  // All subsets of size <= d-2 inside each block (the empty set dedupes).
  for (int b = 0; b < blocks; ++b) {
    const int base = b * d;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << d); ++m)
      if (std::popcount(m) <= d - 2) edges.push_back(SetMask(m << base));
  }
  // The (d-1)-set of each block avoiding its distinguished vertex.
  for (int b = 0; b < blocks; ++b) {
    const std::uint64_t block_mask = ((std::uint64_t{1} << d) - 1) << (b * d);
    const std::uint64_t xi = std::uint64_t{1} << (b * d + x[static_cast<std::size_t>(b)]);
    edges.push_back(SetMask(block_mask & ~xi));
  }
  // The matching of distinguished vertices across consecutive block pairs.
  for (int b = 0; b + 1 < blocks; b += 2) {
    const int u = b * d + x[static_cast<std::size_t>(b)];
    const int v = (b + 1) * d + x[static_cast<std::size_t>(b + 1)];
    edges.push_back(SetMask{u, v});
  }
  return HereditaryFamily::checked(SetFamily(n, std::move(edges)));
}

HereditaryFamily construct_powerset_blocks(int d, int n, int drop_top) {
  if (drop_top < 0 || drop_top > 2) throw std::domain_error("construct_powerset_blocks: drop_top in {0,1,2}");
  return construct_f0(d, drop_top + 1, n);
}

ConstructionReport certify(const SetFamily& family, std::uint64_t s,
                           std::optional<std::uint64_t> claimed_edge_count,
                           std::optional<std::uint64_t> claimed_min_degree) {
  ConstructionReport rep;
  rep.n = family.ground_size();
  rep.s = s;
  rep.edge_count = family.size();
  rep.claimed_edge_count = claimed_edge_count;
  rep.claimed_min_degree = claimed_min_degree;
  rep.hereditary = is_hereditary(family);

  const auto deg = degree_sequence(family);
  const std::uint64_t maxdeg = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
  rep.degree_histogram.assign(static_cast<std::size_t>(maxdeg) + 1, 0);
  for (auto dv : deg) ++rep.degree_histogram[static_cast<std::size_t>(dv)];
  rep.min_degree = min_degree(family);

  rep.pass = true;
  if (!rep.hereditary) {
    rep.pass = false;
    rep.failure = "family is not hereditary";
  } else if (rep.min_degree < s + 1) {
    rep.pass = false;
    rep.failure = "min degree " + std::to_string(rep.min_degree) + " below s+1 = " + std::to_string(s + 1);
  } else if (claimed_edge_count && *claimed_edge_count != rep.edge_count) {
    rep.pass = false;
    rep.failure = "edge count " + std::to_string(rep.edge_count) + " != claimed " + std::to_string(*claimed_edge_count);
  } else if (claimed_min_degree && *claimed_min_degree != rep.min_degree) {
    rep.pass = false;
    rep.failure = "min degree " + std::to_string(rep.min_degree) + " != claimed " + std::to_string(*claimed_min_degree);
  }
  if (rep.pass) rep.implied_bound = rep.edge_count - 1;
  return rep;
}

}  // namespace tracelab
