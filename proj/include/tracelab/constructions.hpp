#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tracelab/family.hpp"

namespace tracelab {

/// Block layout shared by the generators: [0,n) split into consecutive
/// d-blocks, with one distinguished vertex per block for the non-local
/// construction.
struct BlockSpec {
  int d = 0;
  int n = 0;
  int c = 0;                          // where applicable
  int k = 0;                          // non-local construction scale (n = 2dk)
  std::vector<ElementId> distinguished;  // x_i per block, when used
};

/// n/d disjoint blocks, each carrying the first 2^d - c + 1 colex sets on its
/// d vertices (shared empty set). Edge count n(2^d-c)/d + 1, minimum degree
/// 2^{d-1} - c + 1. Requires d | n and 1 <= c <= 2^{d-1}.
HereditaryFamily construct_f0(int d, int c, int n);

/// The same family with an explicit block record.
HereditaryFamily construct_f0(const BlockSpec& spec);

/// Non-local construction on n = 2dk vertices: per block all subsets of size
/// at most d-2, the (d-1)-set avoiding the distinguished vertex, and a
/// matching of distinguished vertices across block pairs. Regular of degree
/// 2^{d-1} - d + 1 with (2^d - d - 1/2) n/d + 1 edges. Requires d >= 5.
/// The distinguished vertices default to each block's first vertex; a seed
/// picks them pseudo-randomly instead.
HereditaryFamily construct_5_1(int d, int k, std::optional<std::uint64_t> seed = std::nullopt);

/// Blocks carrying the full power set (drop_top = 0), the power set minus its
/// top set (1), or minus its top two colex sets (2). Equivalent to
/// construct_f0 with c = drop_top + 1.
HereditaryFamily construct_powerset_blocks(int d, int n, int drop_top);

/// Recomputed facts about a family, compared against claimed formulas. Never
/// trusts generator arithmetic: everything is recounted from the raw family.
struct ConstructionReport {
  int n = 0;
  std::uint64_t s = 0;
  std::uint64_t edge_count = 0;
  std::vector<std::uint64_t> degree_histogram;  // degree -> multiplicity
  std::uint64_t min_degree = 0;
  bool hereditary = false;
  std::optional<std::uint64_t> claimed_edge_count;
  std::optional<std::uint64_t> claimed_min_degree;
  std::uint64_t implied_bound = 0;  // m(n,s) <= implied_bound when pass
  bool pass = false;
  std::string failure;
};

/// Validates `family` as a witness for s: hereditary, min degree >= s+1, and
/// equal to any claimed counts. Mismatches set pass = false with a reason.
ConstructionReport certify(const SetFamily& family, std::uint64_t s,
                           std::optional<std::uint64_t> claimed_edge_count = std::nullopt,
                           std::optional<std::uint64_t> claimed_min_degree = std::nullopt);

}  // namespace tracelab
