#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "tracelab/family.hpp"

namespace tracelab {

/// Largest m accepted by colex_initial / W-style prefix machinery.
inline constexpr std::uint64_t kColexCapacity = std::uint64_t{1} << 20;

/// Colex order: A precedes B iff max(A triangle B) lies in B. With the mask
/// encoding this is plain integer comparison of the masks.
inline std::strong_ordering colex_cmp(SetMask a, SetMask b) { return a.bits() <=> b.bits(); }

/// Rank of a set in colex order: sum over elements i of 2^i == the mask value.
inline std::uint64_t colex_rank(SetMask a) { return a.bits(); }

/// Inverse of colex_rank.
inline SetMask colex_unrank(std::uint64_t k) { return SetMask(k); }

/// R(m): the first m subsets in colex order, as a hereditary family. The
/// ground size is the smallest n with 2^n >= m unless a larger n is given.
/// Hereditary for every m because subsets of a mask have smaller rank.
HereditaryFamily colex_initial(std::uint64_t m, int n = -1);

/// Number of k in [0, m) with popcount(k) == t, for t = 0..63 (digit DP over
/// the bits of m). This is the level profile of R(m) without materializing it.
std::vector<std::uint64_t> colex_initial_profile(std::uint64_t m);

/// Binomial coefficient, saturating at uint64 max is not needed at desk scale;
/// throws on overflow.
std::uint64_t binomial(int n, int k);

}  // namespace tracelab
