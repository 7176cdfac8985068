#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "tracelab/family.hpp"

namespace tracelab {

/// Ground sizes handled by the dense engine (2^n subset ranks <= 256 bits).
inline constexpr int kDenseMaxGround = 8;

/// 256-bit set of subset ranks. Bit k set means the subset with colex rank k
/// (== mask value k) is present, so a whole family on up to 8 vertices is one
/// Word256 and integer comparison of words is colex comparison of families.
struct Word256 {
  std::array<std::uint64_t, 4> w{0, 0, 0, 0};

  static Word256 zero() { return {}; }
  static Word256 single(int bit) {
    Word256 r;
    r.w[static_cast<std::size_t>(bit >> 6)] = std::uint64_t{1} << (bit & 63);
    return r;
  }
  /// Bits [0, count).
  static Word256 low_bits(int count) {
    Word256 r;
    for (int i = 0; i < 4; ++i) {
      const int lo = i * 64;
      if (count >= lo + 64)
        r.w[static_cast<std::size_t>(i)] = ~std::uint64_t{0};
      else if (count > lo)
        r.w[static_cast<std::size_t>(i)] = (std::uint64_t{1} << (count - lo)) - 1;
    }
    return r;
  }

  bool test(int bit) const { return (w[static_cast<std::size_t>(bit >> 6)] >> (bit & 63)) & 1; }
  void set(int bit) { w[static_cast<std::size_t>(bit >> 6)] |= std::uint64_t{1} << (bit & 63); }

  int popcount() const {
    return std::popcount(w[0]) + std::popcount(w[1]) + std::popcount(w[2]) + std::popcount(w[3]);
  }
  bool any() const { return (w[0] | w[1] | w[2] | w[3]) != 0; }

  friend Word256 operator&(const Word256& a, const Word256& b) {
    return {{{a.w[0] & b.w[0], a.w[1] & b.w[1], a.w[2] & b.w[2], a.w[3] & b.w[3]}}};
  }
  friend Word256 operator|(const Word256& a, const Word256& b) {
    return {{{a.w[0] | b.w[0], a.w[1] | b.w[1], a.w[2] | b.w[2], a.w[3] | b.w[3]}}};
  }
  friend Word256 operator~(const Word256& a) { return {{{~a.w[0], ~a.w[1], ~a.w[2], ~a.w[3]}}}; }
  Word256& operator|=(const Word256& o) {
    for (int i = 0; i < 4; ++i) w[static_cast<std::size_t>(i)] |= o.w[static_cast<std::size_t>(i)];
    return *this;
  }
  Word256& operator&=(const Word256& o) {
    for (int i = 0; i < 4; ++i) w[static_cast<std::size_t>(i)] &= o.w[static_cast<std::size_t>(i)];
    return *this;
  }

  friend bool operator==(const Word256&, const Word256&) = default;
  /// Colex order on families: highest differing rank decides.
  friend bool operator<(const Word256& a, const Word256& b) {
    for (int i = 3; i >= 0; --i)
      if (a.w[static_cast<std::size_t>(i)] != b.w[static_cast<std::size_t>(i)]) return a.w[static_cast<std::size_t>(i)] < b.w[static_cast<std::size_t>(i)];
    return false;
  }

  template <typename Fn>
  void for_each_bit(Fn&& fn) const {
    for (int i = 0; i < 4; ++i)
      for (std::uint64_t b = w[static_cast<std::size_t>(i)]; b != 0; b &= b - 1)
        fn(i * 64 + std::countr_zero(b));
  }
};

/// Precomputed per-ground-size tables for the dense engine.
class DenseCube {
public:
  explicit DenseCube(int n);

  int n() const { return n_; }
  int num_masks() const { return 1 << n_; }

  /// Ranks of subsets containing vertex v.
  const Word256& has(int v) const { return has_[static_cast<std::size_t>(v)]; }
  /// Ranks of subsets of cardinality t.
  const Word256& level(int t) const { return level_[static_cast<std::size_t>(t)]; }
  /// Ranks of all subsets of mask m (its full down-closure as a family word).
  const Word256& subsets_of(int m) const { return sub_[static_cast<std::size_t>(m)]; }
  /// Ranks of all supersets of mask m within the cube.
  const Word256& supersets_of(int m) const { return sup_[static_cast<std::size_t>(m)]; }

  /// Down-closure of an arbitrary family word: one descending pass per vertex.
  Word256 down_closure(Word256 f) const;

private:
  int n_;
  std::array<Word256, 8> has_{};
  std::array<Word256, 9> level_{};
  std::vector<Word256> sub_, sup_;
};

/// A family on up to 8 vertices in dense form.
struct DenseFamily {
  int n = 0;
  Word256 word;

  int edge_count() const { return word.popcount(); }
  SetFamily to_family() const;
  static DenseFamily from_family(const SetFamily& f);
};

/// Degree of vertex v in a dense family word.
inline int dense_degree(const DenseCube& cube, const Word256& f, int v) { return (f & cube.has(v)).popcount(); }

/// One node of the antichain traversal: a down-set given by the chosen
/// maximal sets, their closure, and the forbidden region (supersets of
/// chosen sets). `last` is the rank of the most recently added maximal set;
/// further choices must have strictly larger rank.
struct DenseNode {
  Word256 closure;    // the down-set built so far
  Word256 forbidden;  // ranks that can no longer be chosen as maximal sets
  int last = -1;
  int edges = 0;

  static DenseNode root() { return {}; }
};

/// Child node obtained by adding mask m as a new maximal set.
DenseNode expand(const DenseCube& cube, const DenseNode& node, int m);

/// Ranks still eligible as the next maximal set (strictly above `last`,
/// outside the closure and the forbidden region).
Word256 available(const DenseCube& cube, const DenseNode& node);

}  // namespace tracelab
