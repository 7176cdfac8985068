#include "tracelab/dense.hpp"

#include <stdexcept>

namespace tracelab {

namespace {

// Shift the whole 256-bit word right by `s` bits (s in [0, 255]).
Word256 shr(const Word256& a, int s) {
  Word256 r;
  const int word = s >> 6, bits = s & 63;
  for (int i = 0; i + word < 4; ++i) {
    r.w[static_cast<std::size_t>(i)] = a.w[static_cast<std::size_t>(i + word)] >> bits;
    if (bits != 0 && i + word + 1 < 4) r.w[static_cast<std::size_t>(i)] |= a.w[static_cast<std::size_t>(i + word + 1)] << (64 - bits);
  }
  return r;
}

}  // namespace

DenseCube::DenseCube(int n) : n_(n) {
  if (n < 0 || n > kDenseMaxGround) throw std::length_error("DenseCube: ground size out of range");
  const int m = 1 << n;
  for (int v = 0; v < n; ++v)
    for (int k = 0; k < m; ++k)
      if (k >> v & 1) has_[static_cast<std::size_t>(v)].set(k);
  for (int k = 0; k < m; ++k) level_[static_cast<std::size_t>(std::popcount(static_cast<unsigned>(k)))].set(k);
  sub_.resize(static_cast<std::size_t>(m));
  sup_.resize(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    // Subsets of k: standard submask walk.
    Word256& s = sub_[static_cast<std::size_t>(k)];
    int t = k;
    while (true) {
      s.set(t);
      if (t == 0) break;
      t = (t - 1) & k;
    }
    Word256& u = sup_[static_cast<std::size_t>(k)];
    const int rest = (m - 1) & ~k;
    int a = 0;
    while (true) {
      u.set(k | a);
      if (a == rest) break;
      a = (a - rest) & rest;
    }
  }
}

Word256 DenseCube::down_closure(Word256 f) const {
  // Removing vertex v maps rank k to k - 2^v; one ascending pass over the
  // vertices reaches every subset.
  for (int v = 0; v < n_; ++v) f |= shr(f & has_[static_cast<std::size_t>(v)], 1 << v);
  return f;
}

SetFamily DenseFamily::to_family() const {
  std::vector<SetMask> edges;
  edges.reserve(static_cast<std::size_t>(word.popcount()));
  word.for_each_bit([&](int k) { edges.push_back(SetMask(static_cast<std::uint64_t>(k))); });
  return SetFamily(n, std::move(edges));
}

DenseFamily DenseFamily::from_family(const SetFamily& f) {
  if (f.ground_size() > kDenseMaxGround) throw std::length_error("DenseFamily: ground size out of range");
  DenseFamily d;
  d.n = f.ground_size();
  for (SetMask e : f.edges()) d.word.set(static_cast<int>(e.bits()));
  return d;
}

DenseNode expand(const DenseCube& cube, const DenseNode& node, int m) {
  DenseNode child;
  child.closure = node.closure | cube.subsets_of(m);
  child.forbidden = node.forbidden | cube.supersets_of(m);
  child.last = m;
  child.edges = child.closure.popcount();
  return child;
}

Word256 available(const DenseCube& cube, const DenseNode& node) {
  Word256 above = Word256::low_bits(cube.num_masks());
  if (node.last >= 0) {
    const Word256 upto = Word256::low_bits(node.last + 1);
    above &= ~upto;
  }
  return above & ~(node.closure | node.forbidden);
}

}  // namespace tracelab
