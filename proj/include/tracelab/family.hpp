#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tracelab/set_mask.hpp"

namespace tracelab {

/// Thrown when an operation would exceed the documented desk-scale limits
/// (too many vertices for isomorphism, enumeration beyond the gate, ...).
class resource_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Edge counts by cardinality: counts[i] = number of edges of size i.
struct LevelProfile {
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const {
    std::uint64_t s = 0;
    for (auto c : counts) s += c;
    return s;
  }
  friend bool operator==(const LevelProfile&, const LevelProfile&) = default;
};

/// A duplicate-free family of subsets of {0,...,n-1}. Edges are always kept
/// sorted in colexicographic order (== ascending mask value), which makes
/// equality, hashing and serialization deterministic.
class SetFamily {
public:
  SetFamily() = default;
  explicit SetFamily(int n) : n_(check_n(n)) {}

  /// Builds from arbitrary edge list; sorts and deduplicates.
  SetFamily(int n, std::vector<SetMask> edges);

  int ground_size() const { return n_; }
  std::uint64_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  const std::vector<SetMask>& edges() const { return edges_; }
  SetMask edge(std::size_t i) const { return edges_[i]; }

  bool contains(SetMask e) const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

private:
  static int check_n(int n) {
    if (n < 0 || n > kMaxGroundSize) throw std::length_error("SetFamily: ground size out of range");
    return n;
  }
  void validate_edges() const;

  int n_ = 0;
  std::vector<SetMask> edges_;  // sorted ascending by mask value, unique
};

/// A down-closed SetFamily: every subset of an edge is an edge. Nonempty
/// hereditary families contain the empty set. Construct via down_closure()
/// or checked(); both enforce the invariant.
class HereditaryFamily {
public:
  HereditaryFamily() = default;
  explicit HereditaryFamily(int n) : family_(n) {}

  /// Validates the down-closure invariant; throws std::domain_error if violated.
  static HereditaryFamily checked(SetFamily f);

  const SetFamily& family() const { return family_; }
  operator const SetFamily&() const { return family_; }

  int ground_size() const { return family_.ground_size(); }
  std::uint64_t size() const { return family_.size(); }
  const std::vector<SetMask>& edges() const { return family_.edges(); }

  friend bool operator==(const HereditaryFamily&, const HereditaryFamily&) = default;

private:
  struct trusted_tag {};
  HereditaryFamily(trusted_tag, SetFamily f) : family_(std::move(f)) {}
  friend HereditaryFamily down_closure(const SetFamily&);

  SetFamily family_;
};

// ---------------------------------------------------------------------------
// Core operations
// ---------------------------------------------------------------------------

/// Trace of the family on t: { F ∩ t : F in family }, duplicate-free, on the
/// same ground size.
SetFamily trace(const SetFamily& family, SetMask t);

/// Link of v: { F \ {v} : v in F in family }, on the same ground size.
/// Only edges containing v contribute; |link| == degree(v).
SetFamily link(const SetFamily& family, ElementId v);

/// Number of edges containing v.
std::uint64_t degree(const SetFamily& family, ElementId v);

/// Minimum degree over all n declared ground elements; isolated vertices
/// force the minimum to 0.
std::uint64_t min_degree(const SetFamily& family);

/// All degrees, indexed by element.
std::vector<std::uint64_t> degree_sequence(const SetFamily& family);

/// Neighbourhood V_v: all vertices sharing an edge with v. Contains v iff v
/// is non-isolated.
SetMask neighborhood(const SetFamily& family, ElementId v);

/// Set of non-isolated vertices.
SetMask support(const SetFamily& family);

bool is_hereditary(const SetFamily& family);

/// Minimal hereditary superset. Idempotent and monotone.
HereditaryFamily down_closure(const SetFamily& family);

LevelProfile level_profile(const SetFamily& family);

/// Relabels elements by a bijection on [0,n): element i maps to perm[i].
SetFamily relabel(const SetFamily& family, const std::vector<ElementId>& perm);

/// Places g on fresh vertices after f (g's elements shifted by f's ground
/// size). A shared empty edge is merged.
SetFamily disjoint_union(const SetFamily& f, const SetFamily& g);

/// First (colex-least) s-subset T of the ground set with |trace(family,T)| = 2^s,
/// or nullopt if no s-set is shattered.
std::optional<SetMask> find_shattered(const SetFamily& family, int s);

/// Removes isolated vertices, compacting the labels in increasing order.
/// Returns the compacted family and the list of original labels.
std::pair<SetFamily, std::vector<ElementId>> strip_isolated(const SetFamily& family);

}  // namespace tracelab
