#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tracelab/dense.hpp"

namespace tracelab {

/// Enumeration is hard-limited to 7 vertices; 7 itself (about 2.4e12
/// down-sets) additionally requires the allow_huge acknowledgment.
inline constexpr int kEnumMaxGround = 7;

struct EnumFilter {
  std::optional<std::uint64_t> min_degree;  // applies to all n vertices
  std::optional<std::uint64_t> min_edges;
  std::optional<std::uint64_t> max_edges;
  bool require_spanning = false;  // no isolated vertices

  void validate() const;
  bool passes(const DenseCube& cube, const DenseNode& node) const;
};

/// Pull-based generator over all down-sets of 2^[n] (optionally restricted to
/// the subtree rooted at a prefix node). Emits each down-set exactly once in
/// a fixed deterministic order: the antichain of maximal sets is extended in
/// increasing colex rank, depth-first. Degree/edge bounds from the filter
/// prune subtrees that cannot produce a passing family; the filter itself is
/// applied per emission.
class DownSetStream {
public:
  DownSetStream(int n, EnumFilter filter, bool allow_huge = false);
  DownSetStream(const DenseCube& cube, EnumFilter filter, DenseNode prefix_root);

  /// Next passing down-set, or nullopt when exhausted.
  std::optional<DenseFamily> next();

  /// Next passing traversal node (closure + bookkeeping), or nullopt.
  const DenseNode* next_node();

  const DenseCube& cube() const { return cube_; }

private:
  bool subtree_can_pass(const DenseNode& node) const;

  DenseCube cube_;
  EnumFilter filter_;
  struct Frame {
    DenseNode node;
    std::vector<int> candidates;  // remaining maximal-set choices, ascending
    std::size_t next_candidate = 0;
    bool pending_emit = true;
  };
  std::vector<Frame> stack_;
  DenseNode current_;
};

struct EnumResult {
  std::uint64_t emitted = 0;
  bool aborted = false;  // visitor stopped early; count is partial
};

/// Visits every down-set on [n] passing the filter exactly once. The visitor
/// returns false to stop early.
EnumResult enumerate_downsets(int n, const EnumFilter& filter,
                              const std::function<bool(const DenseFamily&)>& visit, bool allow_huge = false);

/// Plain count of passing down-sets.
std::uint64_t count_downsets(int n, const EnumFilter& filter = {}, bool allow_huge = false);

/// Reducer contract for the parallel traversal: `identity()`, `fold(acc,
/// cube, node)` and `combine(acc, acc)` with combine associative and
/// commutative. Results are bit-identical to the sequential fold.
template <typename R, typename Fold, typename Combine>
struct Reducer {
  R identity;
  Fold fold;        // void(R&, const DenseCube&, const DenseNode&)
  Combine combine;  // void(R&, R&&)
};

template <typename R, typename Fold, typename Combine>
Reducer<R, Fold, Combine> make_reducer(R identity, Fold fold, Combine combine) {
  return {std::move(identity), std::move(fold), std::move(combine)};
}

namespace detail {

/// One unit of parallel work. Either the single prefix node itself (an
/// ancestor whose children were split off) or a whole subtree.
struct EnumTask {
  DenseNode node;
  bool whole_subtree = true;
};

/// Splits the traversal into tasks in stream order by expanding the
/// shallowest levels until at least `min_tasks` tasks exist. Folding the
/// tasks in list order is equivalent to the sequential traversal.
std::vector<EnumTask> partition_tasks(const DenseCube& cube, const EnumFilter& filter, std::size_t min_tasks);

void run_tasks(std::size_t task_count, int jobs, const std::function<void(std::size_t)>& run_one);

}  // namespace detail

/// Parallel fold over the filtered traversal. Deterministic: per-task
/// results are combined in task order, so the outcome is independent of the
/// worker count and scheduling.
template <typename R, typename Fold, typename Combine>
R enumerate_downsets_parallel(int n, const EnumFilter& filter, const Reducer<R, Fold, Combine>& reducer,
                              int jobs, bool allow_huge = false) {
  filter.validate();
  if (n < 0 || n > kEnumMaxGround) throw resource_error("enumerate_downsets: n out of range (max 7)");
  if (n == kEnumMaxGround && !allow_huge)
    throw resource_error("enumerate_downsets: n=7 requires the allow-huge acknowledgment");
  const DenseCube cube(n);
  if (jobs <= 1) {
    R acc = reducer.identity;
    DownSetStream stream(cube, filter, DenseNode::root());
    while (const DenseNode* node = stream.next_node()) reducer.fold(acc, cube, *node);
    return acc;
  }
  const auto tasks = detail::partition_tasks(cube, filter, static_cast<std::size_t>(jobs) * 8);
  std::vector<R> results(tasks.size(), reducer.identity);
  detail::run_tasks(tasks.size(), jobs, [&](std::size_t t) {
    if (!tasks[t].whole_subtree) {
      if (filter.passes(cube, tasks[t].node)) reducer.fold(results[t], cube, tasks[t].node);
      return;
    }
    DownSetStream stream(cube, filter, tasks[t].node);
    while (const DenseNode* node = stream.next_node()) reducer.fold(results[t], cube, *node);
  });
  R acc = reducer.identity;
  for (auto& r : results) reducer.combine(acc, std::move(r));
  return acc;
}

}  // namespace tracelab
