#include "tracelab/enumeration.hpp"

#include <atomic>
#include <thread>

namespace tracelab {

void EnumFilter::validate() const {
  if (min_edges && max_edges && *min_edges > *max_edges)
    throw std::domain_error("EnumFilter: min_edges > max_edges");
}

bool EnumFilter::passes(const DenseCube& cube, const DenseNode& node) const {
  const auto edges = static_cast<std::uint64_t>(node.edges);
  if (min_edges && edges < *min_edges) return false;
  if (max_edges && edges > *max_edges) return false;
  const std::uint64_t need = min_degree.value_or(require_spanning ? 1 : 0);
  if (need > 0)
    for (int v = 0; v < cube.n(); ++v)
      if (static_cast<std::uint64_t>(dense_degree(cube, node.closure, v)) < need) return false;
  return true;
}

DownSetStream::DownSetStream(int n, EnumFilter filter, bool allow_huge)
    : cube_(n), filter_(std::move(filter)) {
  filter_.validate();
  if (n < 0 || n > kEnumMaxGround) throw resource_error("DownSetStream: n out of range (max 7)");
  if (n == kEnumMaxGround && !allow_huge)
    throw resource_error("DownSetStream: n=7 requires the allow-huge acknowledgment");
  stack_.push_back(Frame{DenseNode::root(), {}, 0});
}

DownSetStream::DownSetStream(const DenseCube& cube, EnumFilter filter, DenseNode prefix_root)
    : cube_(cube), filter_(std::move(filter)) {
  filter_.validate();
  stack_.push_back(Frame{prefix_root, {}, 0});
}

bool DownSetStream::subtree_can_pass(const DenseNode& node) const {
  const std::uint64_t need = filter_.min_degree.value_or(filter_.require_spanning ? 1 : 0);
  if (filter_.max_edges && static_cast<std::uint64_t>(node.edges) > *filter_.max_edges) return false;
  if (need > 0) {
    // Upper bound of what any completion can reach: the closure plus the
    // down-closure of every still-eligible maximal set.
    const Word256 reach = node.closure | cube_.down_closure(available(cube_, node));
    for (int v = 0; v < cube_.n(); ++v)
      if (static_cast<std::uint64_t>(dense_degree(cube_, reach, v)) < need) return false;
  }
  return true;
}

const DenseNode* DownSetStream::next_node() {
  while (!stack_.empty()) {
    Frame& top = stack_.back();
    if (top.pending_emit) {
      top.pending_emit = false;
      if (!subtree_can_pass(top.node)) {
        stack_.pop_back();
        continue;
      }
      Word256 avail = available(cube_, top.node);
      avail.for_each_bit([&](int m) { top.candidates.push_back(m); });
      if (filter_.passes(cube_, top.node)) {
        current_ = top.node;
        return &current_;
      }
      continue;
    }
    if (top.next_candidate >= top.candidates.size()) {
      stack_.pop_back();
      continue;
    }
    const int m = top.candidates[top.next_candidate++];
    Frame frame;
    frame.node = expand(cube_, top.node, m);
    frame.pending_emit = true;
    stack_.push_back(std::move(frame));  // invalidates `top`; loop re-reads
  }
  return nullptr;
}

std::optional<DenseFamily> DownSetStream::next() {
  const DenseNode* node = next_node();
  if (node == nullptr) return std::nullopt;
  return DenseFamily{cube_.n(), node->closure};
}

EnumResult enumerate_downsets(int n, const EnumFilter& filter,
                              const std::function<bool(const DenseFamily&)>& visit, bool allow_huge) {
  DownSetStream stream(n, filter, allow_huge);
  EnumResult res;
  while (auto fam = stream.next()) {
    ++res.emitted;
    if (!visit(*fam)) {
      res.aborted = true;
      break;
    }
  }
  return res;
}

std::uint64_t count_downsets(int n, const EnumFilter& filter, bool allow_huge) {
  DownSetStream stream(n, filter, allow_huge);
  std::uint64_t count = 0;
  while (stream.next_node() != nullptr) ++count;
  return count;
}

namespace detail {

std::vector<EnumTask> partition_tasks(const DenseCube& cube, const EnumFilter& filter, std::size_t min_tasks) {
  std::vector<EnumTask> tasks{EnumTask{DenseNode::root(), true}};
  // Expand whole-subtree tasks breadth-first until enough units exist. Each
  // expansion replaces a subtree task by an emit-only task for its root
  // followed by its child subtrees, which preserves stream order.
  (void)filter;
  int rounds = 0;
  while (tasks.size() < min_tasks && rounds < 2) {
    ++rounds;
    std::vector<EnumTask> next;
    for (const auto& t : tasks) {
      if (!t.whole_subtree) {
        next.push_back(t);
        continue;
      }
      next.push_back(EnumTask{t.node, false});
      Word256 avail = available(cube, t.node);
      avail.for_each_bit([&](int m) { next.push_back(EnumTask{expand(cube, t.node, m), true}); });
    }
    tasks = std::move(next);
  }
  return tasks;
}

void run_tasks(std::size_t task_count, int jobs, const std::function<void(std::size_t)>& run_one) {
  if (jobs <= 1 || task_count <= 1) {
    for (std::size_t t = 0; t < task_count; ++t) run_one(t);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t t = next.fetch_add(1);
      if (t >= task_count) return;
      run_one(t);
    }
  };
  std::vector<std::thread> pool;
  const int count = std::min<int>(jobs, static_cast<int>(task_count));
  pool.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace detail

}  // namespace tracelab
