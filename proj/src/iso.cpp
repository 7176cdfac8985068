#include "tracelab/iso.hpp"

#include <algorithm>
#include <array>

namespace tracelab {

namespace {

// Per-vertex invariant: for each edge size, how many edges of that size
// contain the vertex. Label-independent, so sorting by it yields canonical
// refinement classes.
std::vector<std::vector<std::uint64_t>> vertex_invariants(const SetFamily& f) {
  const int n = f.ground_size();
  std::vector<std::vector<std::uint64_t>> inv(static_cast<std::size_t>(n),
                                              std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
  for (SetMask e : f.edges())
    for (ElementId v : e.elements()) ++inv[static_cast<std::size_t>(v)][static_cast<std::size_t>(e.size())];
  return inv;
}

std::vector<SetMask> apply_perm_sorted(const SetFamily& f, const std::array<int, 8>& perm) {
  std::vector<SetMask> out;
  out.reserve(f.size());
  for (SetMask e : f.edges()) {
    std::uint64_t m = 0;
    for (ElementId v : e.elements()) m |= std::uint64_t{1} << perm[static_cast<std::size_t>(v)];
    out.push_back(SetMask(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Colex order on whole families (compare rank sets from the top): the family
// missing the highest differing rank is smaller. This matches the solver's
// witness tie-break.
bool family_colex_less(const std::vector<SetMask>& a, const std::vector<SetMask>& b) {
  auto ia = a.rbegin(), ib = b.rbegin();
  for (; ia != a.rend() && ib != b.rend(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.rend() && ib != b.rend();
}

}  // namespace

SetFamily canonical_form(const SetFamily& family) {
  auto [f, labels] = strip_isolated(family);
  const int n = f.ground_size();
  if (n > kIsoMaxVertices) throw resource_error("canonical_form: more than 8 non-isolated vertices");
  if (n == 0) return f;

  // Group vertices into refinement classes sorted by invariant, then search
  // the class-preserving relabelings for the least edge list.
  auto inv = vertex_invariants(f);
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return inv[static_cast<std::size_t>(a)] < inv[static_cast<std::size_t>(b)] || (inv[static_cast<std::size_t>(a)] == inv[static_cast<std::size_t>(b)] && a < b);
  });
  std::vector<std::pair<int, int>> classes;  // [begin, end) into `order`
  for (int i = 0; i < n;) {
    int j = i + 1;
    while (j < n && inv[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])] == inv[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]) ++j;
    classes.emplace_back(i, j);
    i = j;
  }

  std::vector<SetMask> best;
  std::array<int, 8> perm{};  // old vertex -> new label
  // Enumerate products of within-class permutations via next_permutation on
  // each class slice of `order`.
  std::vector<std::vector<int>> slices;
  for (auto [b, e] : classes) slices.emplace_back(order.begin() + b, order.begin() + e);

  auto assign = [&](const std::vector<std::vector<int>>& sl) {
    int next = 0;
    for (const auto& s : sl)
      for (int v : s) perm[static_cast<std::size_t>(v)] = next++;
  };

  // Odometer over per-class permutations.
  std::vector<std::vector<int>> work = slices;
  for (auto& s : work) std::sort(s.begin(), s.end());
  bool first = true;
  while (true) {
    assign(work);
    auto cand = apply_perm_sorted(f, perm);
    if (first || family_colex_less(cand, best)) {
      best = std::move(cand);
      first = false;
    }
    // advance odometer
    std::size_t k = 0;
    for (; k < work.size(); ++k) {
      if (std::next_permutation(work[k].begin(), work[k].end())) break;
      // wrapped: already back to sorted order, carry to next class
    }
    if (k == work.size()) break;
  }
  return SetFamily(n, std::move(best));
}

bool iso_up_to_isolated(const SetFamily& f, const SetFamily& g) {
  auto [fs, fl] = strip_isolated(f);
  auto [gs, gl] = strip_isolated(g);
  if (fs.ground_size() != gs.ground_size()) return false;
  if (fs.size() != gs.size()) return false;
  if (level_profile(fs) != level_profile(gs)) return false;
  auto di = vertex_invariants(fs);
  auto dj = vertex_invariants(gs);
  std::sort(di.begin(), di.end());
  std::sort(dj.begin(), dj.end());
  if (di != dj) return false;
  if (fs.ground_size() > kIsoMaxVertices) throw resource_error("iso_up_to_isolated: more than 8 non-isolated vertices");
  return canonical_form(fs).edges() == canonical_form(gs).edges();
}

}  // namespace tracelab
