#include "tracelab/family.hpp"

#include <algorithm>
#include <unordered_set>

namespace tracelab {

namespace {

void check_in_ground(SetMask m, int n, const char* what) {
  if (!m.subset_of(SetMask::full(n))) throw std::domain_error(std::string(what) + ": set out of ground range");
}

void check_vertex(ElementId v, int n) {
  if (v < 0 || v >= n) throw std::domain_error("vertex out of range");
}

}  // namespace

SetFamily::SetFamily(int n, std::vector<SetMask> edges) : n_(check_n(n)), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (SetMask e : edges_) check_in_ground(e, n_, "SetFamily");
}

bool SetFamily::contains(SetMask e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

HereditaryFamily HereditaryFamily::checked(SetFamily f) {
  if (!is_hereditary(f)) throw std::domain_error("HereditaryFamily: family is not down-closed");
  return HereditaryFamily(trusted_tag{}, std::move(f));
}

SetFamily trace(const SetFamily& family, SetMask t) {
  check_in_ground(t, family.ground_size(), "trace");
  std::vector<SetMask> out;
  out.reserve(family.size());
  for (SetMask e : family.edges()) out.push_back(e & t);
  return SetFamily(family.ground_size(), std::move(out));
}

SetFamily link(const SetFamily& family, ElementId v) {
  check_vertex(v, family.ground_size());
  std::vector<SetMask> out;
  for (SetMask e : family.edges())
    if (e.contains(v)) out.push_back(e.without(v));
  return SetFamily(family.ground_size(), std::move(out));
}

std::uint64_t degree(const SetFamily& family, ElementId v) {
  check_vertex(v, family.ground_size());
  std::uint64_t d = 0;
  for (SetMask e : family.edges())
    if (e.contains(v)) ++d;
  return d;
}

std::vector<std::uint64_t> degree_sequence(const SetFamily& family) {
  std::vector<std::uint64_t> deg(static_cast<std::size_t>(family.ground_size()), 0);
  for (SetMask e : family.edges())
    for (ElementId v : e.elements()) ++deg[static_cast<std::size_t>(v)];
  return deg;
}

std::uint64_t min_degree(const SetFamily& family) {
  if (family.ground_size() == 0) return 0;
  auto deg = degree_sequence(family);
  return *std::min_element(deg.begin(), deg.end());
}

SetMask neighborhood(const SetFamily& family, ElementId v) {
  check_vertex(v, family.ground_size());
  SetMask nb;
  for (SetMask e : family.edges())
    if (e.contains(v)) nb = nb | e;
  return nb;
}

SetMask support(const SetFamily& family) {
  SetMask s;
  for (SetMask e : family.edges()) s = s | e;
  return s;
}

bool is_hereditary(const SetFamily& family) {
  // One-element removals suffice: closure under them implies full down-closure.
  for (SetMask e : family.edges())
    for (ElementId v : e.elements())
      if (!family.contains(e.without(v))) return false;
  return true;
}

HereditaryFamily down_closure(const SetFamily& family) {
  const int n = family.ground_size();
  std::vector<SetMask> out;
  if (n <= 24) {
    // Dense closure over the 2^n subset ranks, one shift pass per element.
    const std::size_t words = (std::size_t{1} << n) / 64 + 1;
    std::vector<std::uint64_t> present(words, 0);
    auto set_bit = [&](std::uint64_t k) { present[k >> 6] |= std::uint64_t{1} << (k & 63); };
    auto get_bit = [&](std::uint64_t k) { return (present[k >> 6] >> (k & 63)) & 1; };
    for (SetMask e : family.edges()) set_bit(e.bits());
    for (int v = 0; v < n; ++v) {
      const std::uint64_t hi = std::uint64_t{1} << v;
      for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k)
        if ((k & hi) && get_bit(k)) set_bit(k & ~hi);
    }
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k)
      if (get_bit(k)) out.push_back(SetMask(k));
  } else {
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> stack;
    for (SetMask e : family.edges())
      if (seen.insert(e.bits()).second) stack.push_back(e.bits());
    constexpr std::size_t kClosureCap = std::size_t{1} << 26;
    while (!stack.empty()) {
      const std::uint64_t cur = stack.back();
      stack.pop_back();
      for (std::uint64_t b = cur; b != 0; b &= b - 1) {
        const std::uint64_t sub = cur & ~(b & -b);
        if (seen.insert(sub).second) stack.push_back(sub);
      }
      if (seen.size() > kClosureCap) throw resource_error("down_closure: result exceeds size cap");
    }
    out.reserve(seen.size());
    for (std::uint64_t k : seen) out.push_back(SetMask(k));
  }
  SetFamily closed(n, std::move(out));
  return HereditaryFamily(HereditaryFamily::trusted_tag{}, std::move(closed));
}

LevelProfile level_profile(const SetFamily& family) {
  LevelProfile p;
  p.counts.assign(static_cast<std::size_t>(family.ground_size()) + 1, 0);
  for (SetMask e : family.edges()) ++p.counts[static_cast<std::size_t>(e.size())];
  return p;
}

SetFamily relabel(const SetFamily& family, const std::vector<ElementId>& perm) {
  const int n = family.ground_size();
  if (static_cast<int>(perm.size()) != n) throw std::domain_error("relabel: permutation size mismatch");
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (ElementId p : perm) {
    if (p < 0 || p >= n || hit[static_cast<std::size_t>(p)]) throw std::domain_error("relabel: not a bijection");
    hit[static_cast<std::size_t>(p)] = true;
  }
  std::vector<SetMask> out;
  out.reserve(family.size());
  for (SetMask e : family.edges()) {
    SetMask m;
    for (ElementId v : e.elements()) m = m.with(perm[static_cast<std::size_t>(v)]);
    out.push_back(m);
  }
  return SetFamily(n, std::move(out));
}

SetFamily disjoint_union(const SetFamily& f, const SetFamily& g) {
  const int n = f.ground_size() + g.ground_size();
  if (n > kMaxGroundSize) throw std::length_error("disjoint_union: combined ground size too large");
  std::vector<SetMask> out;
  out.reserve(f.size() + g.size());
  for (SetMask e : f.edges()) out.push_back(e);
  for (SetMask e : g.edges()) out.push_back(SetMask(e.bits() << f.ground_size()));
  return SetFamily(n, std::move(out));
}

std::optional<SetMask> find_shattered(const SetFamily& family, int s) {
  const int n = family.ground_size();
  if (s < 0 || s > n) throw std::domain_error("find_shattered: s out of range");
  if (s == 0) return family.empty() ? std::nullopt : std::optional<SetMask>(SetMask{});
  // Gosper's hack walks the s-subsets in increasing mask order = colex order.
  const std::uint64_t limit = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n);
  std::uint64_t t = (std::uint64_t{1} << s) - 1;
  const std::uint64_t want = std::uint64_t{1} << s;
  while (t < limit) {
    // Count distinct intersections with t by compressing e & t to s bits.
    std::unordered_set<std::uint64_t> seen;
    for (SetMask e : family.edges()) {
      std::uint64_t key = 0, bit = 1;
      for (std::uint64_t b = t; b != 0; b &= b - 1, bit <<= 1)
        if (e.bits() & (b & -b)) key |= bit;
      seen.insert(key);
      if (seen.size() == want) return SetMask(t);
    }
    const std::uint64_t c = t & -t;
    const std::uint64_t r = t + c;
    if (r >= limit) break;
    t = (((r ^ t) >> 2) / c) | r;
  }
  return std::nullopt;
}

std::pair<SetFamily, std::vector<ElementId>> strip_isolated(const SetFamily& family) {
  const SetMask sup = support(family);
  std::vector<ElementId> labels = sup.elements();
  std::vector<ElementId> to_new(static_cast<std::size_t>(family.ground_size()), -1);
  for (std::size_t i = 0; i < labels.size(); ++i) to_new[static_cast<std::size_t>(labels[i])] = static_cast<ElementId>(i);
  std::vector<SetMask> out;
  out.reserve(family.size());
  for (SetMask e : family.edges()) {
    SetMask m;
    for (ElementId v : e.elements()) m = m.with(to_new[static_cast<std::size_t>(v)]);
    out.push_back(m);
  }
  return {SetFamily(static_cast<int>(labels.size()), std::move(out)), std::move(labels)};
}

}  // namespace tracelab
