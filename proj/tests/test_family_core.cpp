#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "tracelab/colex.hpp"
#include "tracelab/family.hpp"

using namespace tracelab;

namespace {

SetFamily fam(int n, std::initializer_list<SetMask> edges) { return SetFamily(n, std::vector<SetMask>(edges)); }

// Independent trace oracle: plain std::set de-duplication.
std::set<std::uint64_t> trace_oracle(const SetFamily& f, SetMask t) {
  std::set<std::uint64_t> out;
  for (SetMask e : f.edges()) out.insert((e & t).bits());
  return out;
}

SetFamily random_family(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<std::uint64_t> dist(0, (std::uint64_t{1} << n) - 1);
  std::uniform_int_distribution<int> count(0, 10);
  std::vector<SetMask> edges;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) edges.push_back(SetMask(dist(rng)));
  return SetFamily(n, std::move(edges));
}

}  // namespace

TEST_CASE("trace: forced examples") {
  const auto f = fam(3, {SetMask{}, SetMask{0}, SetMask{1, 2}});
  CHECK(trace(f, SetMask{0, 1}) == fam(3, {SetMask{}, SetMask{0}, SetMask{1}}));
  // T = full ground set is the identity.
  CHECK(trace(f, SetMask::full(3)) == f);
  // R(6) on n=3, T={0,1}: enumerate the 6 intersections and dedupe by hand:
  // {}, {0}, {1}, {01}, {}, {0} -> 4 distinct.
  const SetFamily r6 = colex_initial(6, 3);
  const auto tr = trace(r6, SetMask{0, 1});
  CHECK(tr.size() == 4);
  CHECK(tr == fam(3, {SetMask{}, SetMask{0}, SetMask{1}, SetMask{0, 1}}));
  CHECK_THROWS_AS(trace(fam(2, {SetMask{0}}), SetMask{2}), std::domain_error);
}

TEST_CASE("trace matches oracle on random families") {
  std::mt19937_64 rng(12345);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const SetFamily f = random_family(rng, n);
    const SetMask t(rng() & ((std::uint64_t{1} << n) - 1));
    const auto got = trace(f, t);
    const auto want = trace_oracle(f, t);
    CHECK(got.size() == want.size());
    for (SetMask e : got.edges()) CHECK(want.count(e.bits()) == 1);
    CHECK(got.size() <= f.size());
  }
}

TEST_CASE("link: examples") {
  const auto base = down_closure(fam(3, {SetMask{0, 1}, SetMask{0, 2}}));
  // Edges containing 0: {0},{0,1},{0,2} -> link {},{1},{2}.
  CHECK(link(base, 0) == fam(3, {SetMask{}, SetMask{1}, SetMask{2}}));
  // Isolated vertex -> empty link.
  const auto iso = fam(3, {SetMask{0}});
  CHECK(link(iso, 2).size() == 0);
  // Full cube: link of any vertex is the cube one dimension down.
  const SetFamily cube3 = colex_initial(8, 3);
  CHECK(link(cube3, 2) == fam(3, {SetMask{}, SetMask{0}, SetMask{1}, SetMask{0, 1}}));
}

TEST_CASE("degree and min_degree") {
  const SetFamily r6 = colex_initial(6, 3);
  CHECK(degree(r6, 0) == 3);
  CHECK(degree(r6, 1) == 2);
  CHECK(degree(r6, 2) == 2);
  CHECK(min_degree(r6) == 2);
  CHECK(min_degree(fam(3, {SetMask{}})) == 0);
  // Full d-cube has every degree 2^{d-1}.
  for (int d = 1; d <= 5; ++d) {
    const SetFamily cube = colex_initial(std::uint64_t{1} << d, d);
    for (int v = 0; v < d; ++v) CHECK(degree(cube, v) == (std::uint64_t{1} << (d - 1)));
  }
}

TEST_CASE("neighborhood") {
  const auto f = down_closure(fam(3, {SetMask{0, 1, 2}}));
  CHECK(neighborhood(f, 0) == SetMask{0, 1, 2});
  const auto g = fam(3, {SetMask{0}});
  CHECK(neighborhood(g, 2) == SetMask{});       // isolated
  CHECK(neighborhood(g, 0) == SetMask{0});      // v in V_v iff non-isolated
}

TEST_CASE("hereditary and down_closure") {
  const auto f = fam(2, {SetMask{0, 1}});
  const auto dc = down_closure(f);
  CHECK(dc.size() == 4);
  CHECK(is_hereditary(dc));
  // Idempotence.
  CHECK(down_closure(dc.family()) == dc);
  // {{0,1},{1,2}} -> 7 edges (two 4-set power sets sharing {} and {1}).
  CHECK(down_closure(fam(3, {SetMask{0, 1}, SetMask{1, 2}})).size() == 7);
  CHECK_FALSE(is_hereditary(fam(2, {SetMask{0, 1}})));
  CHECK_THROWS_AS(HereditaryFamily::checked(fam(2, {SetMask{0, 1}})), std::domain_error);
}

TEST_CASE("down_closure is monotone and minimal (random)") {
  std::mt19937_64 rng(777);
  for (int iter = 0; iter < 100; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 5);
    SetFamily f = random_family(rng, n);
    SetFamily g = f;
    {  // g = f plus extra edges
      auto extra = random_family(rng, n);
      std::vector<SetMask> edges = f.edges();
      for (SetMask e : extra.edges()) edges.push_back(e);
      g = SetFamily(n, std::move(edges));
    }
    const auto cf = down_closure(f), cg = down_closure(g);
    for (SetMask e : cf.edges()) CHECK(cg.family().contains(e));  // monotone
    // Minimal: every edge of the closure is below some original edge.
    for (SetMask e : cf.edges()) {
      bool dominated = false;
      for (SetMask orig : f.edges()) dominated = dominated || e.subset_of(orig);
      CHECK(dominated);
    }
  }
}

TEST_CASE("sparse down_closure path (n > 24) agrees with dense") {
  const auto sparse = down_closure(fam(30, {SetMask{27, 28, 29}, SetMask{0, 1}}));
  CHECK(sparse.size() == 8 + 4 - 1);
  CHECK(is_hereditary(sparse));
}

TEST_CASE("trace identity for hereditary families, exhaustive n <= 4") {
  // |trace(F, V \ {x})| == |F| - degree(F, x) for hereditary F.
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t space = std::uint64_t{1} << (std::uint64_t{1} << n);
    for (std::uint64_t w = 0; w < space; ++w) {
      // Build family from the bitmask of subset ranks; skip non-hereditary.
      std::vector<SetMask> edges;
      for (int k = 0; k < (1 << n); ++k)
        if (w >> k & 1) edges.push_back(SetMask(static_cast<std::uint64_t>(k)));
      SetFamily f(n, std::move(edges));
      if (!is_hereditary(f)) continue;
      for (int x = 0; x < n; ++x) {
        const auto t = trace(f, SetMask::full(n).without(x));
        CHECK(t.size() == f.size() - degree(f, x));
        // Link cardinality identity.
        CHECK(link(f, x).size() == degree(f, x));
      }
    }
    if (n == 4) break;  // n=4 scan is 65536 words; inner loops above are cheap
  }
}

TEST_CASE("relabel and disjoint_union") {
  const SetFamily r6 = colex_initial(6, 3);
  CHECK(relabel(r6, {0, 1, 2}) == r6);
  const auto swapped = relabel(r6, {1, 0, 2});
  CHECK(swapped.size() == r6.size());
  auto ds = degree_sequence(r6), dt = degree_sequence(swapped);
  std::sort(ds.begin(), ds.end());
  std::sort(dt.begin(), dt.end());
  CHECK(ds == dt);
  CHECK_THROWS_AS(relabel(r6, {0, 0, 1}), std::domain_error);

  const SetFamily cube2 = colex_initial(4, 2);
  const auto uni = disjoint_union(cube2, cube2);
  CHECK(uni.ground_size() == 4);
  CHECK(uni.size() == 7);  // 4 + 4 - shared empty set
  const auto with_empty = disjoint_union(cube2, fam(2, {SetMask{}}));
  CHECK(with_empty.size() == 4);
  CHECK(with_empty.ground_size() == 4);
}

TEST_CASE("find_shattered") {
  const SetFamily cube2in3 = colex_initial(4, 3);
  auto t = find_shattered(cube2in3, 2);
  REQUIRE(t.has_value());
  CHECK(*t == SetMask{0, 1});
  // All pair traces of {},{0},{1},{2} have at most 3 sets.
  const auto stars = fam(3, {SetMask{}, SetMask{0}, SetMask{1}, SetMask{2}});
  CHECK_FALSE(find_shattered(stars, 2).has_value());
}

TEST_CASE("shattering guarantee, exhaustive n <= 4") {
  // Whenever |F| > sum_{i<s} C(n,i) some s-set is shattered.
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t space = std::uint64_t{1} << (std::uint64_t{1} << n);
    for (std::uint64_t w = 0; w < space; ++w) {
      std::vector<SetMask> edges;
      for (int k = 0; k < (1 << n); ++k)
        if (w >> k & 1) edges.push_back(SetMask(static_cast<std::uint64_t>(k)));
      const SetFamily f(n, std::move(edges));
      for (int s = 0; s <= n; ++s) {
        std::uint64_t bound = 0;
        for (int i = 0; i < s; ++i) bound += binomial(n, i);
        if (f.size() > bound) CHECK(find_shattered(f, s).has_value());
      }
    }
  }
}

TEST_CASE("level_profile") {
  const SetFamily r6 = colex_initial(6, 3);
  CHECK(level_profile(r6).counts == std::vector<std::uint64_t>{1, 3, 2, 0});
  const SetFamily cube4 = colex_initial(16, 4);
  CHECK(level_profile(cube4).counts == std::vector<std::uint64_t>{1, 4, 6, 4, 1});
  CHECK(level_profile(r6).total() == r6.size());
}

TEST_CASE("strip_isolated") {
  const auto f = fam(5, {SetMask{1}, SetMask{1, 4}});
  auto [g, labels] = strip_isolated(f);
  CHECK(g.ground_size() == 2);
  CHECK(labels == std::vector<ElementId>{1, 4});
  CHECK(g == fam(2, {SetMask{0}, SetMask{0, 1}}));
}
