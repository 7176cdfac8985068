#include <doctest.h>

#include <algorithm>

#include "tracelab/colex.hpp"
#include "tracelab/constructions.hpp"
#include "tracelab/verify.hpp"

using namespace tracelab;

namespace {

bool all_of_class(const ReplayReport& rep, VertexClass k) {
  return std::all_of(rep.classification.vertex_class.begin(), rep.classification.vertex_class.end(),
                     [&](VertexClass v) { return v == k; });
}

// Two pair-disjoint carrier blocks plus one crossing pair edge between the
// blocks' top vertices.
HereditaryFamily f0_with_bridge(int d, int c, ElementId u, ElementId v) {
  const auto base = construct_f0(d, c, 2 * d);
  std::vector<SetMask> edges = base.edges();
  edges.push_back(SetMask{u, v});
  return down_closure(SetFamily(base.ground_size(), std::move(edges)));
}

}  // namespace

TEST_CASE("max_disjoint_set: exact and lexicographically least") {
  // Path 0-1-2: the maximum independent set is {0,2}.
  CHECK(replay_detail::max_disjoint_set({0b010, 0b101, 0b010}) == std::vector<int>{0, 2});
  // Triangle: singletons only, least first.
  CHECK(replay_detail::max_disjoint_set({0b110, 0b101, 0b011}) == std::vector<int>{0});
  // No conflicts: everything.
  CHECK(replay_detail::max_disjoint_set({0, 0, 0, 0}) == std::vector<int>{0, 1, 2, 3});
  CHECK(replay_detail::max_disjoint_set({}).empty());
  // Star at 0: {1,2,3} beats {0}.
  CHECK(replay_detail::max_disjoint_set({0b1110, 0b0001, 0b0001, 0b0001}) == std::vector<int>{1, 2, 3});
}

TEST_CASE("replay main on the two-block family (8,2,16)") {
  const auto f = construct_f0(8, 2, 16);
  const auto rep = replay_weights(f, 8, 2, ReplayScheme::main);
  CHECK(rep.hypothesis_ok);
  CHECK(rep.pass);
  CHECK(rep.share_accounting_ok);
  CHECK(all_of_class(rep, VertexClass::cluster_l1));
  REQUIRE(rep.classification.chosen.size() == 2);
  CHECK(rep.classification.chosen == std::vector<ElementId>{0, 8});
  // Each cluster sums to exactly 2^d - c = 254 = d * target.
  for (const auto& [label, sum] : rep.class_sums)
    if (label.find("cluster") != std::string::npos) CHECK(sum == Rational(254));
  CHECK(rep.total_weight == Rational(508));  // |F| - 1
  CHECK(rep.per_vertex_target == Rational(127, 4));
}

TEST_CASE("replay main with a crossing edge exercises the transfer term") {
  const auto f = f0_with_bridge(8, 2, 7, 15);
  const auto rep = replay_weights(f, 8, 2, ReplayScheme::main);
  CHECK(rep.hypothesis_ok);
  CHECK(rep.pass);
  CHECK(rep.share_accounting_ok);
  REQUIRE(rep.classification.chosen.size() == 2);
  CHECK(rep.classification.chosen_is_l2 == std::vector<char>{1, 1});
  // The bridge endpoint renounces delta = 1/2 - 1/6 = 1/3 of the crossing
  // pair, leaving each cluster at 254 + 1/2 - 1/3.
  for (const auto& [label, sum] : rep.class_sums)
    if (label.find("cluster") != std::string::npos) CHECK(sum == Rational(254) + Rational(1, 6));
  CHECK(rep.weights[7] == uniform_vertex_weight(f.family(), 7) - Rational(1, 3));
  CHECK(rep.weights[0] == uniform_vertex_weight(f.family(), 0));
}

TEST_CASE("replay small-c on carrier blocks with a bridge") {
  // d=5, c=3: blocks carry the first 30 colex sets; the bridge endpoints
  // lose lightness, one light vertex per block remains.
  const auto f = f0_with_bridge(5, 3, 4, 9);
  CHECK(min_degree(f.family()) == 14);
  const auto rep = replay_weights(f, 5, 3, ReplayScheme::small_c);
  CHECK(rep.hypothesis_ok);
  CHECK(rep.pass);
  CHECK(rep.share_accounting_ok);
  REQUIRE(rep.classification.chosen.size() == 2);
  CHECK(rep.classification.chosen_is_l2 == std::vector<char>{1, 1});
  CHECK(rep.classification.s_edges.empty());  // no outside vertices
  for (const auto& [label, sum] : rep.class_sums)
    if (label.find("cluster") != std::string::npos) CHECK(sum == Rational(59, 2));
  CHECK(rep.total_weight == Rational(59));
  CHECK(rep.required_total == Rational(58));
}

TEST_CASE("replay rejects out-of-hypothesis families with a reason") {
  // The non-local construction has min degree 12, one below the requirement
  // 2^{d-1}-c+1 = 13 for (d,c) = (5,4); a faithful replay must refuse it.
  const auto f = construct_5_1(5, 1);
  const auto rep = replay_weights(f, 5, 4, ReplayScheme::small_c);
  CHECK_FALSE(rep.hypothesis_ok);
  CHECK_FALSE(rep.pass);
  CHECK(rep.hypothesis_failure.find("min degree 12") != std::string::npos);

  // Scheme parameter gates.
  CHECK_FALSE(replay_weights(f, 5, 5, ReplayScheme::small_c).hypothesis_ok);  // c not in {3,4}
  CHECK_FALSE(replay_weights(construct_f0(5, 2, 10), 5, 2, ReplayScheme::main).hypothesis_ok);  // d < 4c
}

TEST_CASE("replay force mode classifies the rejected family honestly") {
  const auto f = construct_5_1(5, 1);
  const auto rep = replay_weights(f, 5, 4, ReplayScheme::small_c, /*force=*/true);
  CHECK_FALSE(rep.hypothesis_ok);
  CHECK_FALSE(rep.pass);
  // Every degree is 12, never the required link size 13: no light vertices,
  // everything is heavy under the small-c definition.
  CHECK(rep.classification.light.empty());
  CHECK(all_of_class(rep, VertexClass::heavy));
  CHECK(rep.share_accounting_ok);  // uniform weights still account exactly
  CHECK(rep.total_weight == Rational(53));
}

TEST_CASE("replay small-c with a populated S set (forced diagnostic)") {
  // One carrier block {0..4} with two satellite vertices: vertex 5's link is
  // the 14-set initial segment on {1,2,3,4}, vertex 6's on {2,3,4,7}. Their
  // neighborhoods overlap, so 5 is chosen and 6 stays outside with anchor 5;
  // the 3-edges from 6 into the cluster populate S. Vertex 7 keeps the
  // family below the degree hypothesis, so this runs forced.
  std::vector<SetMask> edges;
  for (std::uint64_t k = 0; k < 30; ++k) edges.push_back(SetMask(k));
  const std::vector<SetMask> link5 = {SetMask{},     SetMask{1},     SetMask{2},       SetMask{1, 2},
                                      SetMask{3},    SetMask{1, 3},  SetMask{2, 3},    SetMask{1, 2, 3},
                                      SetMask{4},    SetMask{1, 4},  SetMask{2, 4},    SetMask{1, 2, 4},
                                      SetMask{3, 4}, SetMask{1, 3, 4}};
  for (SetMask h : link5) edges.push_back(h.with(5));
  const std::vector<SetMask> link6 = {SetMask{},     SetMask{2},     SetMask{3},       SetMask{2, 3},
                                      SetMask{4},    SetMask{2, 4},  SetMask{3, 4},    SetMask{2, 3, 4},
                                      SetMask{7},    SetMask{2, 7},  SetMask{3, 7},    SetMask{2, 3, 7},
                                      SetMask{4, 7}, SetMask{2, 4, 7}};
  for (SetMask h : link6) edges.push_back(h.with(6));
  const auto f = down_closure(SetFamily(8, std::move(edges)));

  CHECK(degree(f.family(), 5) == 14);
  CHECK(degree(f.family(), 6) == 14);

  const auto rep = replay_weights(f, 5, 3, ReplayScheme::small_c, /*force=*/true);
  CHECK_FALSE(rep.hypothesis_ok);  // vertex 7 has degree 12 < 14
  CHECK(rep.share_accounting_ok);
  CHECK(rep.classification.light == std::vector<ElementId>{5, 6});
  REQUIRE(rep.classification.chosen == std::vector<ElementId>{5});
  CHECK(rep.classification.vertex_class[6] == VertexClass::outside);
  CHECK(rep.classification.anchor[6] == 0);
  CHECK(rep.classification.s_edges.size() == 6);
  // The renounce/gain terms: vertices 2,3,4 sit in three S-edges each,
  // vertex 6 in all six.
  CHECK(rep.weights[2] == uniform_vertex_weight(f.family(), 2) - Rational(1, 3));
  CHECK(rep.weights[3] == uniform_vertex_weight(f.family(), 3) - Rational(1, 3));
  CHECK(rep.weights[6] == uniform_vertex_weight(f.family(), 6) + Rational(1, 3));
  CHECK(rep.weights[1] == uniform_vertex_weight(f.family(), 1));
}

TEST_CASE("replay resource gate") {
  // 25 non-isolated vertices exceed the classification limit.
  std::vector<SetMask> edges;
  for (int v = 0; v < 25; ++v) edges.push_back(SetMask{static_cast<ElementId>(v)});
  edges.push_back(SetMask{});
  const auto f = HereditaryFamily::checked(SetFamily(25, std::move(edges)));
  CHECK_THROWS_AS(replay_weights(f, 8, 2, ReplayScheme::main), resource_error);
}
