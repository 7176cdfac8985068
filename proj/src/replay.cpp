#include <algorithm>
#include <chrono>
#include <functional>

#include "tracelab/colex.hpp"
#include "tracelab/iso.hpp"
#include "tracelab/verify.hpp"

namespace tracelab {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kReplayMaxVertices = 24;

int ceil_log2(std::uint64_t m) {
  int b = 0;
  while ((std::uint64_t{1} << b) < m) ++b;
  return b;
}

}  // namespace

std::string to_string(ReplayScheme s) { return s == ReplayScheme::main ? "main" : "small-c"; }

std::string to_string(VertexClass c) {
  switch (c) {
    case VertexClass::heavy: return "heavy";
    case VertexClass::cluster_l1: return "cluster-l1";
    case VertexClass::cluster_l2: return "cluster-l2";
    case VertexClass::outside: return "outside";
  }
  return "?";
}

namespace replay_detail {

std::vector<int> max_disjoint_set(const std::vector<std::uint32_t>& conflict) {
  const int k = static_cast<int>(conflict.size());
  std::vector<int> best, cur;
  // Include-first DFS over ascending indices: the first maximum-size set
  // found is the lexicographically least one, so updates use strict >.
  std::function<void(int, std::uint32_t)> rec = [&](int i, std::uint32_t banned) {
    if (i == k) {
      if (cur.size() > best.size()) best = cur;
      return;
    }
    const int remaining = k - i;
    if (cur.size() + static_cast<std::size_t>(remaining) <= best.size()) return;
    if (!(banned >> i & 1)) {
      cur.push_back(i);
      rec(i + 1, banned | conflict[static_cast<std::size_t>(i)]);
      cur.pop_back();
    }
    rec(i + 1, banned);
  };
  rec(0, 0);
  return best;
}

}  // namespace replay_detail

ReplayReport replay_weights(const HereditaryFamily& hf, int d, int c, ReplayScheme scheme, bool force) {
  const auto start = Clock::now();
  const SetFamily& f = hf.family();
  const int n = f.ground_size();

  ReplayReport rep;
  rep.scheme = scheme;
  rep.d = d;
  rep.c = c;
  rep.n = n;
  rep.edge_count = f.size();

  if (d < 2 || c < 1 || static_cast<std::uint64_t>(c) > (std::uint64_t{1} << (d - 1)))
    throw std::domain_error("replay_weights: requires d >= 2 and 1 <= c <= 2^{d-1}");
  if (support(f).size() > kReplayMaxVertices)
    throw resource_error("replay_weights: more than 24 non-isolated vertices");

  const std::uint64_t min_deg_required = (std::uint64_t{1} << (d - 1)) - static_cast<std::uint64_t>(c) + 1;
  rep.hypothesis_ok = true;
  if (scheme == ReplayScheme::main && d < 4 * c) {
    rep.hypothesis_ok = false;
    rep.hypothesis_failure = "scheme main requires d >= 4c";
  } else if (scheme == ReplayScheme::small_c && (c < 3 || c > 4 || d < 5)) {
    rep.hypothesis_ok = false;
    rep.hypothesis_failure = "scheme small-c requires c in {3,4} and d >= 5";
  } else if (min_degree(f) < min_deg_required) {
    rep.hypothesis_ok = false;
    rep.hypothesis_failure = "hypothesis not met: min degree " + std::to_string(min_degree(f)) +
                             " below 2^{d-1}-c+1 = " + std::to_string(min_deg_required);
  }
  if (!rep.hypothesis_ok && !force) {
    rep.pass = false;
    rep.failure = rep.hypothesis_failure;
    rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    return rep;
  }

  // --- classification ------------------------------------------------------
  VertexClassification& cls = rep.classification;
  std::vector<SetMask> nbhd(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) nbhd[static_cast<std::size_t>(v)] = neighborhood(f, v);

  const std::uint64_t light_link_size = (std::uint64_t{1} << (d - 1)) - static_cast<std::uint64_t>(c - 1);
  std::optional<SetFamily> light_target;
  const int light_target_support = ceil_log2(light_link_size);
  if (scheme == ReplayScheme::small_c || d - 1 <= kIsoMaxVertices)
    light_target = colex_initial(light_link_size).family();

  auto is_light_small_c = [&](int v) {
    if (degree(f, v) != light_link_size) return false;
    const SetFamily lv = link(f, v);
    if (support(lv).size() != light_target_support) return false;
    if (light_target_support > kIsoMaxVertices)
      throw resource_error("replay_weights: light test needs isomorphism beyond 8 vertices");
    return iso_up_to_isolated(lv, *light_target);
  };
  auto is_light_main = [&](int v) { return nbhd[static_cast<std::size_t>(v)].size() == d; };

  cls.light_main_count = 0;
  for (int v = 0; v < n; ++v)
    if (is_light_main(v)) ++cls.light_main_count;
  if (scheme == ReplayScheme::small_c || (light_target && light_target_support <= kIsoMaxVertices)) {
    cls.light_small_c_count = 0;
    for (int v = 0; v < n; ++v)
      if (is_light_small_c(v)) ++cls.light_small_c_count;
  }

  for (int v = 0; v < n; ++v) {
    const bool light = scheme == ReplayScheme::main ? is_light_main(v) : is_light_small_c(v);
    if (light) cls.light.push_back(v);
  }

  // Maximum set of light vertices with pairwise disjoint neighborhoods, via
  // exact search on the conflict graph.
  {
    const auto k = cls.light.size();
    std::vector<std::uint32_t> conflict(k, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (i != j && !(nbhd[static_cast<std::size_t>(cls.light[i])] & nbhd[static_cast<std::size_t>(cls.light[j])]).empty())
          conflict[i] |= std::uint32_t{1} << j;
    for (int idx : replay_detail::max_disjoint_set(conflict)) cls.chosen.push_back(cls.light[static_cast<std::size_t>(idx)]);
  }
  for (ElementId v : cls.chosen) cls.clusters.push_back(nbhd[static_cast<std::size_t>(v)]);

  cls.cluster_of.assign(static_cast<std::size_t>(n), -1);
  for (std::size_t j = 0; j < cls.clusters.size(); ++j)
    for (ElementId v : cls.clusters[j].elements()) cls.cluster_of[static_cast<std::size_t>(v)] = static_cast<int>(j);

  // L1 vs L2: does any edge cross the cluster boundary?
  cls.chosen_is_l2.assign(cls.chosen.size(), 0);
  for (std::size_t j = 0; j < cls.chosen.size(); ++j) {
    const SetMask vv = cls.clusters[j];
    for (SetMask e : f.edges())
      if (!e.subset_of(vv) && !(e & vv).empty()) {
        cls.chosen_is_l2[j] = 1;
        break;
      }
  }

  cls.vertex_class.assign(static_cast<std::size_t>(n), VertexClass::heavy);
  for (int v = 0; v < n; ++v) {
    const int j = cls.cluster_of[static_cast<std::size_t>(v)];
    if (j >= 0) {
      cls.vertex_class[static_cast<std::size_t>(v)] =
          cls.chosen_is_l2[static_cast<std::size_t>(j)] ? VertexClass::cluster_l2 : VertexClass::cluster_l1;
    } else {
      const bool light = std::find(cls.light.begin(), cls.light.end(), v) != cls.light.end();
      cls.vertex_class[static_cast<std::size_t>(v)] = light ? VertexClass::outside : VertexClass::heavy;
    }
  }

  // Anchors: every outside vertex must reach some L2 cluster, else the
  // chosen set was not maximal (an internal inconsistency, never suppressed).
  cls.anchor.assign(static_cast<std::size_t>(n), -1);
  std::string internal_failure;
  for (int a = 0; a < n; ++a) {
    if (cls.vertex_class[static_cast<std::size_t>(a)] != VertexClass::outside) continue;
    for (std::size_t j = 0; j < cls.clusters.size(); ++j) {
      if (!(nbhd[static_cast<std::size_t>(a)] & cls.clusters[j]).empty()) {
        if (!cls.chosen_is_l2[j]) {
          internal_failure = "outside vertex " + std::to_string(a) + " meets an L1 cluster";
          break;
        }
        cls.anchor[static_cast<std::size_t>(a)] = static_cast<int>(j);
        break;
      }
    }
    if (!internal_failure.empty()) break;
    if (cls.anchor[static_cast<std::size_t>(a)] < 0) {
      internal_failure = "outside vertex " + std::to_string(a) +
                         " has no anchor; the chosen light set was not maximal";
      break;
    }
  }

  // S: 3-edges from inside an L2 cluster to an outside vertex (small-c).
  SetMask l2_union, outside_mask;
  for (std::size_t j = 0; j < cls.clusters.size(); ++j)
    if (cls.chosen_is_l2[j]) l2_union = l2_union | cls.clusters[j];
  for (int v = 0; v < n; ++v)
    if (cls.vertex_class[static_cast<std::size_t>(v)] == VertexClass::outside) outside_mask = outside_mask.with(v);
  if (scheme == ReplayScheme::small_c) {
    for (SetMask e : f.edges())
      if (e.size() == 3 && !(e & l2_union).empty() && !(e & outside_mask).empty()) cls.s_edges.push_back(e);
  }

  // --- weights and per-edge shares ----------------------------------------
  const Rational delta = Rational(1, 2) - Rational(c - 1, d - c);  // main-scheme transfer
  auto in_l2_cluster = [&](ElementId v) {
    const int j = cls.cluster_of[static_cast<std::size_t>(v)];
    return j >= 0 && cls.chosen_is_l2[static_cast<std::size_t>(j)];
  };

  std::vector<Rational> weight(static_cast<std::size_t>(n), Rational(0));
  auto count_s_edges_with = [&](ElementId v) {
    std::int64_t cnt = 0;
    for (SetMask e : cls.s_edges)
      if (e.contains(v)) ++cnt;
    return cnt;
  };
  for (int v = 0; v < n; ++v) {
    Rational w = uniform_vertex_weight(f, v);
    switch (cls.vertex_class[static_cast<std::size_t>(v)]) {
      case VertexClass::heavy:
      case VertexClass::cluster_l1:
        break;
      case VertexClass::cluster_l2:
        if (scheme == ReplayScheme::main) {
          const int j = cls.cluster_of[static_cast<std::size_t>(v)];
          const int outside_nb = nbhd[static_cast<std::size_t>(v)].minus(cls.clusters[static_cast<std::size_t>(j)]).size();
          w -= Rational(outside_nb) * delta;
        } else {
          w -= Rational(count_s_edges_with(v), 9);
        }
        break;
      case VertexClass::outside:
        if (scheme == ReplayScheme::main) {
          const int j = cls.anchor[static_cast<std::size_t>(v)];
          if (j >= 0) {
            const int shared = (nbhd[static_cast<std::size_t>(v)] & cls.clusters[static_cast<std::size_t>(j)]).size();
            w += Rational(shared) * delta;
          }
        } else {
          w += Rational(count_s_edges_with(v), 18);
        }
        break;
    }
    weight[static_cast<std::size_t>(v)] = w;
  }

  // Independent route: distribute each edge's unit weight into shares and
  // re-derive the vertex weights; also cap every edge at one unit.
  rep.share_accounting_ok = true;
  std::vector<Rational> from_shares(static_cast<std::size_t>(n), Rational(0));
  for (SetMask e : f.edges()) {
    if (e.empty()) continue;
    const Rational base(1, e.size());
    Rational edge_total(0);
    for (ElementId x : e.elements()) {
      Rational share = base;
      if (scheme == ReplayScheme::main && e.size() == 2) {
        const ElementId other = e.without(x).elements().front();
        if (in_l2_cluster(x) && cls.cluster_of[static_cast<std::size_t>(other)] != cls.cluster_of[static_cast<std::size_t>(x)])
          share -= delta;
        if (cls.vertex_class[static_cast<std::size_t>(x)] == VertexClass::outside) {
          const int j = cls.anchor[static_cast<std::size_t>(x)];
          if (j >= 0 && cls.clusters[static_cast<std::size_t>(j)].contains(other)) share += delta;
        }
      }
      if (scheme == ReplayScheme::small_c && e.size() == 3 &&
          std::find(cls.s_edges.begin(), cls.s_edges.end(), e) != cls.s_edges.end()) {
        if (in_l2_cluster(x)) share -= Rational(1, 9);
        if (cls.vertex_class[static_cast<std::size_t>(x)] == VertexClass::outside) share += Rational(1, 18);
      }
      from_shares[static_cast<std::size_t>(x)] += share;
      edge_total += share;
    }
    if (edge_total > Rational(1)) {
      rep.share_accounting_ok = false;
      rep.failure = "edge " + e.to_string() + " hands out " + edge_total.to_fraction_string() + " > 1";
    }
  }
  for (int v = 0; v < n && rep.share_accounting_ok; ++v) {
    if (from_shares[static_cast<std::size_t>(v)] != weight[static_cast<std::size_t>(v)]) {
      rep.share_accounting_ok = false;
      rep.failure = "share sum for vertex " + std::to_string(v) + " (" +
                    from_shares[static_cast<std::size_t>(v)].to_fraction_string() + ") != assigned weight (" +
                    weight[static_cast<std::size_t>(v)].to_fraction_string() + ")";
    }
  }

  rep.weights = weight;

  // --- class bounds ---------------------------------------------------------
  rep.per_vertex_target = Rational((std::int64_t{1} << d) - c, d);
  rep.required_total = rep.per_vertex_target * Rational(n);
  for (int v = 0; v < n; ++v) rep.total_weight += weight[static_cast<std::size_t>(v)];

  std::string bound_failure;
  Rational heavy_sum(0), outside_sum(0);
  int heavy_count = 0, outside_count = 0;
  for (int v = 0; v < n; ++v) {
    const auto klass = cls.vertex_class[static_cast<std::size_t>(v)];
    if (klass == VertexClass::heavy) {
      heavy_sum += weight[static_cast<std::size_t>(v)];
      ++heavy_count;
      if (weight[static_cast<std::size_t>(v)] < rep.per_vertex_target && bound_failure.empty())
        bound_failure = "heavy vertex " + std::to_string(v) + " has weight " +
                        weight[static_cast<std::size_t>(v)].to_fraction_string() + " < " +
                        rep.per_vertex_target.to_fraction_string();
    } else if (klass == VertexClass::outside) {
      outside_sum += weight[static_cast<std::size_t>(v)];
      ++outside_count;
      if (weight[static_cast<std::size_t>(v)] < rep.per_vertex_target && bound_failure.empty())
        bound_failure = "outside vertex " + std::to_string(v) + " has weight " +
                        weight[static_cast<std::size_t>(v)].to_fraction_string() + " < " +
                        rep.per_vertex_target.to_fraction_string();
    }
  }
  if (heavy_count > 0) rep.class_sums.emplace_back("heavy(" + std::to_string(heavy_count) + ")", heavy_sum);
  if (outside_count > 0) rep.class_sums.emplace_back("outside(" + std::to_string(outside_count) + ")", outside_sum);
  for (std::size_t j = 0; j < cls.chosen.size(); ++j) {
    Rational sum(0);
    for (ElementId v : cls.clusters[j].elements()) sum += weight[static_cast<std::size_t>(v)];
    const std::string label = std::string(cls.chosen_is_l2[j] ? "l2" : "l1") + "-cluster@" + std::to_string(cls.chosen[j]);
    rep.class_sums.emplace_back(label, sum);
    const Rational needed = rep.per_vertex_target * Rational(cls.clusters[j].size());
    if (sum < needed && bound_failure.empty())
      bound_failure = label + " sums to " + sum.to_fraction_string() + " < " + needed.to_fraction_string();
  }

  const Rational total_cap = Rational(static_cast<std::int64_t>(f.size())) - Rational(1);
  if (rep.total_weight > total_cap && bound_failure.empty())
    bound_failure = "total weight " + rep.total_weight.to_fraction_string() + " exceeds |F|-1 = " +
                    total_cap.to_fraction_string();

  rep.pass = rep.hypothesis_ok && rep.share_accounting_ok && internal_failure.empty() && bound_failure.empty();
  if (!rep.pass && rep.failure.empty()) {
    if (!rep.hypothesis_ok)
      rep.failure = rep.hypothesis_failure;
    else if (!internal_failure.empty())
      rep.failure = "internal consistency: " + internal_failure;
    else
      rep.failure = bound_failure;
  }
  // Conclusion check: with all class bounds in place the edge count is forced.
  if (rep.pass && Rational(static_cast<std::int64_t>(f.size())) < rep.required_total + Rational(1)) {
    rep.pass = false;
    rep.failure = "edge count " + std::to_string(f.size()) + " below implied bound " +
                  (rep.required_total + Rational(1)).to_fraction_string();
  }
  rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  return rep;
}

}  // namespace tracelab
