#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tracelab/family.hpp"
#include "tracelab/rational.hpp"
#include "tracelab/weights.hpp"

namespace tracelab {

enum class CheckOutcome { pass, fail, skipped };

std::string to_string(CheckOutcome o);

/// A concrete violation, re-verifiable in isolation: the family (when the
/// check is about families), the violated clause, and both exact sides.
struct Counterexample {
  std::optional<SetFamily> family;
  std::string clause;
  std::string lhs;
  std::string rhs;
  std::string params;
};

struct CheckReport {
  std::string check_id;
  std::string params;
  std::uint64_t examined = 0;
  std::uint64_t passed = 0;
  std::uint64_t skipped = 0;
  CheckOutcome outcome = CheckOutcome::pass;
  std::optional<Counterexample> counterexample;
  std::optional<Rational> min_slack;
  std::int64_t millis = 0;
};

/// Verifies the generalized Kruskal-Katona inequality for every hereditary
/// family on up to n_max (<= 5) labeled vertices and every function in the
/// battery. Reports the minimum slack seen.
CheckReport check_katona(int n_max, const std::vector<WeightFn>& battery, int jobs = 1);

/// Exhaustively checks the three clauses of the local weight lemma for the
/// given (d, c): (i) weight >= W(2^d - c) for |H| >= 2^d - c; (ii) surplus
/// 1/6 with at least d+1 non-isolated vertices; (iii) for c in {2,3},
/// surplus min(1/6, 1/d) unless H is the colex initial segment up to
/// isolated vertices. Requires d >= 4, c <= 2^d, n_max <= 6. Parameter
/// combinations with no qualifying family are reported skipped.
CheckReport check_lemma_3_1(int d, int c, int n_max, int jobs = 1);

/// Exhaustively checks both clauses of the local degree lemma on families
/// over exactly d (<= 6) vertices: few edges force many low-degree vertices,
/// and high minimum degree forces many edges.
CheckReport check_lemma_3_2(int d, int c, int jobs = 1);

/// Verifies the hereditary-reduction lemma at ground size n (<= 4): the
/// arrowing decision restricted to hereditary families coincides with the
/// unrestricted one for every (m, a, b).
CheckReport check_lemma_2_1(int n);

/// Sweeps the numeric bound over d in [d_lo, d_hi], c in [1, 2^{d-2}].
CheckReport check_bound_2_1(int d_lo, int d_hi, double tol = 1e-9);

// ---------------------------------------------------------------------------
// Weight replay
// ---------------------------------------------------------------------------

enum class ReplayScheme { main, small_c };

std::string to_string(ReplayScheme s);

enum class VertexClass { heavy, cluster_l1, cluster_l2, outside };

std::string to_string(VertexClass c);

/// The partition of the vertex set used by the weight argument: a maximum
/// set of light vertices with pairwise disjoint neighborhoods (the clusters),
/// heavy vertices, and the remaining outside vertices with their anchors.
struct VertexClassification {
  std::vector<VertexClass> vertex_class;   // per vertex
  std::vector<ElementId> light;            // light vertices, active scheme definition
  std::vector<ElementId> chosen;           // the maximum disjoint set L
  std::vector<char> chosen_is_l2;          // per entry of chosen
  std::vector<SetMask> clusters;           // V_v per entry of chosen
  std::vector<int> cluster_of;             // per vertex: index into chosen, or -1
  std::vector<int> anchor;                 // per vertex: index into chosen (outside class), or -1
  std::vector<SetMask> s_edges;            // the 3-edge set S (small_c scheme)
  int light_main_count = 0;                // |V_v| == d (info, both schemes)
  int light_small_c_count = -1;            // link iso to initial segment (info; -1 = not computed)
};

struct ReplayReport {
  ReplayScheme scheme = ReplayScheme::main;
  int d = 0;
  int c = 0;
  int n = 0;
  bool hypothesis_ok = false;
  std::string hypothesis_failure;
  bool pass = false;
  std::string failure;
  VertexClassification classification;
  std::vector<Rational> weights;  // per-vertex assigned weight
  std::vector<std::pair<std::string, Rational>> class_sums;  // label -> exact sum
  Rational total_weight;
  Rational per_vertex_target;   // (2^d - c)/d
  Rational required_total;      // n (2^d - c)/d
  std::uint64_t edge_count = 0;
  bool share_accounting_ok = false;  // per-edge sums <= 1, shares reproduce weights
  std::int64_t millis = 0;
};

/// Replays the non-uniform weight argument on a concrete family: classifies
/// vertices, assigns the scheme's exact weights, and checks (a) every
/// nonempty edge hands out at most a unit of weight, (b) every class meets
/// the per-vertex average (2^d - c)/d, and (c) the implied edge bound.
/// Families violating the scheme hypotheses are rejected with a reason
/// (pass = false, hypothesis_ok = false) unless `force` asks for the
/// diagnostic classification anyway.
ReplayReport replay_weights(const HereditaryFamily& f, int d, int c, ReplayScheme scheme, bool force = false);

namespace replay_detail {

/// Exact maximum independent set in the conflict graph, lexicographically
/// least among maximums. `conflict[i]` holds the neighbor bitmask of light
/// vertex i. Exposed for tests.
std::vector<int> max_disjoint_set(const std::vector<std::uint32_t>& conflict);

}  // namespace replay_detail

}  // namespace tracelab
