#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tracelab/colex.hpp"
#include "tracelab/family.hpp"
#include "tracelab/rational.hpp"

namespace tracelab {

/// A monotone non-increasing weight function on edge cardinalities: an
/// explicit table f(0..K) plus a constant value for every k > K. The
/// monotonicity requirement is enforced at construction, not promised.
class WeightFn {
public:
  WeightFn(std::vector<Rational> table, Rational tail);

  /// f(k) = 1/(k+1), tabulated up to `max_k`.
  static WeightFn reciprocal(int max_k = 64);
  /// f == 1.
  static WeightFn one();
  /// f(k) = 1 for k <= threshold, else 0.
  static WeightFn step(int threshold);
  /// f(k) = 1/2^k, tabulated up to `max_k`.
  static WeightFn geometric(int max_k = 64);
  /// f(k) = max(0, (c - k)/c).
  static WeightFn linear_clip(int c);

  const Rational& operator()(int k) const {
    if (k < 0) throw std::domain_error("WeightFn: negative cardinality");
    const auto i = static_cast<std::size_t>(k);
    return i < table_.size() ? table_[i] : tail_;
  }

  const std::vector<Rational>& table() const { return table_; }
  const Rational& tail() const { return tail_; }
  const std::string& name() const { return name_; }
  WeightFn& set_name(std::string n) { name_ = std::move(n); return *this; }

private:
  std::vector<Rational> table_;
  Rational tail_;
  std::string name_;
};

/// Sum of f(|F|) over the family's edges, exact.
Rational family_weight(const SetFamily& family, const WeightFn& f);

/// W(m) = sum over R(m) of 1/(|R|+1). Computed from the level profile of
/// R(m), so m up to the colex capacity is instant.
Rational colex_weight(std::uint64_t m);

/// Right-hand side of the generalized Kruskal-Katona bound: sum over R(m)
/// of f(|R|). colex_weight(m) == katona_bound(m, reciprocal).
Rational katona_bound(std::uint64_t m, const WeightFn& f);

/// Uniform vertex weight: sum over link edges H of 1/(|H|+1), i.e. each edge
/// distributes its unit weight equally over its vertices.
Rational uniform_vertex_weight(const SetFamily& family, ElementId v);

/// Outcome of the numeric bound W(2^{d-1}-c) >= (2^d-1)/d - c/(d - log2 c).
/// The left side is exact; the right side is the only floating-point value
/// in the library.
struct Bound21Result {
  int d = 0;
  int c = 0;
  Rational lhs;        // W(2^{d-1}-c), exact
  double rhs = 0.0;    // (2^d-1)/d - c/(d - log2 c)
  double slack = 0.0;  // double(lhs) - rhs
  bool holds = false;  // double(lhs) >= rhs - tol
  bool outside_paper_use = false;  // c == 1 (log 1 == 0 case)
};

/// Requires d >= 2 and 1 <= c <= 2^{d-2}.
Bound21Result bound_2_1_holds(int d, int c, double tol = 1e-9);

/// The default battery used by the exhaustive Katona checker.
std::vector<WeightFn> standard_weight_battery();

}  // namespace tracelab
