#include "tracelab/weights.hpp"

#include <cmath>

namespace tracelab {

WeightFn::WeightFn(std::vector<Rational> table, Rational tail) : table_(std::move(table)), tail_(std::move(tail)) {
  if (table_.empty()) throw std::invalid_argument("WeightFn: empty table");
  for (std::size_t i = 0; i + 1 < table_.size(); ++i)
    if (table_[i] < table_[i + 1]) throw std::invalid_argument("WeightFn: table not non-increasing");
  if (table_.back() < tail_) throw std::invalid_argument("WeightFn: tail exceeds last table value");
}

WeightFn WeightFn::reciprocal(int max_k) {
  std::vector<Rational> t;
  for (int k = 0; k <= max_k; ++k) t.emplace_back(1, k + 1);
  const Rational tail = t.back();
  return WeightFn(std::move(t), tail).set_name("1/(k+1)");
}

WeightFn WeightFn::one() { return WeightFn({Rational(1)}, Rational(1)).set_name("1"); }

WeightFn WeightFn::step(int threshold) {
  if (threshold < 0) throw std::invalid_argument("WeightFn::step: negative threshold");
  std::vector<Rational> t(static_cast<std::size_t>(threshold) + 1, Rational(1));
  return WeightFn(std::move(t), Rational(0)).set_name("step<=" + std::to_string(threshold));
}

WeightFn WeightFn::geometric(int max_k) {
  std::vector<Rational> t;
  Rational cur(1);
  const Rational half(1, 2);
  for (int k = 0; k <= max_k; ++k, cur *= half) t.push_back(cur);
  const Rational tail = t.back();
  return WeightFn(std::move(t), tail).set_name("1/2^k");
}

WeightFn WeightFn::linear_clip(int c) {
  if (c <= 0) throw std::invalid_argument("WeightFn::linear_clip: c must be positive");
  std::vector<Rational> t;
  for (int k = 0; k <= c; ++k) t.emplace_back(c - k, c);
  return WeightFn(std::move(t), Rational(0)).set_name("max(0,(c-k)/c),c=" + std::to_string(c));
}

Rational family_weight(const SetFamily& family, const WeightFn& f) {
  const LevelProfile p = level_profile(family);
  Rational total(0);
  for (std::size_t k = 0; k < p.counts.size(); ++k)
    if (p.counts[k] != 0) total += Rational(static_cast<std::int64_t>(p.counts[k])) * f(static_cast<int>(k));
  return total;
}

Rational colex_weight(std::uint64_t m) {
  if (m > kColexCapacity) throw std::length_error("colex_weight: m exceeds capacity");
  const auto cnt = colex_initial_profile(m);
  Rational total(0);
  for (std::size_t t = 0; t < cnt.size(); ++t)
    if (cnt[t] != 0) total += Rational(static_cast<std::int64_t>(cnt[t]), static_cast<std::int64_t>(t) + 1);
  return total;
}

Rational katona_bound(std::uint64_t m, const WeightFn& f) {
  if (m > kColexCapacity) throw std::length_error("katona_bound: m exceeds capacity");
  const auto cnt = colex_initial_profile(m);
  Rational total(0);
  for (std::size_t t = 0; t < cnt.size(); ++t)
    if (cnt[t] != 0) total += Rational(static_cast<std::int64_t>(cnt[t])) * f(static_cast<int>(t));
  return total;
}

Rational uniform_vertex_weight(const SetFamily& family, ElementId v) {
  if (v < 0 || v >= family.ground_size()) throw std::domain_error("uniform_vertex_weight: vertex out of range");
  Rational total(0);
  for (SetMask e : family.edges())
    if (e.contains(v)) total += Rational(1, e.size());
  return total;
}

Bound21Result bound_2_1_holds(int d, int c, double tol) {
  if (d < 2) throw std::domain_error("bound_2_1_holds: requires d >= 2");
  if (c < 1 || static_cast<std::uint64_t>(c) > (std::uint64_t{1} << (d - 2)))
    throw std::domain_error("bound_2_1_holds: requires 1 <= c <= 2^{d-2}");
  Bound21Result r;
  r.d = d;
  r.c = c;
  r.outside_paper_use = (c == 1);
  r.lhs = colex_weight((std::uint64_t{1} << (d - 1)) - static_cast<std::uint64_t>(c));
  const double log_c = (c == 1) ? 0.0 : std::log2(static_cast<double>(c));
  r.rhs = (std::pow(2.0, d) - 1.0) / d - static_cast<double>(c) / (static_cast<double>(d) - log_c);
  r.slack = r.lhs.to_double() - r.rhs;
  r.holds = r.lhs.to_double() >= r.rhs - tol;
  return r;
}

std::vector<WeightFn> standard_weight_battery() {
  std::vector<WeightFn> fns;
  fns.push_back(WeightFn::reciprocal());
  fns.push_back(WeightFn::one());
  fns.push_back(WeightFn::step(1));
  fns.push_back(WeightFn::geometric());
  fns.push_back(WeightFn::linear_clip(3));
  return fns;
}

}  // namespace tracelab
