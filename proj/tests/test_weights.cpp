#include <doctest.h>

#include <random>

#include "tracelab/weights.hpp"

using namespace tracelab;

namespace {

// Direct oracle: materialize R(m) and sum f over it.
Rational colex_weight_oracle(std::uint64_t m) {
  Rational total(0);
  for (std::uint64_t k = 0; k < m; ++k) total += Rational(1, std::popcount(k) + 1);
  return total;
}

}  // namespace

TEST_CASE("Rational basics") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4).to_fraction_string() == "-1/2");
  CHECK((Rational(7, 3) + Rational(1, 6)) == Rational(5, 2));
  CHECK(Rational(1, 3).to_decimal_string(6) == "0.333333");
  CHECK(Rational(5).to_decimal_string(2) == "5.00");
  CHECK(Rational::from_string("28/5") == Rational(28, 5));
  CHECK(Rational::from_string("-3") == Rational(-3));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational::from_string("x/y"), std::invalid_argument);
  CHECK(Rational(1, 3) < Rational(34, 100));
}

TEST_CASE("WeightFn invariant enforcement") {
  CHECK_THROWS_AS(WeightFn({Rational(1), Rational(2)}, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(WeightFn({Rational(1)}, Rational(2)), std::invalid_argument);
  const auto f = WeightFn::reciprocal();
  CHECK(f(0) == Rational(1));
  CHECK(f(3) == Rational(1, 4));
  const auto s = WeightFn::step(1);
  CHECK(s(1) == Rational(1));
  CHECK(s(2) == Rational(0));
}

TEST_CASE("family_weight examples") {
  const SetFamily r5 = colex_initial(5, 3);
  // 1 + 1/2 + 1/2 + 1/3 + 1/2 = 17/6
  CHECK(family_weight(r5, WeightFn::reciprocal()) == Rational(17, 6));
  CHECK(family_weight(r5, WeightFn::one()) == Rational(5));
  const SetFamily cube3 = colex_initial(8, 3);
  CHECK(family_weight(cube3, WeightFn::reciprocal()) == Rational(15, 4));
}

TEST_CASE("W values") {
  CHECK(colex_weight(1) == Rational(1));
  CHECK(colex_weight(4) == Rational(7, 3));   // (2^3-1)/3
  CHECK(colex_weight(6) == Rational(19, 6));  // W(4) + 1/2 + 1/3
  // W(2^{d-1}) == (2^d - 1)/d.
  for (int d = 1; d <= 16; ++d)
    CHECK(colex_weight(std::uint64_t{1} << (d - 1)) ==
          Rational((std::int64_t{1} << d) - 1, d));
  CHECK_THROWS_AS(colex_weight(kColexCapacity + 1), std::length_error);
}

TEST_CASE("W against direct enumeration oracle") {
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 25; ++iter) {
    const std::uint64_t m = rng() % 4096;
    CHECK(colex_weight(m) == colex_weight_oracle(m));
  }
}

TEST_CASE("W is strictly increasing with the right increments") {
  for (std::uint64_t m = 0; m < 512; ++m) {
    CHECK(colex_weight(m + 1) - colex_weight(m) ==
          Rational(1, SetMask(m).size() + 1));
    CHECK(colex_weight(m + 1) > colex_weight(m));
  }
}

TEST_CASE("katona_bound") {
  CHECK(katona_bound(4, WeightFn::reciprocal()) == Rational(7, 3));
  CHECK(katona_bound(0, WeightFn::reciprocal()) == Rational(0));
  // R(6) has 1 empty set + 3 singletons.
  CHECK(katona_bound(6, WeightFn::step(1)) == Rational(4));
  // Monotone non-decreasing in m for non-negative f.
  for (const auto& f : standard_weight_battery())
    for (std::uint64_t m = 0; m < 128; ++m) CHECK(katona_bound(m + 1, f) >= katona_bound(m, f));
}

TEST_CASE("uniform_vertex_weight") {
  const SetFamily cube2 = colex_initial(4, 2);
  CHECK(uniform_vertex_weight(cube2, 0) == Rational(3, 2));
  const SetFamily iso(3, {SetMask{0}});
  CHECK(uniform_vertex_weight(iso, 2) == Rational(0));
  // Sum over vertices equals the number of nonempty edges.
  const SetFamily r6 = colex_initial(6, 3);
  Rational total(0);
  for (int v = 0; v < 3; ++v) total += uniform_vertex_weight(r6, v);
  CHECK(total == Rational(5));
}

TEST_CASE("bound (2.1)") {
  {
    const auto r = bound_2_1_holds(4, 2);
    CHECK(r.holds);
    CHECK(r.lhs == Rational(19, 6));
    CHECK(r.rhs == doctest::Approx(15.0 / 4 - 2.0 / 3).epsilon(1e-12));
    CHECK_FALSE(r.outside_paper_use);
  }
  {
    const auto r = bound_2_1_holds(3, 2);
    CHECK(r.holds);
    CHECK(r.lhs == Rational(3, 2));
    CHECK(r.rhs == doctest::Approx(7.0 / 3 - 1.0).epsilon(1e-12));
  }
  CHECK(bound_2_1_holds(4, 1).outside_paper_use);
  CHECK_THROWS_AS(bound_2_1_holds(1, 1), std::domain_error);
  CHECK_THROWS_AS(bound_2_1_holds(4, 5), std::domain_error);
  // Exhaustive sweep: holds on the full documented grid.
  for (int d = 4; d <= 12; ++d)
    for (int c = 1; c <= (1 << (d - 2)); ++c) CHECK(bound_2_1_holds(d, c).holds);
}

TEST_CASE("battery") {
  CHECK(standard_weight_battery().size() >= 4);
}
