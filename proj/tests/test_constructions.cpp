#include <doctest.h>

#include <algorithm>

#include "tracelab/colex.hpp"
#include "tracelab/constructions.hpp"
#include "tracelab/iso.hpp"
#include "tracelab/rational.hpp"
#include "tracelab/solver.hpp"

using namespace tracelab;

TEST_CASE("construct_f0 examples") {
  // Two full pair blocks.
  const auto f = construct_f0(2, 1, 4);
  CHECK(f.size() == 7);
  CHECK(min_degree(f.family()) == 2);
  const SetFamily expected(4, {SetMask{}, SetMask{0}, SetMask{1}, SetMask{0, 1}, SetMask{2}, SetMask{3}, SetMask{2, 3}});
  CHECK(f.family() == expected);

  // Single block: the colex initial segment itself.
  const auto g = construct_f0(3, 3, 3);
  CHECK(g.size() == 6);
  CHECK(min_degree(g.family()) == 2);
  CHECK(g.family() == colex_initial(6, 3).family());

  const auto h = construct_f0(4, 3, 8);
  CHECK(h.size() == 27);  // 2*13 + 1
  CHECK(min_degree(h.family()) == 6);

  CHECK_THROWS_AS(construct_f0(3, 1, 7), std::domain_error);
  CHECK_THROWS_AS(construct_f0(2, 3, 4), std::domain_error);  // c > 2^{d-1}
}

TEST_CASE("construct_f0 counts and degrees across the grid") {
  for (int d = 2; d <= 8; ++d) {
    for (int c = 1; c <= std::min(4, 1 << (d - 1)); ++c) {
      for (int n : {d, 2 * d}) {
        const auto f = construct_f0(d, c, n);
        CHECK(is_hereditary(f.family()));
        const std::uint64_t expect_edges =
            static_cast<std::uint64_t>(n / d) * ((std::uint64_t{1} << d) - static_cast<std::uint64_t>(c)) + 1;
        CHECK(f.size() == expect_edges);
        CHECK(min_degree(f.family()) == (std::uint64_t{1} << (d - 1)) - static_cast<std::uint64_t>(c) + 1);
        // Per-block restriction is the colex initial segment up to relabeling,
        // and the block's top vertex attains the minimum degree exactly.
        const SetMask block0 = SetMask::full(d);
        const auto restricted = trace(f.family(), block0);
        CHECK(iso_up_to_isolated(restricted, colex_initial((std::uint64_t{1} << d) - static_cast<std::uint64_t>(c) + 1).family()));
        CHECK(degree(f.family(), d - 1) == min_degree(f.family()));
      }
    }
  }
}

TEST_CASE("construct_5_1 examples") {
  const auto f = construct_5_1(5, 1);
  CHECK(f.ground_size() == 10);
  CHECK(f.size() == 54);
  const auto deg = degree_sequence(f.family());
  for (auto dv : deg) CHECK(dv == 12);
  CHECK(is_hereditary(f.family()));

  const auto g = construct_5_1(5, 2);
  CHECK(g.ground_size() == 20);
  CHECK(g.size() == 107);

  const auto h = construct_5_1(6, 1);
  CHECK(h.size() == 116);
  for (auto dv : degree_sequence(h.family())) CHECK(dv == 27);

  CHECK_THROWS_AS(construct_5_1(4, 1), std::domain_error);
  CHECK_THROWS_AS(construct_5_1(5, 0), std::domain_error);
}

TEST_CASE("construct_5_1 regularity and edge formula on the (d,k) grid") {
  for (int d = 5; d <= 8; ++d) {
    for (int k = 1; k <= 3; ++k) {
      if (2 * d * k > 48) continue;
      const auto f = construct_5_1(d, k);
      const int n = 2 * d * k;
      // (2^d - d - 1/2) n/d + 1, doubled to stay integral.
      const std::uint64_t expect2 =
          ((std::uint64_t{2} << d) - 2 * static_cast<std::uint64_t>(d) - 1) * static_cast<std::uint64_t>(n) /
              static_cast<std::uint64_t>(d) +
          2;
      CHECK(2 * f.size() == expect2);
      const auto deg = degree_sequence(f.family());
      for (auto dv : deg) CHECK(dv == (std::uint64_t{1} << (d - 1)) - static_cast<std::uint64_t>(d) + 1);
    }
  }
}

TEST_CASE("construct_5_1 seeded distinguished vertices") {
  const auto a = construct_5_1(5, 1, 7);
  const auto b = construct_5_1(5, 1, 7);
  CHECK(a.family() == b.family());  // same seed, same family
  CHECK(a.size() == 54);
  for (auto dv : degree_sequence(a.family())) CHECK(dv == 12);
}

TEST_CASE("construct_powerset_blocks") {
  const auto f = construct_powerset_blocks(3, 6, 0);
  CHECK(f.size() == 15);
  CHECK(min_degree(f.family()) == 4);
  const auto g = construct_powerset_blocks(3, 3, 1);
  CHECK(g.size() == 7);
  CHECK(min_degree(g.family()) == 3);
  const auto h = construct_powerset_blocks(1, 3, 0);
  CHECK(h.family() == SetFamily(3, {SetMask{}, SetMask{0}, SetMask{1}, SetMask{2}}));
  CHECK_THROWS_AS(construct_powerset_blocks(3, 6, 3), std::domain_error);
}

TEST_CASE("certify") {
  const auto c51 = construct_5_1(5, 1);
  const auto rep = certify(c51.family(), 11, 54, 12);
  CHECK(rep.pass);
  CHECK(rep.implied_bound == 53);
  CHECK(rep.edge_count == 54);
  CHECK(rep.min_degree == 12);
  CHECK(rep.degree_histogram[12] == 10);

  const auto f0 = construct_f0(2, 1, 4);
  const auto rep2 = certify(f0.family(), 1);
  CHECK(rep2.pass);
  CHECK(rep2.implied_bound == 6);

  // Wrong s: min degree too low.
  const auto bad = certify(c51.family(), 12);
  CHECK_FALSE(bad.pass);
  CHECK_FALSE(bad.failure.empty());

  // Wrong claimed count.
  const auto bad2 = certify(c51.family(), 11, 55, std::nullopt);
  CHECK_FALSE(bad2.pass);
}

TEST_CASE("bound chain at d=5: non-local beats every block construction") {
  const auto rep = certify(construct_5_1(5, 1).family(), 11, 54, 12);
  REQUIRE(rep.pass);
  // 53/10 < m(5,11)/5 = 27/5, the strict gap the construction certifies.
  CHECK(Rational(static_cast<std::int64_t>(rep.implied_bound), 10) < Rational(27, 5));
  SolveOptions opt;
  const auto local = m_exact(5, 11, opt);
  CHECK(local.value == 27);
}
