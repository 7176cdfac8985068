#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tracelab/enumeration.hpp"
#include "tracelab/family.hpp"

namespace tracelab {

enum class SolveBackend { exhaustive, branch_and_bound, formula };

std::string to_string(SolveBackend b);

struct SolveOptions {
  SolveBackend backend = SolveBackend::exhaustive;
  int jobs = 1;
  std::optional<std::chrono::milliseconds> timeout;
};

/// An exact m(n,s) value with a minimal witness and an optimality flag.
/// value+1 is the minimum edge count of a hereditary family on n labeled
/// vertices in which every vertex has degree >= s+1; the witness attains it.
/// When s+1 exceeds the largest possible degree 2^{n-1}, no family
/// constrains the trace deletion and arrowing never fails: value = 2^n,
/// witness absent, never_fails set.
struct SolveResult {
  int n = 0;
  std::uint64_t s = 0;
  std::uint64_t value = 0;
  std::optional<HereditaryFamily> witness;
  bool optimal = false;
  bool never_fails = false;
  bool timed_out = false;
  SolveBackend backend = SolveBackend::exhaustive;
  std::uint64_t nodes_explored = 0;  // traversal stat; not part of the payload
  std::int64_t millis = 0;
};

/// Exact computation of m(n,s). Exhaustive backend requires n <= 6;
/// branch-and-bound accepts n <= 8 (best effort under the timeout; partial
/// results come back with optimal=false).
SolveResult m_exact(int n, std::uint64_t s, const SolveOptions& options = {});

/// Re-validates a witness independently of any search: hereditary, spanning
/// min degree >= s+1, |witness| == value+1.
bool validate_witness(const SetFamily& witness, std::uint64_t s, std::uint64_t value);

struct ArrowQuery {
  int n = 0;
  std::uint64_t m = 0;
  int a = 0;
  std::int64_t b = 0;
  bool hereditary_only = false;
};

struct ArrowResult {
  bool holds = true;
  std::optional<SetFamily> counterexample;  // least failing family in colex word order
};

/// Decides (n,m) -> (a,b): every family (hereditary families only, when
/// flagged) with at least m edges has an a-set whose trace has at least b
/// sets. The unrestricted scan requires n <= 4; the hereditary scan n <= 6.
ArrowResult arrows_decision(const ArrowQuery& query);

enum class FormulaSource { thm_1_2, thm_1_3, thm_1_4 };

std::string to_string(FormulaSource s);

/// A closed-form claim m(n, 2^{d-1}-c) = n(2^d-c)/d with its source regime
/// and caveat flags.
struct FormulaClaim {
  int d = 0;
  int c = 0;
  int n = 0;
  std::uint64_t s = 0;
  std::uint64_t value = 0;
  FormulaSource source = FormulaSource::thm_1_2;
  std::vector<std::string> caveats;
};

/// Requires d | n and a covered (d,c) regime; throws std::domain_error
/// otherwise. The s=2^{d-1}-c parametrizations for (d=3, c in {3,4}) with
/// n > 3 collide with the d=2 ones and carry a caveat flag; use m_exact to
/// adjudicate (see the table subcommand).
FormulaClaim m_formula(int d, int c, int n);

/// All formula claims whose regime covers (n, s), for conflict reporting.
std::vector<FormulaClaim> applicable_formulas(int n, std::uint64_t s);

/// A validated witness-based upper bound m(n,s) <= bound.
struct UpperBound {
  int n = 0;
  std::uint64_t s = 0;
  std::uint64_t bound = 0;
  HereditaryFamily witness;
};

/// Checks the certificate (hereditary with min degree >= s+1) and converts it
/// into the bound m(n,s) <= |f| - 1. Throws std::domain_error when the
/// certificate does not validate.
UpperBound upper_bound_from_witness(const HereditaryFamily& f, std::uint64_t s);

/// Glues two witnesses on disjoint vertex sets: m(n1+n2, s) <= m1 + m2 + 1.
/// Requires equal s and present witnesses.
UpperBound subadditive_combine(const SolveResult& r1, const SolveResult& r2);

}  // namespace tracelab
