#include "tracelab/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>

#include "tracelab/colex.hpp"
#include "tracelab/iso.hpp"

namespace tracelab {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t required_degree(std::uint64_t s) { return s + 1; }

bool dense_min_degree_ok(const DenseCube& cube, const Word256& f, std::uint64_t delta) {
  for (int v = 0; v < cube.n(); ++v)
    if (static_cast<std::uint64_t>(dense_degree(cube, f, v)) < delta) return false;
  return true;
}

/// Canonical (orbit-least in colex word order) dense word of a spanning
/// family, via the family-level canonical form.
Word256 canonical_word(const DenseCube& cube, const Word256& w) {
  DenseFamily d{cube.n(), w};
  const SetFamily canon = canonical_form(d.to_family());
  // canonical_form strips isolated vertices; spanning inputs keep their n.
  Word256 out;
  for (SetMask e : canon.edges()) out.set(static_cast<int>(e.bits()));
  return out;
}

struct BnbBest {
  std::uint64_t edges = UINT64_MAX;
  Word256 canon;

  void offer(std::uint64_t e, const Word256& canon_word) {
    if (e < edges || (e == edges && canon_word < canon)) {
      edges = e;
      canon = canon_word;
    }
  }

  /// Canonicalization is the expensive step; only run it when the raw edge
  /// count can still improve or tie the incumbent.
  template <typename CanonFn>
  void offer_lazy(std::uint64_t e, CanonFn&& canon_fn) {
    if (e > edges) return;
    offer(e, canon_fn());
  }
};

struct BnbShared {
  std::atomic<std::uint64_t> best_edges{UINT64_MAX};
  std::optional<Clock::time_point> deadline;
  std::atomic<bool> timed_out{false};
};

class BnbWorker {
public:
  BnbWorker(const DenseCube& cube, std::uint64_t delta, BnbShared& shared)
      : cube_(cube), delta_(delta), shared_(shared) {}

  void search(const DenseNode& node) {
    ++nodes_;
    if ((nodes_ & 0xfff) == 0 && shared_.deadline && Clock::now() > *shared_.deadline) {
      shared_.timed_out.store(true, std::memory_order_relaxed);
    }
    if (shared_.timed_out.load(std::memory_order_relaxed)) return;

    const auto edges = static_cast<std::uint64_t>(node.edges);
    if (edges <= shared_.best_edges.load(std::memory_order_relaxed) &&
        dense_min_degree_ok(cube_, node.closure, delta_)) {
      best_.offer_lazy(edges, [&] { return canonical_word(cube_, node.closure); });
      // Shared incumbent only shrinks; stale reads merely weaken pruning.
      std::uint64_t cur = shared_.best_edges.load(std::memory_order_relaxed);
      while (edges < cur && !shared_.best_edges.compare_exchange_weak(cur, edges)) {
      }
      return;  // descendants only add edges
    }

    const Word256 avail = available(cube_, node);
    if (!prune_feasible(node, avail)) return;
    avail.for_each_bit([&](int m) {
      const DenseNode child = expand(cube_, node, m);
      if (lower_bound(child) > shared_.best_edges.load(std::memory_order_relaxed)) return;
      search(child);
    });
  }

  BnbBest best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

private:
  std::uint64_t lower_bound(const DenseNode& node) const {
    std::uint64_t max_def = 0, sum_def = 0;
    for (int v = 0; v < cube_.n(); ++v) {
      const auto deg = static_cast<std::uint64_t>(dense_degree(cube_, node.closure, v));
      if (deg < delta_) {
        max_def = std::max(max_def, delta_ - deg);
        sum_def += delta_ - deg;
      }
    }
    const auto n = static_cast<std::uint64_t>(std::max(cube_.n(), 1));
    const std::uint64_t by_total = (sum_def + n - 1) / n;
    return static_cast<std::uint64_t>(node.edges) + std::max(max_def, by_total);
  }

  bool prune_feasible(const DenseNode& node, const Word256& avail) const {
    const Word256 reach = node.closure | cube_.down_closure(avail);
    return dense_min_degree_ok(cube_, reach, delta_);
  }

  const DenseCube& cube_;
  std::uint64_t delta_;
  BnbShared& shared_;
  BnbBest best_;
  std::uint64_t nodes_ = 0;
};

SolveResult solve_exhaustive(int n, std::uint64_t s, const SolveOptions& options) {
  const std::uint64_t delta = required_degree(s);
  EnumFilter filter;
  filter.min_degree = delta;

  struct Fold {
    std::uint64_t best_edges = UINT64_MAX;
    Word256 best_word;
    std::uint64_t nodes = 0;
  };
  auto reducer = make_reducer<Fold>(
      Fold{},
      [](Fold& acc, const DenseCube&, const DenseNode& node) {
        ++acc.nodes;
        const auto e = static_cast<std::uint64_t>(node.edges);
        if (e < acc.best_edges || (e == acc.best_edges && node.closure < acc.best_word)) {
          acc.best_edges = e;
          acc.best_word = node.closure;
        }
      },
      [](Fold& acc, Fold&& other) {
        acc.nodes += other.nodes;
        if (other.best_edges < acc.best_edges ||
            (other.best_edges == acc.best_edges && other.best_word < acc.best_word)) {
          acc.best_edges = other.best_edges;
          acc.best_word = other.best_word;
        }
      });
  const Fold fold = enumerate_downsets_parallel(n, filter, reducer, options.jobs);
  if (fold.best_edges == UINT64_MAX)
    throw std::logic_error("m_exact: no witness found for a feasible degree demand");

  SolveResult res;
  res.n = n;
  res.s = s;
  res.backend = SolveBackend::exhaustive;
  res.value = fold.best_edges - 1;
  res.witness = HereditaryFamily::checked(DenseFamily{n, fold.best_word}.to_family());
  res.optimal = true;
  res.nodes_explored = fold.nodes;
  return res;
}

SolveResult solve_bnb(int n, std::uint64_t s, const SolveOptions& options) {
  const std::uint64_t delta = required_degree(s);
  const DenseCube cube(n);
  BnbShared shared;
  if (options.timeout) shared.deadline = Clock::now() + *options.timeout;

  // Seed the incumbent with cheap valid witnesses: a colex initial segment
  // reaching the degree everywhere, and block constructions for d | n.
  BnbBest seed;
  {
    const std::uint64_t m0 = (std::uint64_t{1} << (n - 1)) + delta;
    Word256 w;
    for (std::uint64_t k = 0; k < m0; ++k) w.set(static_cast<int>(k));
    seed.offer(m0, canonical_word(cube, w));
    shared.best_edges.store(m0);
  }
  for (int d = 1; d < n; ++d) {
    if (n % d != 0 || delta > (std::uint64_t{1} << (d - 1))) continue;
    const std::uint64_t per_block = (std::uint64_t{1} << (d - 1)) + delta;
    Word256 w;
    w.set(0);
    for (int b = 0; b < n / d; ++b)
      for (std::uint64_t k = 1; k < per_block; ++k) w.set(static_cast<int>(k << (b * d)));
    const auto edges = static_cast<std::uint64_t>(w.popcount());
    seed.offer(edges, canonical_word(cube, w));
    std::uint64_t cur = shared.best_edges.load();
    while (edges < cur && !shared.best_edges.compare_exchange_weak(cur, edges)) {
    }
  }

  // First-level vertex-orbit symmetry breaking: the colex-least maximal set
  // of any down-set can be relabeled to an initial segment {0..k-1}, so only
  // those are branched at the root. Canonicalizing incumbents keeps the
  // returned witness equal to the global colex-least one.
  std::vector<DenseNode> tasks;
  for (int k = 0; k <= n; ++k) {
    const int rank = (1 << k) - 1;
    tasks.push_back(expand(cube, DenseNode::root(), rank));
  }

  std::vector<BnbBest> results(tasks.size());
  std::vector<std::uint64_t> nodes(tasks.size(), 0);
  detail::run_tasks(tasks.size(), options.jobs, [&](std::size_t t) {
    BnbWorker worker(cube, delta, shared);
    worker.search(tasks[t]);
    results[t] = worker.best();
    nodes[t] = worker.nodes();
  });

  BnbBest best = seed;
  std::uint64_t total_nodes = 0;
  for (std::size_t t = 0; t < results.size(); ++t) {
    if (results[t].edges != UINT64_MAX) best.offer(results[t].edges, results[t].canon);
    total_nodes += nodes[t];
  }

  SolveResult res;
  res.n = n;
  res.s = s;
  res.backend = SolveBackend::branch_and_bound;
  res.timed_out = shared.timed_out.load();
  res.optimal = !res.timed_out;
  res.value = best.edges - 1;
  res.witness = HereditaryFamily::checked(DenseFamily{n, best.canon}.to_family());
  res.nodes_explored = total_nodes;
  return res;
}

int max_trace_size(const Word256& fam, int n, int a, std::int64_t early_exit) {
  int best = 0;
  if (a == 0) {
    // The single T is the empty set.
    std::uint64_t seen = 0;
    fam.for_each_bit([&](int) { seen = 1; });
    return static_cast<int>(seen);
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::uint64_t t = (std::uint64_t{1} << a) - 1;
  while (t < limit) {
    std::uint64_t seen = 0;
    fam.for_each_bit([&](int k) { seen |= std::uint64_t{1} << (static_cast<std::uint64_t>(k) & t); });
    best = std::max(best, std::popcount(seen));
    if (best >= early_exit) return best;
    const std::uint64_t c = t & -t;
    const std::uint64_t r = t + c;
    if (r >= limit) break;
    t = (((r ^ t) >> 2) / c) | r;
  }
  return best;
}

}  // namespace

std::string to_string(SolveBackend b) {
  switch (b) {
    case SolveBackend::exhaustive: return "exhaustive";
    case SolveBackend::branch_and_bound: return "branch_and_bound";
    case SolveBackend::formula: return "formula";
  }
  return "?";
}

std::string to_string(FormulaSource s) {
  switch (s) {
    case FormulaSource::thm_1_2: return "thm_1_2";
    case FormulaSource::thm_1_3: return "thm_1_3";
    case FormulaSource::thm_1_4: return "thm_1_4";
  }
  return "?";
}

SolveResult m_exact(int n, std::uint64_t s, const SolveOptions& options) {
  if (n < 1 || n > kDenseMaxGround) throw std::domain_error("m_exact: n out of range");
  const auto start = Clock::now();

  SolveResult res;
  const std::uint64_t delta = required_degree(s);
  if (delta > (std::uint64_t{1} << (n - 1))) {
    // No vertex can reach degree s+1, so no family limits the deletion:
    // arrowing never fails up to the full 2^n.
    res.n = n;
    res.s = s;
    res.value = std::uint64_t{1} << n;
    res.never_fails = true;
    res.optimal = true;
    res.backend = options.backend;
  } else if (options.backend == SolveBackend::exhaustive) {
    if (n > 6) throw std::domain_error("m_exact: exhaustive backend requires n <= 6");
    res = solve_exhaustive(n, s, options);
  } else if (options.backend == SolveBackend::branch_and_bound) {
    res = solve_bnb(n, s, options);
  } else {
    throw std::domain_error("m_exact: formula is not a solving backend");
  }

  if (res.witness && !validate_witness(res.witness->family(), s, res.value))
    throw std::logic_error("m_exact: witness failed independent validation");
  res.millis = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  return res;
}

bool validate_witness(const SetFamily& witness, std::uint64_t s, std::uint64_t value) {
  if (!is_hereditary(witness)) return false;
  if (min_degree(witness) < s + 1) return false;
  return witness.size() == value + 1;
}

ArrowResult arrows_decision(const ArrowQuery& query) {
  const int n = query.n;
  if (n < 0) throw std::domain_error("arrows_decision: negative n");
  if (query.a < 0 || query.a > n) throw std::domain_error("arrows_decision: a out of range");
  ArrowResult res;
  if (query.b <= 0) return res;  // any trace has at least 0 sets

  if (query.hereditary_only) {
    if (n > 6) throw resource_error("arrows_decision: hereditary scan requires n <= 6");
    EnumFilter filter;
    filter.min_edges = query.m;
    bool found = false;
    Word256 least;
    enumerate_downsets(n, filter, [&](const DenseFamily& f) {
      if (max_trace_size(f.word, n, query.a, query.b) < query.b) {
        if (!found || f.word < least) {
          found = true;
          least = f.word;
        }
      }
      return true;
    });
    if (found) {
      res.holds = false;
      res.counterexample = DenseFamily{n, least}.to_family();
    }
    return res;
  }

  if (n > 4) throw resource_error("arrows_decision: unrestricted scan requires n <= 4");
  const std::uint64_t ranks = std::uint64_t{1} << n;
  const std::uint64_t space_bits = std::uint64_t{1} << ranks;
  for (std::uint64_t w = 0; w < space_bits; ++w) {
    if (static_cast<std::uint64_t>(std::popcount(w)) < query.m) continue;
    Word256 fam;
    fam.w[0] = w;
    if (max_trace_size(fam, n, query.a, query.b) < query.b) {
      res.holds = false;
      res.counterexample = DenseFamily{n, fam}.to_family();
      return res;  // increasing scan: first failure is the least word
    }
  }
  return res;
}

FormulaClaim m_formula(int d, int c, int n) {
  if (d < 1 || c < 1 || n < 1) throw std::domain_error("m_formula: parameters must be positive");
  if (n % d != 0) throw std::domain_error("m_formula: d must divide n");
  const std::int64_t s = (std::int64_t{1} << (d - 1)) - c;
  if (s < 0) throw std::domain_error("m_formula: 2^{d-1}-c is negative; m(n,s) undefined");

  FormulaClaim claim;
  claim.d = d;
  claim.c = c;
  claim.n = n;
  claim.s = static_cast<std::uint64_t>(s);
  claim.value = static_cast<std::uint64_t>(n) / static_cast<std::uint64_t>(d) *
                ((std::uint64_t{1} << d) - static_cast<std::uint64_t>(c));

  if (c <= 2) {
    claim.source = FormulaSource::thm_1_2;
  } else if (d >= 4 * c) {
    claim.source = FormulaSource::thm_1_3;
  } else if (c <= 4 && d >= 3) {
    claim.source = FormulaSource::thm_1_4;
    if (d == 3 && n > 3)
      claim.caveats.push_back(
          "cross-parametrization: at s=" + std::to_string(s) +
          " the d=2 regime claims a smaller value for even n; adjudicate with m_exact");
  } else {
    throw std::domain_error("m_formula: no theorem covers (d=" + std::to_string(d) +
                            ", c=" + std::to_string(c) + ")");
  }
  return claim;
}

std::vector<FormulaClaim> applicable_formulas(int n, std::uint64_t s) {
  std::vector<FormulaClaim> out;
  for (int d = 1; d <= 30 && d <= n; ++d) {
    if (n % d != 0) continue;
    const std::int64_t c = (std::int64_t{1} << (d - 1)) - static_cast<std::int64_t>(s);
    if (c < 1) continue;
    try {
      out.push_back(m_formula(d, static_cast<int>(c), n));
    } catch (const std::domain_error&) {
      // uncovered regime
    }
  }
  return out;
}

UpperBound upper_bound_from_witness(const HereditaryFamily& f, std::uint64_t s) {
  if (min_degree(f.family()) < s + 1)
    throw std::domain_error("upper_bound_from_witness: certificate rejected (min degree below s+1)");
  UpperBound b;
  b.n = f.ground_size();
  b.s = s;
  b.bound = f.size() - 1;
  b.witness = f;
  return b;
}

UpperBound subadditive_combine(const SolveResult& r1, const SolveResult& r2) {
  if (r1.s != r2.s) throw std::domain_error("subadditive_combine: mismatched s");
  if (!r1.witness || !r2.witness) throw std::domain_error("subadditive_combine: both witnesses required");
  const SetFamily glued = disjoint_union(r1.witness->family(), r2.witness->family());
  UpperBound b;
  b.n = glued.ground_size();
  b.s = r1.s;
  b.bound = r1.value + r2.value + 1;
  b.witness = HereditaryFamily::checked(glued);
  if (b.witness.size() != b.bound + 1)
    throw std::logic_error("subadditive_combine: glued witness has unexpected size");
  return b;
}

}  // namespace tracelab
