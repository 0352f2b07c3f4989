#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hc3/admissibility.hpp"
#include "hc3/configuration.hpp"

namespace hc3 {

struct SolverOptions {
  std::uint64_t node_budget = 0;  ///< 0 means unlimited
  unsigned threads = 0;           ///< 0 means default_thread_count()
};

/// The THREADS environment variable if set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
unsigned default_thread_count();

struct SolverStats {
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

struct PackingResult {
  std::size_t optimum = 0;
  Configuration witness;
  std::optional<std::uint64_t> count;
  SolverStats stats;
};

/// Vertex permutations of a graph, one per group element; used to count
/// maximum independent sets up to a symmetry group.
using Permutations = std::vector<std::vector<std::uint32_t>>;

/// Exact maximum independent set search by branch and bound on bitsets.
/// Bounds come from a greedy clique cover; branching is on the vertex of
/// largest degree among the candidates, include branch first. All results
/// are independent of the thread count; only the node statistics vary.
class MisSolver {
 public:
  MisSolver(const ExclusionGraph& g, SolverOptions options = {});

  /// Size of a maximum independent set. With `vertex_transitive` the search
  /// fixes vertex 0 at the root, which is valid when some automorphism maps
  /// any vertex to vertex 0.
  std::size_t maximum(bool vertex_transitive);

  /// The lexicographically least independent set of the given size (as a
  /// sorted index list), or nullopt when none exists.
  std::optional<std::vector<std::uint32_t>> lex_least(std::size_t size);

  /// Number of independent sets of exactly `size` vertices that are maximal
  /// in size (callers pass the optimum). With `group`, counts orbits instead:
  /// a set is counted iff it is lexicographically least among its images.
  std::uint64_t count(std::size_t size, const Permutations* group = nullptr);

  /// Greedy clique cover of the whole vertex set (an upper bound on the MIS).
  std::size_t cover_bound() const;

  const SolverStats& stats() const { return stats_; }

 private:
  struct Impl;
  const ExclusionGraph& g_;
  SolverOptions options_;
  SolverStats stats_;
};

/// Translation action of the torus on its own cosets: perm[t][i] = index of rep(i) + rep(t).
Permutations translation_permutations(const Quotient& q);

/// Maximum packing on the torus with the lexicographically least optimal
/// witness. Throws PeriodTooShort, or BudgetExhausted when the node budget
/// runs out before the optimum is proved.
PackingResult max_packing(const Quotient& q, Int d2, const SolverOptions& options = {});

/// max_packing plus the exact number of optimal configurations (raw, or up
/// to torus translations).
PackingResult max_packing_with_count(const Quotient& q, Int d2, bool modulo_translations,
                                     const SolverOptions& options = {});

std::uint64_t count_optima(const Quotient& q, Int d2, bool modulo_translations,
                           const SolverOptions& options = {});

/// Upper bound on the maximum packing from a greedy clique cover of the
/// exclusion graph.
std::size_t clique_cover_bound(const Quotient& q, Int d2);

}  // namespace hc3
