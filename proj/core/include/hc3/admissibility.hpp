#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hc3/configuration.hpp"
#include "hc3/rational.hpp"

namespace hc3 {

/// Displacements that conflict at exclusion d2 on a torus: one entry per
/// nonzero coset reached by some v with |v|^2 < d2, holding the shortest such
/// v. Both the torus exclusion graph and every admissibility test are driven
/// by this table, so they agree by construction.
class ExclusionTable {
 public:
  /// Throws PeriodTooShort if the period lattice has a vector shorter than d2.
  ExclusionTable(const Quotient& q, Int d2);

  Int d2() const { return d2_; }
  /// Shortest representative of each conflicting coset, sorted by norm then
  /// lexicographically.
  const std::vector<Site>& offsets() const { return offsets_; }

 private:
  Int d2_;
  std::vector<Site> offsets_;
};

struct AdmissibilityReport {
  bool admissible = true;
  /// First violating pair (sites in domain form) and its squared distance.
  std::optional<std::pair<Site, Site>> violation;
  Int violation_sq_distance = 0;
};

AdmissibilityReport is_admissible(const Configuration& c);

/// |occupied| / domain size.
Rational density(const Configuration& c);

/// Minimum squared distance between two particles of the configuration. On a
/// torus this includes a particle and its own periodic images, i.e. the result
/// is min(min over distinct cosets of the min-image distance, min period norm).
/// Throws InvalidArgument for fewer than two occupied sites.
Int min_pair_sq_distance(const Configuration& c);

/// Every unoccupied site of the domain at squared distance >= d2 from all
/// particles, in domain order. Empty iff the configuration is saturated.
std::vector<Site> insertion_candidates(const Configuration& c);

inline bool is_saturated(const Configuration& c) { return insertion_candidates(c).empty(); }

/// The exclusion graph on the cosets of q: i ~ j iff 0 < dist(i, j)^2 < d2.
struct ExclusionGraph {
  std::size_t n = 0;
  std::vector<std::vector<std::uint32_t>> adj;  ///< sorted neighbour lists

  std::size_t degree(std::size_t v) const { return adj[v].size(); }
  bool adjacent(std::size_t a, std::size_t b) const;
  std::size_t edge_count() const;
};

ExclusionGraph build_exclusion_graph(const Quotient& q, Int d2);

}  // namespace hc3
