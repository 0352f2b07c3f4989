#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "hc3/configuration.hpp"
#include "hc3/rational.hpp"

namespace hc3 {

using RationalPoint = std::array<Rational, 3>;

/// Half-space normal . z <= offset.
struct HalfSpace {
  Site normal;
  Rational offset;
};

struct Facet {
  HalfSpace plane;
  std::vector<std::size_t> vertices;  ///< indices into RationalPolytope::vertices, in boundary order
};

/// A bounded convex polytope with exact rational vertices.
struct RationalPolytope {
  std::vector<RationalPoint> vertices;
  std::vector<Facet> facets;

  std::size_t edge_count() const;  ///< from Euler's formula V - E + F = 2
};

/// Exact convex clipping of an axis-aligned box around the origin by
/// half-spaces with integer data. Vertices are kept in homogeneous integer
/// coordinates, each computed directly from three incident planes.
class CellClipper {
 public:
  explicit CellClipper(Int half_width);

  /// Intersects with a . z <= b. Returns whether any vertex was cut off.
  bool cut(const Site& a, Int b);

  /// Bisector half-space of the origin and d: 2 d . z <= |d|^2.
  bool cut_bisector(const Site& d) { return cut(Site{2 * d.x, 2 * d.y, 2 * d.z}, sq_norm(d)); }

  /// Whether some vertex still lies on a face of the initial box.
  bool touches_box() const;

  /// max |v|^2 over vertices.
  Rational max_sq_radius() const;

  /// Whether every vertex satisfies 4 |v|^2 < r2.
  bool inside_half_radius(Int r2) const;

  Rational volume() const;

  /// The polytope translated by `shift`.
  RationalPolytope polytope(const Site& shift = {}) const;

  std::size_t vertex_count() const { return vertices_.size(); }

 private:
  struct Vertex {
    std::array<Int, 4> h;  // (X, Y, Z, W), W > 0, gcd 1
    std::vector<int> planes;  // sorted
  };
  struct Plane {
    Site a;
    Int b;
  };

  Int side(const Vertex& v, const Plane& p) const;
  Vertex intersect(int p, int q, int r) const;
  std::vector<std::vector<std::size_t>> facet_cycles(std::vector<int>* plane_ids) const;

  std::vector<Plane> planes_;
  std::vector<Vertex> vertices_;
};

struct VoronoiCell {
  Site center;
  RationalPolytope polytope;
  Rational volume;
  Int cutoff_sq;  ///< squared neighbour radius that certified the cell
};

/// Voronoi cell of occupied site x in a periodic configuration. Neighbours
/// (with periodic images) are taken within radius r, starting from
/// r = 2 * ceil(sqrt(d2)) and doubling until every vertex lies strictly within
/// r / 2 of x. Throws InvalidArgument if x is unoccupied or c is a window, and
/// DomainViolation if the cell is still uncertified at the maximum radius.
VoronoiCell voronoi_cell(const Configuration& c, const Site& x);

/// Same with an explicit starting radius, for certification checks.
VoronoiCell voronoi_cell(const Configuration& c, const Site& x, Int start_radius);

Rational cell_volume(const RationalPolytope& p);

struct TessellationReport {
  bool ok = false;
  Rational total_volume;
  Int domain_volume = 0;
  std::vector<Rational> cell_volumes;  ///< per occupied site, in site order
};

/// Sums the cell volumes of the particles in one fundamental domain and
/// compares with |det P|.
TessellationReport tessellation_report(const Configuration& c);
bool tessellation_check(const Configuration& c);

struct MinCellResult {
  std::optional<Rational> best;         ///< smallest volume found
  std::vector<Site> witness;            ///< neighbourhood attaining it
  std::optional<Rational> second;       ///< next distinct volume (when tracked)
  bool complete = false;                ///< search finished within the budget
  std::uint64_t nodes = 0;
};

struct MinCellOptions {
  std::uint64_t node_budget = 0;  ///< 0 means unlimited
  bool track_second = false;      ///< also bound the next distinct volume (gap)
};

/// Best-effort minimum of the origin's cell volume over admissible
/// neighbourhoods drawn from sites v with d2 <= |v|^2 <= radius^2. Depth-first
/// include/exclude search; a node is pruned when the cell using every still
/// compatible candidate is no smaller than the best (or second best) found.
/// Running out of budget sets complete = false instead of throwing.
MinCellResult min_cell_search(Int d2, Int radius, const MinCellOptions& options = {});

}  // namespace hc3
