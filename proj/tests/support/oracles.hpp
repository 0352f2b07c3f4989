#pragma once

// Brute-force reference implementations. None of them call the library's
// reduction, enumeration or search code; they only share the value types.

#include <array>
#include <cstdint>
#include <vector>

#include "hc3/rational.hpp"
#include "hc3/site.hpp"

namespace oracle {

using hc3::Int;
using hc3::Site;
using Basis = std::array<Site, 3>;

Int det(const Basis& b);

/// v in span_Z(b), via the adjugate.
bool contains(const Basis& b, const Site& v);

/// Same lattice set: each generator lies in the other lattice.
bool same_lattice(const Basis& a, const Basis& b);

/// Minimum nonzero squared norm and attaining vectors over coefficients in [-k, k]^3.
struct Shortest {
  Int min = 0;
  std::vector<Site> vectors;
};
Shortest shortest(const Basis& b, Int k = 6);

/// Integer points of squared norm n, by scanning the cube.
std::vector<Site> points_of_norm(Int n);

/// Coset representatives of Z^3 / span(b), found by scanning a box and
/// separating points with `contains`.
std::vector<Site> cosets(const Basis& b);

/// Smallest |w|^2 over w in the cube [-r, r]^3 with w = a - b mod P. Exact
/// whenever the result is <= r^2; returns r^2 + 1 when it is larger.
Int min_image(const Basis& p, const Site& a, const Site& b, Int r);

/// Squared-distance table between cosets, exact up to r^2 (larger entries are r^2 + 1).
std::vector<std::vector<Int>> distance_table(const Basis& p, const std::vector<Site>& reps, Int r);

/// Maximum independent sets of the graph i ~ j iff dist < d2 (i != j), by
/// enumerating every independent set (N <= 32). Sets are bitmasks.
struct MisCount {
  std::size_t optimum = 0;
  std::uint64_t count = 0;
  std::vector<std::uint32_t> maximum_sets;
};
MisCount brute_mis(const std::vector<std::vector<Int>>& dist, Int d2);

/// perm[t][i] = j with reps[i] + reps[t] = reps[j] mod P.
std::vector<std::vector<std::size_t>> translation_table(const Basis& p, const std::vector<Site>& reps);

/// Number of translation orbits among the given sets.
std::uint64_t orbit_count(const std::vector<std::uint32_t>& sets, const std::vector<std::vector<std::size_t>>& perm);

/// Every point of the periodic set (sites + span(p)) inside the cube [-half, half]^3.
std::vector<Site> periodic_points(const Basis& p, const std::vector<Site>& sites, Int half);

/// Vertices of the Voronoi cell of the origin among the points `others`
/// (excluding 0): every intersection of three bisector planes that satisfies
/// all bisector inequalities. Exact; O(n^4).
std::vector<std::array<hc3::Rational, 3>> voronoi_vertices(const std::vector<Site>& others);

/// FCC embeddings for scale l as lattice sets, deduplicated with same_lattice.
std::vector<Basis> fcc_embeddings(Int ell);

/// Number of classes of `lattices` under the 48 signed permutations.
std::size_t symmetry_classes(const std::vector<Basis>& lattices);

}  // namespace oracle
