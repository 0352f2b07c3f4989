#pragma once

#include <array>
#include <compare>
#include <span>
#include <vector>

#include "hc3/site.hpp"
#include "hc3/symmetry.hpp"

namespace hc3 {

/// Three integer generators of a full-rank sublattice of Z^3.
class SublatticeBasis {
 public:
  /// Throws InvalidArgument if the generators are linearly dependent.
  SublatticeBasis(const Site& g1, const Site& g2, const Site& g3);
  explicit SublatticeBasis(const std::array<Site, 3>& g) : SublatticeBasis(g[0], g[1], g[2]) {}

  /// The 2 * Z^3-style scaled lattice diag(a, b, c).
  static SublatticeBasis diagonal(Int a, Int b, Int c);

  const std::array<Site, 3>& generators() const { return g_; }
  const Site& operator[](std::size_t i) const { return g_[i]; }

  /// Signed determinant det(g1, g2, g3).
  Int det() const { return det3(g_[0], g_[1], g_[2]); }

  SublatticeBasis scaled(Int k) const;

  /// Exact equality of the ordered generators (not of the lattice sets; compare
  /// hnf() results for that).
  auto operator<=>(const SublatticeBasis&) const = default;
  bool operator==(const SublatticeBasis&) const = default;

 private:
  std::array<Site, 3> g_;
};

/// Lower-triangular column Hermite normal form. The generators become
///   (d1, a21, a31), (0, d2, a32), (0, 0, d3)
/// with d_i > 0 and every off-diagonal entry in row i reduced into [0, d_i).
/// Two bases span the same lattice iff their HNFs are equal.
SublatticeBasis hnf(const SublatticeBasis& basis);

bool same_lattice(const SublatticeBasis& a, const SublatticeBasis& b);

/// HNF basis of the lattice generated by any number of vectors. Throws
/// InvalidArgument if they do not span a rank-3 lattice.
SublatticeBasis lattice_span(const std::vector<Site>& generators);

/// |det|, the number of cosets of the sublattice in Z^3.
Int lattice_index(const SublatticeBasis& basis);

/// Whether v is an integer combination of the generators.
bool lattice_contains(const SublatticeBasis& basis, const Site& v);

/// Reduces v into the HNF fundamental box [0,d1) x [0,d2) x [0,d3).
/// `hnf_basis` must already be in Hermite normal form.
Site reduce_into_box(const SublatticeBasis& hnf_basis, const Site& v);

/// Image of the lattice under a point symmetry (generators mapped one by one).
SublatticeBasis transform(const SymmetryOp& op, const SublatticeBasis& basis);

struct ShortestVectors {
  Int min_sq_norm = 0;
  /// All nonzero lattice vectors attaining the minimum, in lexicographic order.
  std::vector<Site> vectors;
};

/// Exact minimum nonzero squared norm of the lattice with every minimizer.
ShortestVectors shortest_vectors(const SublatticeBasis& basis);

/// Lexicographically least hnf(op * basis) over the 48 point symmetries; two
/// lattices are congruent under a Z^3 point symmetry iff their reps agree.
SublatticeBasis canonical_class_rep(const SublatticeBasis& basis);

/// Flattened HNF generator coordinates, used as the lexicographic key.
std::array<Int, 9> flat_key(const SublatticeBasis& basis);

/// Minimum of |target + sum_i c_i * basis[i]|^2 over integer c, for a basis of
/// rank 2 or 3 (generators linearly independent). The coefficient search box
/// is certified from the Gram matrix, so the result is exact.
struct CosetMinimum {
  Int sq_norm = 0;
  Site vector;  ///< a minimizing element of the coset target + L
};
CosetMinimum min_norm_in_coset(std::span<const Site> basis, const Site& target);

/// Size-reduces a rank-2 or rank-3 basis pairwise until no generator can be
/// shortened by another; the spanned lattice is unchanged.
std::vector<Site> pair_reduce(std::vector<Site> basis);

/// Whether u lies in the rank-2 lattice spanned by g1, g2.
bool in_plane_lattice(const Site& u, const Site& g1, const Site& g2);

/// Integer basis of the rank-2 lattice Z^3 ∩ normal^⊥ (normal nonzero).
std::array<Site, 2> orthogonal_lattice(const Site& normal);

}  // namespace hc3
