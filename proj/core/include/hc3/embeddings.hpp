#pragma once

#include <optional>
#include <vector>

#include "hc3/shells.hpp"
#include "hc3/sublattice.hpp"

namespace hc3 {

/// A point-symmetry class of sublattices.
struct EmbeddingClass {
  SublatticeBasis representative;        ///< lexicographically least member (HNF)
  std::size_t orbit_size = 0;
  std::vector<SublatticeBasis> members;  ///< HNFs, sorted by flat_key
};

/// All sublattices spanned by triples v1, v2, v3 with |v_i|^2 = 2 l^2 and
/// v_i . v_j = l^2 (i != j), i.e. copies of l * sqrt(2) scaled A3 inside Z^3.
/// Returned as HNFs, deduplicated and sorted by flat_key.
std::vector<SublatticeBasis> enumerate_fcc_embeddings(Int ell);

/// Orbits of the embeddings under the 48 point symmetries, sorted by representative.
std::vector<EmbeddingClass> embedding_classes(Int ell);

/// Whether `basis` spans an FCC embedding; returns l if so.
std::optional<Int> fcc_embedding_scale(const SublatticeBasis& basis);

struct LayeredCheck {
  bool admits = false;
  Int ell = 0;
  Site normal;                ///< close-packed plane family that was tested last or that succeeded
  std::array<Site, 2> mesh;   ///< lattice basis of the close-packed layer through 0
  Site step;                  ///< lattice stacking step s (layer above the origin)
  std::optional<Site> shift;  ///< alternate integral step t with t + mesh != s + mesh
};

/// Decides whether some close-packed layer family of the embedding admits an
/// alternate stacking position: an integer t at the height of the lattice
/// step s, in a different mesh coset, such that the layer t + M and the
/// two-layer offsets s + s, s + t, t + t all keep squared distance >= 2 l^2
/// from the mesh M. Candidates t = s + u run over coset representatives u of
/// (Z^3 ∩ n⊥) / M, so the search is finite and exact. Throws InvalidArgument
/// unless the basis spans an FCC embedding.
LayeredCheck admits_layered(const SublatticeBasis& embedding);

}  // namespace hc3
