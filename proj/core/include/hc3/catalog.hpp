#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hc3/configuration.hpp"
#include "hc3/sublattice.hpp"

namespace hc3 {

/// A planar mesh anchor + span(g1, g2), lying in a plane with integer normal.
struct MeshSpec {
  std::array<Site, 2> generators;
  Site anchor;
  Site normal;
};

/// Known perfect-configuration sublattices. Variants: d2 = 6 has 1 (type I,
/// triangular layers) and 2 (type II, rhombic layers); d2 = 9 and d2 = 10 have
/// variants 1 and 2; every other d2 only variant 1. Throws InvalidArgument for
/// anything else.
SublatticeBasis known_sublattice(Int d2, int variant = 1);

/// Variants available for d2 (empty if none).
std::vector<int> known_variants(Int d2);

/// The d2 values with catalog entries: 2, 3, 4, 5, 6, 8, 9, 10, 11, 12.
const std::vector<Int>& catalog_d2_values();

/// Named meshes: "tau2", "zeta4", "tau6", "zeta10" (variants 1, 2),
/// "tau26" (variants 1, 2), "alpha8_16". Throws InvalidArgument if unknown.
MeshSpec known_mesh(const std::string& name, int variant = 1);

/// Every site of the lattice inside one fundamental domain of q. Throws
/// DomainViolation unless the period of q is contained in the lattice.
Configuration sublattice_configuration(const SublatticeBasis& lattice, const Quotient& q, Int d2);

/// A stacking word: one letter per layer step, from the family's alphabet.
using StackingWord = std::string;

/// Layers are translates of one mesh; consecutive layers differ by one of the
/// family's step vectors (modulo the mesh).
struct LayeredFamily {
  Int d2;
  std::string name;
  MeshSpec mesh;
  std::vector<std::pair<char, Site>> steps;

  const Site& step(char letter) const;
  std::string alphabet() const;
};

const std::vector<LayeredFamily>& layered_families();

/// Family lookup; an empty name selects the first family for d2. Type names
/// "I"/"II" and "1"/"2" are interchangeable for d2 = 6.
const LayeredFamily& layered_family(Int d2, const std::string& name = "");

/// Period of the periodic stacking with the given word repeated forever:
/// span(g1, g2, sum of steps).
SublatticeBasis layered_period(const LayeredFamily& family, const StackingWord& word);

/// The periodic stacking on its natural period.
Configuration build_layered(const LayeredFamily& family, const StackingWord& word);

/// The periodic stacking restricted to a torus. Throws DomainViolation
/// ("word does not close") unless every period of q maps the stacking to itself.
Configuration build_layered(const LayeredFamily& family, const StackingWord& word, const Quotient& q);

/// Layers 0..|word| of the stacking (|word| steps), clipped to a finite window.
Configuration build_layered(const LayeredFamily& family, const StackingWord& word, const Window& w);

/// Recovers the stacking word of a periodic layered configuration whose layers
/// are orthogonal to `normal`. The family is found among those of the same d2,
/// mapped by the first point symmetry that takes its normal to `normal`. The
/// word starts at the lowest layer of height >= 0. Throws DomainViolation if
/// the configuration is not layered this way.
struct StackingClassification {
  const LayeredFamily* family;
  SymmetryOp op;  ///< maps the catalog family onto the configuration's orientation
  StackingWord word;
};
StackingClassification classify_stacking_full(const Configuration& c, const Site& normal);
StackingWord classify_stacking(const Configuration& c, const Site& normal);

/// Occupied sites in anchor + span(generators) (+ periods on a torus). One
/// generator selects a line, two select a planar mesh.
struct MeshSelector {
  Site anchor;
  std::vector<Site> generators;
};

std::vector<Site> select_sites(const Configuration& c, const MeshSelector& selector);

/// Translates the selected sites by t (set semantics: shifted sites landing on
/// occupied ones merge). Admissibility is not checked. Throws DomainViolation if
/// the selector matches no occupied site, InvalidArgument if a shifted site
/// leaves a window.
Configuration mesh_shift(const Configuration& c, const MeshSelector& selector, const Site& t);

}  // namespace hc3
