#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hc3/catalog.hpp"
#include "hc3/configuration.hpp"

namespace hc3 {

/// Occupied sites x + v with 0 < |v|^2 < d2, shortest v first. A periodic
/// configuration is read as its infinite periodic extension, so periodic images
/// of one particle count separately. Throws InvalidArgument if x is occupied
/// or outside a window.
std::vector<Site> insertion_conflicts(const Configuration& c, const Site& x);

struct InsertionOrder {
  Int order = 0;             ///< min |conflicts| - 1; -1 means some site is insertable
  std::vector<Site> argmin;  ///< every site of the region attaining it, in region order
};

/// Minimum single-insertion order over the unoccupied sites of `region`
/// (occupied entries are ignored). The default region is every unoccupied site
/// of the domain. Throws InvalidArgument if the region has no unoccupied site.
InsertionOrder min_insertion_order(const Configuration& c, const std::optional<std::vector<Site>>& region = {});

/// Translations of the torus mapping the configuration onto itself, as coset
/// representatives in domain order (always contains 0).
std::vector<Site> translation_symmetries(const Configuration& c);

/// Insert `added`, remove exactly the particles they conflict with. Sites are
/// points of the infinite periodic extension.
struct Excitation {
  std::vector<Site> added;
  std::vector<Site> removed;
  std::size_t shape = 0;  ///< index into ExcitationTable::shapes

  Int order() const { return static_cast<Int>(removed.size()) - static_cast<Int>(added.size()); }
};

/// Excitations congruent under point symmetries and arbitrary translations.
struct ExcitationShape {
  std::size_t added = 0;
  std::size_t removed = 0;
  Int order = 0;
  std::size_t multiplicity = 0;  ///< translation classes per unit cell of the configuration
};

struct ExcitationOptions {
  Int max_order = 2;
  Int radius = 3;                 ///< added sites lie within this distance of one of them
  std::size_t max_added = 3;      ///< cap on |added|
  std::uint64_t node_budget = 0;  ///< 0 means unlimited
};

struct ExcitationTable {
  std::vector<Excitation> excitations;  ///< one per class under the configuration's translations, sorted by shape
  std::vector<ExcitationShape> shapes;
  bool complete = false;
  std::uint64_t nodes = 0;
};

/// Every excitation of order <= max_order whose added sites are pairwise
/// compatible, connected (consecutive insertions can be chained through shared
/// conflicting particles) and at most max_added in number, listed once per
/// translation class. The search is a connected-set enumeration rooted at each
/// translation class of unoccupied sites; a branch is cut once even the
/// remaining insertions, each freeing at most one unit, cannot bring the order
/// down to max_order. Requires a periodic, admissible, saturated
/// configuration (DomainViolation otherwise). An exhausted budget returns the
/// excitations found so far with complete = false.
ExcitationTable enumerate_excitations(const Configuration& c, const ExcitationOptions& options = {});

/// (occupied \ removed) ∪ added on the torus of c. Throws InvalidArgument if a
/// removed site is unoccupied, an added site is occupied, or two added (or two
/// removed) sites share a coset, i.e. the torus is too small for e.
Configuration apply_excitation(const Configuration& c, const Excitation& e);

/// The same periodic configuration on a torus whose periods are translation
/// symmetries of c. Throws DomainViolation otherwise.
Configuration lift_to_quotient(const Configuration& c, const Quotient& q);

struct SlidingMove {
  MeshSelector selector;
  Site shift;
  std::size_t moved = 0;     ///< number of selected sites
  Int min_sq_distance = 0;   ///< closest pair after the shift
};

/// Shifts (selector, t) that change the configuration but keep it admissible
/// with the same number of particles, in input order. Selectors matching
/// nothing, and shifts leaving a window, are skipped.
std::vector<SlidingMove> find_sliding(const Configuration& c, const std::vector<MeshSelector>& selectors,
                                      const std::vector<Site>& shifts);

struct SlidingFamily {
  std::vector<MeshSelector> selectors;
  std::vector<Site> shifts;
};

/// Lines and planes of a periodic configuration: for one particle of each
/// translation class, the lines along primitive translation directions of
/// squared length <= 2 * (shortest translation), and the planes spanned by two
/// of those directions. Shifts are the 18 vectors with 0 < |t|^2 <= 2.
SlidingFamily standard_sliding_family(const Configuration& c);

}  // namespace hc3
