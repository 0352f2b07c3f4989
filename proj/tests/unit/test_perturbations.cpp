#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "hc3/admissibility.hpp"
#include "hc3/catalog.hpp"
#include "hc3/perturbations.hpp"
#include "oracles.hpp"

using namespace hc3;

namespace {

Configuration natural(Int d2, int variant = 1) {
  SublatticeBasis l = known_sublattice(d2, variant);
  return sublattice_configuration(l, Quotient(l.scaled(2)), d2);
}

Configuration dhcp() { return build_layered(layered_family(5), "ST"); }
Configuration dfcc() { return natural(5); }

// Conflicting particles of x counted in the unrolled periodic point set.
std::size_t brute_conflicts(const Configuration& c, const Site& x) {
  std::vector<Site> shifted;
  for (const Site& s : c.sites()) shifted.push_back(s - x);
  std::vector<Site> pts = oracle::periodic_points(c.quotient().period().generators(), shifted, 4);
  std::size_t n = 0;
  for (const Site& p : pts) {
    Int d = sq_norm(p);
    if (d > 0 && d < c.d2()) ++n;
  }
  return n;
}

}  // namespace

TEST(InsertionConflicts, Examples) {
  Configuration a3 = natural(2);
  EXPECT_GE(insertion_conflicts(a3, {1, 0, 0}).size(), 4u);
  EXPECT_EQ(insertion_conflicts(a3, {1, 0, 0}).size(), 6u);
  Configuration empty(Quotient::cube(4), 3, {});
  EXPECT_TRUE(insertion_conflicts(empty, {1, 2, 3}).empty());
  EXPECT_THROW(insertion_conflicts(a3, {0, 0, 0}), InvalidArgument);

  Configuration h = dhcp();
  InsertionOrder o = min_insertion_order(h);
  ASSERT_FALSE(o.argmin.empty());
  for (const Site& x : o.argmin) EXPECT_EQ(insertion_conflicts(h, x).size(), 3u);
}

TEST(InsertionConflicts, ShortestFirst) {
  Configuration h = dhcp();
  for (const Site& x : h.quotient().representatives()) {
    if (h.occupied(x)) continue;
    std::vector<Site> cs = insertion_conflicts(h, x);
    for (std::size_t i = 1; i < cs.size(); ++i) EXPECT_LE(sq_norm(cs[i - 1] - x), sq_norm(cs[i] - x));
    for (const Site& p : cs) EXPECT_TRUE(h.occupied(p));
  }
}

TEST(InsertionConflicts, MatchUnrolledPointSet) {
  for (Int d2 : {3, 5, 6, 9}) {
    Configuration c = natural(d2);
    for (const Site& x : c.quotient().representatives())
      if (!c.occupied(x)) EXPECT_EQ(insertion_conflicts(c, x).size(), brute_conflicts(c, x)) << d2;
  }
  Configuration h = dhcp();
  for (const Site& x : h.quotient().representatives())
    if (!h.occupied(x)) EXPECT_EQ(insertion_conflicts(h, x).size(), brute_conflicts(h, x));
}

TEST(InsertionOrder, CloseVersusHexagonalStacking) {
  EXPECT_EQ(min_insertion_order(dhcp()).order, 2);
  EXPECT_EQ(min_insertion_order(dfcc()).order, 3);
  EXPECT_GE(min_insertion_order(dfcc()).order, 3);
  Configuration sparse(Quotient::cube(4), 2, {{0, 0, 0}});
  EXPECT_EQ(min_insertion_order(sparse).order, -1);
}

TEST(InsertionOrder, Region) {
  Configuration h = dhcp();
  InsertionOrder all = min_insertion_order(h);
  InsertionOrder one = min_insertion_order(h, std::vector<Site>{all.argmin.front()});
  EXPECT_EQ(one.order, all.order);
  EXPECT_THROW(min_insertion_order(h, std::vector<Site>{h.sites().front()}), InvalidArgument);
}

TEST(TranslationSymmetries, LiftedTorus) {
  Configuration h = dhcp();
  Quotient big(h.quotient().period().scaled(2));
  Configuration l = lift_to_quotient(h, big);
  EXPECT_EQ(l.size(), 8 * h.size());
  EXPECT_EQ(translation_symmetries(l).size(), 8u);
  EXPECT_EQ(translation_symmetries(h).size(), 1u);
  EXPECT_THROW(lift_to_quotient(h, Quotient::cube(7)), DomainViolation);
}

TEST(Excitations, HexagonalStackingHasLowOrderExcitations) {
  ExcitationTable t = enumerate_excitations(dhcp());
  EXPECT_TRUE(t.complete);
  ASSERT_FALSE(t.excitations.empty());
  ASSERT_EQ(t.shapes.size(), 1u);
  EXPECT_EQ(t.shapes[0].added, 1u);
  EXPECT_EQ(t.shapes[0].removed, 3u);
  EXPECT_EQ(t.shapes[0].order, 2);
  EXPECT_EQ(t.shapes[0].multiplicity, t.excitations.size());
  for (const Excitation& e : t.excitations) EXPECT_LE(e.order(), 2);
}

TEST(Excitations, CloseStackingHasNone) {
  ExcitationTable t = enumerate_excitations(dfcc());
  EXPECT_TRUE(t.complete);
  EXPECT_TRUE(t.excitations.empty());
  EXPECT_TRUE(t.shapes.empty());
}

TEST(Excitations, MaxOrderZero) {
  ExcitationOptions o;
  o.max_order = 0;
  EXPECT_TRUE(enumerate_excitations(dhcp(), o).excitations.empty());
}

TEST(Excitations, RevalidateOnLargerTorus) {
  Configuration h = dhcp();
  ExcitationTable t = enumerate_excitations(h);
  Configuration big = lift_to_quotient(h, Quotient(h.quotient().period().scaled(4)));
  for (const Excitation& e : t.excitations) {
    Configuration after = apply_excitation(big, e);
    EXPECT_TRUE(is_admissible(after).admissible);
    EXPECT_EQ(static_cast<Int>(big.size()) - static_cast<Int>(after.size()), e.order());
    for (const Site& a : e.added) {
      std::vector<Site> cs = insertion_conflicts(big, big.quotient().reduce(a));
      std::set<Site> removed;
      for (const Site& r : e.removed) removed.insert(big.quotient().reduce(r));
      for (const Site& p : cs) EXPECT_TRUE(removed.count(big.quotient().reduce(p)));
    }
  }
}

TEST(Excitations, InvariantUnderDoubledTorus) {
  Configuration h = dhcp();
  Configuration big = lift_to_quotient(h, Quotient(h.quotient().period().scaled(2)));
  ExcitationTable a = enumerate_excitations(h);
  ExcitationTable b = enumerate_excitations(big);
  ASSERT_EQ(a.shapes.size(), b.shapes.size());
  for (std::size_t i = 0; i < a.shapes.size(); ++i) {
    EXPECT_EQ(a.shapes[i].order, b.shapes[i].order);
    EXPECT_EQ(a.shapes[i].multiplicity, b.shapes[i].multiplicity);
  }
  EXPECT_EQ(a.excitations.size(), b.excitations.size());
}

TEST(Excitations, Preconditions) {
  Configuration sparse(Quotient::cube(4), 2, {{0, 0, 0}});
  EXPECT_THROW(enumerate_excitations(sparse), DomainViolation);
  Configuration w(Window{{0, 0, 0}, {3, 3, 3}}, 2, {{0, 0, 0}});
  EXPECT_THROW(enumerate_excitations(w), InvalidArgument);
}

TEST(Excitations, BudgetGivesPartialResult) {
  ExcitationOptions o;
  o.node_budget = 3;
  ExcitationTable t = enumerate_excitations(lift_to_quotient(dhcp(), Quotient(layered_period(layered_family(5), "ST").scaled(2))), o);
  EXPECT_FALSE(t.complete);
}

TEST(ApplyExcitation, TorusTooSmall) {
  Configuration h = dhcp();
  ExcitationTable t = enumerate_excitations(h);
  ASSERT_FALSE(t.excitations.empty());
  EXPECT_THROW(apply_excitation(h, t.excitations.front()), InvalidArgument);
}

TEST(Sliding, LineOfSimpleCubic) {
  Configuration z = sublattice_configuration(SublatticeBasis::diagonal(2, 2, 2), Quotient::cube(4), 4);
  std::vector<SlidingMove> m = find_sliding(z, {{{0, 0, 0}, {{0, 0, 1}}}}, {{0, 0, 1}, {1, 0, 0}});
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].shift, (Site{0, 0, 1}));
  EXPECT_EQ(m[0].moved, 2u);
  EXPECT_EQ(m[0].min_sq_distance, 4);
}

TEST(Sliding, BodyCenteredSublatticeBelowItsCatalogDistance) {
  Configuration b = sublattice_configuration(known_sublattice(11), Quotient::cube(8), 11);
  MeshSelector diagonal{{0, 0, 0}, {{2, 2, 2}}};
  std::vector<SlidingMove> m = find_sliding(b, {diagonal}, {{1, 1, 1}});
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].min_sq_distance, 11);
  EXPECT_TRUE(find_sliding(b.with_d2(12), {diagonal}, {{1, 1, 1}}).empty());
}

TEST(Sliding, StandardFamilyOnCatalog) {
  for (Int d2 : {2, 3, 5, 8, 9, 10, 11, 12}) {
    Configuration c = natural(d2);
    SlidingFamily f = standard_sliding_family(c);
    EXPECT_EQ(f.shifts.size(), 18u);
    EXPECT_FALSE(f.selectors.empty());
    EXPECT_TRUE(find_sliding(c, f.selectors, f.shifts).empty()) << "d2=" << d2;
  }
  Configuration z = natural(4);
  SlidingFamily f = standard_sliding_family(z);
  EXPECT_FALSE(find_sliding(z, f.selectors, f.shifts).empty());
}

TEST(Sliding, MovesAreAdmissible) {
  Configuration z = natural(4);
  SlidingFamily f = standard_sliding_family(z);
  for (const SlidingMove& m : find_sliding(z, f.selectors, f.shifts)) {
    Configuration after = mesh_shift(z, m.selector, m.shift);
    EXPECT_TRUE(is_admissible(after).admissible);
    EXPECT_EQ(after.size(), z.size());
    EXPECT_NE(after, z);
    EXPECT_EQ(min_pair_sq_distance(after), m.min_sq_distance);
  }
}
