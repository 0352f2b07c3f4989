#include <gtest/gtest.h>

#include <map>

#include "hc3/admissibility.hpp"
#include "hc3/catalog.hpp"

using namespace hc3;

namespace {

Configuration natural(Int d2, int variant = 1) {
  SublatticeBasis l = known_sublattice(d2, variant);
  return sublattice_configuration(l, Quotient(l.scaled(2)), d2);
}

// Closest pair of the periodic extension, read on a doubled torus so that
// single-particle periods still have a pair.
Int stacking_min_pair(const LayeredFamily& f, const StackingWord& w) {
  return min_pair_sq_distance(build_layered(f, w, Quotient(layered_period(f, w).scaled(2))));
}

bool constant_word(const StackingWord& w) { return w.find_first_not_of(w.front()) == std::string::npos; }

}  // namespace

TEST(KnownSublattice, Examples) {
  EXPECT_EQ(known_sublattice(2), SublatticeBasis({1, 1, 0}, {1, 0, 1}, {0, 1, 1}));
  EXPECT_EQ(known_sublattice(9, 1), SublatticeBasis({0, 3, 1}, {0, -1, 3}, {2, 1, 2}));
  EXPECT_EQ(known_sublattice(10, 1), SublatticeBasis({-1, -3, 4}, {3, -4, 1}, {0, 3, -1}));
  SublatticeBasis p5 = known_sublattice(5);
  EXPECT_EQ(p5[0], (Site{1, -2, 1}));
  EXPECT_EQ(p5[1], (Site{-1, -1, 2}));
  EXPECT_EQ(lattice_index(p5), 9);
  EXPECT_EQ(shortest_vectors(p5).min_sq_norm, 5);
  EXPECT_EQ(p5[2].x + p5[2].y + p5[2].z, 3);  // one layer spacing along the main diagonal
}

TEST(KnownSublattice, DensityAndMinimumTable) {
  std::map<Int, Int> index{{2, 2}, {3, 4}, {4, 8}, {5, 9}, {6, 12}, {8, 16}, {9, 20}, {10, 26}, {11, 32}, {12, 32}};
  for (Int d2 : catalog_d2_values())
    for (int v : known_variants(d2)) {
      SublatticeBasis l = known_sublattice(d2, v);
      EXPECT_EQ(lattice_index(l), index.at(d2)) << "d2=" << d2 << " v" << v;
      Int m = shortest_vectors(l).min_sq_norm;
      EXPECT_GE(m, d2);
      if (d2 == 5 || d2 == 9 || d2 == 10 || d2 == 12) EXPECT_EQ(m, d2);
      if (d2 == 11) EXPECT_EQ(m, 12);
      EXPECT_EQ(density(natural(d2, v)), make_rational(1, index.at(d2)));
    }
}

TEST(KnownSublattice, UnknownEntries) {
  EXPECT_THROW(known_sublattice(7), InvalidArgument);
  EXPECT_THROW(known_sublattice(5, 2), InvalidArgument);
  EXPECT_EQ(known_variants(6), (std::vector<int>{1, 2}));
  EXPECT_TRUE(known_variants(13).empty());
}

TEST(KnownMesh, Examples) {
  MeshSpec t6 = known_mesh("tau6");
  EXPECT_EQ(t6.generators[0], (Site{1, -2, 1}));
  EXPECT_EQ(t6.generators[1], (Site{-1, -1, 2}));
  EXPECT_EQ(t6.normal, (Site{1, 1, 1}));
  MeshSpec z10 = known_mesh("zeta10", 1);
  EXPECT_EQ(z10.generators[0], (Site{0, 3, 1}));
  EXPECT_EQ(z10.generators[1], (Site{0, -1, 3}));
  EXPECT_EQ(z10.normal, (Site{1, 0, 0}));
  MeshSpec a = known_mesh("alpha8_16");
  EXPECT_EQ(a.generators[0], (Site{1, 1, 2}));
  EXPECT_EQ(a.generators[1], (Site{1, 1, -2}));
  EXPECT_EQ(a.normal, (Site{1, -1, 0}));
  EXPECT_THROW(known_mesh("omega"), InvalidArgument);
}

TEST(KnownMesh, GeneratorsAreOrthogonalToNormal) {
  for (auto [name, v] : std::vector<std::pair<std::string, int>>{
           {"tau2", 1}, {"zeta4", 1}, {"tau6", 1}, {"zeta10", 1}, {"zeta10", 2}, {"tau26", 1}, {"tau26", 2},
           {"alpha8_16", 1}}) {
    MeshSpec m = known_mesh(name, v);
    EXPECT_EQ(dot(m.generators[0], m.normal), 0) << name;
    EXPECT_EQ(dot(m.generators[1], m.normal), 0) << name;
    EXPECT_NE(cross(m.generators[0], m.generators[1]), Site{}) << name;
  }
}

TEST(Layered, DfccIsTheCatalogLattice) {
  const LayeredFamily& f = layered_family(5);
  Configuration c = build_layered(f, "S");
  EXPECT_EQ(c.size(), 1u);
  EXPECT_TRUE(same_lattice(c.quotient().period(), known_sublattice(5)));
  EXPECT_EQ(stacking_min_pair(f, "S"), 5);
}

TEST(Layered, DhcpAtFive) {
  Configuration c = build_layered(layered_family(5), "ST");
  EXPECT_EQ(c.size(), 2u);
  EXPECT_TRUE(is_admissible(c).admissible);
  EXPECT_EQ(density(c), make_rational(1, 9));
  EXPECT_EQ(min_pair_sq_distance(c), 5);
  EXPECT_TRUE(is_saturated(c));
}

TEST(Layered, FamiliesHaveTheCatalogDensity) {
  std::map<Int, Int> index{{2, 2}, {5, 9}, {6, 12}, {9, 20}, {10, 26}};
  for (const LayeredFamily& f : layered_families()) {
    std::string a = f.alphabet();
    for (const std::string& w : {std::string(1, a[0]), a, std::string(a.rbegin(), a.rend()) + a.substr(0, 1)}) {
      Configuration c = build_layered(f, w);
      EXPECT_TRUE(is_admissible(c).admissible) << f.d2 << f.name << " " << w;
      EXPECT_EQ(density(c), make_rational(1, index.at(f.d2))) << f.d2 << f.name << " " << w;
      EXPECT_EQ(stacking_min_pair(f, w), f.d2) << f.d2 << f.name << " " << w;
      EXPECT_TRUE(is_saturated(c)) << f.d2 << f.name << " " << w;
    }
  }
}

TEST(Layered, BadWords) {
  const LayeredFamily& f = layered_family(5);
  EXPECT_THROW(build_layered(f, ""), InvalidArgument);
  EXPECT_THROW(build_layered(f, "SX"), InvalidArgument);
  EXPECT_THROW(layered_family(5, "III"), InvalidArgument);
  EXPECT_EQ(&layered_family(6, "1"), &layered_family(6, "I"));
}

TEST(Layered, OnAQuotient) {
  const LayeredFamily& f = layered_family(5);
  Configuration nat = build_layered(f, "ST");
  Quotient big(nat.quotient().period().scaled(2));
  Configuration c = build_layered(f, "ST", big);
  EXPECT_EQ(c.size(), 16u);
  EXPECT_TRUE(is_admissible(c).admissible);
  // A one-step period cannot carry the alternating word.
  EXPECT_THROW(build_layered(f, "ST", Quotient(known_sublattice(5).scaled(2))), DomainViolation);
}

TEST(Layered, Window) {
  const LayeredFamily& f = layered_family(5);
  Window w{{-3, -3, -3}, {3, 3, 3}};
  Configuration c = build_layered(f, "STS", w);
  EXPECT_TRUE(is_admissible(c).admissible);
  for (const Site& s : c.sites()) {
    Int h = s.x + s.y + s.z;
    EXPECT_TRUE(h == 0 || h == 3 || h == 6 || h == 9);
  }
}

TEST(Classify, Examples) {
  const LayeredFamily& f5 = layered_family(5);
  EXPECT_TRUE(constant_word(classify_stacking(build_layered(f5, "S"), {1, 1, 1})));
  StackingWord hcp = classify_stacking(build_layered(f5, "ST"), {1, 1, 1});
  ASSERT_EQ(hcp.size(), 2u);
  EXPECT_NE(hcp[0], hcp[1]);
  StackingWord a3 = classify_stacking(natural(2), {1, 1, 1});
  EXPECT_TRUE(constant_word(a3));
}

TEST(Classify, RecoversWords) {
  for (const LayeredFamily& f : layered_families()) {
    std::string a = f.alphabet();
    for (const std::string& w : {std::string(1, a[0]), a, a + a.substr(0, 1), a.substr(0, 1) + a}) {
      StackingClassification k = classify_stacking_full(build_layered(f, w), f.mesh.normal);
      // Mirror-image families of one d2 may be reported through a point symmetry.
      EXPECT_EQ(k.family->d2, f.d2);
      EXPECT_EQ(k.word.size(), w.size()) << f.d2 << f.name;
      if (k.family == &f) EXPECT_EQ(k.word, w) << f.d2 << f.name;
    }
  }
}

TEST(Classify, NotLayered) {
  EXPECT_THROW(classify_stacking(build_layered(layered_family(5), "ST"), {1, 0, 0}), DomainViolation);
}

TEST(MeshShift, Examples) {
  Configuration z = sublattice_configuration(SublatticeBasis::diagonal(2, 2, 2), Quotient::cube(4), 4);
  MeshSelector line{{0, 0, 0}, {{0, 0, 1}}};
  EXPECT_EQ(select_sites(z, line), (std::vector<Site>{{0, 0, 0}, {0, 0, 2}}));
  Configuration s = mesh_shift(z, line, {0, 0, 1});
  EXPECT_TRUE(is_admissible(s).admissible);
  EXPECT_EQ(s.size(), z.size());

  SublatticeBasis p3 = known_sublattice(3);
  Configuration b = sublattice_configuration(p3, Quotient(p3.scaled(2)), 3);
  MeshSelector plane{{0, 0, 0}, {{2, 0, 0}, {0, 2, 0}}};
  AdmissibilityReport r = is_admissible(mesh_shift(b, plane, {1, 0, 0}));
  EXPECT_FALSE(r.admissible);
  EXPECT_TRUE(r.violation.has_value());

  EXPECT_EQ(mesh_shift(z, line, {0, 0, 0}), z);
}

TEST(MeshShift, Errors) {
  Configuration z = sublattice_configuration(SublatticeBasis::diagonal(2, 2, 2), Quotient::cube(4), 4);
  EXPECT_THROW(mesh_shift(z, {{1, 0, 0}, {{0, 0, 1}}}, {0, 0, 1}), DomainViolation);
  EXPECT_THROW(select_sites(z, {{0, 0, 0}, {}}), InvalidArgument);
  Configuration w(Window{{0, 0, 0}, {2, 2, 2}}, 4, {{0, 0, 0}, {0, 0, 2}, {2, 0, 0}});
  EXPECT_THROW(mesh_shift(w, {{2, 0, 0}, {{0, 0, 1}}}, {1, 0, 0}), InvalidArgument);
}
