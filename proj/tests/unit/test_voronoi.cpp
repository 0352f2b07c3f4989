#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "hc3/catalog.hpp"
#include "hc3/voronoi.hpp"
#include "oracles.hpp"

using namespace hc3;

namespace {

Configuration natural(Int d2, int variant = 1) {
  SublatticeBasis l = known_sublattice(d2, variant);
  return sublattice_configuration(l, Quotient(l.scaled(2)), d2);
}

std::set<RationalPoint> vertex_set(const RationalPolytope& p) { return {p.vertices.begin(), p.vertices.end()}; }

}  // namespace

TEST(CellClipper, Cube) {
  CellClipper c(1);
  EXPECT_EQ(c.vertex_count(), 8u);
  EXPECT_EQ(c.volume(), make_rational(8));
  EXPECT_TRUE(c.touches_box());
  EXPECT_FALSE(c.cut({1, 0, 0}, 5));
  EXPECT_TRUE(c.cut({1, 1, 1}, 2));
  EXPECT_EQ(c.volume(), make_rational(8) - make_rational(1, 6));
}

TEST(VoronoiCell, Examples) {
  VoronoiCell cube = voronoi_cell(sublattice_configuration(SublatticeBasis::diagonal(2, 2, 2), Quotient::cube(4), 4),
                                  {0, 0, 0});
  EXPECT_EQ(cube.volume, make_rational(8));
  EXPECT_EQ(cube.polytope.facets.size(), 6u);

  VoronoiCell a3 = voronoi_cell(natural(2), {0, 0, 0});
  EXPECT_EQ(a3.volume, make_rational(2));
  EXPECT_EQ(a3.polytope.facets.size(), 12u);
  EXPECT_EQ(a3.polytope.vertices.size(), 14u);
  EXPECT_EQ(a3.polytope.edge_count(), 24u);

  VoronoiCell p3 = voronoi_cell(natural(3), {0, 0, 0});
  EXPECT_EQ(p3.volume, make_rational(4));
  EXPECT_EQ(p3.polytope.facets.size(), 14u);

  EXPECT_EQ(voronoi_cell(natural(5), {0, 0, 0}).volume, make_rational(9));
}

TEST(VoronoiCell, CenteredOnTheSite) {
  Configuration c = natural(2);
  Site x = c.sites().back();
  VoronoiCell v = voronoi_cell(c, x);
  EXPECT_EQ(v.center, x);
  for (const RationalPoint& p : v.polytope.vertices) {
    Rational d2 = 0;
    for (int i = 0; i < 3; ++i) d2 += (p[i] - x[i]) * (p[i] - x[i]);
    EXPECT_LE(d2, make_rational(1));
  }
}

TEST(VoronoiCell, Errors) {
  Configuration c = natural(2);
  EXPECT_THROW(voronoi_cell(c, {1, 0, 0}), InvalidArgument);
  Configuration w(Window{{0, 0, 0}, {2, 2, 2}}, 2, {{0, 0, 0}});
  EXPECT_THROW(voronoi_cell(w, {0, 0, 0}), InvalidArgument);
}

TEST(VoronoiCell, VerticesMatchBisectorEnumeration) {
  for (Int d2 : {2, 3, 4, 5, 6, 8, 9}) {
    Configuration c = natural(d2);
    VoronoiCell cell = voronoi_cell(c, {0, 0, 0});
    // Every point within twice the reported circumradius. A reported cell that
    // is too large still leaves the enumeration exact; one that is too small
    // makes the enumerated cell strictly larger. Either error shows up.
    Rational r2 = 0;
    for (const RationalPoint& p : cell.polytope.vertices) r2 = std::max(r2, Rational(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]));
    std::vector<Site> pts = oracle::periodic_points(c.quotient().period().generators(), c.sites(), 8);
    std::vector<Site> others;
    for (const Site& p : pts)
      if (p != Site{} && make_rational(sq_norm(p)) <= 4 * r2) others.push_back(p);
    std::vector<RationalPoint> want = oracle::voronoi_vertices(others);
    EXPECT_EQ(vertex_set(cell.polytope), std::set<RationalPoint>(want.begin(), want.end())) << "d2=" << d2;
  }
}

TEST(VoronoiCell, CutoffIsIdempotent) {
  for (Int d2 : {2, 5, 10}) {
    Configuration c = natural(d2);
    VoronoiCell a = voronoi_cell(c, {0, 0, 0});
    Int r = 1;
    while ((r + 1) * (r + 1) <= a.cutoff_sq) ++r;
    VoronoiCell b = voronoi_cell(c, {0, 0, 0}, r + 3);
    EXPECT_EQ(a.volume, b.volume);
    EXPECT_EQ(vertex_set(a.polytope), vertex_set(b.polytope));
  }
}

TEST(VoronoiCell, StabilizerMapsCellToItself) {
  Configuration c = natural(5);
  std::set<RationalPoint> verts = vertex_set(voronoi_cell(c, {0, 0, 0}).polytope);
  SublatticeBasis h = hnf(c.quotient().period());
  for (const SymmetryOp& op : symmetry_group()) {
    if (!same_lattice(transform(op, h), h)) continue;
    bool maps = true;
    for (const Site& s : c.sites())
      if (!c.occupied(op.apply(s))) maps = false;
    if (!maps) continue;
    std::set<RationalPoint> image;
    for (const RationalPoint& p : verts) {
      RationalPoint q;
      for (int i = 0; i < 3; ++i) q[i] = op.sign()[i] * p[op.perm()[i]];
      image.insert(q);
    }
    EXPECT_EQ(image, verts);
  }
}

TEST(Tessellation, CatalogAndScaledA3) {
  for (Int d2 : catalog_d2_values())
    for (int v : known_variants(d2)) {
      TessellationReport r = tessellation_report(natural(d2, v));
      EXPECT_TRUE(r.ok) << "d2=" << d2;
      EXPECT_EQ(r.total_volume, make_rational(r.domain_volume));
    }
  SublatticeBasis a3 = known_sublattice(2);
  Configuration c = sublattice_configuration(a3, Quotient(a3.scaled(4)), 2);
  TessellationReport r = tessellation_report(c);
  EXPECT_TRUE(r.ok);
  ASSERT_EQ(r.cell_volumes.size(), 64u);
  for (const Rational& v : r.cell_volumes) EXPECT_EQ(v, make_rational(2));
}

TEST(Tessellation, Dhcp) {
  Configuration c = build_layered(layered_family(5), "ST");
  TessellationReport r = tessellation_report(c);
  EXPECT_TRUE(r.ok);
  for (const Rational& v : r.cell_volumes) EXPECT_EQ(v, make_rational(9));
}

TEST(MinCell, SmallRadii) {
  MinCellResult a = min_cell_search(2, 3);
  EXPECT_TRUE(a.complete);
  EXPECT_EQ(*a.best, make_rational(2));
  MinCellResult b = min_cell_search(3, 3);
  EXPECT_TRUE(b.complete);
  EXPECT_EQ(*b.best, make_rational(4));
  EXPECT_FALSE(b.witness.empty());
  for (const Site& w : b.witness) EXPECT_GE(sq_norm(w), 3);
}

TEST(MinCell, WitnessReproducesTheVolume) {
  MinCellResult r = min_cell_search(3, 2);
  ASSERT_TRUE(r.best.has_value());
  CellClipper clip(8);
  for (const Site& w : r.witness) clip.cut_bisector(w);
  EXPECT_EQ(clip.volume(), *r.best);
  for (std::size_t i = 0; i < r.witness.size(); ++i)
    for (std::size_t j = i + 1; j < r.witness.size(); ++j)
      EXPECT_GE(sq_norm(r.witness[i] - r.witness[j]), 3);
}

TEST(MinCell, Gap) {
  MinCellOptions o;
  o.track_second = true;
  MinCellResult r = min_cell_search(3, 2, o);
  ASSERT_TRUE(r.second.has_value());
  EXPECT_EQ(*r.best, make_rational(4));
  EXPECT_EQ(*r.second, make_rational(49, 12));
}

TEST(MinCell, BudgetGivesPartialResult) {
  MinCellOptions o;
  o.node_budget = 50;
  MinCellResult r = min_cell_search(5, 4, o);
  EXPECT_FALSE(r.complete);
  EXPECT_LE(r.nodes, 50u + 1u);
  if (r.best) EXPECT_GE(*r.best, make_rational(9));
}
