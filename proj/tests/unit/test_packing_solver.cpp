#include <gtest/gtest.h>

#include <map>

#include "hc3/catalog.hpp"
#include "hc3/packing_solver.hpp"
#include "oracles.hpp"

using namespace hc3;

namespace {

SolverOptions threads(unsigned n) {
  SolverOptions o;
  o.threads = n;
  return o;
}

// Every Hermite normal form of index n.
std::vector<SublatticeBasis> hnfs_of_index(Int n) {
  std::vector<SublatticeBasis> out;
  for (Int a = 1; a <= n; ++a) {
    if (n % a) continue;
    for (Int b = 1; b <= n / a; ++b) {
      if ((n / a) % b) continue;
      Int c = n / a / b;
      for (Int ab = 0; ab < b; ++ab)
        for (Int ac = 0; ac < c; ++ac)
          for (Int bc = 0; bc < c; ++bc) out.emplace_back(Site{a, ab, ac}, Site{0, b, bc}, Site{0, 0, c});
    }
  }
  return out;
}

}  // namespace

TEST(MaxPacking, Examples) {
  EXPECT_EQ(max_packing(Quotient::cube(2), 2).optimum, 4u);
  EXPECT_EQ(max_packing(Quotient::cube(2), 3).optimum, 2u);
  EXPECT_EQ(max_packing(Quotient(known_sublattice(5)), 5).optimum, 1u);
  EXPECT_EQ(max_packing(Quotient::cube(4), 12).optimum, 2u);
}

TEST(MaxPacking, WitnessIsAdmissibleAndOptimal) {
  for (Int d2 : {2, 3, 4, 5, 6, 8}) {
    PackingResult r = max_packing(Quotient::cube(4), d2);
    EXPECT_EQ(r.witness.size(), r.optimum);
    EXPECT_TRUE(is_admissible(r.witness).admissible);
    EXPECT_EQ(r.witness.d2(), d2);
  }
}

TEST(CountOptima, Examples) {
  EXPECT_EQ(count_optima(Quotient::cube(2), 2, false), 2u);
  EXPECT_EQ(count_optima(Quotient::cube(2), 3, false), 4u);
  EXPECT_EQ(count_optima(Quotient::cube(4), 12, false), 32u);
  EXPECT_EQ(count_optima(Quotient::cube(4), 8, false), 16u);
}

TEST(CountOptima, ModuloTranslations) {
  EXPECT_EQ(count_optima(Quotient::cube(2), 2, true), 1u);
  EXPECT_EQ(count_optima(Quotient::cube(4), 12, true), 1u);
}

TEST(CliqueCover, Examples) {
  std::size_t b = clique_cover_bound(Quotient::cube(2), 2);
  EXPECT_GE(b, 4u);
  EXPECT_LE(b, 8u);
  EXPECT_GE(clique_cover_bound(Quotient::cube(4), 4), 8u);
  EXPECT_EQ(clique_cover_bound(Quotient::cube(3), 1), 27u);
}

TEST(MaxPacking, BudgetExhaustionThrows) {
  SolverOptions o;
  o.node_budget = 1;
  EXPECT_THROW(max_packing(Quotient::cube(6), 3, o), BudgetExhausted);
}

TEST(MaxPacking, PeriodTooShort) { EXPECT_THROW(max_packing(Quotient::cube(2), 5), PeriodTooShort); }

TEST(MaxPacking, MonotoneInD2) {
  std::size_t prev = 64;
  for (Int d2 = 1; d2 <= 16; ++d2) {
    std::size_t opt = max_packing(Quotient::cube(4), d2).optimum;
    EXPECT_LE(opt, prev) << "d2=" << d2;
    prev = opt;
  }
}

TEST(MaxPacking, ThreadCountDoesNotChangeResults) {
  for (auto [l, d2] : {std::pair<Int, Int>{4, 4}, {4, 5}, {4, 8}, {6, 9}}) {
    Quotient q = Quotient::cube(l);
    PackingResult base = max_packing_with_count(q, d2, false, threads(1));
    for (unsigned t : {2u, 3u, 8u}) {
      PackingResult r = max_packing_with_count(q, d2, false, threads(t));
      EXPECT_EQ(r.optimum, base.optimum);
      EXPECT_EQ(r.witness, base.witness);
      EXPECT_EQ(r.count, base.count);
    }
  }
}

// Every torus with at most 16 sites, one per point-symmetry class, against
// exhaustive enumeration of independent sets.
TEST(MaxPacking, MatchesBruteForceOnSmallTori) {
  std::size_t instances = 0;
  for (Int n = 2; n <= 16; ++n) {
    std::map<std::array<Int, 9>, SublatticeBasis> classes;
    for (const SublatticeBasis& b : hnfs_of_index(n)) classes.emplace(flat_key(canonical_class_rep(b)), b);
    for (const auto& [key, period] : classes) {
      Quotient q(period);
      std::vector<Site> reps = q.representatives();
      auto dist = oracle::distance_table(period.generators(), reps, 3);
      auto perm = oracle::translation_table(period.generators(), reps);
      for (Int d2 : {2, 3, 4, 5}) {
        bool too_short = false;
        for (const Site& w : oracle::points_of_norm(1)) too_short |= d2 > 1 && oracle::contains(period.generators(), w);
        for (Int m = 2; m < d2; ++m)
          for (const Site& w : oracle::points_of_norm(m)) too_short |= oracle::contains(period.generators(), w);
        if (too_short) {
          EXPECT_THROW(max_packing(q, d2), PeriodTooShort);
          continue;
        }
        oracle::MisCount brute = oracle::brute_mis(dist, d2);
        PackingResult r = max_packing_with_count(q, d2, false);
        ASSERT_EQ(r.optimum, brute.optimum) << "period " << to_string(period[0]) << to_string(period[1])
                                            << to_string(period[2]) << " d2=" << d2;
        EXPECT_EQ(*r.count, brute.count);
        EXPECT_EQ(count_optima(q, d2, true), oracle::orbit_count(brute.maximum_sets, perm));
        // Lexicographically least optimal set of coset indices.
        std::vector<std::size_t> best;
        for (std::uint32_t s : brute.maximum_sets) {
          std::vector<std::size_t> v;
          for (std::size_t i = 0; i < reps.size(); ++i)
            if (s >> i & 1u) v.push_back(i);
          if (best.empty() || v < best) best = v;
        }
        std::vector<std::size_t> got;
        for (const Site& s : r.witness.sites()) got.push_back(q.index_of(s));
        EXPECT_EQ(got, best);
        ++instances;
      }
    }
  }
  EXPECT_GT(instances, 100u);
}
