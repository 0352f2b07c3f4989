#include <gtest/gtest.h>

#include "hc3/embeddings.hpp"
#include "hc3/symmetry.hpp"
#include "oracles.hpp"

using namespace hc3;

TEST(FccEmbeddings, MatchBruteForce) {
  for (Int ell = 1; ell <= 3; ++ell) {
    std::vector<SublatticeBasis> lib = enumerate_fcc_embeddings(ell);
    std::vector<oracle::Basis> ref = oracle::fcc_embeddings(ell);
    ASSERT_EQ(lib.size(), ref.size()) << "l=" << ell;
    for (const SublatticeBasis& b : lib) {
      bool found = false;
      for (const oracle::Basis& r : ref) found = found || oracle::same_lattice(b.generators(), r);
      EXPECT_TRUE(found);
    }
    EXPECT_EQ(embedding_classes(ell).size(), oracle::symmetry_classes(ref)) << "l=" << ell;
  }
}

TEST(FccEmbeddings, ClassSizes) {
  auto sizes = [](Int ell) {
    std::vector<std::size_t> s;
    for (const EmbeddingClass& c : embedding_classes(ell)) s.push_back(c.members.size());
    return s;
  };
  EXPECT_EQ(sizes(1), (std::vector<std::size_t>{1}));
  EXPECT_EQ(sizes(2), (std::vector<std::size_t>{1}));
  EXPECT_EQ(sizes(3), (std::vector<std::size_t>{4, 1}));
  EXPECT_EQ(sizes(5), (std::vector<std::size_t>{6, 1}));
}

TEST(FccEmbeddings, Invariants) {
  for (Int ell = 1; ell <= 6; ++ell)
    for (const EmbeddingClass& cls : embedding_classes(ell)) {
      EXPECT_EQ(48 % cls.orbit_size, 0u);
      EXPECT_EQ(cls.orbit_size, cls.members.size());
      for (const SublatticeBasis& m : cls.members) {
        EXPECT_EQ(lattice_index(m), 2 * ell * ell * ell);
        ShortestVectors sv = shortest_vectors(m);
        EXPECT_EQ(sv.min_sq_norm, 2 * ell * ell);
        EXPECT_EQ(sv.vectors.size(), 12u);
        for (const Site& a : sv.vectors)
          for (const Site& b : sv.vectors) {
            Int g = dot(a, b);
            EXPECT_TRUE(g == 2 * ell * ell || g == ell * ell || g == 0 || g == -ell * ell || g == -2 * ell * ell);
          }
        EXPECT_EQ(fcc_embedding_scale(m), ell);
        EXPECT_EQ(canonical_class_rep(m), cls.representative);
      }
    }
}

TEST(FccEmbeddings, NotAnEmbedding) {
  EXPECT_FALSE(fcc_embedding_scale(SublatticeBasis::diagonal(2, 2, 2)).has_value());
  EXPECT_FALSE(fcc_embedding_scale(SublatticeBasis({1, 1, 0}, {1, -1, 0}, {0, 0, 2})).has_value());
  EXPECT_THROW(admits_layered(SublatticeBasis::diagonal(1, 1, 1)), InvalidArgument);
}

TEST(AdmitsLayered, ScaleTable) {
  for (Int ell = 1; ell <= 7; ++ell)
    for (const EmbeddingClass& cls : embedding_classes(ell)) {
      bool expected = ell == 3 || ell == 6;
      EXPECT_EQ(admits_layered(cls.representative).admits, expected) << "l=" << ell;
    }
}

TEST(AdmitsLayered, ClassFunction) {
  for (Int ell = 1; ell <= 6; ++ell)
    for (const EmbeddingClass& cls : embedding_classes(ell)) {
      bool rep = admits_layered(cls.representative).admits;
      for (const SublatticeBasis& m : cls.members) EXPECT_EQ(admits_layered(m).admits, rep) << "l=" << ell;
      for (const SymmetryOp& op : symmetry_group())
        EXPECT_EQ(admits_layered(transform(op, cls.representative)).admits, rep);
    }
}

TEST(AdmitsLayered, CertificateIsValid) {
  for (Int ell : {3, 6})
    for (const EmbeddingClass& cls : embedding_classes(ell)) {
      LayeredCheck k = admits_layered(cls.representative);
      ASSERT_TRUE(k.admits);
      ASSERT_TRUE(k.shift.has_value());
      const Site& n = k.normal;
      EXPECT_EQ(dot(n, k.mesh[0]), 0);
      EXPECT_EQ(dot(n, k.mesh[1]), 0);
      EXPECT_EQ(dot(n, k.step), dot(n, *k.shift));
      EXPECT_TRUE(lattice_contains(cls.representative, k.step));
      EXPECT_FALSE(lattice_contains(cls.representative, *k.shift - k.step));
      // Offsets between layers avoid every mesh point closer than 2 l^2.
      Int d2 = 2 * ell * ell;
      const Site& s = k.step;
      const Site& t = *k.shift;
      for (const Site& off : {t, s + t, t + t})
        for (Int a = -6; a <= 6; ++a)
          for (Int b = -6; b <= 6; ++b) EXPECT_GE(sq_norm(off + a * k.mesh[0] + b * k.mesh[1]), d2);
    }
}
