#include <gtest/gtest.h>

#include <map>
#include <set>

#include "dpl/classes.hpp"

using namespace dpl;

TEST(Classes, PreMinus1Counts) {
  EXPECT_EQ(pre_minus1_classes(SurfaceLattice(7)).size(), 56u);
  EXPECT_EQ(pre_minus1_classes(SurfaceLattice(8)).size(), 240u);
  const auto one = pre_minus1_classes(SurfaceLattice(1));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], (DivisorClass{0, 1}));
}

TEST(Classes, PreMinus1FamiliesAtRank7) {
  const auto& cat = degree2_catalog();
  std::map<std::string, int> fam;
  for (std::size_t i = 0; i < cat.pre_minus1().size(); ++i) ++fam[parse_class_name(cat.pre_name(i)).family];
  EXPECT_EQ(fam, (std::map<std::string, int>{{"A", 7}, {"B", 21}, {"C", 21}, {"D", 7}}));
}

TEST(Classes, RootCounts) {
  const auto& cat = degree2_catalog();
  EXPECT_EQ(cat.roots().size(), 126u);
  EXPECT_TRUE(root_classes(SurfaceLattice(1)).empty());
  EXPECT_EQ(root_classes(SurfaceLattice(8)).size(), 240u);
  std::map<std::string, int> fam;
  for (std::size_t i = 0; i < cat.roots().size(); ++i) ++fam[parse_class_name(cat.root_name(i)).family];
  EXPECT_EQ(fam, (std::map<std::string, int>{{"A'", 42}, {"B'", 35}, {"C'", 7}, {"-B'", 35}, {"-C'", 7}}));
  int nonneg = 0;
  for (const auto& r : cat.roots()) nonneg += r[0] >= 0;
  EXPECT_EQ(nonneg, 84);
}

TEST(Classes, EveryClassSatisfiesItsEquations) {
  const auto& cat = degree2_catalog();
  for (const auto& d : cat.pre_minus1()) {
    EXPECT_EQ(cat.dot(d, d), -1);
    EXPECT_EQ(cat.dot(d, cat.canonical()), -1);
  }
  for (const auto& r : cat.roots()) {
    EXPECT_EQ(cat.dot(r, r), -2);
    EXPECT_EQ(cat.dot(r, cat.canonical()), 0);
  }
}

TEST(Classes, NamesRoundTrip) {
  const auto& cat = degree2_catalog();
  for (std::size_t i = 0; i < cat.pre_minus1().size(); ++i) {
    EXPECT_EQ(class_from_name(cat.pre_name(i)), cat.pre_minus1()[i]);
    EXPECT_EQ(cat.pre_by_name(cat.pre_name(i)), i);
  }
  for (std::size_t i = 0; i < cat.roots().size(); ++i) EXPECT_EQ(class_from_name(cat.root_name(i)), cat.roots()[i]);
  EXPECT_EQ(class_from_name("A'21"), -class_from_name("A'12"));
  EXPECT_EQ(class_from_name("B13"), (DivisorClass{1, -1, 0, -1, 0, 0, 0, 0}));
  EXPECT_EQ(class_from_name("C'3"), (DivisorClass{2, -1, -1, 0, -1, -1, -1, -1}));
}

TEST(Classes, BadNamesThrow) {
  for (const char* s : {"", "E1", "A8", "B11", "B1", "A'11", "C'", "B'1234"})
    EXPECT_THROW(parse_class_name(s), UnknownNameError) << s;
}

TEST(Classes, TableCellSpotChecks) {
  const auto& cat = degree2_catalog();
  EXPECT_EQ(cat.dot(class_from_name("A2"), class_from_name("B12")), 1);
  EXPECT_EQ(cat.dot(class_from_name("A'12"), class_from_name("C'1")), -1);
  EXPECT_EQ(cat.dot(class_from_name("D3"), class_from_name("B'345")), -1);
}

TEST(Classes, IntersectionTableRegenerates) {
  const auto& cat = degree2_catalog();
  const auto rules = intersection_table(cat, "A'", "A'");
  std::size_t pairs = 0;
  for (const auto& r : rules) pairs += r.pairs;
  EXPECT_EQ(pairs, 42u * 42u);
  // one value per pattern, including the one the reference table leaves out
  std::set<std::int64_t> values;
  for (const auto& r : rules) values.insert(r.value);
  EXPECT_EQ(values, (std::set<std::int64_t>{-2, -1, 0, 1, 2}));
  EXPECT_THROW(intersection_table(cat, "E", "A"), UnknownNameError);
}
