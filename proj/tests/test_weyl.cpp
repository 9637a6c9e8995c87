#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <set>

#include "dpl/weyl.hpp"

using namespace dpl;

namespace {

const E7RootSystem& sys() {
  static const E7RootSystem s(degree2_catalog());
  return s;
}

const WeylGroup& group() {
  static const WeylGroup g = WeylGroup::generate(sys(), WeylOptions{});
  return g;
}

}  // namespace

TEST(Weyl, SimpleRootsFormE7) {
  const auto& s = sys();
  int edges = 0;
  for (std::size_t i = 0; i < kE7Rank; ++i)
    for (std::size_t j = i + 1; j < kE7Rank; ++j) {
      const int d = s.dot(s.simple()[i], s.simple()[j]);
      EXPECT_TRUE(d == 0 || d == 1);
      edges += d;
    }
  EXPECT_EQ(edges, 6);
}

TEST(Weyl, IdentityAndGenerators) {
  const auto& s = sys();
  const auto id = s.identity();
  EXPECT_EQ(s.trace(id), 8);
  const auto perm = s.permutation(id);
  for (std::size_t r = 0; r < kE7Roots; ++r) EXPECT_EQ(perm[r], r);
  for (std::size_t i = 0; i < kE7Rank; ++i) {
    const auto g = s.generator(i);
    EXPECT_NE(g, id);
    EXPECT_EQ(s.compose(g, g), id);
    EXPECT_EQ(s.trace(g), 6);
  }
}

TEST(Weyl, ReflectionsHaveTraceSix) {
  const auto& s = sys();
  for (std::size_t r = 0; r < kE7Roots; ++r) {
    const auto g = s.reflection(r);
    EXPECT_EQ(s.trace(g), 6);
    EXPECT_EQ(s.matrix(g), reflection_matrix(SurfaceLattice(7), s.catalog().roots()[r]));
  }
}

TEST(Weyl, MatrixRoundTrip) {
  const auto& s = sys();
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_element(s, rng), b = random_element(s, rng);
    const auto ma = s.matrix(a), mb = s.matrix(b);
    EXPECT_EQ(s.key_of(ma), a);
    EXPECT_EQ(s.matrix(s.compose(a, b)), ma * mb);
    EXPECT_EQ(ma.trace(), s.trace(a));
    const auto perm = s.permutation(a);
    for (std::size_t r = 0; r < kE7Roots; r += 13) {
      EXPECT_EQ(perm[r], s.apply(a, r));
      EXPECT_EQ(ma.apply(s.catalog().roots()[r]), s.catalog().roots()[perm[r]]);
    }
  }
  EXPECT_FALSE(s.key_of(IntMatrix::identity(7)).has_value());
}

TEST(Weyl, OrderAndOrbits) {
  const auto& g = group();
  EXPECT_EQ(g.order(), kE7Order);
  EXPECT_TRUE(g.contains(sys().identity()));
  EXPECT_EQ(generator_orbit(sys(), {0}).size(), 126u);
  const auto d2 = delta2(sys());
  int per_root = 0;
  for (std::size_t r = 0; r < kE7Roots; ++r) per_root += sys().dot(0, r) == 1;
  EXPECT_EQ(d2.size(), 126u * per_root);
  EXPECT_EQ(generator_orbit(sys(), {d2[0][0], d2[0][1]}).size(), d2.size());
}

TEST(Weyl, StabiliserAndTraceRange) {
  const auto s = scan_group(group(), {{TraceFilter::kFixRoot, {0}}}, false, 1);
  EXPECT_EQ(s.elements, kE7Order);
  EXPECT_EQ(s.broken, 0u);
  EXPECT_EQ(s.filter_counts[0] * kE7Roots, kE7Order);
  EXPECT_EQ(s.trace_histogram.begin()->first, -6);
  EXPECT_EQ(s.trace_histogram.begin()->second, 1u);  // the longest element
  EXPECT_EQ(s.trace_histogram.rbegin()->first, 8);
  EXPECT_EQ(s.trace_histogram.rbegin()->second, 1u);
}

TEST(Weyl, CacheRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "dpl-weyl-test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  WeylOptions opt;
  opt.cache_dir = dir.string();
  const auto first = WeylGroup::generate(sys(), opt);
  EXPECT_FALSE(first.from_cache());
  const auto second = WeylGroup::generate(sys(), opt);
  EXPECT_TRUE(second.from_cache());
  EXPECT_EQ(first.keys(), second.keys());
  EXPECT_EQ(second.keys(), group().keys());

  // a corrupted file is ignored and rebuilt
  {
    std::FILE* f = std::fopen(second.cache_path().c_str(), "r+b");
    ASSERT_NE(f, nullptr);
    std::fputs("garbage!", f);
    std::fclose(f);
  }
  const auto third = WeylGroup::generate(sys(), opt);
  EXPECT_FALSE(third.from_cache());
  EXPECT_EQ(third.keys(), group().keys());
  std::filesystem::remove_all(dir);
}

TEST(Weyl, ExactOrbitMapping) {
  const auto& cat = degree2_catalog();
  auto idx = [&](std::initializer_list<const char*> names) {
    std::vector<std::size_t> v;
    for (auto n : names) v.push_back(cat.root_by_name(n));
    return v;
  };
  // the two A1+A3 layouts are not Weyl-equivalent
  EXPECT_FALSE(find_mapping(group(), idx({"B'145", "A'12", "A'23", "A'67"}), idx({"A'12", "A'23", "A'34", "A'56"})));
  const auto key = find_mapping(group(), idx({"A'12", "A'34"}), idx({"B'123", "C'1"}));
  ASSERT_TRUE(key);
  std::set<std::size_t> img{sys().apply(*key, cat.root_by_name("A'12")), sys().apply(*key, cat.root_by_name("A'34"))};
  EXPECT_EQ(img, (std::set<std::size_t>{cat.root_by_name("B'123"), cat.root_by_name("C'1")}));
}

TEST(Weyl, TraceFilterNames) {
  for (auto f : {TraceFilter::kFixRoot, TraceFilter::kSwapPair, TraceFilter::kCycleQuad})
    EXPECT_EQ(parse_trace_filter(to_string(f)), f);
  EXPECT_THROW(parse_trace_filter("rotate"), std::invalid_argument);
}
