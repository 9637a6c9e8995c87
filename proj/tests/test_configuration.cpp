#include <gtest/gtest.h>

#include <random>
#include <set>

#include "dpl/configuration.hpp"
#include "dpl/curves.hpp"
#include "dpl/weyl.hpp"

using namespace dpl;

namespace {
DivisorClass n(const char* s) { return class_from_name(s); }
const SurfaceLattice kLat(7);
}  // namespace

TEST(Configuration, ClassifySmallSets) {
  EXPECT_EQ(classify_dynkin(kLat, {n("A'12"), n("A'23"), n("A'34")}).name(), "A3");
  EXPECT_EQ(classify_dynkin(kLat, {n("A'12"), n("A'34")}).name(), "2A1");
  EXPECT_EQ(classify_dynkin(kLat, {n("B'125"), n("A'12"), n("A'23"), n("A'34")}).name(), "D4");
  EXPECT_TRUE(classify_dynkin(kLat, {}).smooth());
}

TEST(Configuration, TypeParsing) {
  EXPECT_EQ(SingularityType::parse("A1+A3").name(), "A1+A3");
  EXPECT_EQ(SingularityType::parse("2A1+D4").delta(), 3);
  EXPECT_EQ(SingularityType::parse("3A1").rank(), 3);
  EXPECT_TRUE(SingularityType::parse("smooth").smooth());
  EXPECT_THROW(SingularityType::parse("F4"), UnknownTypeError);
  EXPECT_EQ(degree2_type_names().size(), 40u);
}

TEST(Configuration, RejectsCycles) {
  // affine A2: three roots meeting pairwise
  const std::vector<DivisorClass> tri{n("A'12"), n("A'23"), n("A'31")};
  EXPECT_THROW(classify_dynkin(kLat, tri), InvalidConfigurationError);
  EXPECT_THROW(make_configuration(kLat, tri), InvalidConfigurationError);
}

TEST(Configuration, RejectsNonRootsAndDuplicates) {
  EXPECT_THROW(make_configuration(kLat, {n("A1")}), InvalidConfigurationError);
  EXPECT_THROW(make_configuration(kLat, {n("A'12"), n("A'12")}), InvalidConfigurationError);
  EXPECT_THROW(make_configuration(kLat, {n("A'12"), n("A'21")}), InvalidConfigurationError);
}

TEST(Configuration, AtMostSevenOrthogonalRoots) {
  // grow greedily from every root: never more than seven
  const auto& cat = degree2_catalog();
  std::size_t best = 0;
  for (std::size_t s = 0; s < cat.roots().size(); ++s) {
    std::vector<DivisorClass> set{cat.roots()[s]};
    for (const auto& r : cat.roots())
      if (std::all_of(set.begin(), set.end(), [&](const DivisorClass& x) { return cat.dot(x, r) == 0 && x != -r; }) &&
          std::find(set.begin(), set.end(), r) == set.end())
        set.push_back(r);
    best = std::max(best, set.size());
  }
  EXPECT_EQ(best, 7u);
  auto seven = registry_representative("7A1");
  auto roots = seven.simple_roots;
  roots.push_back(n("A'12"));  // any eighth root fails
  EXPECT_THROW(make_configuration(kLat, roots), InvalidConfigurationError);
}

TEST(Configuration, OrbitValidation) {
  EXPECT_NO_THROW(registry_representative("2A1", "", {{0, 1}}));
  EXPECT_THROW(registry_representative("A1+A2", "", {{0, 1}}), InvalidConfigurationError);  // mixed labels
  EXPECT_THROW(registry_representative("2A1", "", {{0}}), InvalidConfigurationError);       // not a partition
  EXPECT_THROW(registry_representative("A3", "", {}, {true}), InvalidConfigurationError);   // only A2 may swap
}

TEST(Configuration, RegistryCoversEveryType) {
  std::set<std::string> seen;
  for (const auto& e : registry_entries()) {
    seen.insert(e.type);
    const auto cfg = registry_representative(e.type, e.variant);
    EXPECT_EQ(cfg.type.name(), e.type);
    EXPECT_TRUE(validate_configuration(cfg).empty());
  }
  EXPECT_EQ(seen, std::set<std::string>(degree2_type_names().begin(), degree2_type_names().end()));
  EXPECT_TRUE(registry_entry("7A1").char2_only);
  EXPECT_THROW(registry_entry("A9"), UnknownTypeError);
  EXPECT_THROW(registry_entry("A5", "3"), UnknownTypeError);
}

TEST(Configuration, RegistryExamples) {
  EXPECT_EQ(registry_representative("2A1").simple_roots, (std::vector<DivisorClass>{n("A'12"), n("A'34")}));
  EXPECT_TRUE(three_root_curves(registry_representative("4A1", "no-tri-curve")).empty());
  EXPECT_FALSE(three_root_curves(registry_representative("4A1", "with-tri-curve")).empty());
}

TEST(Configuration, VariantsHaveDistinctFingerprints) {
  for (const char* t : {"A5", "A1+A3", "A1+A5", "3A1", "2A1+A3", "4A1"}) {
    const auto v = registry_variants(t);
    ASSERT_EQ(v.size(), 2u) << t;
    EXPECT_NE(orbit_fingerprint(registry_representative(t, v[0])), orbit_fingerprint(registry_representative(t, v[1])))
        << t;
  }
}

TEST(Configuration, FingerprintInvariantUnderWeyl) {
  const auto& cat = degree2_catalog();
  const E7RootSystem sys(cat);
  std::mt19937_64 rng(7);
  for (const auto& e : registry_entries()) {
    const auto cfg = registry_representative(e.type, e.variant);
    const auto fp = orbit_fingerprint(cfg);
    for (int t = 0; t < 100; ++t) {
      const auto m = sys.matrix(random_element(sys, rng));
      std::vector<DivisorClass> moved;
      for (const auto& r : cfg.simple_roots) moved.push_back(m.apply(r));
      ASSERT_EQ(orbit_fingerprint(make_configuration(kLat, moved)), fp) << e.type << " " << e.variant;
    }
  }
}

TEST(Configuration, FingerprintFixesFreeCount) {
  for (const auto& e : registry_entries()) {
    const auto cfg = registry_representative(e.type, e.variant);
    const auto fp = orbit_fingerprint(cfg);
    EXPECT_EQ(fp.free_curves(), free_minus1_curves(cfg).size()) << e.type;
  }
}

// Search regeneration: the stored registry is exactly one root set per
// fingerprint class found by the search.
TEST(Configuration, RegistryMatchesSearch) {
  const auto found = search_configurations(degree2_catalog());
  std::set<Fingerprint> searched, stored;
  for (const auto& r : found) searched.insert(r.fingerprint);
  for (const auto& e : registry_entries()) {
    const auto fp = orbit_fingerprint(registry_representative(e.type, e.variant));
    EXPECT_TRUE(stored.insert(fp).second) << e.type << " " << e.variant;
  }
  EXPECT_EQ(searched, stored);
}
