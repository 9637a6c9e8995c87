#include <gtest/gtest.h>

#include <cstdlib>

#include "dpl/verify.hpp"

using namespace dpl;

TEST(Verify, RegistryPasses) { EXPECT_TRUE(check_registry(registry_entries()).passed()); }

TEST(Verify, CorruptedRootNamesItsType) {
  auto entries = registry_entries();
  for (auto& e : entries)
    if (e.type == "D5") e.roots[0] = "A'67";  // a root away from the chain
  const auto r = check_registry(entries);
  EXPECT_FALSE(r.passed());
  EXPECT_NE(r.detail.find("D5"), std::string::npos) << r.detail;
}

TEST(Verify, UnparsableRootIsReported) {
  auto entries = registry_entries();
  entries[0].roots[0] = "Q9";
  const auto r = check_registry(entries);
  EXPECT_FALSE(r.passed());
  EXPECT_NE(r.detail.find(entries[0].type), std::string::npos);
}

TEST(Verify, SkipWeylIsNotAFailure) {
  VerifyOptions o;
  o.skip_weyl = true;
  const auto r = run_criterion(9, o);
  EXPECT_EQ(r.status, "skipped");
  RunReport rep;
  rep.checks.push_back(r);
  EXPECT_TRUE(rep.ok());
}

TEST(Verify, Deterministic) {
  VerifyOptions o;
  o.trials = 50;
  for (int id : {2, 6, 7, 10, 11}) {
    const auto a = run_criterion(id, o), b = run_criterion(id, o);
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.actual, b.actual);
  }
}

TEST(Verify, UnknownCriterion) { EXPECT_THROW(run_criterion(12), std::out_of_range); }
