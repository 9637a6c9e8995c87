#include <gtest/gtest.h>

#include <vector>

#include "dpl/lattice.hpp"

using namespace dpl;

namespace {
DivisorClass l(int rank, int i) { return DivisorClass::basis(rank, i); }
}  // namespace

TEST(Lattice, BasisProducts) {
  const SurfaceLattice lat(7);
  EXPECT_EQ(intersect(lat, l(7, 0), l(7, 0)), 1);
  EXPECT_EQ(intersect(lat, l(7, 1), l(7, 2)), 0);
  EXPECT_EQ(intersect(lat, l(7, 3), l(7, 3)), -1);
}

TEST(Lattice, CanonicalClass) {
  for (int r = 0; r <= 8; ++r) {
    const SurfaceLattice lat(r);
    const auto k = canonical_class(lat);
    EXPECT_EQ(k[0], -3);
    for (int i = 1; i <= r; ++i) EXPECT_EQ(k[i], 1);
    EXPECT_EQ(intersect(lat, k, k), 9 - r);
    EXPECT_EQ(lat.degree(), 9 - r);
  }
}

TEST(Lattice, QuadricForm) {
  const auto q = SurfaceLattice::quadric();
  const DivisorClass f1{1, 0}, f2{0, 1};
  EXPECT_EQ(intersect(q, f1, f1), 0);
  EXPECT_EQ(intersect(q, f1, f2), 1);
  EXPECT_EQ(intersect(q, canonical_class(q), canonical_class(q)), 8);
  EXPECT_EQ(q.degree(), 8);
}

TEST(Lattice, DimensionMismatchThrows) {
  EXPECT_THROW(intersect(SurfaceLattice(7), l(7, 1), l(6, 1)), DimensionError);
  EXPECT_THROW(SurfaceLattice(9), UnsupportedRankError);
}

TEST(Lattice, Reflections) {
  const SurfaceLattice lat(7);
  const auto r = l(7, 1) - l(7, 2);
  EXPECT_EQ(reflect(lat, r, r), l(7, 2) - l(7, 1));
  EXPECT_EQ(reflect(lat, canonical_class(lat), r), canonical_class(lat));
  EXPECT_EQ(reflect(lat, l(7, 1), r), l(7, 2));
  EXPECT_THROW(reflect(lat, l(7, 1), l(7, 1)), InvalidRootError);
}

TEST(Lattice, ReflectionMatrixMatchesReflect) {
  const SurfaceLattice lat(7);
  const DivisorClass r{1, -1, -1, -1, 0, 0, 0, 0};
  const auto m = reflection_matrix(lat, r);
  for (int i = 0; i <= 7; ++i) EXPECT_EQ(m.apply(l(7, i)), reflect(lat, l(7, i), r));
  EXPECT_EQ(m * m, IntMatrix::identity(8));
  EXPECT_EQ(m.trace(), 6);
}

TEST(Lattice, BlowDownToDegreeFour) {
  const SurfaceLattice lat(7);
  const DivisorClass b13{1, -1, 0, -1, 0, 0, 0, 0};
  const DivisorClass c24{2, -1, 0, -1, 0, -1, -1, -1};
  const std::vector<DivisorClass> curves{b13, c24};
  const auto bd = blow_down(lat, curves);
  EXPECT_EQ(bd.target.rank(), 5);
  EXPECT_EQ(bd.target.degree(), 4);
  EXPECT_EQ(bd.project(canonical_class(lat)), canonical_class(bd.target));
  // a root orthogonal to both curves keeps its square
  const DivisorClass f = l(7, 6) - l(7, 7);
  ASSERT_EQ(intersect(lat, f, b13), 0);
  ASSERT_EQ(intersect(lat, f, c24), 0);
  const auto pf = bd.project(f);
  EXPECT_EQ(intersect(bd.target, pf, pf), -2);
  for (const auto& e : curves) EXPECT_EQ(bd.project(e), DivisorClass(5));
}

TEST(Lattice, EmptyBlowDownIsIdentity) {
  const SurfaceLattice lat(7);
  const auto bd = blow_down(lat, std::vector<DivisorClass>{});
  EXPECT_EQ(bd.target, lat);
  EXPECT_EQ(bd.projection, IntMatrix::identity(8));
}

TEST(Lattice, BlowDownRejectsMeetingCurves) {
  const SurfaceLattice lat(7);
  const std::vector<DivisorClass> meet{l(7, 1), DivisorClass{1, -1, -1, 0, 0, 0, 0, 0}};
  EXPECT_THROW(blow_down(lat, meet), ContractionError);
}

TEST(Lattice, BlowDownToDegreeEight) {
  const SurfaceLattice lat(7);
  std::vector<DivisorClass> curves;
  for (int i = 3; i <= 7; ++i) curves.push_back(l(7, i));
  std::vector<DivisorClass> six = curves;
  six.insert(six.begin(), l(7, 2));
  const auto f1 = blow_down(lat, six);
  EXPECT_EQ(f1.target.form(), LatticeForm::kBlowUp);
  EXPECT_EQ(f1.target.degree(), 8);

  // the line through the last two points goes instead: P1 x P1
  curves.push_back(DivisorClass{1, -1, -1, 0, 0, 0, 0, 0});
  const auto q = blow_down(lat, curves);
  EXPECT_EQ(q.target.form(), LatticeForm::kQuadric);
  EXPECT_EQ(q.target.degree(), 8);
  EXPECT_EQ(q.project(canonical_class(lat)), canonical_class(q.target));
}
