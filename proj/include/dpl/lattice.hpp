#pragma once

// Exact integer model of the Picard lattice Z^{1,r} of a blow-up of the
// projective plane in r points, plus the hyperbolic plane that appears as
// the Picard lattice of a quadric (degree 8, even).

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dpl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class InvalidRootError : public Error {
 public:
  using Error::Error;
};

class ContractionError : public Error {
 public:
  using Error::Error;
};

class UnsupportedRankError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kMaxRank = 8;

/// Integer coefficient vector (a0, a1, ..., ar) in the basis l0, l1, ..., lr.
class DivisorClass {
 public:
  DivisorClass() = default;
  explicit DivisorClass(int rank);
  DivisorClass(std::initializer_list<std::int64_t> coeffs);
  explicit DivisorClass(std::span<const std::int64_t> coeffs);

  /// The basis vector l_i in a lattice of the given rank.
  static DivisorClass basis(int rank, int i);

  int rank() const { return static_cast<int>(size_) - 1; }
  std::size_t size() const { return size_; }
  std::int64_t operator[](std::size_t i) const { return c_[i]; }
  std::int64_t& operator[](std::size_t i) { return c_[i]; }
  std::span<const std::int64_t> coeffs() const { return {c_.data(), size_}; }
  const std::int64_t* begin() const { return c_.data(); }
  const std::int64_t* end() const { return c_.data() + size_; }

  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  DivisorClass& operator*=(std::int64_t k);

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(std::int64_t k, DivisorClass a) { return a *= k; }
  friend DivisorClass operator-(DivisorClass a) { return a *= -1; }

  friend bool operator==(const DivisorClass& a, const DivisorClass& b);
  /// Lexicographic on (size, a0, a1, ...).
  friend std::strong_ordering operator<=>(const DivisorClass& a, const DivisorClass& b);

  std::string to_string() const;

 private:
  std::array<std::int64_t, kMaxRank + 1> c_{};
  std::uint8_t size_ = 1;
};

struct DivisorClassHash {
  std::size_t operator()(const DivisorClass& c) const noexcept;
};

enum class LatticeForm : std::uint8_t {
  /// diag(1, -1, ..., -1), canonical class (-3, 1, ..., 1).
  kBlowUp,
  /// Hyperbolic plane on (f1, f2): f1^2 = f2^2 = 0, f1.f2 = 1, canonical
  /// class (-2, -2). Only rank 1.
  kQuadric,
};

class SurfaceLattice {
 public:
  /// Blow-up of the plane in r points, r in 0..8.
  explicit SurfaceLattice(int rank);
  static SurfaceLattice blow_up(int rank) { return SurfaceLattice(rank); }
  static SurfaceLattice quadric();

  int rank() const { return rank_; }
  int degree() const { return form_ == LatticeForm::kQuadric ? 8 : 9 - rank_; }
  LatticeForm form() const { return form_; }
  /// Number of coefficients of a class on this lattice.
  std::size_t dimension() const { return static_cast<std::size_t>(rank_) + 1; }

  friend bool operator==(const SurfaceLattice&, const SurfaceLattice&) = default;

 private:
  SurfaceLattice(int rank, LatticeForm form) : rank_(rank), form_(form) {}
  int rank_ = 0;
  LatticeForm form_ = LatticeForm::kBlowUp;
};

std::int64_t intersect(const SurfaceLattice& lat, const DivisorClass& a, const DivisorClass& b);
DivisorClass canonical_class(const SurfaceLattice& lat);

/// Reflection in a (-2)-class: x + (x.root) root.
DivisorClass reflect(const SurfaceLattice& lat, const DivisorClass& x, const DivisorClass& root);

/// Dense integer matrix acting on coefficient vectors (row-major).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  DivisorClass apply(const DivisorClass& x) const;
  std::int64_t trace() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Matrix of the reflection in `root` acting on coefficient vectors.
IntMatrix reflection_matrix(const SurfaceLattice& lat, const DivisorClass& root);

/// Result of contracting disjoint (-1)-classes.
struct BlowDown {
  SurfaceLattice source{0};
  SurfaceLattice target{0};
  std::vector<DivisorClass> contracted;
  /// Lattice automorphism of the source (a product of reflections fixing K)
  /// that moves the contracted classes onto trailing basis vectors.
  IntMatrix rebase;
  /// Linear map source coefficients -> target coefficients (pi_*).
  IntMatrix projection;

  DivisorClass project(const DivisorClass& c) const { return projection.apply(c); }
};

/// Contract pairwise-disjoint classes with E^2 = E.K = -1.
BlowDown blow_down(const SurfaceLattice& lat, std::span<const DivisorClass> curves);

}  // namespace dpl
