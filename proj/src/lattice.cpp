#include "dpl/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace dpl {

namespace {

void check_rank(int rank) {
  if (rank < 0 || rank > kMaxRank) {
    throw UnsupportedRankError("rank " + std::to_string(rank) + " outside 0..8");
  }
}

void check_dims(const SurfaceLattice& lat, const DivisorClass& c) {
  if (c.size() != lat.dimension()) {
    throw DimensionError("class " + c.to_string() + " has " + std::to_string(c.size()) +
                         " coefficients, lattice expects " + std::to_string(lat.dimension()));
  }
}

}  // namespace

DivisorClass::DivisorClass(int rank) {
  check_rank(rank);
  size_ = static_cast<std::uint8_t>(rank + 1);
}

DivisorClass::DivisorClass(std::initializer_list<std::int64_t> coeffs)
    : DivisorClass(std::span<const std::int64_t>(coeffs.begin(), coeffs.size())) {}

DivisorClass::DivisorClass(std::span<const std::int64_t> coeffs) {
  if (coeffs.empty() || coeffs.size() > c_.size()) {
    throw DimensionError("class needs 1..9 coefficients, got " + std::to_string(coeffs.size()));
  }
  size_ = static_cast<std::uint8_t>(coeffs.size());
  std::copy(coeffs.begin(), coeffs.end(), c_.begin());
}

DivisorClass DivisorClass::basis(int rank, int i) {
  DivisorClass c(rank);
  if (i < 0 || i > rank) throw DimensionError("basis index out of range");
  c.c_[static_cast<std::size_t>(i)] = 1;
  return c;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  if (o.size_ != size_) throw DimensionError("adding classes of different rank");
  for (std::size_t i = 0; i < size_; ++i) c_[i] += o.c_[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
  if (o.size_ != size_) throw DimensionError("subtracting classes of different rank");
  for (std::size_t i = 0; i < size_; ++i) c_[i] -= o.c_[i];
  return *this;
}

DivisorClass& DivisorClass::operator*=(std::int64_t k) {
  for (std::size_t i = 0; i < size_; ++i) c_[i] *= k;
  return *this;
}

bool operator==(const DivisorClass& a, const DivisorClass& b) {
  return a.size_ == b.size_ && std::equal(a.begin(), a.end(), b.begin());
}

std::strong_ordering operator<=>(const DivisorClass& a, const DivisorClass& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::string DivisorClass::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < size_; ++i) os << (i ? "," : "") << c_[i];
  os << ']';
  return os.str();
}

std::size_t DivisorClassHash::operator()(const DivisorClass& c) const noexcept {
  std::size_t h = c.size();
  for (auto v : c) h = h * 1000003u ^ static_cast<std::size_t>(v + 64);
  return h;
}

SurfaceLattice::SurfaceLattice(int rank) : rank_(rank) { check_rank(rank); }

SurfaceLattice SurfaceLattice::quadric() { return SurfaceLattice(1, LatticeForm::kQuadric); }

std::int64_t intersect(const SurfaceLattice& lat, const DivisorClass& a, const DivisorClass& b) {
  check_dims(lat, a);
  check_dims(lat, b);
  if (lat.form() == LatticeForm::kQuadric) return a[0] * b[1] + a[1] * b[0];
  std::int64_t s = a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) s -= a[i] * b[i];
  return s;
}

DivisorClass canonical_class(const SurfaceLattice& lat) {
  DivisorClass k(lat.rank());
  if (lat.form() == LatticeForm::kQuadric) {
    k[0] = -2;
    k[1] = -2;
    return k;
  }
  k[0] = -3;
  for (int i = 1; i <= lat.rank(); ++i) k[static_cast<std::size_t>(i)] = 1;
  return k;
}

DivisorClass reflect(const SurfaceLattice& lat, const DivisorClass& x, const DivisorClass& root) {
  if (intersect(lat, root, root) != -2) {
    throw InvalidRootError("reflection vector " + root.to_string() + " is not a (-2)-class");
  }
  return x + intersect(lat, x, root) * root;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

DivisorClass IntMatrix::apply(const DivisorClass& x) const {
  if (x.size() != cols_) throw DimensionError("matrix/vector size mismatch");
  DivisorClass y(static_cast<int>(rows_) - 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::int64_t s = 0;
    for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c) * x[c];
    y[r] = s;
  }
  return y;
}

std::int64_t IntMatrix::trace() const {
  std::int64_t t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product size mismatch");
  IntMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto v = a(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += v * b(k, j);
    }
  return m;
}

IntMatrix reflection_matrix(const SurfaceLattice& lat, const DivisorClass& root) {
  const std::size_t n = lat.dimension();
  IntMatrix m(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    DivisorClass col = reflect(lat, DivisorClass::basis(lat.rank(), static_cast<int>(c)), root);
    for (std::size_t r = 0; r < n; ++r) m(r, c) = col[r];
  }
  return m;
}

BlowDown blow_down(const SurfaceLattice& lat, std::span<const DivisorClass> curves) {
  if (lat.form() != LatticeForm::kBlowUp) {
    throw ContractionError("contraction is only modelled from a blow-up of the plane");
  }
  const DivisorClass k = canonical_class(lat);
  const int r = lat.rank();
  const int m = static_cast<int>(curves.size());
  if (m > r) throw ContractionError("more curves than the lattice rank");

  for (std::size_t i = 0; i < curves.size(); ++i) {
    const auto& e = curves[i];
    check_dims(lat, e);
    if (intersect(lat, e, e) != -1 || intersect(lat, e, k) != -1) {
      throw ContractionError(e.to_string() + " is not a (-1)-class");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (intersect(lat, e, curves[j]) != 0) {
        throw ContractionError(e.to_string() + " meets " + curves[j].to_string());
      }
    }
  }

  const std::size_t n = lat.dimension();
  IntMatrix w = IntMatrix::identity(n);
  auto apply_reflection = [&](const DivisorClass& root) { w = reflection_matrix(lat, root) * w; };

  int s = r;  // l_1..l_s still free
  bool quadric = false;
  for (int idx = 0; idx < m; ++idx) {
    DivisorClass e = w.apply(curves[static_cast<std::size_t>(idx)]);
    // Noether-style descent: a0 strictly drops at every step.
    while (e[0] > 0 && s >= 3) {
      std::vector<int> order(static_cast<std::size_t>(s));
      for (int i = 0; i < s; ++i) order[static_cast<std::size_t>(i)] = i + 1;
      std::stable_sort(order.begin(), order.end(),
                       [&](int a, int b) { return e[static_cast<std::size_t>(a)] < e[static_cast<std::size_t>(b)]; });
      DivisorClass root(r);
      root[0] = 1;
      for (int t = 0; t < 3; ++t) root[static_cast<std::size_t>(order[static_cast<std::size_t>(t)])] = -1;
      if (intersect(lat, e, root) >= 0) {
        throw ContractionError("descent stalled on " + e.to_string());
      }
      apply_reflection(root);
      e = reflect(lat, e, root);
    }
    if (e[0] > 0) {
      // Only l0 - l1 - l2 survives at rank 2; its complement is the quadric.
      DivisorClass line_class(r);
      line_class[0] = 1;
      if (r >= 2) line_class[1] = line_class[2] = -1;
      if (s == 2 && idx == m - 1 && e == line_class) {
        quadric = true;
        break;
      }
      throw ContractionError("cannot rebase " + curves[static_cast<std::size_t>(idx)].to_string());
    }
    int t = -1;
    for (int i = 1; i <= s; ++i) {
      if (e[static_cast<std::size_t>(i)] == 1) t = i;
    }
    if (t < 0 || e != DivisorClass::basis(r, t)) {
      throw ContractionError("unexpected reduced class " + e.to_string());
    }
    if (t != s) {
      DivisorClass root(r);
      root[static_cast<std::size_t>(t)] = 1;
      root[static_cast<std::size_t>(s)] = -1;
      apply_reflection(root);
    }
    --s;
  }

  BlowDown out{lat, quadric ? SurfaceLattice::quadric() : SurfaceLattice(r - m),
               std::vector<DivisorClass>(curves.begin(), curves.end()), w, {}};
  if (quadric) {
    IntMatrix p(2, n);
    for (std::size_t c = 0; c < n; ++c) {
      p(0, c) = w(0, c) + w(2, c);
      p(1, c) = w(0, c) + w(1, c);
    }
    out.projection = p;
  } else {
    const std::size_t tn = out.target.dimension();
    IntMatrix p(tn, n);
    for (std::size_t rr = 0; rr < tn; ++rr)
      for (std::size_t c = 0; c < n; ++c) p(rr, c) = w(rr, c);
    out.projection = p;
  }
  if (out.project(k) != canonical_class(out.target)) {
    throw ContractionError("projected canonical class does not match the target");
  }
  return out;
}

}  // namespace dpl
