#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dpl/lattice.hpp"

namespace dpl {

/// Classes with c^2 = c.K = -1 and a0 >= 0, lexicographically sorted.
std::vector<DivisorClass> pre_minus1_classes(const SurfaceLattice& lat);
/// Classes with c^2 = -2 and c.K = 0 (both signs), lexicographically sorted.
std::vector<DivisorClass> root_classes(const SurfaceLattice& lat);

/// Largest a0 admitted by the Cauchy-Schwarz argument.
int pre_minus1_a0_bound(int rank);
int root_a0_bound(int rank);

class UnknownNameError : public Error {
 public:
  using Error::Error;
};

/// Families used by the degree-2 naming scheme.
/// Pre(-1): A_i = l_i, B_ij = l0-li-lj, C_ij = 2l0-sum+li+lj, D_i = 3l0-sum-li.
/// Roots:   A'_ij = li-lj, B'_ijk = l0-li-lj-lk, C'_i = 2l0-sum+li, and the
///          negatives -B'_ijk, -C'_i (the negative of A'_ij is A'_ji).
struct ClassName {
  std::string family;        // "A", "B", "C", "D", "A'", "B'", "C'", "-B'", "-C'"
  std::vector<int> indices;  // 1-based point indices as written in the name
  std::string str() const;
};

/// Parses "B13", "A'12", "-C'4"; throws UnknownNameError.
ClassName parse_class_name(const std::string& s);
/// Rank-7 class for a parsed name.
DivisorClass class_from_name(const ClassName& n);
inline DivisorClass class_from_name(const std::string& s) { return class_from_name(parse_class_name(s)); }

class ClassCatalog {
 public:
  explicit ClassCatalog(const SurfaceLattice& lat);

  const SurfaceLattice& lattice() const { return lat_; }
  const std::vector<DivisorClass>& pre_minus1() const { return pre_; }
  const std::vector<DivisorClass>& roots() const { return roots_; }
  const DivisorClass& canonical() const { return k_; }
  std::int64_t dot(const DivisorClass& a, const DivisorClass& b) const { return intersect(lat_, a, b); }

  std::optional<std::size_t> pre_index(const DivisorClass& c) const;
  std::optional<std::size_t> root_index(const DivisorClass& c) const;

  bool named() const { return lat_.rank() == 7; }
  /// Names are only attached at rank 7; elsewhere the coefficient string is used.
  std::string pre_name(std::size_t i) const;
  std::string root_name(std::size_t i) const;
  std::size_t pre_by_name(const std::string& name) const;
  std::size_t root_by_name(const std::string& name) const;

 private:
  SurfaceLattice lat_;
  DivisorClass k_;
  std::vector<DivisorClass> pre_;
  std::vector<DivisorClass> roots_;
  std::unordered_map<DivisorClass, std::size_t, DivisorClassHash> pre_pos_;
  std::unordered_map<DivisorClass, std::size_t, DivisorClassHash> root_pos_;
  std::vector<std::string> pre_names_;
  std::vector<std::string> root_names_;
  std::map<std::string, std::size_t> pre_by_name_;
  std::map<std::string, std::size_t> root_by_name_;
};

/// Shared rank-7 catalog, built on first use.
const ClassCatalog& degree2_catalog();

/// One cell of a regenerated intersection table: all index pairs sharing an
/// equality pattern between the left indices (i,j,k) and right ones (l,m,n).
struct TableRule {
  std::string left_family;
  std::string right_family;
  std::string pattern;  // e.g. "i=m,j=l" or "disjoint"
  std::int64_t value = 0;
  std::size_t pairs = 0;
};

/// Families accepted: "A","B","C","D","A'","B'","C'". Throws UnknownNameError.
/// Throws Error if some pattern class carries more than one value.
std::vector<TableRule> intersection_table(const ClassCatalog& cat, const std::string& left_family,
                                          const std::string& right_family);

/// Every named class of a family at rank 7, in catalog-name order.
std::vector<ClassName> family_members(const std::string& family);

}  // namespace dpl
