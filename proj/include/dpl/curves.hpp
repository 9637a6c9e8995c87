#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dpl/classes.hpp"
#include "dpl/configuration.hpp"
#include "dpl/lattice.hpp"

namespace dpl {

class NotPreMinus1Error : public Error {
 public:
  using Error::Error;
};

class GaloisInconsistencyError : public Error {
 public:
  using Error::Error;
};

bool is_pre_minus1(const SurfaceLattice& lat, const DivisorClass& d);

/// True iff D.F >= 0 for every simple root F. Throws NotPreMinus1Error.
bool is_minus1_curve(const DivisorClass& d, const Configuration& cfg);

struct Reduction {
  DivisorClass curve;
  /// Simple roots subtracted, in order, as positions into cfg.simple_roots.
  std::vector<std::size_t> removed;
};

/// Subtracts simple roots with product -1 until none is left. Ties go to the
/// lowest catalog index unless `priority` (a permutation of root positions,
/// earliest wins) is supplied.
Reduction reduce_to_minus1(const DivisorClass& d, const Configuration& cfg,
                           const std::vector<std::size_t>* priority = nullptr);

/// Catalog positions of the pre(-1) classes D with D.F == value.
std::vector<std::size_t> classes_meeting(const DivisorClass& f, std::int64_t value, const ClassCatalog& cat);

/// The two pre(-1) classes meeting both orthogonal roots with value 1, sorted.
std::pair<DivisorClass, DivisorClass> pair_classes(const DivisorClass& f, const DivisorClass& g,
                                                   const ClassCatalog& cat);

/// Reduced curves attached to two components, from roots at the given
/// positions (defaults: first root of each). One or two sorted classes.
std::vector<DivisorClass> derive_pair_curves(const Configuration& cfg, std::size_t comp_i, std::size_t comp_j,
                                             std::optional<std::pair<std::size_t, std::size_t>> roots = {});

/// Honest (-1)-curves meeting exactly three simple roots, all of type A1.
std::vector<DivisorClass> three_root_curves(const Configuration& cfg);

/// 4-sets of pre(-1) classes (catalog positions) with pairwise product 1.
std::vector<std::array<std::size_t, 4>> eckardt_quadruples(const ClassCatalog& cat);

/// Honest curves orthogonal to every simple root.
std::vector<DivisorClass> free_minus1_curves(const Configuration& cfg);

/// The pair of roots the one-point derivation starts from, as positions.
/// Only meaningful for a single component of type other than A1, A2, D4.
std::pair<std::size_t, std::size_t> terminal_roots(const Configuration& cfg);

struct DerivedVertex {
  bool is_root = true;
  DivisorClass cls;
  std::string label;
};

struct DerivedGraph {
  std::vector<DerivedVertex> vertices;  // simple roots first, then curves
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<DivisorClass> contraction_set;
  /// Set for the exceptional cases; holds "1", "2" or "3".
  std::string minimal_case;
  bool minimal() const { return !minimal_case.empty(); }
  std::string rule;  // which derivation produced the curves
  int target_degree = 2;
  SingularityType target_type;
  std::optional<BlowDown> blowdown;
  std::vector<std::size_t> surviving_roots;  // positions into simple_roots
};

/// Throws InvalidConfigurationError or GaloisInconsistencyError.
DerivedGraph derive_configuration(const Configuration& cfg);

/// Graphviz text; roots are circles, curves are points.
std::string to_dot(const DerivedGraph& g, const std::string& name);

}  // namespace dpl
