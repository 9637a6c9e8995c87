#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dpl/classes.hpp"
#include "dpl/lattice.hpp"

namespace dpl {

class InvalidConfigurationError : public Error {
 public:
  using Error::Error;
};

class UnknownTypeError : public Error {
 public:
  using Error::Error;
};

struct AdeLabel {
  char series = 'A';  // 'A', 'D' or 'E'
  int n = 1;
  std::string str() const { return std::string(1, series) + std::to_string(n); }
  friend auto operator<=>(const AdeLabel&, const AdeLabel&) = default;
};

/// Multiset of ADE labels; the empty multiset is the smooth type.
class SingularityType {
 public:
  SingularityType() = default;
  explicit SingularityType(std::vector<AdeLabel> labels);
  /// Accepts "A1+A3", "2A1+D4", "3A1", "smooth".
  static SingularityType parse(const std::string& name);

  const std::vector<AdeLabel>& labels() const { return labels_; }
  int rank() const;
  int delta() const { return static_cast<int>(labels_.size()); }
  bool smooth() const { return labels_.empty(); }
  std::string name() const;
  std::size_t count(const AdeLabel& l) const;

  friend bool operator==(const SingularityType&, const SingularityType&) = default;
  friend auto operator<=>(const SingularityType&, const SingularityType&) = default;

 private:
  std::vector<AdeLabel> labels_;  // sorted
};

/// The 40 types admitted in degree 2, ordered by number of singular points.
const std::vector<std::string>& degree2_type_names();
bool is_degree2_type(const SingularityType& t);

struct Configuration {
  SurfaceLattice lattice{7};
  std::vector<DivisorClass> simple_roots;
  /// Each component lists positions into simple_roots; components are ordered
  /// by their first position, positions inside a component ascend.
  std::vector<std::vector<std::size_t>> components;
  std::vector<AdeLabel> component_labels;
  SingularityType type;
  /// Galois orbits as sets of component indices; singletons by default.
  std::vector<std::vector<std::size_t>> orbits;
  /// Per component: the two roots of an A2 component are swapped by Galois.
  std::vector<bool> a2_conjugate;

  std::size_t component_of(std::size_t root_pos) const;
  std::size_t orbit_of(std::size_t component) const;
  std::int64_t dot(const DivisorClass& a, const DivisorClass& b) const { return intersect(lattice, a, b); }
};

/// ADE type of a root set. Throws InvalidConfigurationError on non-Dynkin input.
SingularityType classify_dynkin(const SurfaceLattice& lat, const std::vector<DivisorClass>& roots);

/// Builds and validates; throws InvalidConfigurationError listing violations.
Configuration make_configuration(const SurfaceLattice& lat, std::vector<DivisorClass> roots,
                                 std::vector<std::vector<std::size_t>> orbits = {},
                                 std::vector<bool> a2_conjugate = {});

/// Every violated invariant, empty when valid. Never throws.
std::vector<std::string> validate_configuration(const Configuration& cfg);

/// Weyl-invariant summary of a configuration, see orbit_fingerprint.
struct Fingerprint {
  SingularityType type;
  /// Sorted rows (D.F_1, ..., D.F_k) over the 56 pre(-1) classes, simple
  /// roots in a canonical Dynkin order, minimised over diagram symmetries.
  std::vector<std::array<std::int8_t, 7>> rows;
  std::size_t free_curves() const;
  std::string digest() const;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint orbit_fingerprint(const Configuration& cfg);

/// Orderings of the simple roots (as position lists) that realise the
/// canonical Dynkin adjacency; one per diagram automorphism.
std::vector<std::vector<std::size_t>> canonical_orderings(const Configuration& cfg);

struct RegistryEntry {
  std::string type;
  std::string variant;  // empty when the type has a single orbit
  std::vector<std::string> roots;  // degree-2 class names
  bool char2_only = false;
  std::string note;
};

const std::vector<RegistryEntry>& registry_entries();
/// Variant tags stored for a type (one empty string for single-orbit types).
std::vector<std::string> registry_variants(const std::string& type);
/// Throws UnknownTypeError for unknown type/variant. An empty variant picks
/// the first stored one.
const RegistryEntry& registry_entry(const std::string& type, const std::string& variant = "");
Configuration registry_representative(const std::string& type, const std::string& variant = "",
                                      std::vector<std::vector<std::size_t>> orbits = {},
                                      std::vector<bool> a2_conjugate = {});

/// Root sets reached by extending one root at a time through Dynkin sets of
/// rank <= 7, one per fingerprint. Slow (seconds); used to regenerate data.
struct SearchResult {
  SingularityType type;
  Fingerprint fingerprint;
  std::vector<std::size_t> roots;  // catalog root indices
};
std::vector<SearchResult> search_configurations(const ClassCatalog& cat);

}  // namespace dpl
