#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dpl/classes.hpp"
#include "dpl/lattice.hpp"

namespace dpl {

constexpr std::size_t kE7Roots = 126;
constexpr std::size_t kE7Rank = 7;
constexpr std::uint64_t kE7Order = 2903040;

using RootPerm = std::array<std::uint8_t, kE7Roots>;
using RootPair = std::array<std::uint8_t, 2>;
using RootQuad = std::array<std::uint8_t, 4>;

/// The 126 roots of the degree-2 catalog in simple-root coordinates. A Weyl
/// element is stored as the catalog indices of the images of the seven simple
/// roots l1-l2, ..., l6-l7, l0-l1-l2-l3, packed 7 bits each into a key; K is
/// fixed, so this pins the whole lattice map.
class E7RootSystem {
 public:
  explicit E7RootSystem(const ClassCatalog& cat);

  const ClassCatalog& catalog() const { return cat_; }
  /// Catalog indices of the simple roots, in generator order.
  const std::array<std::uint8_t, kE7Rank>& simple() const { return simple_; }
  const std::array<std::int8_t, kE7Rank>& coords(std::size_t root) const { return coords_[root]; }
  int dot(std::size_t a, std::size_t b) const { return dot_[a][b]; }
  /// Permutation of roots induced by the i-th simple reflection.
  const RootPerm& generator_perm(std::size_t i) const { return gen_perm_[i]; }

  static std::uint64_t pack(const std::array<std::uint8_t, kE7Rank>& images);
  static std::array<std::uint8_t, kE7Rank> unpack(std::uint64_t key);
  std::uint64_t identity() const { return pack(simple_); }
  std::uint64_t generator(std::size_t i) const;
  /// Key of the reflection in an arbitrary root.
  std::uint64_t reflection(std::size_t root) const;

  std::size_t apply(std::uint64_t g, std::size_t root) const;
  RootPerm permutation(std::uint64_t g) const;
  /// Trace on the rank-8 Picard lattice.
  int trace(std::uint64_t g) const;
  /// Action on coefficient vectors (l0..l7); throws if the key is not a
  /// lattice isometry.
  IntMatrix matrix(std::uint64_t g) const;
  std::uint64_t compose(std::uint64_t a, std::uint64_t b) const;  // a after b
  /// Key realising an isometry given as a matrix; nullopt if it does not
  /// permute the roots.
  std::optional<std::uint64_t> key_of(const IntMatrix& m) const;

  /// Hash of the generator classes, stamped into cache files.
  std::uint64_t generator_hash() const;

 private:
  std::size_t lookup(const std::array<int, kE7Rank>& c) const;

  const ClassCatalog& cat_;
  std::array<std::uint8_t, kE7Rank> simple_{};
  std::vector<std::array<std::int8_t, kE7Rank>> coords_;
  std::vector<std::array<std::int8_t, kE7Roots>> dot_;
  std::array<RootPerm, kE7Rank> gen_perm_{};
  // For every root that is not simple: r = parent + sign * simple, so images
  // can be accumulated in one pass.
  std::vector<std::pair<int, int>> build_;  // (parent root or -1, simple index)
  std::vector<bool> negate_;                // image is minus the parent's image
  std::vector<std::size_t> plan_;           // evaluation order
  std::vector<std::int16_t> table_;  // base-9 coordinate code -> root index
  // Half-integral rebasing of l_c onto (simple roots, K): 2 l_c = sum x alpha + y K.
  std::array<std::array<int, kE7Rank + 1>, 8> twice_basis_{};
};

struct WeylOptions {
  /// Cache directory; empty disables the cache. Defaults to $DPL_CACHE_DIR.
  std::string cache_dir;
  unsigned threads = 1;
  static WeylOptions from_env();
};

/// Every element of W(E7), as sorted keys.
class WeylGroup {
 public:
  static WeylGroup generate(const E7RootSystem& sys, const WeylOptions& opt = WeylOptions::from_env());

  const E7RootSystem& system() const { return *sys_; }
  const std::vector<std::uint64_t>& keys() const { return keys_; }
  std::uint64_t order() const { return keys_.size(); }
  bool contains(std::uint64_t key) const;
  bool from_cache() const { return from_cache_; }
  std::string cache_path() const { return cache_path_; }

 private:
  const E7RootSystem* sys_ = nullptr;
  std::vector<std::uint64_t> keys_;
  bool from_cache_ = false;
  std::string cache_path_;
};

/// An element carrying the root set `from` onto the set `to`, if any. One
/// exact pass over the group; used to audit fingerprint-based orbit tests.
std::optional<std::uint64_t> find_mapping(const WeylGroup& g, const std::vector<std::size_t>& from,
                                          const std::vector<std::size_t>& to);

/// Ordered root pairs with product 1.
std::vector<RootPair> delta2(const E7RootSystem& sys);

/// Orbit of a seed under the simple reflections, acting componentwise.
std::set<std::vector<std::uint8_t>> generator_orbit(const E7RootSystem& sys, const std::vector<std::uint8_t>& seed);

enum class TraceFilter { kFixRoot, kSwapPair, kCycleQuad };
std::string to_string(TraceFilter f);
TraceFilter parse_trace_filter(const std::string& s);

struct TraceQuery {
  TraceFilter filter;
  std::vector<std::uint8_t> witness;  // 1, 2 or 4 root indices
};

struct ScanResult {
  std::uint64_t elements = 0;
  std::map<int, std::uint64_t> trace_histogram;
  /// Ordered orthogonal 4-tuples cycled by some element, sorted.
  std::vector<RootQuad> delta3;
  /// One set per query, in query order; empty when no element passed.
  std::vector<std::set<int>> trace_sets;
  std::vector<std::uint64_t> filter_counts;
  /// Elements violating K-fixing or root-permutation checks.
  std::uint64_t broken = 0;
};

/// One pass over the group. Collecting delta3 is optional since it needs a
/// 32 MB bitmap per thread.
ScanResult scan_group(const WeylGroup& g, const std::vector<TraceQuery>& queries, bool collect_delta3,
                      unsigned threads = 1);

/// Witness-checked trace sets and transitivity, as the CLI reports them.
struct WeylReport {
  std::uint64_t order = 0;
  std::size_t delta1 = 0, delta2 = 0, delta3 = 0;
  bool transitive1 = false, transitive2 = false, transitive3 = false;
  std::set<int> fix_root, swap_pair, cycle_quad;
  /// Every extra witness gave the same set as the default one.
  bool witness_independent = false;
  std::size_t witnesses_per_kind = 0;
  std::uint64_t stabiliser = 0;  // elements fixing the default root
  int min_trace = 0;
  std::uint64_t min_trace_count = 0;
  bool cached = false;
};

WeylReport analyse_weyl(const WeylGroup& g, std::size_t extra_witnesses = 5, std::uint64_t seed = 20240607,
                        unsigned threads = 1);

/// A random element as a product of `length` random generators.
template <class Rng>
std::uint64_t random_element(const E7RootSystem& sys, Rng& rng, int length = 80) {
  std::uint64_t g = sys.identity();
  for (int i = 0; i < length; ++i) g = sys.compose(sys.generator(rng() % kE7Rank), g);
  return g;
}

}  // namespace dpl
