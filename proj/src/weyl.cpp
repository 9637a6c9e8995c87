#include "dpl/weyl.hpp"

#include <algorithm>
#include <bitset>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

namespace dpl {

namespace {

struct Q {
  std::int64_t n = 0, d = 1;
  Q() = default;
  Q(std::int64_t num, std::int64_t den = 1) : n(num), d(den) { norm(); }
  void norm() {
    if (d < 0) n = -n, d = -d;
    const auto g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) n /= g, d /= g;
  }
  friend Q operator-(Q a, Q b) { return Q(a.n * b.d - b.n * a.d, a.d * b.d); }
  friend Q operator*(Q a, Q b) { return Q(a.n * b.n, a.d * b.d); }
  friend Q operator/(Q a, Q b) { return Q(a.n * b.d, a.d * b.n); }
};

// Solves cols * x = rhs exactly; cols is square.
std::vector<Q> solve(const std::vector<std::vector<std::int64_t>>& cols, const std::vector<std::int64_t>& rhs) {
  const std::size_t n = rhs.size();
  std::vector<std::vector<Q>> m(n, std::vector<Q>(n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m[r][c] = Q(cols[c][r]);
    m[r][n] = Q(rhs[r]);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].n == 0) ++p;
    if (p == n) throw std::logic_error("singular basis matrix");
    std::swap(m[p], m[c]);
    const Q piv = m[c][c];
    for (auto& v : m[c]) v = v / piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].n == 0) continue;
      const Q f = m[r][c];
      for (std::size_t k = c; k <= n; ++k) m[r][k] = m[r][k] - f * m[c][k];
    }
  }
  std::vector<Q> x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = m[r][n];
  return x;
}

int encode(const std::array<int, kE7Rank>& c) {
  int code = 0;
  for (int v : c) {
    if (v < -4 || v > 4) return -1;
    code = code * 9 + (v + 4);
  }
  return code;
}

constexpr std::size_t kTableSize = 4782969;  // 9^7

constexpr char kMagic[8] = {'D', 'P', 'L', 'W', 'E', 'Y', 'L', '\0'};
constexpr std::uint32_t kCacheVersion = 1;

}  // namespace

E7RootSystem::E7RootSystem(const ClassCatalog& cat) : cat_(cat) {
  if (cat.lattice().rank() != 7 || cat.lattice().form() != LatticeForm::kBlowUp || cat.roots().size() != kE7Roots) {
    throw UnsupportedRankError("the E7 root system needs the degree-2 catalog");
  }
  const char* names[kE7Rank] = {"A'12", "A'23", "A'34", "A'45", "A'56", "A'67", "B'123"};
  std::vector<std::vector<std::int64_t>> cols;
  for (std::size_t i = 0; i < kE7Rank; ++i) {
    simple_[i] = static_cast<std::uint8_t>(cat.root_by_name(names[i]));
    const auto& c = cat.roots()[simple_[i]].coeffs();
    cols.emplace_back(c.begin(), c.begin() + 8);
  }
  {
    const auto& k = cat.canonical().coeffs();
    cols.emplace_back(k.begin(), k.begin() + 8);
  }

  const auto& roots = cat.roots();
  coords_.resize(kE7Roots);
  table_.assign(kTableSize, -1);
  for (std::size_t r = 0; r < kE7Roots; ++r) {
    const auto& c = roots[r].coeffs();
    const auto x = solve(cols, std::vector<std::int64_t>(c.begin(), c.begin() + 8));
    if (x[kE7Rank].n != 0) throw std::logic_error("root not orthogonal to K");
    std::array<int, kE7Rank> ci{};
    for (std::size_t j = 0; j < kE7Rank; ++j) {
      if (x[j].d != 1) throw std::logic_error("root outside the span of the simple roots");
      ci[j] = static_cast<int>(x[j].n);
      coords_[r][j] = static_cast<std::int8_t>(x[j].n);
    }
    const int code = encode(ci);
    if (code < 0) throw std::logic_error("simple-root coordinate out of range");
    table_[static_cast<std::size_t>(code)] = static_cast<std::int16_t>(r);
  }
  for (std::size_t c = 0; c < 8; ++c) {
    std::vector<std::int64_t> e(8, 0);
    e[c] = 1;
    const auto x = solve(cols, e);
    for (std::size_t j = 0; j <= kE7Rank; ++j) {
      const Q twice = Q(2) * x[j];
      if (twice.d != 1) throw std::logic_error("basis vector not in half the root lattice plus K");
      twice_basis_[c][j] = static_cast<int>(twice.n);
    }
  }

  dot_.resize(kE7Roots);
  for (std::size_t a = 0; a < kE7Roots; ++a)
    for (std::size_t b = 0; b < kE7Roots; ++b) dot_[a][b] = static_cast<std::int8_t>(cat.dot(roots[a], roots[b]));

  for (std::size_t i = 0; i < kE7Rank; ++i)
    for (std::size_t r = 0; r < kE7Roots; ++r) {
      const auto img = reflect(cat.lattice(), roots[r], roots[simple_[i]]);
      gen_perm_[i][r] = static_cast<std::uint8_t>(*cat.root_index(img));
    }

  // Evaluation plan: positive roots by height, each one simple root above a
  // previously placed root; negative roots mirror their positive partner.
  std::vector<std::size_t> positive;
  for (std::size_t r = 0; r < kE7Roots; ++r) {
    const auto& c = coords_[r];
    if (std::all_of(c.begin(), c.end(), [](int v) { return v >= 0; })) positive.push_back(r);
  }
  auto height = [&](std::size_t r) {
    int h = 0;
    for (auto v : coords_[r]) h += v;
    return h;
  };
  std::stable_sort(positive.begin(), positive.end(), [&](auto a, auto b) { return height(a) < height(b); });
  build_.assign(kE7Roots, {-2, -1});
  negate_.assign(kE7Roots, false);
  plan_.clear();
  for (auto r : positive) {
    if (height(r) == 1) {
      const auto j = static_cast<int>(std::find(coords_[r].begin(), coords_[r].end(), 1) - coords_[r].begin());
      build_[r] = {-1, j};
    } else {
      for (int j = 0; j < static_cast<int>(kE7Rank); ++j) {
        auto c = coords_[r];
        if (c[static_cast<std::size_t>(j)] == 0) continue;
        std::array<int, kE7Rank> ci{};
        for (std::size_t t = 0; t < kE7Rank; ++t) ci[t] = c[t];
        --ci[static_cast<std::size_t>(j)];
        const auto code = encode(ci);
        if (code >= 0 && table_[static_cast<std::size_t>(code)] >= 0) {
          build_[r] = {table_[static_cast<std::size_t>(code)], j};
          break;
        }
      }
      if (build_[r].first < 0) throw std::logic_error("positive root without a parent");
    }
    plan_.push_back(r);
  }
  for (std::size_t r = 0; r < kE7Roots; ++r) {
    if (build_[r].first != -2) continue;
    std::array<int, kE7Rank> ci{};
    for (std::size_t t = 0; t < kE7Rank; ++t) ci[t] = -coords_[r][t];
    build_[r] = {table_[static_cast<std::size_t>(encode(ci))], -1};
    negate_[r] = true;
    plan_.push_back(r);
  }
}

std::uint64_t E7RootSystem::pack(const std::array<std::uint8_t, kE7Rank>& images) {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < kE7Rank; ++i) k |= std::uint64_t{images[i]} << (7 * i);
  return k;
}

std::array<std::uint8_t, kE7Rank> E7RootSystem::unpack(std::uint64_t key) {
  std::array<std::uint8_t, kE7Rank> out{};
  for (std::size_t i = 0; i < kE7Rank; ++i) out[i] = static_cast<std::uint8_t>((key >> (7 * i)) & 0x7f);
  return out;
}

std::size_t E7RootSystem::lookup(const std::array<int, kE7Rank>& c) const {
  const int code = encode(c);
  if (code < 0 || table_[static_cast<std::size_t>(code)] < 0) throw std::logic_error("image is not a root");
  return static_cast<std::size_t>(table_[static_cast<std::size_t>(code)]);
}

std::uint64_t E7RootSystem::generator(std::size_t i) const { return reflection(simple_.at(i)); }

std::uint64_t E7RootSystem::reflection(std::size_t root) const {
  std::array<std::uint8_t, kE7Rank> img{};
  const auto& roots = cat_.roots();
  for (std::size_t i = 0; i < kE7Rank; ++i) {
    img[i] = static_cast<std::uint8_t>(*cat_.root_index(reflect(cat_.lattice(), roots[simple_[i]], roots.at(root))));
  }
  return pack(img);
}

std::size_t E7RootSystem::apply(std::uint64_t g, std::size_t root) const {
  const auto img = unpack(g);
  std::array<int, kE7Rank> c{};
  for (std::size_t j = 0; j < kE7Rank; ++j) {
    const int m = coords_[root][j];
    if (m == 0) continue;
    for (std::size_t t = 0; t < kE7Rank; ++t) c[t] += m * coords_[img[j]][t];
  }
  return lookup(c);
}

RootPerm E7RootSystem::permutation(std::uint64_t g) const {
  const auto img = unpack(g);
  std::array<std::array<int, kE7Rank>, kE7Roots> c{};
  RootPerm p{};
  for (auto r : plan_) {
    const auto [parent, j] = build_[r];
    auto& out = c[r];
    if (negate_[r]) {
      for (std::size_t t = 0; t < kE7Rank; ++t) out[t] = -c[static_cast<std::size_t>(parent)][t];
    } else {
      const auto& s = coords_[img[static_cast<std::size_t>(j)]];
      if (parent < 0) {
        for (std::size_t t = 0; t < kE7Rank; ++t) out[t] = s[t];
      } else {
        for (std::size_t t = 0; t < kE7Rank; ++t) out[t] = c[static_cast<std::size_t>(parent)][t] + s[t];
      }
    }
    p[r] = static_cast<std::uint8_t>(lookup(out));
  }
  return p;
}

int E7RootSystem::trace(std::uint64_t g) const {
  const auto img = unpack(g);
  int t = 1;  // K is fixed
  for (std::size_t i = 0; i < kE7Rank; ++i) t += coords_[img[i]][i];
  return t;
}

IntMatrix E7RootSystem::matrix(std::uint64_t g) const {
  const auto img = unpack(g);
  const auto& roots = cat_.roots();
  const auto& k = cat_.canonical();
  IntMatrix m(8, 8);
  for (std::size_t c = 0; c < 8; ++c) {
    DivisorClass col(7);
    for (std::size_t j = 0; j < kE7Rank; ++j) col += static_cast<std::int64_t>(twice_basis_[c][j]) * roots[img[j]];
    col += static_cast<std::int64_t>(twice_basis_[c][kE7Rank]) * k;
    for (std::size_t r = 0; r < 8; ++r) {
      if (col[r] % 2 != 0) throw std::logic_error("key does not describe a lattice isometry");
      m(r, c) = col[r] / 2;
    }
  }
  return m;
}

std::uint64_t E7RootSystem::compose(std::uint64_t a, std::uint64_t b) const {
  const auto ib = unpack(b);
  std::array<std::uint8_t, kE7Rank> out{};
  for (std::size_t i = 0; i < kE7Rank; ++i) out[i] = static_cast<std::uint8_t>(apply(a, ib[i]));
  return pack(out);
}

std::optional<std::uint64_t> E7RootSystem::key_of(const IntMatrix& m) const {
  if (m.rows() != 8 || m.cols() != 8) return std::nullopt;
  if (m.apply(cat_.canonical()) != cat_.canonical()) return std::nullopt;
  std::array<std::uint8_t, kE7Rank> img{};
  for (std::size_t i = 0; i < kE7Rank; ++i) {
    const auto idx = cat_.root_index(m.apply(cat_.roots()[simple_[i]]));
    if (!idx) return std::nullopt;
    img[i] = static_cast<std::uint8_t>(*idx);
  }
  const auto key = pack(img);
  if (!(matrix(key) == m)) return std::nullopt;
  return key;
}

std::uint64_t E7RootSystem::generator_hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (auto s : simple_)
    for (auto v : cat_.roots()[s]) {
      h ^= static_cast<std::uint64_t>(v + 16);
      h *= 1099511628211ull;
    }
  return h;
}

WeylOptions WeylOptions::from_env() {
  WeylOptions o;
  if (const char* d = std::getenv("DPL_CACHE_DIR")) o.cache_dir = d;
  return o;
}

namespace {

std::optional<std::vector<std::uint64_t>> read_cache(const std::string& path, std::uint64_t gen_hash) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  char magic[8];
  std::uint32_t version = 0;
  std::uint64_t hash = 0, count = 0;
  in.read(magic, 8);
  in.read(reinterpret_cast<char*>(&version), sizeof version);
  in.read(reinterpret_cast<char*>(&hash), sizeof hash);
  in.read(reinterpret_cast<char*>(&count), sizeof count);
  if (!in || std::memcmp(magic, kMagic, 8) != 0 || version != kCacheVersion || hash != gen_hash ||
      count > 2 * kE7Order) {
    return std::nullopt;
  }
  std::vector<std::uint64_t> keys(count);
  in.read(reinterpret_cast<char*>(keys.data()), static_cast<std::streamsize>(count * sizeof(std::uint64_t)));
  if (!in || !std::is_sorted(keys.begin(), keys.end())) return std::nullopt;
  return keys;
}

void write_cache(const std::string& path, std::uint64_t gen_hash, const std::vector<std::uint64_t>& keys) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;  // an unwritable cache only costs time
    const std::uint64_t count = keys.size();
    out.write(kMagic, 8);
    out.write(reinterpret_cast<const char*>(&kCacheVersion), sizeof kCacheVersion);
    out.write(reinterpret_cast<const char*>(&gen_hash), sizeof gen_hash);
    out.write(reinterpret_cast<const char*>(&count), sizeof count);
    out.write(reinterpret_cast<const char*>(keys.data()), static_cast<std::streamsize>(count * sizeof(std::uint64_t)));
    if (!out) return;
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
}

// Open addressing; keys never reach all-ones since indices are 7-bit.
class KeySet {
 public:
  explicit KeySet(std::size_t log2) : mask_((std::size_t{1} << log2) - 1), slots_(mask_ + 1, kEmpty) {}
  bool insert(std::uint64_t k) {
    std::size_t i = mix(k) & mask_;
    while (slots_[i] != kEmpty) {
      if (slots_[i] == k) return false;
      i = (i + 1) & mask_;
    }
    slots_[i] = k;
    return true;
  }

 private:
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};
  static std::size_t mix(std::uint64_t k) {
    k ^= k >> 31;
    k *= 0x9e3779b97f4a7c15ull;
    k ^= k >> 29;
    return static_cast<std::size_t>(k);
  }
  std::size_t mask_;
  std::vector<std::uint64_t> slots_;
};

}  // namespace

WeylGroup WeylGroup::generate(const E7RootSystem& sys, const WeylOptions& opt) {
  WeylGroup g;
  g.sys_ = &sys;
  const auto hash = sys.generator_hash();
  if (!opt.cache_dir.empty()) {
    g.cache_path_ = (std::filesystem::path(opt.cache_dir) / "weyl-e7.bin").string();
    if (auto keys = read_cache(g.cache_path_, hash)) {
      g.keys_ = std::move(*keys);
      g.from_cache_ = true;
      return g;
    }
  }
  KeySet seen(23);
  std::vector<std::uint64_t>& keys = g.keys_;
  keys.reserve(kE7Order);
  keys.push_back(sys.identity());
  seen.insert(keys.front());
  for (std::size_t head = 0; head < keys.size(); ++head) {
    const auto img = E7RootSystem::unpack(keys[head]);
    for (std::size_t i = 0; i < kE7Rank; ++i) {
      const auto& p = sys.generator_perm(i);
      std::array<std::uint8_t, kE7Rank> next{};
      for (std::size_t j = 0; j < kE7Rank; ++j) next[j] = p[img[j]];
      const auto k = E7RootSystem::pack(next);
      if (seen.insert(k)) {
        if (keys.size() >= 2 * kE7Order) throw std::runtime_error("Weyl closure exceeded its memory budget");
        keys.push_back(k);
      }
    }
  }
  std::sort(keys.begin(), keys.end());
  if (!g.cache_path_.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(opt.cache_dir, ec);
    write_cache(g.cache_path_, hash, keys);
  }
  return g;
}

bool WeylGroup::contains(std::uint64_t key) const { return std::binary_search(keys_.begin(), keys_.end(), key); }

std::vector<RootPair> delta2(const E7RootSystem& sys) {
  std::vector<RootPair> out;
  for (std::size_t a = 0; a < kE7Roots; ++a)
    for (std::size_t b = 0; b < kE7Roots; ++b)
      if (sys.dot(a, b) == 1) out.push_back({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)});
  return out;
}

std::set<std::vector<std::uint8_t>> generator_orbit(const E7RootSystem& sys, const std::vector<std::uint8_t>& seed) {
  std::set<std::vector<std::uint8_t>> seen{seed};
  std::vector<std::vector<std::uint8_t>> todo{seed};
  while (!todo.empty()) {
    auto cur = std::move(todo.back());
    todo.pop_back();
    for (std::size_t i = 0; i < kE7Rank; ++i) {
      auto next = cur;
      for (auto& v : next) v = sys.generator_perm(i)[v];
      if (seen.insert(next).second) todo.push_back(std::move(next));
    }
  }
  return seen;
}

std::string to_string(TraceFilter f) {
  switch (f) {
    case TraceFilter::kFixRoot:
      return "fix-root";
    case TraceFilter::kSwapPair:
      return "swap-pair";
    case TraceFilter::kCycleQuad:
      return "cycle-quad";
  }
  return "?";
}

TraceFilter parse_trace_filter(const std::string& s) {
  if (s == "fix-root") return TraceFilter::kFixRoot;
  if (s == "swap-pair") return TraceFilter::kSwapPair;
  if (s == "cycle-quad") return TraceFilter::kCycleQuad;
  throw std::invalid_argument("unknown trace filter '" + s + "'");
}

namespace {

struct Partial {
  std::uint64_t elements = 0, broken = 0;
  std::map<int, std::uint64_t> hist;
  std::vector<std::set<int>> sets;
  std::vector<std::uint64_t> counts;
  std::vector<std::uint64_t> bitmap;  // 2^28 bits when collecting tuples
};

bool passes(const TraceQuery& q, const RootPerm& p) {
  const auto& w = q.witness;
  switch (q.filter) {
    case TraceFilter::kFixRoot:
      return p[w[0]] == w[0];
    case TraceFilter::kSwapPair:
      return p[w[0]] == w[1] && p[w[1]] == w[0];
    case TraceFilter::kCycleQuad:
      return p[w[0]] == w[1] && p[w[1]] == w[2] && p[w[2]] == w[3] && p[w[3]] == w[0];
  }
  return false;
}

void scan_range(const WeylGroup& g, const std::vector<TraceQuery>& queries, bool collect, std::size_t lo,
                std::size_t hi, Partial& out) {
  const auto& sys = g.system();
  out.sets.assign(queries.size(), {});
  out.counts.assign(queries.size(), 0);
  if (collect) out.bitmap.assign(std::size_t{1} << 22, 0);
  const auto& simple = sys.simple();
  for (std::size_t e = lo; e < hi; ++e) {
    const auto key = g.keys()[e];
    const auto p = sys.permutation(key);
    const int tr = sys.trace(key);
    ++out.elements;
    ++out.hist[tr];
    // The images of the simple roots must keep the Cartan matrix.
    for (std::size_t i = 0; i < kE7Rank; ++i)
      for (std::size_t j = i; j < kE7Rank; ++j)
        if (sys.dot(p[simple[i]], p[simple[j]]) != sys.dot(simple[i], simple[j])) {
          ++out.broken;
          i = j = kE7Rank;
        }
    for (std::size_t q = 0; q < queries.size(); ++q)
      if (passes(queries[q], p)) {
        out.sets[q].insert(tr);
        ++out.counts[q];
      }
    if (!collect) continue;
    for (std::size_t r = 0; r < kE7Roots; ++r) {
      const auto a = p[r];
      if (sys.dot(r, a) != 0) continue;
      const auto b = p[a];
      if (sys.dot(r, b) != 0 || sys.dot(a, b) != 0) continue;
      const auto c = p[b];
      if (p[c] != r || sys.dot(r, c) != 0 || sys.dot(a, c) != 0 || sys.dot(b, c) != 0) continue;
      const std::uint32_t code = static_cast<std::uint32_t>(r) | (std::uint32_t{a} << 7) |
                                 (std::uint32_t{b} << 14) | (std::uint32_t{c} << 21);
      out.bitmap[code >> 6] |= std::uint64_t{1} << (code & 63);
    }
  }
}

}  // namespace

ScanResult scan_group(const WeylGroup& g, const std::vector<TraceQuery>& queries, bool collect_delta3,
                      unsigned threads) {
  for (const auto& q : queries) {
    const std::size_t need = q.filter == TraceFilter::kFixRoot ? 1 : q.filter == TraceFilter::kSwapPair ? 2 : 4;
    if (q.witness.size() != need) throw std::invalid_argument("witness has the wrong length for " + to_string(q.filter));
    for (auto w : q.witness)
      if (w >= kE7Roots) throw std::invalid_argument("witness root index out of range");
  }
  threads = std::max(1u, threads);
  const std::size_t n = g.keys().size();
  std::vector<Partial> parts(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t lo = n * t / threads, hi = n * (t + 1) / threads;
    if (threads == 1) {
      scan_range(g, queries, collect_delta3, lo, hi, parts[t]);
    } else {
      pool.emplace_back(scan_range, std::cref(g), std::cref(queries), collect_delta3, lo, hi, std::ref(parts[t]));
    }
  }
  for (auto& th : pool) th.join();

  ScanResult res;
  res.trace_sets.assign(queries.size(), {});
  res.filter_counts.assign(queries.size(), 0);
  for (auto& p : parts) {
    res.elements += p.elements;
    res.broken += p.broken;
    for (auto [t, c] : p.hist) res.trace_histogram[t] += c;
    for (std::size_t q = 0; q < queries.size(); ++q) {
      res.trace_sets[q].insert(p.sets[q].begin(), p.sets[q].end());
      res.filter_counts[q] += p.counts[q];
    }
  }
  if (collect_delta3) {
    auto& bits = parts[0].bitmap;
    for (std::size_t t = 1; t < parts.size(); ++t)
      for (std::size_t w = 0; w < bits.size(); ++w) bits[w] |= parts[t].bitmap[w];
    for (std::size_t w = 0; w < bits.size(); ++w) {
      auto word = bits[w];
      while (word) {
        const auto bit = static_cast<std::uint32_t>(__builtin_ctzll(word));
        word &= word - 1;
        const std::uint32_t code = static_cast<std::uint32_t>(w << 6) | bit;
        res.delta3.push_back({static_cast<std::uint8_t>(code & 0x7f), static_cast<std::uint8_t>((code >> 7) & 0x7f),
                              static_cast<std::uint8_t>((code >> 14) & 0x7f),
                              static_cast<std::uint8_t>((code >> 21) & 0x7f)});
      }
    }
    std::sort(res.delta3.begin(), res.delta3.end());
  }
  return res;
}

std::optional<std::uint64_t> find_mapping(const WeylGroup& g, const std::vector<std::size_t>& from,
                                          const std::vector<std::size_t>& to) {
  if (from.size() != to.size()) return std::nullopt;
  std::bitset<kE7Roots> target;
  for (auto r : to) target.set(r);
  if (target.count() != to.size()) return std::nullopt;
  const auto& sys = g.system();
  for (auto key : g.keys()) {
    bool hit = true;
    for (auto r : from)
      if (!target.test(sys.apply(key, r))) {
        hit = false;
        break;
      }
    if (hit) return key;
  }
  return std::nullopt;
}

WeylReport analyse_weyl(const WeylGroup& g, std::size_t extra_witnesses, std::uint64_t seed, unsigned threads) {
  const auto& sys = g.system();
  WeylReport rep;
  rep.order = g.order();
  rep.cached = g.from_cache();
  rep.witnesses_per_kind = 1 + extra_witnesses;
  std::mt19937_64 rng(seed);

  rep.delta1 = kE7Roots;
  rep.transitive1 = generator_orbit(sys, {0}).size() == kE7Roots;
  const auto d2 = delta2(sys);
  rep.delta2 = d2.size();
  {
    const auto orbit = generator_orbit(sys, {d2[0][0], d2[0][1]});
    rep.transitive2 = orbit.size() == d2.size() &&
                      std::all_of(orbit.begin(), orbit.end(), [&](const auto& v) { return sys.dot(v[0], v[1]) == 1; });
  }

  std::vector<TraceQuery> first;
  first.push_back({TraceFilter::kFixRoot, {0}});
  for (std::size_t i = 0; i < extra_witnesses; ++i)
    first.push_back({TraceFilter::kFixRoot, {static_cast<std::uint8_t>(rng() % kE7Roots)}});
  first.push_back({TraceFilter::kSwapPair, {d2[0][0], d2[0][1]}});
  for (std::size_t i = 0; i < extra_witnesses; ++i) {
    const auto& p = d2[rng() % d2.size()];
    first.push_back({TraceFilter::kSwapPair, {p[0], p[1]}});
  }
  const auto s1 = scan_group(g, first, true, threads);
  rep.min_trace = s1.trace_histogram.begin()->first;
  rep.min_trace_count = s1.trace_histogram.begin()->second;
  rep.stabiliser = s1.filter_counts[0];

  const auto& d3 = s1.delta3;
  rep.delta3 = d3.size();
  if (!d3.empty()) {
    const auto orbit = generator_orbit(sys, {d3[0][0], d3[0][1], d3[0][2], d3[0][3]});
    rep.transitive3 = orbit.size() == d3.size() && std::all_of(orbit.begin(), orbit.end(), [&](const auto& v) {
                        return std::binary_search(d3.begin(), d3.end(), RootQuad{v[0], v[1], v[2], v[3]});
                      });
  }

  std::vector<TraceQuery> second;
  if (!d3.empty()) {
    second.push_back({TraceFilter::kCycleQuad, {d3[0][0], d3[0][1], d3[0][2], d3[0][3]}});
    for (std::size_t i = 0; i < extra_witnesses; ++i) {
      const auto& t = d3[rng() % d3.size()];
      second.push_back({TraceFilter::kCycleQuad, {t[0], t[1], t[2], t[3]}});
    }
  }
  const auto s2 = scan_group(g, second, false, threads);

  const std::size_t w = rep.witnesses_per_kind;
  rep.fix_root = s1.trace_sets[0];
  rep.swap_pair = s1.trace_sets[w];
  if (!second.empty()) rep.cycle_quad = s2.trace_sets[0];
  bool same = true;
  for (std::size_t i = 1; i < w; ++i) {
    same = same && s1.trace_sets[i] == rep.fix_root && s1.trace_sets[w + i] == rep.swap_pair;
    if (!second.empty()) same = same && s2.trace_sets[i] == rep.cycle_quad;
  }
  rep.witness_independent = same && !second.empty();
  if (s1.broken != 0 || s2.broken != 0) rep.witness_independent = false;
  return rep;
}

}  // namespace dpl
