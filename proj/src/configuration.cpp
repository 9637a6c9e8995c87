#include "dpl/configuration.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace dpl {

SingularityType::SingularityType(std::vector<AdeLabel> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
}

SingularityType SingularityType::parse(const std::string& name) {
  if (name == "smooth" || name.empty()) return {};
  std::vector<AdeLabel> out;
  std::stringstream ss(name);
  std::string part;
  while (std::getline(ss, part, '+')) {
    std::size_t p = 0;
    int mult = 0;
    while (p < part.size() && std::isdigit(static_cast<unsigned char>(part[p]))) mult = mult * 10 + (part[p++] - '0');
    if (mult == 0) mult = 1;
    if (p >= part.size() || (part[p] != 'A' && part[p] != 'D' && part[p] != 'E')) {
      throw UnknownTypeError("cannot parse singularity type '" + name + "'");
    }
    const char series = part[p++];
    int n = 0;
    const std::size_t digits_at = p;
    while (p < part.size() && std::isdigit(static_cast<unsigned char>(part[p]))) n = n * 10 + (part[p++] - '0');
    if (p != part.size() || p == digits_at || n < 1 || (series == 'D' && n < 4) ||
        (series == 'E' && (n < 6 || n > 8))) {
      throw UnknownTypeError("cannot parse singularity type '" + name + "'");
    }
    for (int i = 0; i < mult; ++i) out.push_back({series, n});
  }
  return SingularityType(std::move(out));
}

int SingularityType::rank() const {
  int r = 0;
  for (const auto& l : labels_) r += l.n;
  return r;
}

std::size_t SingularityType::count(const AdeLabel& l) const {
  return static_cast<std::size_t>(std::count(labels_.begin(), labels_.end(), l));
}

std::string SingularityType::name() const {
  if (labels_.empty()) return "smooth";
  std::string s;
  for (std::size_t i = 0; i < labels_.size();) {
    std::size_t j = i;
    while (j < labels_.size() && labels_[j] == labels_[i]) ++j;
    if (!s.empty()) s += '+';
    if (j - i > 1) s += std::to_string(j - i);
    s += labels_[i].str();
    i = j;
  }
  return s;
}

const std::vector<std::string>& degree2_type_names() {
  static const std::vector<std::string> names = {
      "A1", "A2", "A3", "A4", "A5", "A6", "A7", "D4", "D5", "D6", "E6", "E7",
      "2A1", "A1+A2", "A1+A3", "A1+A4", "A1+A5", "A1+D4", "A1+D5", "A1+D6", "2A2", "A2+A3", "A2+A4",
      "A2+A5", "2A3",
      "3A1", "2A1+A2", "2A1+A3", "2A1+D4", "A1+2A2", "A1+A2+A3", "A1+2A3", "3A2",
      "4A1", "3A1+A2", "3A1+A3", "3A1+D4",
      "5A1", "6A1", "7A1"};
  return names;
}

bool is_degree2_type(const SingularityType& t) {
  const auto& names = degree2_type_names();
  return std::find(names.begin(), names.end(), t.name()) != names.end();
}

namespace {

using Adjacency = std::vector<std::vector<std::size_t>>;

// Label of one connected tree, or nullopt if it is not a Dynkin diagram.
std::optional<AdeLabel> label_tree(const Adjacency& adj, const std::vector<std::size_t>& verts) {
  const int n = static_cast<int>(verts.size());
  std::size_t edges = 0;
  std::vector<std::size_t> branch;
  for (auto v : verts) {
    edges += adj[v].size();
    if (adj[v].size() > 3) return std::nullopt;
    if (adj[v].size() == 3) branch.push_back(v);
  }
  edges /= 2;
  if (edges + 1 != verts.size()) return std::nullopt;  // connected, so a cycle iff too many edges
  if (branch.empty()) return AdeLabel{'A', n};
  if (branch.size() > 1) return std::nullopt;
  std::vector<int> arms;
  for (auto start : adj[branch[0]]) {
    int len = 1;
    std::size_t prev = branch[0], cur = start;
    while (adj[cur].size() == 2) {
      const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return AdeLabel{'D', n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return AdeLabel{'E', n};
  return std::nullopt;
}

struct Decomposition {
  Adjacency adj;
  std::vector<std::vector<std::size_t>> components;
  std::vector<std::string> problems;
};

Decomposition decompose(const SurfaceLattice& lat, const std::vector<DivisorClass>& roots) {
  Decomposition d;
  const std::size_t n = roots.size();
  d.adj.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto v = intersect(lat, roots[i], roots[j]);
      if (v == 1) {
        d.adj[i].push_back(j);
        d.adj[j].push_back(i);
      } else if (v != 0) {
        d.problems.push_back("roots " + roots[i].to_string() + " and " + roots[j].to_string() +
                             " have product " + std::to_string(v));
      }
    }
  }
  std::vector<bool> seen(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = true;
    for (std::size_t h = 0; h < comp.size(); ++h)
      for (auto w : d.adj[comp[h]])
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    d.components.push_back(std::move(comp));
  }
  return d;
}

std::vector<std::string> root_problems(const SurfaceLattice& lat, const std::vector<DivisorClass>& roots) {
  std::vector<std::string> out;
  if (lat.form() != LatticeForm::kBlowUp) out.push_back("configuration lattice must be a blow-up lattice");
  const auto k = canonical_class(lat);
  std::set<DivisorClass> seen;
  for (const auto& r : roots) {
    if (r.size() != lat.dimension()) {
      out.push_back("class " + r.to_string() + " has the wrong number of coefficients");
      continue;
    }
    if (intersect(lat, r, r) != -2 || intersect(lat, r, k) != 0) out.push_back(r.to_string() + " is not a root");
    if (!seen.insert(r).second) out.push_back("root " + r.to_string() + " repeated");
  }
  return out;
}

}  // namespace

SingularityType classify_dynkin(const SurfaceLattice& lat, const std::vector<DivisorClass>& roots) {
  auto problems = root_problems(lat, roots);
  if (!problems.empty()) throw InvalidConfigurationError(problems.front());
  auto d = decompose(lat, roots);
  if (!d.problems.empty()) throw InvalidConfigurationError(d.problems.front());
  std::vector<AdeLabel> labels;
  for (const auto& c : d.components) {
    auto l = label_tree(d.adj, c);
    if (!l) throw InvalidConfigurationError("component is not a Dynkin diagram");
    labels.push_back(*l);
  }
  return SingularityType(std::move(labels));
}

std::size_t Configuration::component_of(std::size_t root_pos) const {
  for (std::size_t c = 0; c < components.size(); ++c)
    if (std::find(components[c].begin(), components[c].end(), root_pos) != components[c].end()) return c;
  throw InvalidConfigurationError("root position outside the configuration");
}

std::size_t Configuration::orbit_of(std::size_t component) const {
  for (std::size_t o = 0; o < orbits.size(); ++o)
    if (std::find(orbits[o].begin(), orbits[o].end(), component) != orbits[o].end()) return o;
  throw InvalidConfigurationError("component outside every orbit");
}

std::vector<std::string> validate_configuration(const Configuration& cfg) {
  auto out = root_problems(cfg.lattice, cfg.simple_roots);
  if (!out.empty()) return out;
  auto d = decompose(cfg.lattice, cfg.simple_roots);
  out = d.problems;
  std::vector<AdeLabel> labels;
  for (const auto& c : d.components) {
    auto l = label_tree(d.adj, c);
    if (!l) {
      out.push_back("component starting at " + cfg.simple_roots[c.front()].to_string() +
                    " is not a Dynkin diagram");
    } else {
      labels.push_back(*l);
    }
  }
  if (d.components.size() > 7) out.push_back("more than 7 singular points");
  if (!out.empty()) return out;
  const SingularityType t(labels);
  if (t.rank() > 7) out.push_back("total rank " + std::to_string(t.rank()) + " exceeds 7");
  if (!t.smooth() && !is_degree2_type(t)) out.push_back("type " + t.name() + " is not a degree-2 type");
  if (cfg.components != d.components) out.push_back("component partition is stale");
  if (cfg.type != t) out.push_back("declared type " + cfg.type.name() + " differs from " + t.name());
  if (cfg.component_labels != labels) out.push_back("component labels are stale");
  std::vector<int> hit(d.components.size(), 0);
  for (const auto& orb : cfg.orbits) {
    if (orb.empty()) {
      out.push_back("empty Galois orbit");
      continue;
    }
    bool mixed = false;
    for (auto c : orb) {
      if (c >= hit.size()) {
        out.push_back("orbit names component " + std::to_string(c) + " which does not exist");
        continue;
      }
      ++hit[c];
      if (orb.front() < labels.size() && labels[c] != labels[orb.front()]) mixed = true;
    }
    if (mixed) out.push_back("Galois orbit mixes component types");
  }
  for (std::size_t c = 0; c < hit.size(); ++c)
    if (hit[c] != 1) out.push_back("component " + std::to_string(c) + " lies in " + std::to_string(hit[c]) + " orbits");
  if (cfg.a2_conjugate.size() != d.components.size()) {
    out.push_back("a2_conjugate must have one flag per component");
  } else {
    for (std::size_t c = 0; c < labels.size(); ++c)
      if (cfg.a2_conjugate[c] && labels[c] != AdeLabel{'A', 2})
        out.push_back("component " + std::to_string(c) + " is flagged conjugate but is not A2");
  }
  return out;
}

Configuration make_configuration(const SurfaceLattice& lat, std::vector<DivisorClass> roots,
                                 std::vector<std::vector<std::size_t>> orbits, std::vector<bool> a2_conjugate) {
  Configuration cfg;
  cfg.lattice = lat;
  cfg.simple_roots = std::move(roots);
  auto problems = root_problems(lat, cfg.simple_roots);
  if (problems.empty()) {
    auto d = decompose(lat, cfg.simple_roots);
    problems = d.problems;
    cfg.components = d.components;
    for (const auto& c : d.components) {
      if (auto l = label_tree(d.adj, c)) cfg.component_labels.push_back(*l);
    }
    if (cfg.component_labels.size() == cfg.components.size()) cfg.type = SingularityType(cfg.component_labels);
  }
  if (orbits.empty()) {
    for (std::size_t c = 0; c < cfg.components.size(); ++c) orbits.push_back({c});
  }
  for (auto& o : orbits) std::sort(o.begin(), o.end());
  std::sort(orbits.begin(), orbits.end());
  cfg.orbits = std::move(orbits);
  if (a2_conjugate.empty()) a2_conjugate.assign(cfg.components.size(), false);
  cfg.a2_conjugate = std::move(a2_conjugate);
  if (problems.empty()) problems = validate_configuration(cfg);
  if (!problems.empty()) {
    std::string msg = "invalid configuration:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw InvalidConfigurationError(msg);
  }
  return cfg;
}

namespace {

// Orderings of one component matching its canonical Dynkin layout.
std::vector<std::vector<std::size_t>> component_orderings(const Configuration& cfg, std::size_t ci) {
  const auto& verts = cfg.components[ci];
  const AdeLabel label = cfg.component_labels[ci];
  auto nbrs = [&](std::size_t v) {
    std::vector<std::size_t> out;
    for (auto w : verts)
      if (w != v && cfg.dot(cfg.simple_roots[v], cfg.simple_roots[w]) == 1) out.push_back(w);
    return out;
  };
  // Walk from `from` away from `prev` until a leaf.
  auto arm = [&](std::size_t prev, std::size_t from) {
    std::vector<std::size_t> a{from};
    while (true) {
      auto nb = nbrs(a.back());
      std::size_t next = verts.size() + 100;
      for (auto w : nb)
        if (w != prev) next = w;
      if (nb.size() != 2) break;
      prev = a.back();
      a.push_back(next);
    }
    return a;
  };
  std::vector<std::vector<std::size_t>> out;
  if (label.series == 'A') {
    if (verts.size() == 1) return {verts};
    for (auto v : verts) {
      if (nbrs(v).size() != 1) continue;
      auto a = arm(v, nbrs(v)[0]);
      a.insert(a.begin(), v);
      out.push_back(a);
    }
    return out;
  }
  std::size_t centre = 0;
  for (auto v : verts)
    if (nbrs(v).size() == 3) centre = v;
  std::vector<std::vector<std::size_t>> arms;
  for (auto w : nbrs(centre)) arms.push_back(arm(centre, w));
  std::sort(arms.begin(), arms.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<int> perm{0, 1, 2};
  do {
    const auto& s1 = arms[static_cast<std::size_t>(perm[0])];
    const auto& s2 = arms[static_cast<std::size_t>(perm[1])];
    const auto& s3 = arms[static_cast<std::size_t>(perm[2])];
    // shortest arm first, longest last; keep only arm length patterns matching
    if (s1.size() > s2.size() || s2.size() > s3.size()) continue;
    std::vector<std::size_t> o;
    if (label.series == 'D') {
      o = {s1[0], s2[0], centre};
      o.insert(o.end(), s3.begin(), s3.end());
    } else {
      o = {s1[0], centre};
      o.insert(o.end(), s2.begin(), s2.end());
      o.insert(o.end(), s3.begin(), s3.end());
    }
    out.push_back(o);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> canonical_orderings(const Configuration& cfg) {
  // Components grouped by label in sorted order; same-label components permute.
  std::vector<std::size_t> comp_order(cfg.components.size());
  std::iota(comp_order.begin(), comp_order.end(), 0);
  std::stable_sort(comp_order.begin(), comp_order.end(),
                   [&](std::size_t a, std::size_t b) { return cfg.component_labels[a] < cfg.component_labels[b]; });
  std::vector<std::vector<std::vector<std::size_t>>> per(cfg.components.size());
  for (std::size_t c = 0; c < cfg.components.size(); ++c) per[c] = component_orderings(cfg, c);

  std::vector<std::vector<std::size_t>> result;
  std::vector<std::size_t> current;
  // Enumerate permutations of comp_order within each equal-label block, then
  // the internal orderings of every component.
  std::vector<std::size_t> arrangement = comp_order;
  std::function<void(std::size_t)> rec_internal = [&](std::size_t k) {
    if (k == arrangement.size()) {
      result.push_back(current);
      return;
    }
    for (const auto& o : per[arrangement[k]]) {
      const auto mark = current.size();
      current.insert(current.end(), o.begin(), o.end());
      rec_internal(k + 1);
      current.resize(mark);
    }
  };
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < arrangement.size();) {
    std::size_t j = i;
    while (j < arrangement.size() &&
           cfg.component_labels[arrangement[j]] == cfg.component_labels[arrangement[i]])
      ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  std::function<void(std::size_t)> rec_blocks = [&](std::size_t b) {
    if (b == blocks.size()) {
      rec_internal(0);
      return;
    }
    auto [lo, hi] = blocks[b];
    std::sort(arrangement.begin() + static_cast<long>(lo), arrangement.begin() + static_cast<long>(hi));
    do {
      rec_blocks(b + 1);
    } while (std::next_permutation(arrangement.begin() + static_cast<long>(lo),
                                   arrangement.begin() + static_cast<long>(hi)));
  };
  rec_blocks(0);
  return result;
}

std::size_t Fingerprint::free_curves() const {
  const std::size_t k = static_cast<std::size_t>(type.rank());
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [&](const auto& r) {
    return std::all_of(r.begin(), r.begin() + static_cast<long>(k), [](std::int8_t v) { return v == 0; });
  }));
}

std::string Fingerprint::digest() const {
  // FNV-1a over the row data, enough for display and file headers.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint8_t b) {
    h ^= b;
    h *= 1099511628211ull;
  };
  for (char c : type.name()) mix(static_cast<std::uint8_t>(c));
  for (const auto& r : rows)
    for (auto v : r) mix(static_cast<std::uint8_t>(v));
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

Fingerprint orbit_fingerprint(const Configuration& cfg) {
  const auto& cat = degree2_catalog();
  if (cfg.lattice != cat.lattice()) throw InvalidConfigurationError("fingerprints are defined at rank 7");
  const std::size_t k = cfg.simple_roots.size();
  std::vector<std::array<std::int8_t, 7>> table(cat.pre_minus1().size());
  for (std::size_t d = 0; d < table.size(); ++d)
    for (std::size_t j = 0; j < k; ++j)
      table[d][j] = static_cast<std::int8_t>(cat.dot(cat.pre_minus1()[d], cfg.simple_roots[j]));

  Fingerprint best{cfg.type, {}};
  std::vector<std::array<std::int8_t, 7>> rows(table.size());
  for (const auto& order : canonical_orderings(cfg)) {
    for (std::size_t d = 0; d < table.size(); ++d) {
      rows[d].fill(0);
      for (std::size_t j = 0; j < k; ++j) rows[d][j] = table[d][order[j]];
    }
    std::sort(rows.begin(), rows.end());
    if (best.rows.empty() || rows < best.rows) best.rows = rows;
  }
  return best;
}

std::vector<std::string> registry_variants(const std::string& type) {
  std::vector<std::string> out;
  for (const auto& e : registry_entries())
    if (e.type == type) out.push_back(e.variant);
  return out;
}

const RegistryEntry& registry_entry(const std::string& type, const std::string& variant) {
  const std::string canon = SingularityType::parse(type).name();
  for (const auto& e : registry_entries())
    if (e.type == canon && (variant.empty() || e.variant == variant)) return e;
  throw UnknownTypeError("no registry entry for type " + type + (variant.empty() ? "" : " variant " + variant));
}

Configuration registry_representative(const std::string& type, const std::string& variant,
                                      std::vector<std::vector<std::size_t>> orbits, std::vector<bool> a2_conjugate) {
  const auto& e = registry_entry(type, variant);
  std::vector<DivisorClass> roots;
  for (const auto& n : e.roots) roots.push_back(class_from_name(n));
  return make_configuration(SurfaceLattice(7), std::move(roots), std::move(orbits), std::move(a2_conjugate));
}

std::vector<SearchResult> search_configurations(const ClassCatalog& cat) {
  const auto& roots = cat.roots();
  const std::size_t nr = roots.size();
  // Prefer representatives written with small l0-coefficients.
  auto score = [&](const std::vector<std::size_t>& s) {
    std::int64_t a0 = 0, reversed = 0, spread = 0;
    for (auto i : s) {
      const auto& c = roots[i];
      a0 += std::abs(c[0]);
      for (std::size_t j = 1; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        if (c[0] == 0 && c[j] < 0) ++reversed;  // l_j - l_i with j > i reads worse
        if (c[0] == 0) break;
      }
      for (std::size_t j = 1; j < c.size(); ++j)
        if (c[j] != 0) spread += static_cast<std::int64_t>(j);
    }
    return std::array<std::int64_t, 3>{a0, reversed, spread};
  };
  constexpr std::size_t kKeep = 48;  // candidates kept per fingerprint for extension
  std::map<Fingerprint, std::vector<std::vector<std::size_t>>> level;
  {
    std::vector<std::vector<std::size_t>> singles;
    for (std::size_t i = 0; i < nr; ++i) singles.push_back({i});
    auto cfg = make_configuration(cat.lattice(), {roots[0]});
    level[orbit_fingerprint(cfg)] = singles;
  }
  std::vector<SearchResult> out;
  while (!level.empty()) {
    std::map<Fingerprint, std::vector<std::vector<std::size_t>>> next;
    std::set<std::vector<std::size_t>> tried;
    for (auto& [fp, sets] : level) {
      std::sort(sets.begin(), sets.end(), [&](const auto& a, const auto& b) {
        const auto sa = score(a), sb = score(b);
        return sa != sb ? sa < sb : a < b;
      });
      if (sets.size() > kKeep) sets.resize(kKeep);
      out.push_back({fp.type, fp, sets.front()});
      for (const auto& s : sets) {
        for (std::size_t f = 0; f < nr; ++f) {
          if (s.size() >= 7) break;
          if (std::find(s.begin(), s.end(), f) != s.end()) continue;
          bool ok = true;
          for (auto g : s) {
            const auto v = cat.dot(roots[f], roots[g]);
            if (v != 0 && v != 1) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
          std::vector<std::size_t> t = s;
          t.push_back(f);
          std::sort(t.begin(), t.end());
          if (!tried.insert(t).second) continue;
          std::vector<DivisorClass> cls;
          for (auto i : t) cls.push_back(roots[i]);
          SingularityType ty;
          try {
            ty = classify_dynkin(cat.lattice(), cls);
          } catch (const InvalidConfigurationError&) {
            continue;
          }
          if (ty.rank() > 7) continue;
          Configuration cfg;
          cfg.lattice = cat.lattice();
          cfg.simple_roots = cls;
          auto d = decompose(cat.lattice(), cls);
          cfg.components = d.components;
          for (const auto& c : d.components) cfg.component_labels.push_back(*label_tree(d.adj, c));
          cfg.type = ty;
          next[orbit_fingerprint(cfg)].push_back(t);
        }
      }
    }
    level = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.type.delta() != b.type.delta()) return a.type.delta() < b.type.delta();
    if (a.type != b.type) return a.type < b.type;
    return a.fingerprint < b.fingerprint;
  });
  return out;
}

}  // namespace dpl
