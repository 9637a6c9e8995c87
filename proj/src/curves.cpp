#include "dpl/curves.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace dpl {

namespace {

const ClassCatalog& catalog_for(const Configuration& cfg) {
  const auto& cat = degree2_catalog();
  if (cfg.lattice != cat.lattice()) throw InvalidConfigurationError("curve geometry is modelled at rank 7");
  return cat;
}

void require_pre(const SurfaceLattice& lat, const DivisorClass& d) {
  if (!is_pre_minus1(lat, d)) throw NotPreMinus1Error(d.to_string() + " is not a pre(-1) class");
}

std::vector<std::size_t> catalog_order(const Configuration& cfg, const ClassCatalog& cat) {
  std::vector<std::size_t> pos(cfg.simple_roots.size());
  for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = i;
  std::sort(pos.begin(), pos.end(), [&](std::size_t a, std::size_t b) {
    return *cat.root_index(cfg.simple_roots[a]) < *cat.root_index(cfg.simple_roots[b]);
  });
  return pos;
}

bool honest(const DivisorClass& d, const Configuration& cfg) {
  return std::all_of(cfg.simple_roots.begin(), cfg.simple_roots.end(),
                     [&](const DivisorClass& f) { return cfg.dot(d, f) >= 0; });
}

}  // namespace

bool is_pre_minus1(const SurfaceLattice& lat, const DivisorClass& d) {
  if (d.size() != lat.dimension() || lat.form() != LatticeForm::kBlowUp) return false;
  return intersect(lat, d, d) == -1 && intersect(lat, d, canonical_class(lat)) == -1 && d[0] >= 0;
}

bool is_minus1_curve(const DivisorClass& d, const Configuration& cfg) {
  require_pre(cfg.lattice, d);
  return honest(d, cfg);
}

Reduction reduce_to_minus1(const DivisorClass& d, const Configuration& cfg, const std::vector<std::size_t>* priority) {
  const auto& cat = catalog_for(cfg);
  require_pre(cfg.lattice, d);
  const std::vector<std::size_t> order = priority ? *priority : catalog_order(cfg, cat);
  if (order.size() != cfg.simple_roots.size()) throw Error("priority must list every simple root once");
  Reduction out{d, {}};
  // 63 positive roots in E7 bounds the number of subtractions.
  constexpr int kCap = 63;
  for (int step = 0;; ++step) {
    auto it = std::find_if(order.begin(), order.end(),
                           [&](std::size_t p) { return cfg.dot(out.curve, cfg.simple_roots[p]) == -1; });
    if (it == order.end()) break;
    if (step >= kCap) throw std::logic_error("reduction did not terminate for " + d.to_string());
    out.curve -= cfg.simple_roots[*it];
    out.removed.push_back(*it);
  }
  if (!is_pre_minus1(cfg.lattice, out.curve) || !honest(out.curve, cfg)) {
    throw std::logic_error("reduction left a class that is not an honest curve");
  }
  return out;
}

std::vector<std::size_t> classes_meeting(const DivisorClass& f, std::int64_t value, const ClassCatalog& cat) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cat.pre_minus1().size(); ++i)
    if (cat.dot(cat.pre_minus1()[i], f) == value) out.push_back(i);
  return out;
}

std::pair<DivisorClass, DivisorClass> pair_classes(const DivisorClass& f, const DivisorClass& g,
                                                   const ClassCatalog& cat) {
  if (cat.dot(f, f) != -2 || cat.dot(g, g) != -2) throw InvalidRootError("pair_classes needs two roots");
  if (cat.dot(f, g) != 0) throw InvalidConfigurationError("roots " + f.to_string() + ", " + g.to_string() + " are not orthogonal");
  std::vector<DivisorClass> both;
  for (const auto& d : cat.pre_minus1())
    if (cat.dot(d, f) == 1 && cat.dot(d, g) == 1) both.push_back(d);
  if (both.size() != 2) {
    throw std::logic_error("expected two common classes, found " + std::to_string(both.size()));
  }
  return {both[0], both[1]};
}

std::vector<DivisorClass> derive_pair_curves(const Configuration& cfg, std::size_t comp_i, std::size_t comp_j,
                                             std::optional<std::pair<std::size_t, std::size_t>> roots) {
  const auto& cat = catalog_for(cfg);
  if (comp_i == comp_j) throw InvalidConfigurationError("pair derivation needs two different components");
  if (comp_i >= cfg.components.size() || comp_j >= cfg.components.size()) {
    throw InvalidConfigurationError("component index out of range");
  }
  auto [fp, gp] = roots.value_or(std::make_pair(cfg.components[comp_i].front(), cfg.components[comp_j].front()));
  if (cfg.component_of(fp) != comp_i || cfg.component_of(gp) != comp_j) {
    throw InvalidConfigurationError("chosen roots do not lie in the requested components");
  }
  auto [d1, d2] = pair_classes(cfg.simple_roots[fp], cfg.simple_roots[gp], cat);
  std::vector<DivisorClass> out{reduce_to_minus1(d1, cfg).curve, reduce_to_minus1(d2, cfg).curve};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.size() == 2 && cfg.dot(out[0], out[1]) != 0) {
    throw std::logic_error("derived curves meet: " + out[0].to_string() + ", " + out[1].to_string());
  }
  return out;
}

std::vector<DivisorClass> three_root_curves(const Configuration& cfg) {
  const auto& cat = catalog_for(cfg);
  std::vector<DivisorClass> out;
  for (const auto& d : cat.pre_minus1()) {
    if (!honest(d, cfg)) continue;
    std::vector<std::size_t> hit;
    for (std::size_t p = 0; p < cfg.simple_roots.size(); ++p)
      if (cfg.dot(d, cfg.simple_roots[p]) == 1) hit.push_back(p);
    if (hit.size() != 3) continue;
    const bool isolated = std::all_of(hit.begin(), hit.end(), [&](std::size_t p) {
      return cfg.component_labels[cfg.component_of(p)] == AdeLabel{'A', 1};
    });
    if (!isolated) continue;
    DivisorClass lhs = 2 * d;
    DivisorClass rhs = -cat.canonical();
    for (auto p : hit) rhs -= cfg.simple_roots[p];
    if (lhs != rhs) throw std::logic_error("2E differs from -K-F1-F2-F3 for " + d.to_string());
    out.push_back(d);
  }
  return out;
}

std::vector<std::array<std::size_t, 4>> eckardt_quadruples(const ClassCatalog& cat) {
  const auto& pre = cat.pre_minus1();
  const std::size_t n = pre.size();
  std::vector<std::vector<bool>> one(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) one[a][b] = cat.dot(pre[a], pre[b]) == 1;
  std::vector<std::array<std::size_t, 4>> out;
  const DivisorClass minus_2k = -2 * cat.canonical();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!one[a][b]) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (!one[a][c] || !one[b][c]) continue;
        for (std::size_t d = c + 1; d < n; ++d) {
          if (!one[a][d] || !one[b][d] || !one[c][d]) continue;
          if (pre[a] + pre[b] + pre[c] + pre[d] != minus_2k) {
            throw std::logic_error("pairwise-meeting quadruple does not sum to -2K");
          }
          out.push_back({a, b, c, d});
        }
      }
    }
  return out;
}

std::vector<DivisorClass> free_minus1_curves(const Configuration& cfg) {
  const auto& cat = catalog_for(cfg);
  std::vector<DivisorClass> out;
  for (const auto& d : cat.pre_minus1()) {
    if (std::all_of(cfg.simple_roots.begin(), cfg.simple_roots.end(),
                    [&](const DivisorClass& f) { return cfg.dot(d, f) == 0; }))
      out.push_back(d);
  }
  return out;
}

std::pair<std::size_t, std::size_t> terminal_roots(const Configuration& cfg) {
  if (cfg.components.size() != 1) throw InvalidConfigurationError("terminal roots need one component");
  const AdeLabel l = cfg.component_labels[0];
  const auto order = canonical_orderings(cfg).front();
  const std::size_t n = order.size();
  if (l.series == 'A' && l.n >= 3) return {order.front(), order.back()};
  // canonical D order: short leg, short leg, branch, long arm outward
  if (l.series == 'D' && l.n >= 5) return {order[0], order[1]};
  // canonical E order: short leg, branch, middle arm outward, long arm outward
  if (l == AdeLabel{'E', 6}) return {order[3], order[5]};
  if (l == AdeLabel{'E', 7}) return {order[0], order[n - 1]};
  throw InvalidConfigurationError("no terminal pair rule for " + l.str());
}

namespace {

// Each orbit's components must be met equally often, and the touched
// components must form a union of orbits.
void check_galois(const Configuration& cfg, const std::vector<DivisorClass>& curves, const std::string& what) {
  std::vector<std::size_t> touches(cfg.components.size(), 0);
  for (const auto& e : curves)
    for (std::size_t p = 0; p < cfg.simple_roots.size(); ++p)
      if (cfg.dot(e, cfg.simple_roots[p]) > 0) ++touches[cfg.component_of(p)];
  for (const auto& orb : cfg.orbits)
    for (auto c : orb)
      if (touches[c] != touches[orb.front()]) {
        throw GaloisInconsistencyError(what + ": curves are not stable under the Galois orbit of component " +
                                       std::to_string(orb.front()));
      }
}

void add_unique(std::vector<DivisorClass>& acc, const std::vector<DivisorClass>& more) {
  for (const auto& e : more)
    if (std::find(acc.begin(), acc.end(), e) == acc.end()) acc.push_back(e);
}

}  // namespace

DerivedGraph derive_configuration(const Configuration& cfg) {
  const auto& cat = catalog_for(cfg);
  if (auto problems = validate_configuration(cfg); !problems.empty()) {
    throw InvalidConfigurationError("invalid configuration: " + problems.front());
  }
  DerivedGraph g;
  const std::size_t delta = cfg.components.size();
  const auto& type = cfg.type;
  std::vector<DivisorClass> curves;

  if (delta == 1) {
    const AdeLabel l = cfg.component_labels[0];
    if (l == AdeLabel{'A', 1}) {
      g.minimal_case = "1";
      g.rule = "single A1: no contraction";
    } else if (l == AdeLabel{'A', 2}) {
      if (cfg.a2_conjugate[0]) {
        g.minimal_case = "2";
        g.rule = "A2 with conjugate roots: no contraction";
      } else {
        const auto& f1 = cfg.simple_roots[cfg.components[0][0]];
        for (auto i : classes_meeting(f1, 1, cat))
          if (honest(cat.pre_minus1()[i], cfg)) curves.push_back(cat.pre_minus1()[i]);
        g.rule = "A2: honest curves through the first root";
      }
    } else if (l == AdeLabel{'D', 4}) {
      const auto order = canonical_orderings(cfg).front();
      const std::size_t legs[3] = {order[0], order[1], order[3]};
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
          auto [d1, d2] = pair_classes(cfg.simple_roots[legs[a]], cfg.simple_roots[legs[b]], cat);
          add_unique(curves, {reduce_to_minus1(d1, cfg).curve, reduce_to_minus1(d2, cfg).curve});
        }
      g.rule = "D4: three leg pairs";
    } else {
      auto [fp, gp] = terminal_roots(cfg);
      auto [d1, d2] = pair_classes(cfg.simple_roots[fp], cfg.simple_roots[gp], cat);
      add_unique(curves, {reduce_to_minus1(d1, cfg).curve, reduce_to_minus1(d2, cfg).curve});
      g.rule = "one point: terminal pair";
    }
  } else if (delta == 2 || delta == 3) {
    for (std::size_t a = 0; a < delta; ++a)
      for (std::size_t b = a + 1; b < delta; ++b) add_unique(curves, derive_pair_curves(cfg, a, b));
    g.rule = delta == 2 ? "two points: pair curves" : "three points: pair curves of every pair";
  } else if (delta == 4 && type == SingularityType::parse("4A1")) {
    const auto tri = three_root_curves(cfg);
    if (!tri.empty()) {
      // Each such curve meets three roots; the one avoiding a Galois-stable
      // set of three is what gets contracted.
      for (const auto& e : tri) {
        std::vector<std::size_t> met;
        for (std::size_t c = 0; c < delta; ++c)
          if (cfg.dot(e, cfg.simple_roots[cfg.components[c][0]]) == 1) met.push_back(c);
        bool stable = true;
        for (const auto& orb : cfg.orbits) {
          const auto inside = std::count_if(orb.begin(), orb.end(), [&](std::size_t c) {
            return std::find(met.begin(), met.end(), c) != met.end();
          });
          if (inside != 0 && static_cast<std::size_t>(inside) != orb.size()) stable = false;
        }
        if (stable) {
          curves = {e};
          break;
        }
      }
      if (curves.empty()) {
        throw GaloisInconsistencyError("4A1: the three roots met by the special curve do not form a union of orbits");
      }
      g.rule = "4A1: the curve through three A1 roots";
    } else {
      std::optional<std::size_t> single;
      for (const auto& orb : cfg.orbits)
        if (orb.size() == 1) {
          single = orb.front();
          break;
        }
      if (single) {
        for (std::size_t c = 0; c < delta; ++c)
          if (c != *single) add_unique(curves, derive_pair_curves(cfg, *single, c));
        g.rule = "4A1, one rational point: pair curves with it";
      } else if (cfg.orbits.size() == 2) {
        const auto& orb = cfg.orbits[0];
        curves = derive_pair_curves(cfg, orb[0], orb[1]);
        g.rule = "4A1, two conjugate pairs: pair curves of one pair";
      } else {
        g.minimal_case = "3";
        g.rule = "4A1, four conjugate points: no contraction";
      }
    }
  } else if (delta == 4) {
    const auto tri = three_root_curves(cfg);
    if (tri.size() != 1) {
      throw std::logic_error("expected a unique curve through three A1 roots, found " + std::to_string(tri.size()));
    }
    curves = tri;
    g.rule = "four points: curve through the three A1 roots";
  } else {
    curves = three_root_curves(cfg);
    g.rule = "five or more points: curves through three A1 roots";
  }

  std::sort(curves.begin(), curves.end());
  if (!g.minimal()) check_galois(cfg, curves, g.rule);
  for (std::size_t a = 0; a < curves.size(); ++a)
    for (std::size_t b = a + 1; b < curves.size(); ++b)
      if (cfg.dot(curves[a], curves[b]) != 0) throw std::logic_error("contraction set is not disjoint");
  g.contraction_set = curves;

  for (std::size_t p = 0; p < cfg.simple_roots.size(); ++p)
    g.vertices.push_back({true, cfg.simple_roots[p], cat.root_name(*cat.root_index(cfg.simple_roots[p]))});
  for (const auto& e : curves) g.vertices.push_back({false, e, cat.pre_name(*cat.pre_index(e))});
  for (std::size_t a = 0; a < g.vertices.size(); ++a)
    for (std::size_t b = a + 1; b < g.vertices.size(); ++b)
      if (cfg.dot(g.vertices[a].cls, g.vertices[b].cls) == 1) g.edges.emplace_back(a, b);

  std::vector<DivisorClass> survivors;
  for (std::size_t p = 0; p < cfg.simple_roots.size(); ++p) {
    if (std::all_of(curves.begin(), curves.end(), [&](const DivisorClass& e) { return cfg.dot(e, cfg.simple_roots[p]) == 0; })) {
      g.surviving_roots.push_back(p);
      survivors.push_back(cfg.simple_roots[p]);
    }
  }
  if (g.minimal()) {
    g.target_degree = cfg.lattice.degree();
    g.target_type = cfg.type;
    return g;
  }
  g.blowdown = blow_down(cfg.lattice, curves);
  g.target_degree = g.blowdown->target.degree();
  g.target_type = classify_dynkin(cfg.lattice, survivors);
  return g;
}

std::string to_dot(const DerivedGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto& v = g.vertices[i];
    os << "  v" << i << " [shape=" << (v.is_root ? "circle" : "point") << ", label=\""
       << (v.is_root ? v.label : "") << "\", xlabel=\"" << (v.is_root ? "" : v.label) << "\"];\n";
  }
  for (auto [a, b] : g.edges) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace dpl
